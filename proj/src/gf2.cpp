#include "qsurg/gf2.hpp"

#include <algorithm>
#include <sstream>

namespace qsurg {

BinaryVector BinaryVector::from_string(const std::string& bits) {
    BinaryVector v(int(bits.size()));
    for (int i = 0; i < int(bits.size()); ++i) {
        char c = bits[std::size_t(i)];
        if (c == '1')
            v.set(i, true);
        else if (c != '0')
            throw std::invalid_argument("BinaryVector::from_string: expected '0'/'1'");
    }
    return v;
}

std::string BinaryVector::to_string() const {
    std::string s(std::size_t(len_), '0');
    for (int i = 0; i < len_; ++i)
        if (get(i)) s[std::size_t(i)] = '1';
    return s;
}

BinaryMatrix::BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = int(rows.size());
    cols_ = rows.size() ? int(rows.begin()->size()) : 0;
    row_words_ = words_for(cols_);
    data_.assign(std::size_t(rows_) * row_words_, 0);
    int r = 0;
    for (const auto& row : rows) {
        if (int(row.size()) != cols_) throw std::invalid_argument("BinaryMatrix: ragged initializer");
        int c = 0;
        for (int v : row) {
            if (v) set(r, c, true);
            ++c;
        }
        ++r;
    }
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<BinaryVector>& rows, int cols) {
    BinaryMatrix m(int(rows.size()), cols);
    for (int r = 0; r < int(rows.size()); ++r) m.set_row(r, rows[std::size_t(r)]);
    return m;
}

BinaryVector BinaryMatrix::row(int r) const {
    if (r < 0 || r >= rows_) throw std::out_of_range("row index");
    BinaryVector v(cols_);
    for (int c = 0; c < cols_; ++c)
        if (get(r, c)) v.set(c, true);
    return v;
}

BinaryVector BinaryMatrix::col(int c) const {
    if (c < 0 || c >= cols_) throw std::out_of_range("col index");
    BinaryVector v(rows_);
    for (int r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r, true);
    return v;
}

void BinaryMatrix::set_row(int r, const BinaryVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    for (int w = 0; w < row_words_; ++w) word(r, w) = v.words()[std::size_t(w)];
}

void BinaryMatrix::xor_rows(int dst, int src) {
    for (int w = 0; w < row_words_; ++w) word(dst, w) ^= word(src, w);
}

void BinaryMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int w = 0; w < row_words_; ++w) std::swap(word(a, w), word(b, w));
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int w = 0; w < row_words_; ++w) {
            Word x = word(r, w);
            while (x) {
                int bit = std::countr_zero(x);
                x &= x - 1;
                t.set(w * kWordBits + bit, r, true);
            }
        }
    return t;
}

BinaryMatrix BinaryMatrix::operator*(const BinaryMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul: shape mismatch");
    BinaryMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int w = 0; w < row_words_; ++w) {
            Word x = word(r, w);
            while (x) {
                int bit = std::countr_zero(x);
                x &= x - 1;
                int k = w * kWordBits + bit;
                for (int ow = 0; ow < o.row_words_; ++ow) out.word(r, ow) ^= o.word(k, ow);
            }
        }
    }
    return out;
}

BinaryVector BinaryMatrix::apply(const BinaryVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    BinaryVector out(rows_);
    for (int r = 0; r < rows_; ++r) {
        Word acc = 0;
        for (int w = 0; w < row_words_; ++w) acc ^= word(r, w) & v.words()[std::size_t(w)];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

BinaryMatrix BinaryMatrix::operator+(const BinaryMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("add: shape mismatch");
    BinaryMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] ^= o.data_[i];
    return out;
}

bool BinaryMatrix::is_zero() const {
    for (Word x : data_)
        if (x) return false;
    return true;
}

int BinaryMatrix::row_weight(int r) const {
    int w = 0;
    for (int k = 0; k < row_words_; ++k) w += std::popcount(word(r, k));
    return w;
}

int BinaryMatrix::col_weight(int c) const {
    int w = 0;
    for (int r = 0; r < rows_; ++r) w += get(r, c) ? 1 : 0;
    return w;
}

int BinaryMatrix::max_row_weight() const {
    int m = 0;
    for (int r = 0; r < rows_; ++r) m = std::max(m, row_weight(r));
    return m;
}

int BinaryMatrix::max_col_weight() const {
    std::vector<int> w(std::size_t(cols_), 0);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) ++w[std::size_t(c)];
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

std::string BinaryMatrix::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

Rref rref(const BinaryMatrix& m) {
    Rref out;
    out.reduced = m;
    BinaryMatrix& a = out.reduced;
    int next_row = 0;
    for (int c = 0; c < a.cols() && next_row < a.rows(); ++c) {
        int pivot = -1;
        for (int r = next_row; r < a.rows(); ++r)
            if (a.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        a.swap_rows(next_row, pivot);
        for (int r = 0; r < a.rows(); ++r)
            if (r != next_row && a.get(r, c)) a.xor_rows(r, next_row);
        out.pivot_cols.push_back(c);
        ++next_row;
    }
    std::size_t p = 0;
    for (int c = 0; c < a.cols(); ++c) {
        if (p < out.pivot_cols.size() && out.pivot_cols[p] == c)
            ++p;
        else
            out.free_cols.push_back(c);
    }
    return out;
}

void Rref::reduce_vector(BinaryVector& v) const {
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        if (v.get(pivot_cols[i])) v.xor_with(reduced.row(int(i)));
}

int rank(const BinaryMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rref(m).rank();
}

std::vector<BinaryVector> kernel_basis(const BinaryMatrix& m) {
    std::vector<BinaryVector> basis;
    if (m.cols() == 0) return basis;
    if (m.rows() == 0) {
        for (int c = 0; c < m.cols(); ++c) basis.push_back(BinaryVector::unit(m.cols(), c));
        return basis;
    }
    Rref rr = rref(m);
    for (int f : rr.free_cols) {
        BinaryVector v(m.cols());
        v.set(f, true);
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            if (rr.reduced.get(int(i), f)) v.set(rr.pivot_cols[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BinaryVector> solve(const BinaryMatrix& m, const BinaryVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length != rows");
    if (m.cols() == 0) {
        if (b.is_zero()) return BinaryVector(0);
        return std::nullopt;
    }
    // Eliminate on the augmented matrix [M | b].
    BinaryMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) aug.set(r, c, true);
        if (b.get(r)) aug.set(r, m.cols(), true);
    }
    Rref rr = rref(aug);
    BinaryVector x(m.cols());
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
        int pc = rr.pivot_cols[i];
        if (pc == m.cols()) return std::nullopt;  // pivot in the augmented column
        if (rr.reduced.get(int(i), m.cols())) x.set(pc, true);
    }
    return x;
}

BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b) {
    BinaryMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ar = 0; ar < a.rows(); ++ar)
        for (int ac = 0; ac < a.cols(); ++ac) {
            if (!a.get(ar, ac)) continue;
            for (int br = 0; br < b.rows(); ++br) {
                int out_r = ar * b.rows() + br;
                for (int w = 0; w < b.row_words_; ++w) {
                    Word x = b.word(br, w);
                    while (x) {
                        int bit = std::countr_zero(x);
                        x &= x - 1;
                        int bc = w * kWordBits + bit;
                        out.set(out_r, ac * b.cols() + bc, true);
                    }
                }
            }
        }
    return out;
}

BinaryMatrix direct_sum(const BinaryMatrix& a, const BinaryMatrix& b) {
    BinaryMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) out.set(r, c, true);
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
            if (b.get(r, c)) out.set(a.rows() + r, a.cols() + c, true);
    return out;
}

BinaryMatrix hstack(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    BinaryMatrix out(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) out.set(r, c, true);
        for (int c = 0; c < b.cols(); ++c)
            if (b.get(r, c)) out.set(r, a.cols() + c, true);
    }
    return out;
}

BinaryMatrix vstack(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
    BinaryMatrix out(a.rows() + b.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) out.set_row(r, a.row(r));
    for (int r = 0; r < b.rows(); ++r) out.set_row(a.rows() + r, b.row(r));
    return out;
}

BinaryMatrix as_column(const BinaryVector& v) {
    BinaryMatrix m(v.size(), 1);
    for (int i = 0; i < v.size(); ++i)
        if (v.get(i)) m.set(i, 0, true);
    return m;
}

BinaryVector concat(const BinaryVector& a, const BinaryVector& b) {
    BinaryVector out(a.size() + b.size());
    for (int i = 0; i < a.size(); ++i)
        if (a.get(i)) out.set(i, true);
    for (int i = 0; i < b.size(); ++i)
        if (b.get(i)) out.set(a.size() + i, true);
    return out;
}

}  // namespace qsurg
