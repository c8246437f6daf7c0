#ifndef QSURG_GF2_HPP
#define QSURG_GF2_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact linear algebra over GF(2) on dense bit-packed matrices.
// Rows are packed little-endian into 64-bit words; padding bits are kept zero.
// Empty shapes (0 rows or 0 columns) are first-class values.

namespace qsurg {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

inline int words_for(int bits) { return (bits + kWordBits - 1) / kWordBits; }

class BinaryVector {
  public:
    BinaryVector() = default;
    explicit BinaryVector(int len) : len_(len), data_(words_for(len), 0) {
        if (len < 0) throw std::invalid_argument("BinaryVector: negative length");
    }
    BinaryVector(int len, std::initializer_list<int> support) : BinaryVector(len) {
        for (int i : support) set(i, true);
    }

    static BinaryVector unit(int len, int i) {
        BinaryVector v(len);
        v.set(i, true);
        return v;
    }
    static BinaryVector ones(int len) {
        BinaryVector v(len);
        for (int i = 0; i < len; ++i) v.set(i, true);
        return v;
    }
    // Parses "0110..." (most significant first is NOT implied; index 0 is the first char).
    static BinaryVector from_string(const std::string& bits);

    int size() const { return len_; }
    bool get(int i) const {
        check_index(i);
        return (data_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }
    void set(int i, bool b) {
        check_index(i);
        Word mask = Word(1) << (i % kWordBits);
        if (b)
            data_[i / kWordBits] |= mask;
        else
            data_[i / kWordBits] &= ~mask;
    }
    void flip(int i) { set(i, !get(i)); }

    int weight() const {
        int w = 0;
        for (Word x : data_) w += std::popcount(x);
        return w;
    }
    bool is_zero() const {
        for (Word x : data_)
            if (x) return false;
        return true;
    }

    void xor_with(const BinaryVector& o) {
        if (o.len_ != len_) throw std::invalid_argument("xor_with: length mismatch");
        for (std::size_t w = 0; w < data_.size(); ++w) data_[w] ^= o.data_[w];
    }

    // Inner product mod 2.
    bool dot(const BinaryVector& o) const {
        if (o.len_ != len_) throw std::invalid_argument("dot: length mismatch");
        Word acc = 0;
        for (std::size_t w = 0; w < data_.size(); ++w) acc ^= data_[w] & o.data_[w];
        return std::popcount(acc) & 1;
    }

    bool disjoint_from(const BinaryVector& o) const {
        if (o.len_ != len_) throw std::invalid_argument("disjoint_from: length mismatch");
        for (std::size_t w = 0; w < data_.size(); ++w)
            if (data_[w] & o.data_[w]) return false;
        return true;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < len_; ++i)
            if (get(i)) s.push_back(i);
        return s;
    }

    std::string to_string() const;

    friend bool operator==(const BinaryVector& a, const BinaryVector& b) {
        return a.len_ == b.len_ && a.data_ == b.data_;
    }

    const std::vector<Word>& words() const { return data_; }

  private:
    void check_index(int i) const {
        if (i < 0 || i >= len_) throw std::out_of_range("BinaryVector index");
    }
    int len_ = 0;
    std::vector<Word> data_;
};

class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), row_words_(words_for(cols)), data_(std::size_t(rows) * row_words_, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("BinaryMatrix: negative shape");
    }
    // Dense row-major initializer, e.g. {{1,0},{0,1}}.
    BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows);

    static BinaryMatrix identity(int n) {
        BinaryMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }
    static BinaryMatrix zeros(int rows, int cols) { return BinaryMatrix(rows, cols); }
    static BinaryMatrix from_rows(const std::vector<BinaryVector>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const {
        check(r, c);
        return (word(r, c / kWordBits) >> (c % kWordBits)) & 1u;
    }
    void set(int r, int c, bool b) {
        check(r, c);
        Word mask = Word(1) << (c % kWordBits);
        if (b)
            word(r, c / kWordBits) |= mask;
        else
            word(r, c / kWordBits) &= ~mask;
    }

    BinaryVector row(int r) const;
    BinaryVector col(int c) const;
    void set_row(int r, const BinaryVector& v);

    void xor_rows(int dst, int src);  // row[dst] ^= row[src]
    void swap_rows(int a, int b);

    BinaryMatrix transposed() const;
    BinaryMatrix operator*(const BinaryMatrix& o) const;
    BinaryVector apply(const BinaryVector& v) const;  // matrix * column vector
    BinaryMatrix operator+(const BinaryMatrix& o) const;

    bool is_zero() const;
    int row_weight(int r) const;
    int col_weight(int c) const;
    int max_row_weight() const;
    int max_col_weight() const;

    std::string to_string() const;

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("BinaryMatrix index");
    }
    Word& word(int r, int w) { return data_[std::size_t(r) * row_words_ + w]; }
    const Word& word(int r, int w) const { return data_[std::size_t(r) * row_words_ + w]; }

    friend struct Rref;
    friend BinaryMatrix kron(const BinaryMatrix&, const BinaryMatrix&);

    int rows_ = 0;
    int cols_ = 0;
    int row_words_ = 0;
    std::vector<Word> data_;
};

// Row-reduced echelon form with leftmost-pivot, topmost-row elimination.
// Deterministic; every basis computed through it is test-stable.
struct Rref {
    BinaryMatrix reduced;
    std::vector<int> pivot_cols;  // ascending
    std::vector<int> free_cols;   // ascending
    int rank() const { return int(pivot_cols.size()); }

    // Reduces v against the RREF rows in place; v ends zero iff it was in the row space.
    void reduce_vector(BinaryVector& v) const;
};

Rref rref(const BinaryMatrix& m);

int rank(const BinaryMatrix& m);

// Basis of {v : Mv = 0}: one vector per free column, deterministic under the
// leftmost-pivot convention. Returns cols - rank vectors.
std::vector<BinaryVector> kernel_basis(const BinaryMatrix& m);

// Some x with Mx = b (free variables zero), or nullopt when b is outside im(M).
std::optional<BinaryVector> solve(const BinaryMatrix& m, const BinaryVector& b);

// Kronecker product; product index (a,b) -> a*cols(B)+b (rows analogously).
// This ordering is a repo-wide contract.
BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b);

// Block diagonal [[A,0],[0,B]].
BinaryMatrix direct_sum(const BinaryMatrix& a, const BinaryMatrix& b);

BinaryMatrix hstack(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix vstack(const BinaryMatrix& a, const BinaryMatrix& b);

// v as a 1-column / 1-row matrix, and back.
BinaryMatrix as_column(const BinaryVector& v);
BinaryVector concat(const BinaryVector& a, const BinaryVector& b);

}  // namespace qsurg

#endif
