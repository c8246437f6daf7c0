#ifndef QSURG_TEST_SUPPORT_HPP
#define QSURG_TEST_SUPPORT_HPP

#include <random>

#include "qsurg/chain.hpp"

// Shared test fixtures and independent oracles. Everything here is test-only
// and deliberately avoids the library's search/elimination code paths.

namespace qsurg::testing {

inline BinaryMatrix hamming() {
    return BinaryMatrix{{0, 0, 0, 1, 1, 1, 1}, {0, 1, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 1, 0, 1}};
}

inline BinaryMatrix random_matrix(std::mt19937& rng, int rows, int cols, double density = 0.5) {
    BinaryMatrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

inline BinaryVector random_vector(std::mt19937& rng, int len, double density = 0.5) {
    BinaryVector v(len);
    std::bernoulli_distribution bit(density);
    for (int i = 0; i < len; ++i)
        if (bit(rng)) v.set(i, true);
    return v;
}

// Every vector of F_2^n in numeric order; n must stay small.
template <typename F>
void for_all_vectors(int n, F&& f) {
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        BinaryVector v(n);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1ull) v.set(i, true);
        f(v);
    }
}

// Independent rank oracle: greedy elimination over plain bool rows.
inline int rank_oracle(const BinaryMatrix& m) {
    std::vector<std::vector<bool>> rows;
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<bool> row(std::size_t(m.cols()));
        for (int c = 0; c < m.cols(); ++c) row[std::size_t(c)] = m.get(r, c);
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int c = 0; c < m.cols(); ++c) {
        int pivot = -1;
        for (int r = rank; r < int(rows.size()); ++r)
            if (rows[std::size_t(r)][std::size_t(c)]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[std::size_t(rank)], rows[std::size_t(pivot)]);
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == rank || !rows[std::size_t(r)][std::size_t(c)]) continue;
            for (int cc = 0; cc < m.cols(); ++cc)
                rows[std::size_t(r)][std::size_t(cc)] = rows[std::size_t(r)][std::size_t(cc)] ^
                                                        rows[std::size_t(rank)][std::size_t(cc)];
        }
        ++rank;
    }
    return rank;
}

// Distance oracle: direct enumeration of all vectors of weight <= w_cap that
// lie in ker(bd) but not in the span of im_gens. Only for dim <= ~20 spaces.
inline std::optional<int> min_class_weight_oracle(const BinaryMatrix& bd, const BinaryMatrix& im_gens,
                                                  int w_cap) {
    int n = bd.cols();
    for (int w = 1; w <= w_cap; ++w) {
        bool found = false;
        for_all_vectors(n, [&](const BinaryVector& v) {
            if (found || v.weight() != w) return;
            if (!bd.apply(v).is_zero()) return;
            // Membership in the image span by augmenting and comparing ranks.
            BinaryMatrix gens = im_gens;
            BinaryMatrix aug = vstack(gens, BinaryMatrix::from_rows({v}, n));
            if (rank_oracle(aug) == rank_oracle(gens)) return;
            found = true;
        });
        if (found) return w;
    }
    return std::nullopt;
}

// A random valid 3-term complex: faces -> edges-ish middle -> bottom, built by
// drawing the outer boundary from the kernel of the transpose.
inline ChainComplex random_three_term(std::mt19937& rng, int top, int mid, int bot) {
    BinaryMatrix d1 = random_matrix(rng, bot, mid);
    std::vector<BinaryVector> ker = kernel_basis(d1);
    BinaryMatrix d2(mid, top);
    if (!ker.empty()) {
        std::uniform_int_distribution<int> pick(0, int(ker.size()) - 1);
        std::bernoulli_distribution use(0.6);
        for (int c = 0; c < top; ++c) {
            BinaryVector col(mid);
            for (const auto& k : ker)
                if (use(rng)) col.xor_with(k);
            for (int r = 0; r < mid; ++r)
                if (col.get(r)) d2.set(r, c, true);
        }
    }
    return ChainComplex(0, {bot, mid, top}, {d1, d2});
}

}  // namespace qsurg::testing

#endif
