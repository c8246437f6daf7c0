#include "qsurg/chain.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace qsurg {

namespace {

void paste(BinaryMatrix& dst, int r0, int c0, const BinaryMatrix& src) {
    for (int r = 0; r < src.rows(); ++r)
        for (int c = 0; c < src.cols(); ++c)
            if (src.get(r, c)) dst.set(r0 + r, c0 + c, true);
}

// Row-space basis of im(boundary), kept as an RREF for fast membership tests.
Rref image_rref(const BinaryMatrix& boundary_in) {
    return rref(boundary_in.transposed());
}

bool in_image(const Rref& imrr, const BinaryVector& v) {
    BinaryVector tmp = v;
    imrr.reduce_vector(tmp);
    return tmp.is_zero();
}

}  // namespace

ChainComplex::ChainComplex(int lo, std::vector<int> dims, std::vector<BinaryMatrix> boundaries)
    : lo_(lo), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (dims_.empty()) throw std::invalid_argument("ChainComplex: empty degree range");
    if (boundaries_.size() + 1 != dims_.size())
        throw std::invalid_argument("ChainComplex: need one boundary per consecutive degree pair");
    for (int d : dims_)
        if (d < 0) throw std::invalid_argument("ChainComplex: negative dimension");
    for (std::size_t k = 0; k < boundaries_.size(); ++k) {
        const BinaryMatrix& b = boundaries_[k];
        if (b.rows() != dims_[k] || b.cols() != dims_[k + 1])
            throw std::invalid_argument("ChainComplex: boundary shape mismatch at degree " +
                                        std::to_string(lo_ + int(k) + 1));
    }
}

ChainComplex ChainComplex::classical_code(const BinaryMatrix& h) {
    return ChainComplex(0, {h.rows(), h.cols()}, {h});
}

BinaryMatrix ChainComplex::boundary(int degree) const {
    if (degree > lo() && degree <= hi()) return boundaries_[std::size_t(degree - lo_ - 1)];
    return BinaryMatrix(dim(degree - 1), dim(degree));
}

ChainComplex ChainComplex::shifted(int k) const {
    return ChainComplex(lo_ + k, dims_, boundaries_);
}

std::optional<Violation> validate(const ChainComplex& cx) {
    for (int i = cx.lo() + 1; i < cx.hi(); ++i) {
        BinaryMatrix prod = cx.boundary(i) * cx.boundary(i + 1);
        if (!prod.is_zero()) return Violation{i, "boundary composition at degree " + std::to_string(i) +
                                                     " does not vanish"};
    }
    return std::nullopt;
}

ChainComplex cochain(const ChainComplex& cx) {
    int lo = cx.lo(), hi = cx.hi();
    std::vector<int> dims;
    std::vector<BinaryMatrix> bnds;
    for (int j = lo; j <= hi; ++j) dims.push_back(cx.dim(lo + hi - j));
    for (int j = lo + 1; j <= hi; ++j) bnds.push_back(cx.boundary(lo + hi - j + 1).transposed());
    return ChainComplex(lo, dims, bnds);
}

std::string DistanceResult::to_string() const {
    switch (status) {
        case Status::Exact:
            return std::to_string(value) + " (exact, " + method + ")";
        case Status::Infinite:
            return "inf (empty homology)";
        case Status::AtLeast:
            return ">= " + std::to_string(value) + " (" + method + ")";
        case Status::BudgetExceeded:
            return "inconclusive (budget exceeded; >= " + std::to_string(value) + ")";
    }
    return "?";
}

int homology_dim(const ChainComplex& cx, int i) {
    if (!cx.in_range(i)) return 0;
    int ker = cx.dim(i) - rank(cx.boundary(i));
    return ker - rank(cx.boundary(i + 1));
}

std::vector<BinaryVector> homology_representatives(const ChainComplex& cx, int i) {
    std::vector<BinaryVector> reps;
    if (!cx.in_range(i)) return reps;
    Rref span = image_rref(cx.boundary(i + 1));
    // Grow the image row space by kernel vectors; each one that enlarges it is
    // an independent class representative.
    std::vector<BinaryVector> rows;
    std::vector<int> pivots;
    for (std::size_t r = 0; r < span.pivot_cols.size(); ++r) {
        rows.push_back(span.reduced.row(int(r)));
        pivots.push_back(span.pivot_cols[r]);
    }
    auto reduce = [&](BinaryVector v) {
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (v.get(pivots[r])) v.xor_with(rows[r]);
        return v;
    };
    for (const BinaryVector& k : kernel_basis(cx.boundary(i))) {
        BinaryVector red = reduce(k);
        if (red.is_zero()) continue;
        reps.push_back(k);
        int lead = red.support().front();
        rows.push_back(red);
        pivots.push_back(lead);
    }
    return reps;
}

namespace {

struct GrayRange {
    unsigned long long begin, end;  // walk j in (begin, end], visiting gray(j)
};

long long gray_search_worker(const std::vector<BinaryVector>& basis, const Rref& imrr, int nbits,
                             GrayRange range, std::atomic<long long>& shared_best) {
    BinaryVector cur(nbits);
    unsigned long long g = range.begin ^ (range.begin >> 1);
    for (std::size_t b = 0; b < basis.size(); ++b)
        if ((g >> b) & 1ull) cur.xor_with(basis[b]);
    long long best = shared_best.load(std::memory_order_relaxed);
    for (unsigned long long j = range.begin + 1; j <= range.end; ++j) {
        cur.xor_with(basis[std::size_t(std::countr_zero(j))]);
        long long w = cur.weight();
        if (w >= best) continue;
        if (in_image(imrr, cur)) continue;
        best = w;
        long long seen = shared_best.load(std::memory_order_relaxed);
        while (seen > best && !shared_best.compare_exchange_weak(seen, best, std::memory_order_relaxed)) {
        }
        if (best == 1) break;
    }
    return best;
}

}  // namespace

DistanceResult systolic_distance(const ChainComplex& cx, int i, const SearchOptions& opts) {
    DistanceResult res;
    if (homology_dim(cx, i) == 0) {
        res.status = DistanceResult::Status::Infinite;
        res.method = "rank";
        return res;
    }
    std::vector<BinaryVector> basis = kernel_basis(cx.boundary(i));
    int kdim = int(basis.size());
    if (kdim > 62 || (1ll << kdim) > opts.budget) {
        res.status = DistanceResult::Status::BudgetExceeded;
        res.value = 1;
        res.method = "kernel walk (dim " + std::to_string(kdim) + ")";
        return res;
    }
    Rref imrr = image_rref(cx.boundary(i + 1));
    unsigned long long total = 1ull << kdim;
    std::atomic<long long> shared_best{static_cast<long long>(cx.dim(i)) + 1};

    int nthreads = std::max(1, opts.threads);
    if (nthreads == 1 || total < (1ull << 16)) {
        shared_best = gray_search_worker(basis, imrr, cx.dim(i), {0, total - 1}, shared_best);
    } else {
        std::vector<std::thread> pool;
        std::vector<long long> mins(static_cast<std::size_t>(nthreads), 0);
        unsigned long long chunk = (total - 1) / (unsigned long long)(nthreads) + 1;
        for (int t = 0; t < nthreads; ++t) {
            unsigned long long b = (unsigned long long)(t)*chunk;
            unsigned long long e = std::min(total - 1, b + chunk);
            pool.emplace_back([&, t, b, e] {
                mins[std::size_t(t)] =
                    (b >= e) ? shared_best.load() : gray_search_worker(basis, imrr, cx.dim(i), {b, e}, shared_best);
            });
        }
        for (auto& th : pool) th.join();
        long long m = mins[0];
        for (long long v : mins) m = std::min(m, v);
        shared_best = m;
    }
    res.status = DistanceResult::Status::Exact;
    res.value = shared_best.load();
    res.method = "kernel walk over 2^" + std::to_string(kdim);
    return res;
}

DistanceResult systolic_distance_by_weight(const ChainComplex& cx, int i, int max_weight,
                                           const SearchOptions& opts) {
    DistanceResult res;
    if (homology_dim(cx, i) == 0) {
        res.status = DistanceResult::Status::Infinite;
        res.method = "rank";
        return res;
    }
    int n = cx.dim(i);
    max_weight = std::min(max_weight, n);

    // Combinatorial budget guard.
    long double combos = 0, term = 1;
    for (int w = 1; w <= max_weight; ++w) {
        term = term * (n - w + 1) / w;
        combos += term;
        if (combos > (long double)(opts.budget)) {
            res.status = DistanceResult::Status::BudgetExceeded;
            res.value = 1;
            res.method = "weight enumeration (combinatorial budget)";
            return res;
        }
    }

    BinaryMatrix bd = cx.boundary(i);
    std::vector<BinaryVector> cols;
    cols.reserve(std::size_t(n));
    for (int c = 0; c < n; ++c) cols.push_back(bd.col(c));
    Rref imrr = image_rref(cx.boundary(i + 1));

    std::vector<int> chosen;
    BinaryVector syndrome(bd.rows());
    BinaryVector vec(n);
    bool found = false;

    // Depth-first over ascending supports; exhaustive for each weight.
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (found) return;
        if (remaining == 0) {
            if (syndrome.is_zero() && !in_image(imrr, vec)) found = true;
            return;
        }
        for (int c = start; c <= n - remaining && !found; ++c) {
            syndrome.xor_with(cols[std::size_t(c)]);
            vec.set(c, true);
            self(self, c + 1, remaining - 1);
            vec.set(c, false);
            syndrome.xor_with(cols[std::size_t(c)]);
        }
    };
    for (int w = 1; w <= max_weight; ++w) {
        rec(rec, 0, w);
        if (found) {
            res.status = DistanceResult::Status::Exact;
            res.value = w;
            res.method = "weight enumeration";
            return res;
        }
    }
    res.status = DistanceResult::Status::AtLeast;
    res.value = max_weight + 1;
    res.method = "weight enumeration through " + std::to_string(max_weight);
    return res;
}

DistanceResult systolic_distance_or_bound(const ChainComplex& cx, int i, int target,
                                          const SearchOptions& opts) {
    if (homology_dim(cx, i) == 0) {
        DistanceResult res;
        res.status = DistanceResult::Status::Infinite;
        res.method = "rank";
        return res;
    }
    int kdim = cx.dim(i) - rank(cx.boundary(i));
    if (kdim <= 62 && (1ll << kdim) <= opts.budget) return systolic_distance(cx, i, opts);
    return systolic_distance_by_weight(cx, i, target, opts);
}

DistanceResult cosystolic_distance(const ChainComplex& cx, int i, const SearchOptions& opts) {
    return systolic_distance(cochain(cx), cx.lo() + cx.hi() - i, opts);
}

DistanceResult cosystolic_distance_or_bound(const ChainComplex& cx, int i, int target,
                                            const SearchOptions& opts) {
    return systolic_distance_or_bound(cochain(cx), cx.lo() + cx.hi() - i, target, opts);
}

HomologyReport homology(const ChainComplex& cx, int i, const SearchOptions& opts) {
    HomologyReport rep;
    rep.degree = i;
    rep.dim = homology_dim(cx, i);
    rep.representatives = homology_representatives(cx, i);
    rep.systolic_distance = systolic_distance(cx, i, opts);
    rep.cosystolic_distance = cosystolic_distance(cx, i, opts);
    return rep;
}

std::vector<TensorBlock> tensor_blocks(const ChainComplex& cx, const ChainComplex& dx, int k) {
    std::vector<TensorBlock> blocks;
    int offset = 0;
    int pmax = std::min(cx.hi(), k - dx.lo());
    int pmin = std::max(cx.lo(), k - dx.hi());
    for (int p = pmax; p >= pmin; --p) {
        int q = k - p;
        TensorBlock b{p, q, cx.dim(p) * dx.dim(q), offset};
        offset += b.dim;
        blocks.push_back(b);
    }
    return blocks;
}

ChainComplex tensor_product(const ChainComplex& cx, const ChainComplex& dx) {
    int lo = cx.lo() + dx.lo();
    int hi = cx.hi() + dx.hi();
    std::vector<int> dims;
    std::vector<std::vector<TensorBlock>> blocks;
    for (int k = lo; k <= hi; ++k) {
        blocks.push_back(tensor_blocks(cx, dx, k));
        int total = 0;
        for (const auto& b : blocks.back()) total += b.dim;
        dims.push_back(total);
    }
    std::vector<BinaryMatrix> bnds;
    for (int k = lo + 1; k <= hi; ++k) {
        const auto& src = blocks[std::size_t(k - lo)];
        const auto& dst = blocks[std::size_t(k - 1 - lo)];
        BinaryMatrix bd(dims[std::size_t(k - 1 - lo)], dims[std::size_t(k - lo)]);
        for (const auto& cb : src) {
            if (cb.dim == 0) continue;
            for (const auto& rb : dst) {
                if (rb.dim == 0) continue;
                if (rb.p == cb.p - 1 && rb.q == cb.q)
                    paste(bd, rb.offset, cb.offset, kron(cx.boundary(cb.p), BinaryMatrix::identity(dx.dim(cb.q))));
                else if (rb.p == cb.p && rb.q == cb.q - 1)
                    paste(bd, rb.offset, cb.offset, kron(BinaryMatrix::identity(cx.dim(cb.p)), dx.boundary(cb.q)));
            }
        }
        bnds.push_back(std::move(bd));
    }
    return ChainComplex(lo, dims, bnds);
}

CheckResult kunneth_check(const ChainComplex& cx, const ChainComplex& dx, int k, const SearchOptions&) {
    ChainComplex t = tensor_product(cx, dx);
    int lhs = homology_dim(t, k);
    int rhs = 0;
    std::ostringstream detail;
    for (int p = cx.lo(); p <= cx.hi(); ++p) {
        int q = k - p;
        if (!dx.in_range(q)) continue;
        rhs += homology_dim(cx, p) * homology_dim(dx, q);
    }
    detail << "dim H_" << k << "(product) = " << lhs << ", sum of factor products = " << rhs;
    return {lhs == rhs, detail.str()};
}

CheckResult product_distance_check(const ChainComplex& cx, const ChainComplex& dx, int k,
                                   const SearchOptions& opts) {
    // Locate dx's two non-trivial terms; they must sit in adjacent degrees.
    std::vector<int> nontrivial;
    for (int q = dx.lo(); q <= dx.hi(); ++q)
        if (dx.dim(q) > 0) nontrivial.push_back(q);
    if (nontrivial.size() != 2 || nontrivial[1] != nontrivial[0] + 1)
        return {false, "second factor must have exactly two adjacent non-trivial terms"};
    int a = nontrivial[1];

    auto dist = [&](const ChainComplex& c, int deg) -> Dist {
        DistanceResult r = systolic_distance(c, deg, opts);
        if (r.status == DistanceResult::Status::BudgetExceeded)
            throw std::runtime_error("product_distance_check: search budget exceeded");
        return r.as_dist();
    };

    Dist lhs = dist(tensor_product(cx, dx), k);
    Dist rhs = min(dist(cx, k - a) * dist(dx, a), dist(cx, k - a + 1) * dist(dx, a - 1));
    std::ostringstream detail;
    detail << "exhaustive d_" << k << " = " << lhs.to_string() << ", formula = " << rhs.to_string();
    return {lhs == rhs, detail.str()};
}

}  // namespace qsurg
