#ifndef QSURG_CHAIN_HPP
#define QSURG_CHAIN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsurg/gf2.hpp"

// Bounded chain complexes over GF(2). A complex stores a contiguous degree
// range [lo..hi], a dimension per degree, and boundary maps
// boundary(i) : C_i -> C_{i-1} of shape dim(i-1) x dim(i) for lo < i <= hi.

namespace qsurg {

// Count-or-infinity with the conventions: inf * a = inf for a > 0,
// inf * 0 rejected, min(inf, a) = a. Used for systolic distances.
class Dist {
  public:
    Dist() : finite_(true), value_(0) {}
    explicit Dist(long long v) : finite_(true), value_(v) {}
    static Dist infinity() {
        Dist d;
        d.finite_ = false;
        return d;
    }
    bool is_finite() const { return finite_; }
    long long value() const {
        if (!finite_) throw std::logic_error("Dist: value() of infinity");
        return value_;
    }
    friend Dist operator*(Dist a, Dist b) {
        if (!a.finite_ || !b.finite_) {
            if ((a.finite_ && a.value_ == 0) || (b.finite_ && b.value_ == 0))
                throw std::invalid_argument("Dist: infinity * 0 is undefined");
            return infinity();
        }
        return Dist(a.value_ * b.value_);
    }
    friend Dist min(Dist a, Dist b) {
        if (!a.finite_) return b;
        if (!b.finite_) return a;
        return Dist(std::min(a.value_, b.value_));
    }
    friend bool operator==(Dist a, Dist b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend bool operator>=(Dist a, long long v) { return !a.finite_ || a.value_ >= v; }
    std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

  private:
    bool finite_;
    long long value_;
};

class ChainComplex {
  public:
    ChainComplex() = default;
    // dims[k] is the dimension at degree lo + k; boundaries[k] is the map from
    // degree lo+k+1 down to lo+k (so boundaries.size() == dims.size() - 1).
    ChainComplex(int lo, std::vector<int> dims, std::vector<BinaryMatrix> boundaries);

    // Classical code C_1 -> C_0 with boundary H (checks x bits).
    static ChainComplex classical_code(const BinaryMatrix& h);

    int lo() const { return lo_; }
    int hi() const { return lo_ + int(dims_.size()) - 1; }
    bool in_range(int degree) const { return degree >= lo() && degree <= hi(); }
    int dim(int degree) const { return in_range(degree) ? dims_[std::size_t(degree - lo_)] : 0; }

    // Zero-shaped matrix outside the stored range, so callers need no bounds cases.
    BinaryMatrix boundary(int degree) const;

    // Degrees shifted up by k (the mapping-cone convention shifts ancillas by +1).
    ChainComplex shifted(int k) const;

    friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
        return a.lo_ == b.lo_ && a.dims_ == b.dims_ && a.boundaries_ == b.boundaries_;
    }

  private:
    int lo_ = 0;
    std::vector<int> dims_;
    std::vector<BinaryMatrix> boundaries_;
};

struct Violation {
    int degree;
    std::string what;
};

// ok iff shapes line up and every composite boundary vanishes.
std::optional<Violation> validate(const ChainComplex& cx);

// The cochain complex re-indexed (degree j <-> lo+hi-j) so it is again a chain
// complex; an involution up to that relabeling.
ChainComplex cochain(const ChainComplex& cx);

struct SearchOptions {
    long long budget = 1ll << 26;  // max vectors a kernel Gray walk may visit
    int threads = 1;
};

struct DistanceResult {
    enum class Status { Exact, Infinite, AtLeast, BudgetExceeded };
    Status status = Status::BudgetExceeded;
    long long value = 0;  // exact distance, or the certified bound for AtLeast
    std::string method;

    bool exact() const { return status == Status::Exact; }
    bool infinite() const { return status == Status::Infinite; }
    Dist as_dist() const {
        if (status == Status::Infinite) return Dist::infinity();
        if (status == Status::Exact) return Dist(value);
        throw std::logic_error("DistanceResult: no exact distance available");
    }
    bool at_least(long long d) const {
        if (status == Status::Infinite) return true;
        if (status == Status::Exact || status == Status::AtLeast) return value >= d;
        return false;
    }
    std::string to_string() const;
};

struct HomologyReport {
    int degree = 0;
    int dim = 0;
    std::vector<BinaryVector> representatives;
    DistanceResult systolic_distance;
    DistanceResult cosystolic_distance;
};

// dim H_i and representatives only; no distance search.
int homology_dim(const ChainComplex& cx, int i);
std::vector<BinaryVector> homology_representatives(const ChainComplex& cx, int i);

// Exact i-systolic distance by a Gray-code walk over ker(boundary(i)),
// skipping vectors inside im(boundary(i+1)). Infinite when H_i = 0;
// BudgetExceeded when 2^{dim ker} is past the budget.
DistanceResult systolic_distance(const ChainComplex& cx, int i, const SearchOptions& opts = {});

// Ascending-weight exhaustive search: enumerates every chain of weight
// 1..max_weight, returns the exact distance on first hit, or AtLeast
// max_weight+1 when none exists. Exhaustive, not sampled.
DistanceResult systolic_distance_by_weight(const ChainComplex& cx, int i, int max_weight,
                                           const SearchOptions& opts = {});

// Exact when the kernel walk fits the budget, otherwise the by-weight search
// capped at `target` (enough to settle "distance >= target" questions).
DistanceResult systolic_distance_or_bound(const ChainComplex& cx, int i, int target,
                                          const SearchOptions& opts = {});

DistanceResult cosystolic_distance(const ChainComplex& cx, int i, const SearchOptions& opts = {});
DistanceResult cosystolic_distance_or_bound(const ChainComplex& cx, int i, int target,
                                            const SearchOptions& opts = {});

HomologyReport homology(const ChainComplex& cx, int i, const SearchOptions& opts = {});

// Tensor product with blocks of (C (x) D)_k ordered by descending C-degree.
ChainComplex tensor_product(const ChainComplex& cx, const ChainComplex& dx);

// Block bookkeeping for degree k of tensor_product(cx, dx): the (p, q) pairs in
// order, with each block's dimension and coordinate offset.
struct TensorBlock {
    int p, q;
    int dim;
    int offset;
};
std::vector<TensorBlock> tensor_blocks(const ChainComplex& cx, const ChainComplex& dx, int k);

struct CheckResult {
    bool ok = true;
    std::string detail;
};

// Kunneth dimension identity at degree k, both sides computed independently.
CheckResult kunneth_check(const ChainComplex& cx, const ChainComplex& dx, int k,
                          const SearchOptions& opts = {});

// d_k(C (x) D) vs the two-term product formula; dx must have exactly two
// non-trivial terms in adjacent degrees.
CheckResult product_distance_check(const ChainComplex& cx, const ChainComplex& dx, int k,
                                   const SearchOptions& opts = {});

}  // namespace qsurg

#endif
