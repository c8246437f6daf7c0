#ifndef QSURG_GADGET_HPP
#define QSURG_GADGET_HPP

#include <string>

#include "qsurg/cone.hpp"

// 1D surgery gadgets: an ancilla complex G_1 -> G_0 -> G_{-1} built from a
// graph family on the support of a chosen classical codeword, with a chain map
// g into the code, plus the checkers for the five surgery-lemma conditions.

namespace qsurg {

struct NotACodeword : std::runtime_error {
    NotACodeword() : std::runtime_error("gadget: target vector is not a codeword") {}
};
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct KernelViolation : std::runtime_error {
    KernelViolation() : std::runtime_error("cheeger: all-ones vector is not in the kernel") {}
};

enum class GadgetFamily { Path, Cycle, CompleteTriangulated };

std::string family_name(GadgetFamily f);

// Exact non-negative rational, with an explicit infinity for vacuous bounds.
class Fraction {
  public:
    Fraction() : num_(0), den_(1), inf_(false) {}
    Fraction(long long num, long long den);
    static Fraction infinity() {
        Fraction f;
        f.inf_ = true;
        return f;
    }
    bool is_infinite() const { return inf_; }
    long long num() const { return num_; }
    long long den() const { return den_; }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    bool at_least_one() const { return inf_ || num_ >= den_; }
    std::string to_string() const;

  private:
    long long num_, den_;
    bool inf_;
};

// Exact boundary Cheeger constant: min over v not in {0, all-ones} of
// |Mv| / min(|v|, n - |v|), by exhaustive enumeration.
Fraction cheeger_constant(const BinaryMatrix& m, int budget_bits = 22);

// Relative variant with the denominator min(t, |S(v) and P|, |P \ S(v)|);
// vectors whose denominator vanishes impose no constraint.
Fraction relative_cheeger(const BinaryMatrix& m, const std::vector<int>& p_indices, int t,
                          int budget_bits = 22);

struct GadgetReport {
    Fraction cheeger;
    bool relative_mode = false;
    int relative_t = 0;
    int dim_h1 = -1, dim_h0 = -1, dim_hm1 = -1;
    bool kernel_is_all_ones = false;
    bool maps_to_codeword = false;
    int sparsity_w = 0;  // max row/column weight over d_G1, d_G0, g_0
    bool g1_one_sparse = false;
    int size = 0;
    long long size_bound_log3 = 0;

    bool cond_expansion = false;   // 1
    bool cond_no_gauge = false;    // 2
    bool cond_measures = false;    // 3
    bool cond_sparsity = false;    // 4
    bool cond_size = false;        // 5
    bool all_pass() const {
        return cond_expansion && cond_no_gauge && cond_measures && cond_sparsity && cond_size;
    }
};

struct SurgeryGadget {
    ChainComplex target_code;  // 2-term classical complex at degrees [0,1]
    BinaryVector codeword;
    GadgetFamily family;
    ChainComplex g_complex;  // degrees [-1..1]: faces, edges, vertices
    ChainMap g;              // g_complex -> target_code
};

struct VerifyMode {
    bool relative = false;
    int t = 0;  // relative cap; P is derived from the gadget (nonzero g_1 columns)
};

// Builds the family graph on supp(c), its face set, the support-inclusion g_1
// and the spanning-tree g_0. The cycle family keeps one face spanning its
// cycle space unless keep_cycle_face is false (gauge variant, comparison only).
SurgeryGadget synthesize(const ChainComplex& code, const BinaryVector& c, GadgetFamily family,
                         bool keep_cycle_face = true);

GadgetReport verify_conditions(const SurgeryGadget& gadget, const VerifyMode& mode = {},
                               int cheeger_budget_bits = 22);

}  // namespace qsurg

#endif
