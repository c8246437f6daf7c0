#ifndef QSURG_HGP_HPP
#define QSURG_HGP_HPP

#include "qsurg/gadget.hpp"

// Hypergraph product codes, canonical logical bases, deformed codes from
// lifted gadgets, the compacted code of a surgery sequence, and the
// fast-surgery condition checks.

namespace qsurg {

struct DependentCodewords : std::runtime_error {
    DependentCodewords() : std::runtime_error("surgery sequence: codewords are linearly dependent") {}
};
struct MismatchedD : std::runtime_error {
    MismatchedD() : std::runtime_error("multi-block: blocks do not share an identical D factor") {}
};
struct OrientationMismatch : std::runtime_error {
    OrientationMismatch() : std::runtime_error("gadget does not target the factor named by the orientation") {}
};

struct HgpCode {
    ChainComplex c;        // 2-term factor at degrees [0,1]; bits at degree 1
    ChainComplex d;        // 2-term factor at degrees [0,1]
    ChainComplex product;  // degrees [0,2]; qubits at degree 1
    BinaryMatrix h_x, h_z;
    int n = 0;
    int k = 0;
    DistanceResult distance;  // min of d_1 and d^1 searches

    int left_qubits() const { return c.dim(1) * d.dim(0); }  // C_1 (x) D_0 block, first
};

HgpCode build_hgp(const ChainComplex& c, const ChainComplex& d, const SearchOptions& opts = {});

// Row/column structured logical bases from the RREF pivot data of the four
// component maps. Grid (i,j) pairs anticommute, everything else commutes.
struct CanonicalBasis {
    // Kernel bases and their dual unit-vector columns (the RREF free columns).
    std::vector<BinaryVector> l_c, l_dt, l_ct, l_d;
    std::vector<int> free_c, free_dt, free_ct, free_d;

    // Logical representatives on the qubit space, indexed [row][column].
    std::vector<std::vector<BinaryVector>> z_left, x_left;    // [k_C][k_DT]
    std::vector<std::vector<BinaryVector>> z_right, x_right;  // [k_CT][k_D]

    int k_left() const { return int(z_left.size()) * (z_left.empty() ? 0 : int(z_left[0].size())); }
};

CanonicalBasis canonical_basis(const HgpCode& code);

enum class Orientation { OnC, OnD };

struct Deformed {
    Orientation orientation;
    ChainMap f;        // lifted chain map into the product
    ConeComplex cone;  // 4-term deformed complex, qubits at degree 1
    DeformedCssCode css;
};

Deformed build_deformed(const HgpCode& code, const SurgeryGadget& gadget, Orientation orientation);

// One measured homology class per H_0 basis element of the untouched factor.
struct MeasuredClass {
    int class_index;                 // column l (on-C) or row p (on-D) of the canonical grid
    BinaryVector representative;     // canonical representative on the qubit space
    std::vector<int> canonical_rows;  // grid rows i with Z^L_{i,l} in the product (on-C)
    struct UnitRep {
        int unit;                 // which unit vector of the H_0 side
        BinaryVector rep;         // qubit-space representative
        BinaryVector certificate;  // ancilla Z checks whose product equals it
    };
    std::vector<UnitRep> unit_reps;  // every certified unit representative of this class
};

struct MeasurementReport {
    std::vector<MeasuredClass> classes;
    int k_before = 0;
    int k_after = 0;  // dim H_1 of the deformed complex, computed by rank
};

MeasurementReport measured_logicals(const HgpCode& code, const SurgeryGadget& gadget,
                                    Orientation orientation);

struct SequencedGadget {
    SurgeryGadget gadget;
    Orientation orientation = Orientation::OnC;
};

struct SurgerySequence {
    HgpCode base;
    std::vector<SequencedGadget> gadgets;
};

struct CompactedCode {
    ConeComplex cone;                     // cone of the summed extended maps
    ChainMap f_bar;
    std::optional<CheckResult> two_route;  // cone(g (x) id) vs cone (x) D, uniform orientation only
};

CompactedCode build_compacted(const SurgerySequence& seq);

struct FastSurgeryReport {
    DistanceResult compacted_d1, compacted_d1co;
    std::vector<DistanceResult> metacheck_d1co;  // per gadget
    bool disjointness = false;                   // structural: every g[i]_1 is 1-sparse
    std::vector<bool> f1_unit_images_disjoint;   // literal per-gadget check, informational
    int k_before = 0, k_after = 0;
    bool two_route_ok = true;
    bool cond_compacted_distance() const {
        return compacted_d1.at_least(target_d) && compacted_d1co.at_least(target_d);
    }
    bool cond_metacheck() const {
        for (const auto& r : metacheck_d1co)
            if (!r.at_least(target_d)) return false;
        return !metacheck_d1co.empty();
    }
    long long target_d = 0;
    bool all_pass() const { return cond_compacted_distance() && cond_metacheck() && disjointness; }
};

FastSurgeryReport verify_fast_conditions(const SurgerySequence& seq, const SearchOptions& opts = {});

// m HGP blocks sharing the identical factor D, glued along their C sides into
// one block with C' the direct sum; one gadget measures the joint codeword.
SurgerySequence multi_block(const std::vector<HgpCode>& codes,
                            const std::vector<BinaryVector>& per_block_codewords, GadgetFamily family,
                            const SearchOptions& opts = {});

}  // namespace qsurg

#endif
