#ifndef QSURG_TORIC_HPP
#define QSURG_TORIC_HPP

#include "qsurg/hgp.hpp"

// The toric case study: cycle-gadget surgery on one or M toric code blocks,
// the meta-check decoding graph, and the distance checks that hold without
// expansion.

namespace qsurg {

struct ZeroVector : std::runtime_error {
    ZeroVector() : std::runtime_error("toric gadget: measurement vector b must be nonzero") {}
};
struct WrongShape : std::runtime_error {
    explicit WrongShape(const std::string& what) : std::runtime_error(what) {}
};

// d x d circulant with rows {r, r+1 mod d}.
BinaryMatrix cyclic_repetition(int d);

struct ToricInstance {
    int d = 0;
    int blocks = 1;  // M
    HgpCode code;    // HGP(C', D) with C' the M-fold direct sum of cyclic-rep-d
    std::vector<BinaryVector> b_vectors;  // planned measurement sequence in F_2^M
    std::vector<BinaryVector> b_perp;     // basis of the orthogonal complement of span(b_vectors)
};

ToricInstance build_toric(int d, int blocks, const SearchOptions& opts = {});

// Records the measurement plan and recomputes B_perp (dimension M - t).
void plan_measurements(ToricInstance& inst, std::vector<BinaryVector> bs);

// Cycle gadget measuring the codeword b (x) all-ones. Single-block b uses the
// geometric edge-to-check map (weight-five deformed X checks); entangling b
// falls back to the spanning-tree map. keep_face=false reproduces the
// face-free variant, gauge qubit and all, for structural comparison only.
SurgeryGadget toric_gadget(const ToricInstance& inst, const BinaryVector& b, bool keep_face = true);

// Empty-preimage assertion: for every B_perp basis vector and every unit e_g,
// b_perp (x) e_g has no g_1 preimage.
CheckResult g1_condition_check(const ToricInstance& inst, const SurgeryGadget& gadget);

struct MetaCheckGraph {
    int vertices = 0;  // meta checks
    struct Edge {
        int column;  // ancilla Z-check column of M_Z
        int u, v;
        bool vertical;  // G_1 (x) D_0 columns; horizontal ones live in G_0 (x) D_1
    };
    std::vector<Edge> edges;
    bool four_regular = false;
    bool connected = false;
    int cycle_rank = 0;
    int max_base_support_per_meta = 0;  // M_Z support on the base Z checks, reported separately
    DistanceResult min_undetected_weight;
};

// Decoding-graph structure of M_Z restricted to the ancilla Z checks.
MetaCheckGraph metacheck_graph(const DeformedCssCode& css, const SurgeryGadget& gadget,
                               const ChainComplex& d_factor, const SearchOptions& opts = {});

struct ToricWitnessCheck {
    int block = 0;        // m: which X-h family
    int count = 0;        // d disjoint representatives, k in [d]
    bool in_kernel = false;
    bool disjoint = false;
};

struct ToricDistanceReport {
    std::vector<DistanceResult> deformed_d1, deformed_d1co;
    DistanceResult compacted_d1, compacted_d1co;
    std::vector<std::vector<ToricWitnessCheck>> xh_witnesses;  // [gadget][block]
    std::vector<bool> xv_survivors_per_tau;  // trivial X-v extensions stay in ker at every prefix
    long long target_d = 0;
    bool distances_at_least_d() const;
};

ToricDistanceReport verify_toric_distances(const ToricInstance& inst,
                                           const std::vector<SurgeryGadget>& gadgets,
                                           const SearchOptions& opts = {});

}  // namespace qsurg

#endif
