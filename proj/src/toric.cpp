#include "qsurg/toric.hpp"

#include <algorithm>
#include <numeric>

namespace qsurg {

BinaryMatrix cyclic_repetition(int d) {
    if (d < 2) throw std::invalid_argument("cyclic repetition code needs d >= 2");
    BinaryMatrix h(d, d);
    for (int r = 0; r < d; ++r) {
        h.set(r, r, true);
        h.set(r, (r + 1) % d, true);
    }
    return h;
}

ToricInstance build_toric(int d, int blocks, const SearchOptions& opts) {
    if (blocks < 1) throw std::invalid_argument("build_toric: blocks >= 1");
    ChainComplex rep = ChainComplex::classical_code(cyclic_repetition(d));
    BinaryMatrix hp = cyclic_repetition(d);
    for (int m = 1; m < blocks; ++m) hp = direct_sum(hp, cyclic_repetition(d));
    ChainComplex c_prime = ChainComplex::classical_code(hp);
    ToricInstance inst;
    inst.d = d;
    inst.blocks = blocks;
    inst.code = build_hgp(c_prime, rep, opts);
    return inst;
}

void plan_measurements(ToricInstance& inst, std::vector<BinaryVector> bs) {
    for (const auto& b : bs) {
        if (b.size() != inst.blocks) throw std::invalid_argument("plan_measurements: b must live in F_2^M");
        if (b.is_zero()) throw ZeroVector();
    }
    inst.b_vectors = std::move(bs);
    if (inst.b_vectors.empty()) {
        inst.b_perp.clear();
        for (int m = 0; m < inst.blocks; ++m) inst.b_perp.push_back(BinaryVector::unit(inst.blocks, m));
        return;
    }
    BinaryMatrix rows = BinaryMatrix::from_rows(inst.b_vectors, inst.blocks);
    inst.b_perp = kernel_basis(rows);
}

SurgeryGadget toric_gadget(const ToricInstance& inst, const BinaryVector& b, bool keep_face) {
    if (b.size() != inst.blocks) throw std::invalid_argument("toric_gadget: b must live in F_2^M");
    if (b.is_zero()) throw ZeroVector();
    int d = inst.d;
    BinaryVector codeword(inst.blocks * d);
    for (int m = 0; m < inst.blocks; ++m)
        if (b.get(m))
            for (int j = 0; j < d; ++j) codeword.set(m * d + j, true);

    if (b.weight() > 1) return synthesize(inst.code.c, codeword, GadgetFamily::Cycle, keep_face);

    // Single block: the geometric cycle gadget. Edge (k, k+1) maps to check k
    // of the measured block, giving weight-five deformed X checks.
    int block = b.support().front();
    int faces = keep_face ? 1 : 0;
    BinaryMatrix d_g1(d, d);
    for (int e = 0; e < d; ++e) {
        d_g1.set(e, e, true);
        d_g1.set(e, (e + 1) % d, true);
    }
    BinaryMatrix d_g0(faces, d);
    for (int e = 0; e < d && keep_face; ++e) d_g0.set(0, e, true);
    BinaryMatrix g1(inst.code.c.dim(1), d);
    BinaryMatrix g0(inst.code.c.dim(0), d);
    for (int k = 0; k < d; ++k) {
        g1.set(block * d + k, k, true);
        g0.set(block * d + k, k, true);
    }
    ChainComplex g_complex(-1, {faces, d, d}, {d_g0, d_g1});
    std::map<int, BinaryMatrix> maps;
    maps.emplace(1, g1);
    maps.emplace(0, g0);
    ChainMap g(g_complex, inst.code.c, std::move(maps));
    return SurgeryGadget{inst.code.c, codeword, GadgetFamily::Cycle, std::move(g_complex), std::move(g)};
}

CheckResult g1_condition_check(const ToricInstance& inst, const SurgeryGadget& gadget) {
    const BinaryMatrix g1 = gadget.g.at(1);
    int d = inst.d;
    for (const BinaryVector& bp : inst.b_perp) {
        for (int g = 0; g < d; ++g) {
            BinaryVector y(inst.blocks * d);
            for (int m = 0; m < inst.blocks; ++m)
                if (bp.get(m)) y.set(m * d + g, true);
            if (solve(g1, y))
                return {false, "preimage of b_perp (x) e_" + std::to_string(g) + " is nonempty"};
        }
    }
    return {true, inst.b_perp.empty() ? "vacuous: B_perp is trivial" : "all preimages empty"};
}

MetaCheckGraph metacheck_graph(const DeformedCssCode& css, const SurgeryGadget& gadget,
                               const ChainComplex& d_factor, const SearchOptions& opts) {
    MetaCheckGraph graph;
    graph.vertices = css.meta_checks;
    int vertical = gadget.g_complex.dim(1) * d_factor.dim(0);
    int horizontal = gadget.g_complex.dim(0) * d_factor.dim(1);
    if (vertical + horizontal != css.ancilla_z_checks)
        throw WrongShape("metacheck_graph: ancilla Z-check block sizes do not match a lifted gadget");
    if (css.meta_checks == 0) throw WrongShape("metacheck_graph: no meta-checks present");

    BinaryMatrix anc(css.meta_checks, css.ancilla_z_checks);
    for (int c = 0; c < css.ancilla_z_checks; ++c) {
        std::vector<int> ends;
        for (int r = 0; r < css.meta_checks; ++r)
            if (css.meta_z.get(r, c)) ends.push_back(r);
        if (ends.size() > 2) throw WrongShape("metacheck_graph: an ancilla Z check meets > 2 meta-checks");
        for (int r : ends) anc.set(r, c, true);
        int u = ends.empty() ? -1 : ends.front();
        int v = ends.size() == 2 ? ends.back() : u;
        graph.edges.push_back(MetaCheckGraph::Edge{c, u, v, c < vertical});
    }

    std::vector<int> degree(std::size_t(css.meta_checks), 0);
    for (const auto& e : graph.edges) {
        if (e.u >= 0) ++degree[std::size_t(e.u)];
        if (e.v >= 0 && e.v != e.u) ++degree[std::size_t(e.v)];
    }
    graph.four_regular = std::all_of(degree.begin(), degree.end(), [](int x) { return x == 4; });

    std::vector<int> comp(std::size_t(css.meta_checks), -1);
    std::vector<int> stack;
    int components = 0;
    for (int s = 0; s < css.meta_checks; ++s) {
        if (comp[std::size_t(s)] >= 0) continue;
        ++components;
        stack.push_back(s);
        comp[std::size_t(s)] = components;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : graph.edges) {
                int next = -1;
                if (e.u == v) next = e.v;
                if (e.v == v) next = e.u;
                if (next >= 0 && comp[std::size_t(next)] < 0) {
                    comp[std::size_t(next)] = components;
                    stack.push_back(next);
                }
            }
        }
    }
    graph.connected = components == 1;
    graph.cycle_rank = int(graph.edges.size()) - css.meta_checks + components;

    for (int r = 0; r < css.meta_checks; ++r) {
        int base = 0;
        for (int c = css.ancilla_z_checks; c < css.z_checks; ++c)
            if (css.meta_z.get(r, c)) ++base;
        graph.max_base_support_per_meta = std::max(graph.max_base_support_per_meta, base);
    }

    // Undetected ancilla measurement errors = nonzero kernel vectors of the
    // ancilla-restricted M_Z; minimum weight by exhaustive search.
    ChainComplex anc_complex(0, {css.meta_checks, css.ancilla_z_checks}, {anc});
    graph.min_undetected_weight = systolic_distance(anc_complex, 1, opts);
    return graph;
}

bool ToricDistanceReport::distances_at_least_d() const {
    for (const auto& r : deformed_d1)
        if (!r.at_least(target_d)) return false;
    for (const auto& r : deformed_d1co)
        if (!r.at_least(target_d)) return false;
    return compacted_d1.at_least(target_d) && compacted_d1co.at_least(target_d);
}

namespace {

// X-h witness for block m and column k: zero on ancilla edges and vertical
// base qubits, the face correction on G_{-1} (x) D_1, and the transpose-code
// word on C'_0 (x) D_1.
BinaryVector xh_witness(const ConeComplex& cone, const SurgeryGadget& gadget, const ChainComplex& c_prime,
                        const ChainComplex& d_factor, int block, int k) {
    int n_d = d_factor.dim(1);
    BinaryVector cbar(c_prime.dim(0));
    int d = n_d;
    for (int j = 0; j < d; ++j) cbar.set(block * d + j, true);

    BinaryVector z = gadget.g.at(0).transposed().apply(cbar);     // edge overlaps
    BinaryVector face_part = gadget.g_complex.boundary(0).apply(z);  // in G_{-1}

    BinaryVector w(cone.complex.dim(1));
    int off_face = -1, off_right = -1;
    for (const auto& blk : tensor_blocks(gadget.g_complex, d_factor, 0))
        if (blk.p == -1 && blk.q == 1) off_face = blk.offset;
    for (const auto& blk : tensor_blocks(c_prime, d_factor, 1))
        if (blk.p == 0 && blk.q == 1) off_right = cone.ancilla_at(1) + blk.offset;

    for (int f = 0; f < face_part.size(); ++f)
        if (face_part.get(f)) w.set(off_face + f * n_d + k, true);
    for (int r = 0; r < cbar.size(); ++r)
        if (cbar.get(r)) w.set(off_right + r * n_d + k, true);
    return w;
}

bool in_cocycle_kernel(const ChainComplex& cx, int degree, const BinaryVector& w) {
    return cx.boundary(degree + 1).transposed().apply(w).is_zero();
}

}  // namespace

ToricDistanceReport verify_toric_distances(const ToricInstance& inst,
                                           const std::vector<SurgeryGadget>& gadgets,
                                           const SearchOptions& opts) {
    if (!inst.code.distance.exact())
        throw std::invalid_argument("verify_toric_distances: base distance must be exact");
    ToricDistanceReport rep;
    rep.target_d = inst.code.distance.value;

    SurgerySequence seq;
    seq.base = inst.code;
    for (const auto& g : gadgets) seq.gadgets.push_back(SequencedGadget{g, Orientation::OnC});

    for (const auto& g : gadgets) {
        Deformed def = build_deformed(inst.code, g, Orientation::OnC);
        rep.deformed_d1.push_back(systolic_distance_or_bound(def.cone.complex, 1, int(rep.target_d), opts));
        rep.deformed_d1co.push_back(
            cosystolic_distance_or_bound(def.cone.complex, 1, int(rep.target_d), opts));

        std::vector<ToricWitnessCheck> checks;
        for (int m = 0; m < inst.blocks; ++m) {
            ToricWitnessCheck wc;
            wc.block = m;
            wc.count = inst.d;
            wc.in_kernel = true;
            wc.disjoint = true;
            std::vector<BinaryVector> ws;
            for (int k = 0; k < inst.d; ++k) {
                BinaryVector w = xh_witness(def.cone, g, inst.code.c, inst.code.d, m, k);
                wc.in_kernel = wc.in_kernel && in_cocycle_kernel(def.cone.complex, 1, w);
                ws.push_back(std::move(w));
            }
            for (std::size_t a = 0; a < ws.size(); ++a)
                for (std::size_t b = a + 1; b < ws.size(); ++b)
                    wc.disjoint = wc.disjoint && ws[a].disjoint_from(ws[b]);
            checks.push_back(wc);
        }
        rep.xh_witnesses.push_back(std::move(checks));
    }

    // Compacted prefixes: X-v trivial extensions survive at every step.
    for (std::size_t tau = 1; tau <= gadgets.size(); ++tau) {
        SurgerySequence prefix;
        prefix.base = inst.code;
        for (std::size_t i = 0; i < tau; ++i) prefix.gadgets.push_back(seq.gadgets[i]);
        CompactedCode cc = build_compacted(prefix);
        bool all_ok = true;
        int off_left = cc.cone.ancilla_at(1);  // C'_1 (x) D_0 block leads the base part
        for (const BinaryVector& bp : inst.b_perp) {
            for (int g = 0; g < inst.d; ++g) {
                BinaryVector w(cc.cone.complex.dim(1));
                for (int m = 0; m < inst.blocks; ++m) {
                    if (!bp.get(m)) continue;
                    int bit = m * inst.d + g;
                    for (int j = 0; j < inst.code.d.dim(0); ++j)
                        w.set(off_left + bit * inst.code.d.dim(0) + j, true);
                }
                all_ok = all_ok && in_cocycle_kernel(cc.cone.complex, 1, w);
            }
        }
        rep.xv_survivors_per_tau.push_back(all_ok);
        if (tau == gadgets.size()) {
            rep.compacted_d1 = systolic_distance_or_bound(cc.cone.complex, 1, int(rep.target_d), opts);
            rep.compacted_d1co = cosystolic_distance_or_bound(cc.cone.complex, 1, int(rep.target_d), opts);
        }
    }
    return rep;
}

}  // namespace qsurg
