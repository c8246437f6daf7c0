#include "qsurg/hgp.hpp"

#include <algorithm>
#include <sstream>

namespace qsurg {

namespace {

void require_two_term(const ChainComplex& cx, const char* which) {
    if (cx.lo() != 0 || cx.hi() != 1)
        throw std::invalid_argument(std::string(which) + ": expected a 2-term complex at degrees [0,1]");
}

BinaryVector vec_kron(const BinaryVector& a, const BinaryVector& b) {
    BinaryVector out(a.size() * b.size());
    for (int i = 0; i < a.size(); ++i) {
        if (!a.get(i)) continue;
        for (int j = 0; j < b.size(); ++j)
            if (b.get(j)) out.set(i * b.size() + j, true);
    }
    return out;
}

// Embeds a block-local vector into the qubit space (left block first).
BinaryVector embed(const BinaryVector& v, int offset, int total) {
    BinaryVector out(total);
    for (int i : v.support()) out.set(offset + i, true);
    return out;
}

DistanceResult combine_min(const DistanceResult& a, const DistanceResult& b) {
    using S = DistanceResult::Status;
    if (a.status == S::BudgetExceeded || b.status == S::BudgetExceeded) {
        DistanceResult r;
        r.status = S::BudgetExceeded;
        r.value = 1;
        r.method = "min of searches";
        return r;
    }
    if (a.status == S::Infinite) return b;
    if (b.status == S::Infinite) return a;
    DistanceResult r;
    r.status = (a.status == S::Exact && b.status == S::Exact) ? S::Exact : S::AtLeast;
    r.value = std::min(a.value, b.value);
    r.method = "min of searches";
    return r;
}

ChainComplex direct_sum_complex(const std::vector<ChainComplex>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum_complex: no parts");
    int lo = parts.front().lo(), hi = parts.front().hi();
    for (const auto& p : parts) {
        lo = std::min(lo, p.lo());
        hi = std::max(hi, p.hi());
    }
    std::vector<int> dims;
    for (int k = lo; k <= hi; ++k) {
        int total = 0;
        for (const auto& p : parts) total += p.dim(k);
        dims.push_back(total);
    }
    std::vector<BinaryMatrix> bnds;
    for (int k = lo + 1; k <= hi; ++k) {
        BinaryMatrix bd(dims[std::size_t(k - 1 - lo)], dims[std::size_t(k - lo)]);
        int roff = 0, coff = 0;
        for (const auto& p : parts) {
            BinaryMatrix b = p.boundary(k);
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c < b.cols(); ++c)
                    if (b.get(r, c)) bd.set(roff + r, coff + c, true);
            roff += p.dim(k - 1);
            coff += p.dim(k);
        }
        bnds.push_back(std::move(bd));
    }
    return ChainComplex(lo, dims, bnds);
}

// Sum of chain maps out of the direct sum of their sources (shared target):
// per degree, the horizontal concatenation of the blocks.
ChainMap direct_sum_map(const std::vector<const ChainMap*>& maps, const ChainComplex& source_sum,
                        const ChainComplex& target) {
    std::map<int, BinaryMatrix> blocks;
    for (int k = source_sum.lo(); k <= source_sum.hi(); ++k) {
        if (source_sum.dim(k) == 0 || target.dim(k) == 0) continue;
        BinaryMatrix m(target.dim(k), source_sum.dim(k));
        int coff = 0;
        for (const ChainMap* f : maps) {
            BinaryMatrix b = f->at(k);
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c < b.cols(); ++c)
                    if (b.get(r, c)) m.set(r, coff + c, true);
            coff += f->source().dim(k);
        }
        if (!m.is_zero()) blocks.emplace(k, std::move(m));
    }
    return ChainMap(source_sum, target, std::move(blocks));
}

}  // namespace

HgpCode build_hgp(const ChainComplex& c, const ChainComplex& d, const SearchOptions& opts) {
    require_two_term(c, "build_hgp C factor");
    require_two_term(d, "build_hgp D factor");
    HgpCode code;
    code.c = c;
    code.d = d;
    code.product = tensor_product(c, d);
    code.h_x = code.product.boundary(1);
    code.h_z = code.product.boundary(2).transposed();
    code.n = code.product.dim(1);
    code.k = homology_dim(code.product, 1);
    code.distance =
        combine_min(systolic_distance(code.product, 1, opts), cosystolic_distance(code.product, 1, opts));
    return code;
}

CanonicalBasis canonical_basis(const HgpCode& code) {
    CanonicalBasis b;
    BinaryMatrix dc = code.c.boundary(1);
    BinaryMatrix dd = code.d.boundary(1);
    b.l_c = kernel_basis(dc);
    b.free_c = rref(dc).free_cols;
    b.l_ct = kernel_basis(dc.transposed());
    b.free_ct = rref(dc.transposed()).free_cols;
    b.l_d = kernel_basis(dd);
    b.free_d = rref(dd).free_cols;
    b.l_dt = kernel_basis(dd.transposed());
    b.free_dt = rref(dd.transposed()).free_cols;

    int n_c = code.c.dim(1), m_c = code.c.dim(0);
    int n_d = code.d.dim(1), m_d = code.d.dim(0);
    int left = n_c * m_d, total = left + m_c * n_d;

    auto unit = [](int len, int i) { return BinaryVector::unit(len, i); };
    b.z_left.resize(b.l_c.size());
    b.x_left.resize(b.l_c.size());
    for (std::size_t i = 0; i < b.l_c.size(); ++i) {
        for (std::size_t j = 0; j < b.l_dt.size(); ++j) {
            b.z_left[i].push_back(embed(vec_kron(b.l_c[i], unit(m_d, b.free_dt[j])), 0, total));
            b.x_left[i].push_back(embed(vec_kron(unit(n_c, b.free_c[i]), b.l_dt[j]), 0, total));
        }
    }
    b.z_right.resize(b.l_ct.size());
    b.x_right.resize(b.l_ct.size());
    for (std::size_t p = 0; p < b.l_ct.size(); ++p) {
        for (std::size_t q = 0; q < b.l_d.size(); ++q) {
            b.z_right[p].push_back(embed(vec_kron(unit(m_c, b.free_ct[p]), b.l_d[q]), left, total));
            b.x_right[p].push_back(embed(vec_kron(b.l_ct[p], unit(n_d, b.free_d[q])), left, total));
        }
    }
    return b;
}

Deformed build_deformed(const HgpCode& code, const SurgeryGadget& gadget, Orientation orientation) {
    const ChainComplex& factor = orientation == Orientation::OnC ? code.c : code.d;
    if (!(gadget.target_code == factor)) throw OrientationMismatch();
    Deformed out;
    out.orientation = orientation;
    out.f = orientation == Orientation::OnC ? tensor_map(gadget.g, ChainMap::identity(code.d))
                                            : tensor_map(ChainMap::identity(code.c), gadget.g);
    out.cone = mapping_cone(out.f);
    out.css = extract_css(out.cone, 1);
    return out;
}

namespace {

// Solves for a set of ancilla Z checks whose product equals `rep` on the base
// qubits and nothing on the ancilla qubits.
std::optional<BinaryVector> ancilla_product_certificate(const ConeComplex& cone, const BinaryVector& rep) {
    BinaryMatrix z_cols = cone.complex.boundary(2);
    int anc2 = cone.ancilla_at(2);
    BinaryMatrix anc_block(z_cols.rows(), anc2);
    for (int r = 0; r < z_cols.rows(); ++r)
        for (int c = 0; c < anc2; ++c)
            if (z_cols.get(r, c)) anc_block.set(r, c, true);
    BinaryVector rhs = concat(BinaryVector(cone.ancilla_at(1)), rep);
    return solve(anc_block, rhs);
}

}  // namespace

MeasurementReport measured_logicals(const HgpCode& code, const SurgeryGadget& gadget,
                                    Orientation orientation) {
    Deformed def = build_deformed(code, gadget, orientation);
    CanonicalBasis basis = canonical_basis(code);
    MeasurementReport report;
    report.k_before = code.k;
    report.k_after = homology_dim(def.cone.complex, 1);

    int n_c = code.c.dim(1), m_c = code.c.dim(0);
    int n_d = code.d.dim(1), m_d = code.d.dim(0);
    int left = n_c * m_d, total = left + m_c * n_d;
    const BinaryVector& c = gadget.codeword;

    // Decomposition of the codeword over the kernel basis of its factor.
    const std::vector<BinaryVector>& factor_basis = orientation == Orientation::OnC ? basis.l_c : basis.l_d;
    BinaryMatrix basis_cols(int(c.size()), int(factor_basis.size()));
    for (int j = 0; j < int(factor_basis.size()); ++j)
        for (int i : factor_basis[std::size_t(j)].support()) basis_cols.set(i, j, true);
    auto alpha = solve(basis_cols, c);
    if (!alpha) throw std::logic_error("measured_logicals: codeword outside the kernel basis span");

    const std::vector<BinaryVector>& h0_basis = orientation == Orientation::OnC ? basis.l_dt : basis.l_ct;
    const std::vector<int>& h0_units = orientation == Orientation::OnC ? basis.free_dt : basis.free_ct;
    int unit_count = orientation == Orientation::OnC ? m_d : m_c;

    auto make_rep = [&](const BinaryVector& u) {
        return orientation == Orientation::OnC ? embed(vec_kron(c, u), 0, total)
                                               : embed(vec_kron(u, c), left, total);
    };

    for (std::size_t l = 0; l < h0_basis.size(); ++l) {
        MeasuredClass mc;
        mc.class_index = int(l);
        mc.representative = make_rep(BinaryVector::unit(unit_count, h0_units[l]));
        for (int i = 0; i < alpha->size(); ++i)
            if (alpha->get(i)) mc.canonical_rows.push_back(i);
        report.classes.push_back(std::move(mc));
    }
    // Every unit representative, certified and attached to its class when the
    // class decomposition is a single basis element.
    for (int u = 0; u < unit_count; ++u) {
        BinaryVector rep = make_rep(BinaryVector::unit(unit_count, u));
        auto cert = ancilla_product_certificate(def.cone, rep);
        if (!cert) continue;
        int cls = -1, ones = 0;
        for (std::size_t l = 0; l < h0_basis.size(); ++l)
            if (h0_basis[l].get(u)) {
                cls = int(l);
                ++ones;
            }
        if (ones == 1) {
            MeasuredClass::UnitRep ur{u, rep, *cert};
            report.classes[std::size_t(cls)].unit_reps.push_back(std::move(ur));
        }
    }
    return report;
}

namespace {

struct LiftedGadget {
    ChainComplex source;  // (G (x) D) or (C (x) G)
    ChainMap f;
};

// Offsets of each gadget's lifted source inside their direct sum, per degree.
int lifted_offset(const std::vector<LiftedGadget>& lifted, std::size_t index, int degree) {
    int off = 0;
    for (std::size_t i = 0; i < index; ++i) off += lifted[i].source.dim(degree);
    return off;
}

int tensor_block_offset(const ChainComplex& a, const ChainComplex& b, int degree, int p, int q) {
    for (const auto& blk : tensor_blocks(a, b, degree))
        if (blk.p == p && blk.q == q) return blk.offset;
    return -1;
}

// Permutations taking (cone(g_bar) (x) D) coordinates to the coordinates of
// the cone built over the direct sum of the lifted gadgets; the base parts of
// both layouts coincide.
CheckResult compare_compacted_routes(const SurgerySequence& seq, const std::vector<LiftedGadget>& lifted,
                                     const ConeComplex& route_a, Orientation orientation) {
    std::vector<const ChainMap*> g_maps;
    std::vector<ChainComplex> g_sources;
    for (const auto& sg : seq.gadgets) {
        g_maps.push_back(&sg.gadget.g);
        g_sources.push_back(sg.gadget.g_complex);
    }
    ChainComplex g_sum = direct_sum_complex(g_sources);
    const ChainComplex& factor = orientation == Orientation::OnC ? seq.base.c : seq.base.d;
    const ChainComplex& other = orientation == Orientation::OnC ? seq.base.d : seq.base.c;
    ChainMap g_bar = direct_sum_map(g_maps, g_sum, factor);
    ConeComplex cone_g = mapping_cone(g_bar);
    ChainComplex route_b = orientation == Orientation::OnC ? tensor_product(cone_g.complex, other)
                                                           : tensor_product(other, cone_g.complex);

    if (route_b.lo() != route_a.complex.lo() || route_b.hi() != route_a.complex.hi())
        return {false, "compacted routes: degree ranges differ"};

    // Prefix offsets of each gadget's G inside the concatenated G-sum, per degree.
    auto g_prefix = [&](std::size_t i, int deg) {
        int off = 0;
        for (std::size_t j = 0; j < i; ++j) off += g_sources[j].dim(deg);
        return off;
    };

    std::vector<std::vector<int>> perms;
    for (int k = route_b.lo(); k <= route_b.hi(); ++k) {
        if (route_b.dim(k) != route_a.complex.dim(k))
            return {false, "compacted routes: dimension mismatch at degree " + std::to_string(k)};
        std::vector<int> perm(std::size_t(route_b.dim(k)), -1);
        int anc_total = route_a.ancilla_at(k);
        const auto blocks = orientation == Orientation::OnC ? tensor_blocks(cone_g.complex, other, k)
                                                            : tensor_blocks(other, cone_g.complex, k);
        for (const auto& blk : blocks) {
            if (blk.dim == 0) continue;
            int r = orientation == Orientation::OnC ? blk.p : blk.q;  // cone(g_bar) degree
            int s = orientation == Orientation::OnC ? blk.q : blk.p;  // other factor degree
            int anc_r = cone_g.ancilla_at(r);
            int cone_dim = cone_g.complex.dim(r);
            int s_dim = other.dim(s);
            for (int t = 0; t < cone_dim; ++t) {
                std::size_t gadget = 0;
                int a = -1;
                bool is_anc = t < anc_r;
                if (is_anc) {
                    while (gadget + 1 < g_sources.size() && t >= g_prefix(gadget + 1, r - 1)) ++gadget;
                    a = t - g_prefix(gadget, r - 1);
                }
                for (int j = 0; j < s_dim; ++j) {
                    int rpos = orientation == Orientation::OnC ? blk.offset + t * s_dim + j
                                                               : blk.offset + j * cone_dim + t;
                    int apos;
                    if (is_anc) {
                        const ChainComplex& g_i = g_sources[gadget];
                        int goff = lifted_offset(lifted, gadget, k - 1);
                        int boff = orientation == Orientation::OnC
                                       ? tensor_block_offset(g_i, other, k - 1, r - 1, s)
                                       : tensor_block_offset(other, g_i, k - 1, s, r - 1);
                        apos = orientation == Orientation::OnC
                                   ? goff + boff + a * s_dim + j
                                   : goff + boff + j * g_i.dim(r - 1) + a;
                    } else {
                        int cidx = t - anc_r;
                        int boff = orientation == Orientation::OnC
                                       ? tensor_block_offset(factor, other, k, r, s)
                                       : tensor_block_offset(other, factor, k, s, r);
                        apos = orientation == Orientation::OnC
                                   ? anc_total + boff + cidx * s_dim + j
                                   : anc_total + boff + j * factor.dim(r) + cidx;
                    }
                    perm[std::size_t(rpos)] = apos;
                }
            }
        }
        perms.push_back(std::move(perm));
    }

    for (int k = route_b.lo() + 1; k <= route_b.hi(); ++k) {
        const auto& pk = perms[std::size_t(k - route_b.lo())];
        const auto& pk1 = perms[std::size_t(k - 1 - route_b.lo())];
        BinaryMatrix rb = route_b.boundary(k);
        BinaryMatrix permuted(route_a.complex.dim(k - 1), route_a.complex.dim(k));
        for (int r = 0; r < rb.rows(); ++r)
            for (int c = 0; c < rb.cols(); ++c)
                if (rb.get(r, c)) permuted.set(pk1[std::size_t(r)], pk[std::size_t(c)], true);
        if (!(permuted == route_a.complex.boundary(k)))
            return {false, "compacted routes disagree at degree " + std::to_string(k)};
    }
    return {true, "direct cone equals cone(g_bar) (x) factor after block permutation"};
}

}  // namespace

CompactedCode build_compacted(const SurgerySequence& seq) {
    if (seq.gadgets.empty()) throw std::invalid_argument("build_compacted: no gadgets");

    // Independence per orientation group.
    for (Orientation o : {Orientation::OnC, Orientation::OnD}) {
        std::vector<BinaryVector> cws;
        for (const auto& sg : seq.gadgets)
            if (sg.orientation == o) cws.push_back(sg.gadget.codeword);
        if (cws.empty()) continue;
        BinaryMatrix stacked = BinaryMatrix::from_rows(cws, cws.front().size());
        if (rank(stacked) != int(cws.size())) throw DependentCodewords();
    }

    std::vector<LiftedGadget> lifted;
    std::vector<ChainComplex> sources;
    for (const auto& sg : seq.gadgets) {
        Deformed def = build_deformed(seq.base, sg.gadget, sg.orientation);
        lifted.push_back(LiftedGadget{def.f.source(), def.f});
        sources.push_back(def.f.source());
    }
    ChainComplex a_total = direct_sum_complex(sources);
    std::vector<const ChainMap*> fmaps;
    for (const auto& lg : lifted) fmaps.push_back(&lg.f);
    ChainMap f_bar = direct_sum_map(fmaps, a_total, seq.base.product);

    CompactedCode out{mapping_cone(f_bar), f_bar, std::nullopt};

    bool all_on_c = std::all_of(seq.gadgets.begin(), seq.gadgets.end(),
                                [](const SequencedGadget& sg) { return sg.orientation == Orientation::OnC; });
    bool all_on_d = std::all_of(seq.gadgets.begin(), seq.gadgets.end(),
                                [](const SequencedGadget& sg) { return sg.orientation == Orientation::OnD; });
    if (all_on_c)
        out.two_route = compare_compacted_routes(seq, lifted, out.cone, Orientation::OnC);
    else if (all_on_d)
        out.two_route = compare_compacted_routes(seq, lifted, out.cone, Orientation::OnD);
    return out;
}

FastSurgeryReport verify_fast_conditions(const SurgerySequence& seq, const SearchOptions& opts) {
    FastSurgeryReport rep;
    if (!seq.base.distance.exact())
        throw std::invalid_argument("verify_fast_conditions: base distance must be exact");
    rep.target_d = seq.base.distance.value;

    CompactedCode compacted = build_compacted(seq);
    rep.two_route_ok = !compacted.two_route || compacted.two_route->ok;
    rep.compacted_d1 = systolic_distance_or_bound(compacted.cone.complex, 1, int(rep.target_d), opts);
    rep.compacted_d1co = cosystolic_distance_or_bound(compacted.cone.complex, 1, int(rep.target_d), opts);

    rep.disjointness = true;
    for (const auto& sg : seq.gadgets) {
        Deformed def = build_deformed(seq.base, sg.gadget, sg.orientation);
        rep.metacheck_d1co.push_back(cosystolic_distance_or_bound(def.f.source(), 1, int(rep.target_d), opts));
        const BinaryMatrix g1 = sg.gadget.g.at(1);
        bool one_sparse = g1.max_row_weight() <= 1 && g1.max_col_weight() <= 1;
        rep.disjointness = rep.disjointness && one_sparse;

        // Literal unit-image disjointness of the lifted f_1, informational.
        BinaryMatrix f1 = def.f.at(1);
        bool disjoint = true;
        std::vector<BinaryVector> row_seen;
        for (int r = 0; r < f1.rows() && disjoint; ++r)
            if (f1.row_weight(r) > 1) disjoint = false;
        rep.f1_unit_images_disjoint.push_back(disjoint);
    }

    rep.k_before = seq.base.k;
    rep.k_after = homology_dim(compacted.cone.complex, 1);
    return rep;
}

SurgerySequence multi_block(const std::vector<HgpCode>& codes,
                            const std::vector<BinaryVector>& per_block_codewords, GadgetFamily family,
                            const SearchOptions& opts) {
    if (codes.empty()) throw std::invalid_argument("multi_block: no blocks");
    if (codes.size() != per_block_codewords.size())
        throw std::invalid_argument("multi_block: one codeword per block required");
    for (const auto& code : codes)
        if (!(code.d == codes.front().d)) throw MismatchedD();

    std::vector<ChainComplex> c_parts;
    for (const auto& code : codes) c_parts.push_back(code.c);
    ChainComplex c_prime = direct_sum_complex(c_parts);

    BinaryVector joint(0);
    for (const auto& cw : per_block_codewords) joint = concat(joint, cw);
    if (joint.is_zero()) throw std::invalid_argument("multi_block: joint codeword is zero");

    SurgerySequence seq;
    seq.base = build_hgp(c_prime, codes.front().d, opts);
    seq.gadgets.push_back(SequencedGadget{synthesize(seq.base.c, joint, family), Orientation::OnC});
    return seq;
}

}  // namespace qsurg
