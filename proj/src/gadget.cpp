#include "qsurg/gadget.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace qsurg {

std::string family_name(GadgetFamily f) {
    switch (f) {
        case GadgetFamily::Path:
            return "path";
        case GadgetFamily::Cycle:
            return "cycle";
        case GadgetFamily::CompleteTriangulated:
            return "complete-triangulated";
    }
    return "?";
}

Fraction::Fraction(long long num, long long den) : num_(num), den_(den), inf_(false) {
    if (den_ <= 0 || num_ < 0) throw std::invalid_argument("Fraction: expected num >= 0, den > 0");
    long long g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Fraction::to_string() const {
    if (inf_) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

// Shared enumeration core: walks all v in F_2^n by Gray code, keeping |v|,
// |Mv| and |S(v) and P| incrementally, and feeds each v to `visit`.
template <typename Visit>
void enumerate_subsets(const BinaryMatrix& m, const std::vector<bool>& in_p, Visit&& visit) {
    int n = m.cols();
    std::vector<BinaryVector> cols;
    cols.reserve(std::size_t(n));
    for (int c = 0; c < n; ++c) cols.push_back(m.col(c));
    BinaryVector image(m.rows());
    std::vector<bool> cur(std::size_t(n), false);
    int weight = 0, p_weight = 0;
    unsigned long long total = 1ull << n;
    for (unsigned long long j = 1; j < total; ++j) {
        int b = std::countr_zero(j);
        cur[std::size_t(b)] = !cur[std::size_t(b)];
        int delta = cur[std::size_t(b)] ? 1 : -1;
        weight += delta;
        if (in_p[std::size_t(b)]) p_weight += delta;
        image.xor_with(cols[std::size_t(b)]);
        visit(weight, p_weight, image.weight());
    }
}

void cheeger_preconditions(const BinaryMatrix& m, int budget_bits) {
    if (m.cols() > budget_bits)
        throw BudgetExceeded("cheeger: " + std::to_string(m.cols()) + " columns exceed the exhaustive budget");
    if (m.cols() == 0) throw std::invalid_argument("cheeger: empty matrix");
    if (!m.apply(BinaryVector::ones(m.cols())).is_zero()) throw KernelViolation();
}

}  // namespace

Fraction cheeger_constant(const BinaryMatrix& m, int budget_bits) {
    cheeger_preconditions(m, budget_bits);
    int n = m.cols();
    Fraction best = Fraction::infinity();
    std::vector<bool> dummy(std::size_t(n), false);
    enumerate_subsets(m, dummy, [&](int w, int, int image_w) {
        int denom = std::min(w, n - w);
        if (denom == 0) return;  // v = 0 or all-ones
        Fraction ratio(image_w, denom);
        if (ratio < best) best = ratio;
    });
    return best;
}

Fraction relative_cheeger(const BinaryMatrix& m, const std::vector<int>& p_indices, int t,
                          int budget_bits) {
    cheeger_preconditions(m, budget_bits);
    int n = m.cols();
    std::vector<bool> in_p(std::size_t(n), false);
    int p_size = 0;
    for (int i : p_indices) {
        if (i < 0 || i >= n) throw std::out_of_range("relative_cheeger: P index out of range");
        if (!in_p[std::size_t(i)]) ++p_size;
        in_p[std::size_t(i)] = true;
    }
    Fraction best = Fraction::infinity();
    enumerate_subsets(m, in_p, [&](int, int pw, int image_w) {
        int denom = std::min(t, std::min(pw, p_size - pw));
        if (denom <= 0) return;
        Fraction ratio(image_w, denom);
        if (ratio < best) best = ratio;
    });
    return best;
}

namespace {

struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> faces;       // each face = list of edge indices
    std::vector<int> tree_edges;               // spanning tree, oriented away from vertex 0
    std::vector<std::vector<int>> below_tree;  // vertices in the subtree under each tree edge
};

Graph family_graph(GadgetFamily family, int s, bool keep_cycle_face) {
    Graph g;
    g.vertices = s;
    switch (family) {
        case GadgetFamily::Path: {
            for (int i = 0; i + 1 < s; ++i) g.edges.emplace_back(i, i + 1);
            for (int e = 0; e < int(g.edges.size()); ++e) {
                g.tree_edges.push_back(e);
                std::vector<int> below;
                for (int v = e + 1; v < s; ++v) below.push_back(v);
                g.below_tree.push_back(std::move(below));
            }
            break;
        }
        case GadgetFamily::Cycle: {
            if (s < 2) throw std::invalid_argument("cycle gadget needs |c| >= 2");
            for (int i = 0; i < s; ++i) g.edges.emplace_back(i, (i + 1) % s);
            for (int e = 0; e + 1 < s; ++e) {  // the closing edge is the non-tree edge
                g.tree_edges.push_back(e);
                std::vector<int> below;
                for (int v = e + 1; v < s; ++v) below.push_back(v);
                g.below_tree.push_back(std::move(below));
            }
            if (keep_cycle_face) {
                std::vector<int> all(static_cast<std::size_t>(s), 0);
                std::iota(all.begin(), all.end(), 0);
                g.faces.push_back(std::move(all));
            }
            break;
        }
        case GadgetFamily::CompleteTriangulated: {
            std::vector<std::vector<int>> edge_id(std::size_t(s), std::vector<int>(std::size_t(s), -1));
            for (int i = 0; i < s; ++i)
                for (int j = i + 1; j < s; ++j) {
                    edge_id[std::size_t(i)][std::size_t(j)] = int(g.edges.size());
                    g.edges.emplace_back(i, j);
                }
            // Star spanning tree at vertex 0; fundamental triangles {0, j, k}.
            for (int j = 1; j < s; ++j) {
                g.tree_edges.push_back(edge_id[0][std::size_t(j)]);
                g.below_tree.push_back({j});
            }
            for (int j = 1; j < s; ++j)
                for (int k = j + 1; k < s; ++k)
                    g.faces.push_back({edge_id[0][std::size_t(j)], edge_id[0][std::size_t(k)],
                                       edge_id[std::size_t(j)][std::size_t(k)]});
            break;
        }
    }
    return g;
}

}  // namespace

SurgeryGadget synthesize(const ChainComplex& code, const BinaryVector& c, GadgetFamily family,
                         bool keep_cycle_face) {
    if (code.lo() != 0 || code.hi() != 1)
        throw std::invalid_argument("synthesize: target must be a 2-term classical complex at degrees [0,1]");
    if (c.size() != code.dim(1)) throw std::invalid_argument("synthesize: codeword length != bit count");
    const BinaryMatrix h = code.boundary(1);
    if (!h.apply(c).is_zero()) throw NotACodeword();
    std::vector<int> support = c.support();
    int s = int(support.size());
    if (s < 1) throw std::invalid_argument("synthesize: codeword must be nonzero");

    Graph graph = family_graph(family, s, keep_cycle_face);
    int edges = int(graph.edges.size());
    int faces = int(graph.faces.size());

    BinaryMatrix d_g1(edges, s);  // edge-vertex incidence
    for (int e = 0; e < edges; ++e) {
        d_g1.set(e, graph.edges[std::size_t(e)].first, true);
        d_g1.set(e, graph.edges[std::size_t(e)].second, true);
    }
    BinaryMatrix d_g0(faces, edges);
    for (int f = 0; f < faces; ++f)
        for (int e : graph.faces[std::size_t(f)]) d_g0.set(f, e, true);

    BinaryMatrix g1(code.dim(1), s);
    for (int i = 0; i < s; ++i) g1.set(support[std::size_t(i)], i, true);

    // g_0 on a tree edge carries the code syndrome of the codeword bits below
    // it; non-tree edges carry nothing. This commutes with the boundaries by a
    // telescoping of syndrome columns.
    BinaryMatrix g0(code.dim(0), edges);
    for (std::size_t te = 0; te < graph.tree_edges.size(); ++te) {
        BinaryVector partial(code.dim(1));
        for (int v : graph.below_tree[te]) partial.flip(support[std::size_t(v)]);
        BinaryVector syn = h.apply(partial);
        for (int r = 0; r < code.dim(0); ++r)
            if (syn.get(r)) g0.set(r, graph.tree_edges[te], true);
    }

    ChainComplex g_complex(-1, {faces, edges, s}, {d_g0, d_g1});
    std::map<int, BinaryMatrix> maps;
    maps.emplace(1, g1);
    maps.emplace(0, g0);
    ChainMap g(g_complex, code, std::move(maps));
    return SurgeryGadget{code, c, family, std::move(g_complex), std::move(g)};
}

GadgetReport verify_conditions(const SurgeryGadget& gadget, const VerifyMode& mode, int cheeger_budget_bits) {
    GadgetReport rep;
    const ChainComplex& g = gadget.g_complex;
    const BinaryMatrix d_g1 = g.boundary(1);
    const BinaryMatrix d_g0 = g.boundary(0);
    const BinaryMatrix g1 = gadget.g.at(1);
    const BinaryMatrix g0 = gadget.g.at(0);

    rep.relative_mode = mode.relative;
    rep.relative_t = mode.t;
    if (mode.relative) {
        std::vector<int> p;
        for (int i = 0; i < g1.cols(); ++i)
            if (g1.col_weight(i) > 0) p.push_back(i);
        rep.cheeger = relative_cheeger(d_g1, p, mode.t, cheeger_budget_bits);
    } else {
        rep.cheeger = cheeger_constant(d_g1, cheeger_budget_bits);
    }
    rep.cond_expansion = rep.cheeger.at_least_one();

    rep.dim_h1 = homology_dim(g, 1);
    rep.dim_h0 = homology_dim(g, 0);
    rep.dim_hm1 = homology_dim(g, -1);
    rep.cond_no_gauge = rep.dim_h0 == 0 && rep.dim_hm1 == 0;

    std::vector<BinaryVector> ker = kernel_basis(d_g1);
    rep.kernel_is_all_ones = ker.size() == 1 && ker.front() == BinaryVector::ones(g.dim(1));
    rep.maps_to_codeword = g1.apply(BinaryVector::ones(g.dim(1))) == gadget.codeword;
    rep.cond_measures = rep.dim_h1 == 1 && rep.kernel_is_all_ones && rep.maps_to_codeword;

    rep.sparsity_w = std::max({d_g1.max_row_weight(), d_g1.max_col_weight(), d_g0.max_row_weight(),
                               d_g0.max_col_weight(), g0.max_row_weight(), g0.max_col_weight()});
    rep.g1_one_sparse = g1.max_row_weight() <= 1 && g1.max_col_weight() <= 1;
    rep.cond_sparsity = rep.g1_one_sparse;

    rep.size = g.dim(1) + g.dim(0) + g.dim(-1);
    long long len = gadget.codeword.weight();
    long long log_term = std::max(1ll, (long long)std::ceil(std::log2((double)(len + 1))));
    rep.size_bound_log3 = len * log_term * log_term * log_term;
    rep.cond_size = rep.size <= rep.size_bound_log3;
    return rep;
}

}  // namespace qsurg
