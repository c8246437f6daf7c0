#include "qsurg/cone.hpp"

#include <sstream>

namespace qsurg {

namespace {

void paste(BinaryMatrix& dst, int r0, int c0, const BinaryMatrix& src) {
    for (int r = 0; r < src.rows(); ++r)
        for (int c = 0; c < src.cols(); ++c)
            if (src.get(r, c)) dst.set(r0 + r, c0 + c, true);
}

}  // namespace

ChainMap ChainMap::identity(const ChainComplex& cx) {
    std::map<int, BinaryMatrix> maps;
    for (int i = cx.lo(); i <= cx.hi(); ++i)
        if (cx.dim(i) > 0) maps.emplace(i, BinaryMatrix::identity(cx.dim(i)));
    return ChainMap(cx, cx, std::move(maps));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
    return ChainMap(source, target, {});
}

std::optional<Violation> validate_map(const ChainMap& f) {
    for (const auto& [deg, m] : f.stored()) {
        if (m.rows() != f.target().dim(deg) || m.cols() != f.source().dim(deg))
            return Violation{deg, "chain map block shape mismatch at degree " + std::to_string(deg)};
    }
    int lo = std::min(f.source().lo(), f.target().lo());
    int hi = std::max(f.source().hi(), f.target().hi());
    for (int i = lo + 1; i <= hi; ++i) {
        BinaryMatrix lhs = f.at(i - 1) * f.source().boundary(i);
        BinaryMatrix rhs = f.target().boundary(i) * f.at(i);
        if (!(lhs == rhs))
            return Violation{i, "chain map square does not commute at degree " + std::to_string(i)};
    }
    return std::nullopt;
}

ConeComplex mapping_cone(const ChainMap& f) {
    const ChainComplex& src = f.source();
    const ChainComplex& tgt = f.target();
    int lo = std::min(src.lo() + 1, tgt.lo());
    int hi = std::max(src.hi() + 1, tgt.hi());
    std::vector<int> dims;
    std::map<int, int> anc;
    for (int k = lo; k <= hi; ++k) {
        anc[k] = src.dim(k - 1);
        dims.push_back(src.dim(k - 1) + tgt.dim(k));
    }
    std::vector<BinaryMatrix> bnds;
    for (int k = lo + 1; k <= hi; ++k) {
        BinaryMatrix bd(dims[std::size_t(k - 1 - lo)], dims[std::size_t(k - lo)]);
        paste(bd, 0, 0, src.boundary(k - 1));
        paste(bd, src.dim(k - 2), 0, f.at(k - 1));
        paste(bd, src.dim(k - 2), src.dim(k - 1), tgt.boundary(k));
        bnds.push_back(std::move(bd));
    }
    return ConeComplex{ChainComplex(lo, dims, bnds), std::move(anc)};
}

ChainMap tensor_map(const ChainMap& f, const ChainMap& g) {
    ChainComplex src = tensor_product(f.source(), g.source());
    ChainComplex tgt = tensor_product(f.target(), g.target());
    std::map<int, BinaryMatrix> maps;
    for (int k = src.lo(); k <= src.hi(); ++k) {
        if (src.dim(k) == 0 || !tgt.in_range(k) || tgt.dim(k) == 0) continue;
        auto sblocks = tensor_blocks(f.source(), g.source(), k);
        auto tblocks = tensor_blocks(f.target(), g.target(), k);
        BinaryMatrix m(tgt.dim(k), src.dim(k));
        for (const auto& sb : sblocks) {
            if (sb.dim == 0) continue;
            for (const auto& tb : tblocks) {
                if (tb.dim == 0) continue;
                if (tb.p == sb.p && tb.q == sb.q) paste(m, tb.offset, sb.offset, kron(f.at(sb.p), g.at(sb.q)));
            }
        }
        if (!m.is_zero()) maps.emplace(k, std::move(m));
    }
    return ChainMap(std::move(src), std::move(tgt), std::move(maps));
}

ChainMap tensor_map_with_identity(const ChainMap& g, const ChainComplex& dx) {
    return tensor_map(g, ChainMap::identity(dx));
}

namespace {

// Coordinates of degree k of cone(g (x) id_D), in construction order: the
// shifted gadget sub-blocks first (flag true), then the base sub-blocks.
std::vector<int> lhs_layout(const ChainMap& g, const ChainComplex& dx, int k,
                            std::vector<std::tuple<bool, int, int, int>>& blocks) {
    blocks.clear();
    for (const auto& b : tensor_blocks(g.source(), dx, k - 1)) blocks.emplace_back(true, b.p, b.q, b.dim);
    for (const auto& b : tensor_blocks(g.target(), dx, k)) blocks.emplace_back(false, b.p, b.q, b.dim);
    std::vector<int> offsets;
    int off = 0;
    for (const auto& [anc, p, q, d] : blocks) {
        offsets.push_back(off);
        off += d;
    }
    offsets.push_back(off);
    return offsets;
}

}  // namespace

CheckResult cone_product_isomorphism_check(const ChainMap& g, const ChainComplex& dx) {
    ConeComplex lhs = mapping_cone(tensor_map_with_identity(g, dx));
    ConeComplex cone_g = mapping_cone(g);
    ChainComplex rhs = tensor_product(cone_g.complex, dx);

    if (lhs.complex.lo() != rhs.lo() || lhs.complex.hi() != rhs.hi())
        return {false, "degree ranges differ"};

    // Permutation per degree: rhs coordinate -> lhs coordinate, matching
    // elementary sub-blocks (side, gadget/base degree, D degree).
    std::vector<std::vector<int>> perms;
    for (int k = rhs.lo(); k <= rhs.hi(); ++k) {
        if (lhs.complex.dim(k) != rhs.dim(k))
            return {false, "dimension mismatch at degree " + std::to_string(k)};
        std::vector<std::tuple<bool, int, int, int>> lhs_blocks;
        std::vector<int> lhs_offsets = lhs_layout(g, dx, k, lhs_blocks);
        auto lhs_offset_of = [&](bool anc, int p, int q) -> int {
            for (std::size_t b = 0; b < lhs_blocks.size(); ++b) {
                auto [a, bp, bq, d] = lhs_blocks[b];
                if (a == anc && bp == p && bq == q) return lhs_offsets[b];
            }
            return -1;
        };
        std::vector<int> perm(std::size_t(rhs.dim(k)), -1);
        int rhs_off = 0;
        for (const auto& rb : tensor_blocks(cone_g.complex, dx, k)) {
            if (rb.dim == 0) continue;
            int anc_dim = cone_g.ancilla_at(rb.p);
            int cone_dim = cone_g.complex.dim(rb.p);
            int dq = dx.dim(rb.q);
            int off_a = lhs_offset_of(true, rb.p - 1, rb.q);
            int off_c = lhs_offset_of(false, rb.p, rb.q);
            for (int i = 0; i < cone_dim; ++i)
                for (int j = 0; j < dq; ++j) {
                    int rpos = rhs_off + i * dq + j;
                    int lpos = (i < anc_dim) ? off_a + i * dq + j : off_c + (i - anc_dim) * dq + j;
                    perm[std::size_t(rpos)] = lpos;
                }
            rhs_off += rb.dim;
        }
        perms.push_back(std::move(perm));
    }

    for (int k = rhs.lo() + 1; k <= rhs.hi(); ++k) {
        const std::vector<int>& pk = perms[std::size_t(k - rhs.lo())];
        const std::vector<int>& pk1 = perms[std::size_t(k - 1 - rhs.lo())];
        BinaryMatrix rb = rhs.boundary(k);
        BinaryMatrix permuted(lhs.complex.dim(k - 1), lhs.complex.dim(k));
        for (int r = 0; r < rb.rows(); ++r)
            for (int c = 0; c < rb.cols(); ++c)
                if (rb.get(r, c)) permuted.set(pk1[std::size_t(r)], pk[std::size_t(c)], true);
        if (!(permuted == lhs.complex.boundary(k)))
            return {false, "boundaries disagree at degree " + std::to_string(k)};
    }
    return {true, "cone(f (x) id) equals cone (x) product after block permutation"};
}

DeformedCssCode extract_css(const ConeComplex& cone, int qubit_degree) {
    const ChainComplex& cx = cone.complex;
    if (!cx.in_range(qubit_degree - 1) || !cx.in_range(qubit_degree) || !cx.in_range(qubit_degree + 1))
        throw std::out_of_range("extract_css: need populated degrees around the qubit degree");
    DeformedCssCode code;
    code.h_x = cx.boundary(qubit_degree);
    code.h_z = cx.boundary(qubit_degree + 1).transposed();
    code.meta_z = cx.boundary(qubit_degree + 2).transposed();
    code.qubits = cx.dim(qubit_degree);
    code.z_checks = cx.dim(qubit_degree + 1);
    code.x_checks = cx.dim(qubit_degree - 1);
    code.meta_checks = cx.dim(qubit_degree + 2);
    code.ancilla_qubits = cone.ancilla_at(qubit_degree);
    code.ancilla_z_checks = cone.ancilla_at(qubit_degree + 1);
    code.ancilla_x_checks = cone.ancilla_at(qubit_degree - 1);
    return code;
}

}  // namespace qsurg
