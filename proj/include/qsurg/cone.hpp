#ifndef QSURG_CONE_HPP
#define QSURG_CONE_HPP

#include <map>

#include "qsurg/chain.hpp"

// Chain maps, mapping cones (the 3- and 4-term surgery forms), tensoring maps,
// and the cone/product compatibility check.

namespace qsurg {

class ChainMap {
  public:
    ChainMap() = default;
    ChainMap(ChainComplex source, ChainComplex target, std::map<int, BinaryMatrix> maps)
        : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {}

    static ChainMap identity(const ChainComplex& cx);
    static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }

    // Degrees with no stored matrix are canonical zero maps.
    BinaryMatrix at(int degree) const {
        auto it = maps_.find(degree);
        if (it != maps_.end()) return it->second;
        return BinaryMatrix(target_.dim(degree), source_.dim(degree));
    }
    const std::map<int, BinaryMatrix>& stored() const { return maps_; }

  private:
    ChainComplex source_;
    ChainComplex target_;
    std::map<int, BinaryMatrix> maps_;
};

// ok iff every stored block has the right shape and every square
// f_{i-1} o d_src,i = d_tgt,i o f_i commutes.
std::optional<Violation> validate_map(const ChainMap& f);

// Mapping cone: cone_k = src_{k-1} (+) tgt_k with the ancilla block first.
struct ConeComplex {
    ChainComplex complex;
    std::map<int, int> ancilla_dim;  // leading coordinates per degree

    int ancilla_at(int degree) const {
        auto it = ancilla_dim.find(degree);
        return it == ancilla_dim.end() ? 0 : it->second;
    }
    int base_at(int degree) const { return complex.dim(degree) - ancilla_at(degree); }
};

ConeComplex mapping_cone(const ChainMap& f);

// Tensor of two chain maps, blockwise kron(f_p, g_q) in the tensor block order.
ChainMap tensor_map(const ChainMap& f, const ChainMap& g);

// f (x) id_D, the lift used to turn a classical gadget into a quantum one.
ChainMap tensor_map_with_identity(const ChainMap& g, const ChainComplex& dx);

// Builds cone(g (x) id_D) and (cone(g) (x) D) and asserts their boundaries are
// equal matrices after the canonical block permutation.
CheckResult cone_product_isomorphism_check(const ChainMap& g, const ChainComplex& dx);

// CSS view of a cone around a chosen qubit degree, with block labels.
struct DeformedCssCode {
    BinaryMatrix meta_z;  // one row per meta-check, one column per Z check
    BinaryMatrix h_z;     // one row per Z check, one column per qubit
    BinaryMatrix h_x;     // one row per X check, one column per qubit
    int qubits = 0;
    int ancilla_qubits = 0;  // ancilla coordinates come first in every block
    int z_checks = 0;
    int ancilla_z_checks = 0;
    int x_checks = 0;
    int ancilla_x_checks = 0;
    int meta_checks = 0;
};

DeformedCssCode extract_css(const ConeComplex& cone, int qubit_degree);

}  // namespace qsurg

#endif
