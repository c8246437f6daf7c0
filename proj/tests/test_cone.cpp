#include <doctest.h>

#include "qsurg/cone.hpp"
#include "qsurg/gadget.hpp"
#include "test_support.hpp"

using namespace qsurg;
using namespace qsurg::testing;

namespace {

ChainComplex hamming_complex() { return ChainComplex::classical_code(hamming()); }

ChainComplex transpose_rep3_complex() {
    BinaryMatrix rep{{1, 1, 0}, {0, 1, 1}};
    return ChainComplex::classical_code(rep.transposed());
}

// The path gadget of the worked example: three vertices on the weight-3
// codeword 1110000, two edges, no faces.
SurgeryGadget fig2_gadget() {
    return synthesize(hamming_complex(), BinaryVector::from_string("1110000"), GadgetFamily::Path);
}

}  // namespace

TEST_CASE("identity chain map validates") {
    CHECK_FALSE(validate_map(ChainMap::identity(hamming_complex())).has_value());
    CHECK_FALSE(validate_map(ChainMap::identity(transpose_rep3_complex())).has_value());
}

TEST_CASE("the path-gadget chain map validates and a flipped bit breaks it") {
    SurgeryGadget g = fig2_gadget();
    CHECK(g.g_complex.dim(1) == 3);
    CHECK(g.g_complex.dim(0) == 2);
    CHECK(g.g_complex.dim(-1) == 0);
    CHECK_FALSE(validate_map(g.g).has_value());

    // Corrupt one bit of g_1; the square at degree 1 must stop commuting.
    std::map<int, BinaryMatrix> maps = g.g.stored();
    BinaryMatrix g1 = maps.at(1);
    g1.set(4, 1, !g1.get(4, 1));
    maps.at(1) = g1;
    ChainMap corrupted(g.g.source(), g.g.target(), maps);
    auto violation = validate_map(corrupted);
    REQUIRE(violation.has_value());
    CHECK(violation->degree == 1);
}

TEST_CASE("mapping cone of a zero map from an empty complex is the target") {
    ChainComplex ham = hamming_complex();
    ChainComplex empty(0, {0, 0}, {BinaryMatrix(0, 0)});
    ConeComplex cone = mapping_cone(ChainMap::zero(empty, ham));
    CHECK(cone.complex.dim(0) == ham.dim(0));
    CHECK(cone.complex.dim(1) == ham.dim(1));
    CHECK(cone.complex.boundary(1) == ham.boundary(1));
    CHECK(cone.ancilla_at(1) == 0);
}

TEST_CASE("cone of the path gadget has the worked example's dimensions") {
    SurgeryGadget g = fig2_gadget();
    ConeComplex cone = mapping_cone(g.g);
    CHECK_FALSE(validate(cone.complex).has_value());
    // 9 bit-level coordinates: 2 ancilla + 7 base; Z level of dimension 3.
    CHECK(cone.complex.dim(1) == 9);
    CHECK(cone.ancilla_at(1) == 2);
    CHECK(cone.complex.dim(2) == 3);
}

TEST_CASE("lifting the gadget by the identity on D gives the 4-term deformed code") {
    SurgeryGadget g = fig2_gadget();
    ChainComplex dx = transpose_rep3_complex();
    ChainMap f = tensor_map_with_identity(g.g, dx);
    CHECK_FALSE(validate_map(f).has_value());
    ConeComplex cone = mapping_cone(f);
    CHECK_FALSE(validate(cone.complex).has_value());

    // Block dimension arithmetic: qubits 27 + 6, meta-checks 3*2, ancilla Z
    // checks 9 + 4, base Z checks 14.
    CHECK(cone.complex.dim(1) == 33);
    CHECK(cone.ancilla_at(1) == 6);
    CHECK(cone.complex.dim(3) == 6);
    CHECK(cone.ancilla_at(2) == 13);
    CHECK(cone.complex.dim(2) == 27);
}

TEST_CASE("tensor with identity of the identity map is the identity") {
    ChainComplex dx = transpose_rep3_complex();
    ChainMap id_lift = tensor_map_with_identity(ChainMap::identity(hamming_complex()), dx);
    for (int k = id_lift.source().lo(); k <= id_lift.source().hi(); ++k) {
        if (id_lift.source().dim(k) == 0) continue;
        CHECK(id_lift.at(k) == BinaryMatrix::identity(id_lift.source().dim(k)));
    }

    ChainMap zero_lift = tensor_map_with_identity(
        ChainMap::zero(fig2_gadget().g_complex, hamming_complex()), dx);
    for (int k = zero_lift.source().lo(); k <= zero_lift.source().hi(); ++k)
        CHECK(zero_lift.at(k).is_zero());
}

TEST_CASE("cone-product isomorphism on the worked example") {
    SurgeryGadget g = fig2_gadget();
    CHECK(cone_product_isomorphism_check(g.g, transpose_rep3_complex()).ok);
}

TEST_CASE("cone-product isomorphism for the identity map") {
    ChainComplex ham = hamming_complex();
    CHECK(cone_product_isomorphism_check(ChainMap::identity(ham), transpose_rep3_complex()).ok);
}

TEST_CASE("cone-product isomorphism on 30 random gadget instances") {
    std::mt19937 rng(71);
    int done = 0;
    while (done < 30) {
        int bits = 4 + int(rng() % 5);
        BinaryMatrix h = random_matrix(rng, 1 + int(rng() % 3), bits);
        auto kernel = kernel_basis(h);
        if (kernel.empty()) continue;
        BinaryVector cw(bits);
        for (const auto& k : kernel)
            if (rng() & 1) cw.xor_with(k);
        if (cw.weight() < 2) continue;
        GadgetFamily family = done % 3 == 0   ? GadgetFamily::Path
                              : done % 3 == 1 ? GadgetFamily::Cycle
                                              : GadgetFamily::CompleteTriangulated;
        SurgeryGadget g = synthesize(ChainComplex::classical_code(h), cw, family);
        REQUIRE_FALSE(validate_map(g.g).has_value());
        ChainComplex dx = ChainComplex::classical_code(random_matrix(rng, 1 + int(rng() % 3), 2 + int(rng() % 3)));
        CHECK(cone_product_isomorphism_check(g.g, dx).ok);
        ++done;
    }
}

TEST_CASE("extract_css blocks and their compatibility products") {
    SurgeryGadget g = fig2_gadget();
    ConeComplex cone = mapping_cone(tensor_map_with_identity(g.g, transpose_rep3_complex()));
    DeformedCssCode css = extract_css(cone, 1);
    CHECK(css.qubits == 33);
    CHECK(css.ancilla_qubits == 6);
    CHECK(css.meta_checks == 6);
    CHECK(css.z_checks == 27);
    CHECK(css.ancilla_z_checks == 13);
    CHECK((css.h_x * css.h_z.transposed()).is_zero());
    CHECK((css.meta_z * css.h_z).is_zero());
}

TEST_CASE("extract_css on a bare code cone gives empty meta-checks") {
    ChainComplex base = tensor_product(hamming_complex(), transpose_rep3_complex());
    ChainComplex empty(0, {0, 0, 0}, {BinaryMatrix(0, 0), BinaryMatrix(0, 0)});
    ConeComplex cone = mapping_cone(ChainMap::zero(empty, base));
    DeformedCssCode css = extract_css(cone, 1);
    CHECK(css.meta_checks == 0);
    CHECK(css.meta_z.rows() == 0);
    CHECK(css.h_x == base.boundary(1));
    CHECK(css.h_z == base.boundary(2).transposed());
    CHECK_THROWS_AS((void)extract_css(cone, 5), std::out_of_range);
}
