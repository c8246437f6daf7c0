#include <doctest.h>

#include "qsurg/gadget.hpp"
#include "test_support.hpp"

using namespace qsurg;
using namespace qsurg::testing;

namespace {

ChainComplex hamming_complex() { return ChainComplex::classical_code(hamming()); }

ChainComplex cyclic_rep_complex(int d) {
    BinaryMatrix h(d, d);
    for (int r = 0; r < d; ++r) {
        h.set(r, r, true);
        h.set(r, (r + 1) % d, true);
    }
    return ChainComplex::classical_code(h);
}

BinaryMatrix path_incidence(int vertices) {
    BinaryMatrix m(vertices - 1, vertices);
    for (int e = 0; e + 1 < vertices; ++e) {
        m.set(e, e, true);
        m.set(e, e + 1, true);
    }
    return m;
}

BinaryMatrix cycle_incidence(int vertices) {
    BinaryMatrix m(vertices, vertices);
    for (int e = 0; e < vertices; ++e) {
        m.set(e, e, true);
        m.set(e, (e + 1) % vertices, true);
    }
    return m;
}

BinaryMatrix complete_incidence(int vertices) {
    int edges = vertices * (vertices - 1) / 2;
    BinaryMatrix m(edges, vertices);
    int e = 0;
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j, ++e) {
            m.set(e, i, true);
            m.set(e, j, true);
        }
    return m;
}

// Second-order oracle: iterate subsets by descending numeric value and build
// the image from scratch each time. Deliberately shares nothing with the
// library's incremental Gray-code enumeration.
Fraction cheeger_oracle(const BinaryMatrix& m) {
    int n = m.cols();
    Fraction best = Fraction::infinity();
    for (long long mask = (1ll << n) - 2; mask >= 1; --mask) {
        BinaryVector v(n);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) v.set(i, true);
        int denom = std::min(v.weight(), n - v.weight());
        if (denom == 0) continue;
        Fraction ratio(m.apply(v).weight(), denom);
        if (ratio < best) best = ratio;
    }
    return best;
}

}  // namespace

TEST_CASE("cheeger constants of the named graphs") {
    CHECK(cheeger_constant(path_incidence(3)) == Fraction(1, 1));
    CHECK(cheeger_constant(cycle_incidence(6)) == Fraction(2, 3));
    CHECK(cheeger_constant(complete_incidence(4)) == Fraction(2, 1));
}

TEST_CASE("cheeger matches the second-order oracle on graphs up to 14 vertices") {
    for (int n : {3, 4, 5, 6, 7}) {
        CHECK(cheeger_constant(path_incidence(n)) == cheeger_oracle(path_incidence(n)));
        CHECK(cheeger_constant(cycle_incidence(n)) == cheeger_oracle(cycle_incidence(n)));
    }
    for (int n : {4, 5, 6}) CHECK(cheeger_constant(complete_incidence(n)) == cheeger_oracle(complete_incidence(n)));
    CHECK(cheeger_constant(cycle_incidence(14)) == cheeger_oracle(cycle_incidence(14)));
    CHECK(cheeger_constant(path_incidence(14)) == cheeger_oracle(path_incidence(14)));
}

TEST_CASE("cheeger preconditions") {
    CHECK_THROWS_AS((void)cheeger_constant(BinaryMatrix::identity(3)), KernelViolation);
    CHECK_THROWS_AS((void)cheeger_constant(cycle_incidence(25)), BudgetExceeded);
}

TEST_CASE("relative cheeger: coincides with plain cheeger when P is everything and t is large") {
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    CHECK(relative_cheeger(cycle_incidence(6), all, 3) == cheeger_constant(cycle_incidence(6)));
    CHECK(relative_cheeger(path_incidence(5), {0, 1, 2, 3, 4}, 3) == cheeger_constant(path_incidence(5)));
}

TEST_CASE("relative cheeger with a cap and with empty P") {
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    CHECK(relative_cheeger(cycle_incidence(6), all, 2) == Fraction(1, 1));
    CHECK(relative_cheeger(cycle_incidence(6), {}, 2) == Fraction::infinity());
}

TEST_CASE("path gadget on the Hamming weight-3 codeword") {
    BinaryVector c = BinaryVector::from_string("1110000");
    SurgeryGadget g = synthesize(hamming_complex(), c, GadgetFamily::Path);
    CHECK(g.g_complex.dim(1) == 3);
    CHECK(g.g_complex.dim(0) == 2);
    CHECK(g.g_complex.dim(-1) == 0);
    CHECK_FALSE(validate(g.g_complex).has_value());
    CHECK_FALSE(validate_map(g.g).has_value());

    // The product of all gadget Z checks equals the codeword: columns of the
    // cone's Z block over the full vertex set reproduce c on the base bits.
    CHECK(g.g.at(1).apply(BinaryVector::ones(3)) == c);

    GadgetReport rep = verify_conditions(g);
    CHECK(rep.cheeger == Fraction(1, 1));
    CHECK(rep.all_pass());
    CHECK(rep.dim_h1 == 1);
    CHECK(rep.dim_h0 == 0);
    CHECK(rep.dim_hm1 == 0);
}

TEST_CASE("cycle gadget on the cyclic repetition code keeps one face") {
    for (int d : {2, 3, 6}) {
        SurgeryGadget g =
            synthesize(cyclic_rep_complex(d), BinaryVector::ones(d), GadgetFamily::Cycle);
        CHECK(g.g_complex.dim(1) == d);
        CHECK(g.g_complex.dim(0) == d);
        CHECK(g.g_complex.dim(-1) == 1);
        CHECK_FALSE(validate(g.g_complex).has_value());
        CHECK_FALSE(validate_map(g.g).has_value());
        GadgetReport rep = verify_conditions(g);
        CHECK(rep.dim_h1 == 1);
        CHECK(rep.dim_h0 == 0);
        CHECK(rep.dim_hm1 == 0);
    }
}

TEST_CASE("face-free cycle gadget exposes the gauge qubit") {
    SurgeryGadget g = synthesize(cyclic_rep_complex(4), BinaryVector::ones(4), GadgetFamily::Cycle,
                                 /*keep_cycle_face=*/false);
    CHECK(g.g_complex.dim(-1) == 0);
    GadgetReport rep = verify_conditions(g);
    CHECK(rep.dim_h0 == 1);  // the cycle space survives
    CHECK_FALSE(rep.cond_no_gauge);
}

TEST_CASE("complete-triangulated gadget on a weight-4 codeword") {
    // 0001111 is a Hamming codeword: columns 4..7 sum to zero.
    BinaryVector c = BinaryVector::from_string("0001111");
    SurgeryGadget g = synthesize(hamming_complex(), c, GadgetFamily::CompleteTriangulated);
    CHECK(g.g_complex.dim(1) == 4);
    CHECK(g.g_complex.dim(0) == 6);
    CHECK(g.g_complex.dim(-1) == 3);  // fundamental triangles through vertex 0
    for (int f = 0; f < 3; ++f) CHECK(g.g_complex.boundary(0).row_weight(f) == 3);
    CHECK_FALSE(validate(g.g_complex).has_value());
    CHECK_FALSE(validate_map(g.g).has_value());
    GadgetReport rep = verify_conditions(g);
    CHECK(rep.all_pass());
    CHECK(rep.cheeger == Fraction(2, 1));
}

TEST_CASE("synthesize rejects non-codewords and zero codewords") {
    CHECK_THROWS_AS((void)synthesize(hamming_complex(), BinaryVector::from_string("1000000"),
                                     GadgetFamily::Path),
                    NotACodeword);
    CHECK_THROWS_AS(
        (void)synthesize(hamming_complex(), BinaryVector(7), GadgetFamily::Path), std::invalid_argument);
}

TEST_CASE("strict-mode cycle gadget with |c| = 6 fails exactly condition 1") {
    SurgeryGadget g = synthesize(cyclic_rep_complex(6), BinaryVector::ones(6), GadgetFamily::Cycle);
    GadgetReport rep = verify_conditions(g);
    CHECK(rep.cheeger == Fraction(2, 3));
    CHECK_FALSE(rep.cond_expansion);
    CHECK(rep.cond_no_gauge);
    CHECK(rep.cond_measures);
    CHECK(rep.cond_sparsity);
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("relative mode accepts the cycle gadget the strict mode rejects") {
    SurgeryGadget g = synthesize(cyclic_rep_complex(6), BinaryVector::ones(6), GadgetFamily::Cycle);
    VerifyMode mode;
    mode.relative = true;
    mode.t = 2;
    GadgetReport rep = verify_conditions(g, mode);
    CHECK(rep.cheeger == Fraction(1, 1));
    CHECK(rep.cond_expansion);
}

TEST_CASE("every synthesized gadget satisfies the homology inventory (property)") {
    std::mt19937 rng(97);
    int done = 0;
    while (done < 25) {
        int bits = 4 + int(rng() % 6);
        BinaryMatrix h = random_matrix(rng, 1 + int(rng() % 4), bits);
        auto kernel = kernel_basis(h);
        if (kernel.empty()) continue;
        BinaryVector cw(bits);
        for (const auto& k : kernel)
            if (rng() & 1) cw.xor_with(k);
        if (cw.weight() < 2) continue;
        for (GadgetFamily family :
             {GadgetFamily::Path, GadgetFamily::Cycle, GadgetFamily::CompleteTriangulated}) {
            SurgeryGadget g = synthesize(ChainComplex::classical_code(h), cw, family);
            CHECK_FALSE(validate_map(g.g).has_value());
            CHECK(homology_dim(g.g_complex, 1) == 1);
            CHECK(homology_dim(g.g_complex, 0) == 0);
            CHECK(homology_dim(g.g_complex, -1) == 0);
            auto ker = kernel_basis(g.g_complex.boundary(1));
            REQUIRE(ker.size() == 1);
            CHECK(ker.front() == BinaryVector::ones(g.g_complex.dim(1)));
            CHECK(g.g.at(1).apply(ker.front()) == cw);
        }
        ++done;
    }
}

TEST_CASE("expansion passes are computed, not assumed from the family") {
    // Path gadgets expand only up to three vertices; the complete family keeps
    // expanding at weight 4.
    BinaryVector c3 = BinaryVector::from_string("1110000");
    CHECK(verify_conditions(synthesize(hamming_complex(), c3, GadgetFamily::Path)).cond_expansion);
    BinaryVector c4 = BinaryVector::from_string("0001111");
    CHECK_FALSE(verify_conditions(synthesize(hamming_complex(), c4, GadgetFamily::Path)).cond_expansion);
    CHECK(verify_conditions(synthesize(hamming_complex(), c4, GadgetFamily::CompleteTriangulated))
              .cond_expansion);
}
