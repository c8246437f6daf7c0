#include <doctest.h>

#include "qsurg/chain.hpp"
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

ChainComplex transpose_rep3_complex() {
    BinaryMatrix rep{{1, 1, 0}, {0, 1, 1}};
    return ChainComplex::classical_code(rep.transposed());
}

ChainComplex toric_complex(int d) { return tensor_product(cyclic_rep_complex(d), cyclic_rep_complex(d)); }

}  // namespace

TEST_CASE("validate accepts real complexes and names violations") {
    CHECK_FALSE(validate(hamming_complex()).has_value());
    CHECK_FALSE(validate(toric_complex(3)).has_value());

    ChainComplex bad(0, {2, 2, 2}, {BinaryMatrix::identity(2), BinaryMatrix::identity(2)});
    auto violation = validate(bad);
    REQUIRE(violation.has_value());
    CHECK(violation->degree == 1);
}

TEST_CASE("cochain is an involution and transposes boundaries") {
    ChainComplex ham = hamming_complex();
    ChainComplex co = cochain(ham);
    CHECK(co.dim(1) == 3);
    CHECK(co.dim(0) == 7);
    CHECK(co.boundary(1) == hamming().transposed());
    CHECK(cochain(co) == ham);

    // On the toric complex the X and Z roles swap.
    ChainComplex t = toric_complex(3);
    ChainComplex cot = cochain(t);
    CHECK_FALSE(validate(cot).has_value());
    CHECK(cot.boundary(2) == t.boundary(1).transposed());
    CHECK(cot.boundary(1) == t.boundary(2).transposed());
    CHECK(cochain(cot) == t);
}

TEST_CASE("homology of the Hamming complex") {
    HomologyReport rep = homology(hamming_complex(), 1);
    CHECK(rep.dim == 4);
    REQUIRE(rep.systolic_distance.exact());
    CHECK(rep.systolic_distance.value == 3);  // the [7,4,3] code distance
    CHECK(rep.representatives.size() == 4);
    for (const auto& r : rep.representatives) CHECK(hamming().apply(r).is_zero());
}

TEST_CASE("homology of cyclic repetition complexes") {
    for (int d : {2, 3, 5}) {
        HomologyReport rep = homology(cyclic_rep_complex(d), 1);
        CHECK(rep.dim == 1);
        REQUIRE(rep.systolic_distance.exact());
        CHECK(rep.systolic_distance.value == d);  // kernel is the all-ones vector only
        REQUIRE(rep.representatives.size() == 1);
        CHECK(rep.representatives.front() == BinaryVector::ones(d));
    }
}

TEST_CASE("zero boundary makes every unit vector a class") {
    ChainComplex cx(0, {0, 3}, {BinaryMatrix(0, 3)});
    HomologyReport rep = homology(cx, 1);
    CHECK(rep.dim == 3);
    REQUIRE(rep.systolic_distance.exact());
    CHECK(rep.systolic_distance.value == 1);
}

TEST_CASE("empty homology reports an infinite distance") {
    ChainComplex cx(0, {3, 3}, {BinaryMatrix::identity(3)});
    HomologyReport rep = homology(cx, 1);
    CHECK(rep.dim == 0);
    CHECK(rep.systolic_distance.infinite());
}

TEST_CASE("distance searches agree with the by-weight oracle on small instances") {
    std::mt19937 rng(23);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        ChainComplex cx = random_three_term(rng, 1 + trial % 4, 2 + trial % 5, 1 + (trial * 7) % 4);
        REQUIRE_FALSE(validate(cx).has_value());
        if (homology_dim(cx, 1) == 0) continue;
        DistanceResult walk = systolic_distance(cx, 1);
        REQUIRE(walk.exact());
        auto oracle = min_class_weight_oracle(cx.boundary(1), cx.boundary(2).transposed(), cx.dim(1));
        REQUIRE(oracle.has_value());
        CHECK(walk.value == *oracle);
        DistanceResult by_weight = systolic_distance_by_weight(cx, 1, cx.dim(1));
        REQUIRE(by_weight.exact());
        CHECK(by_weight.value == *oracle);
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("multithreaded walk matches single-threaded") {
    ChainComplex t = toric_complex(3);
    SearchOptions four;
    four.threads = 4;
    DistanceResult serial = systolic_distance(t, 1);
    DistanceResult parallel = systolic_distance(t, 1, four);
    REQUIRE(serial.exact());
    REQUIRE(parallel.exact());
    CHECK(serial.value == parallel.value);
    CHECK(serial.value == 3);
}

TEST_CASE("budget exhaustion is reported, never a guessed distance") {
    SearchOptions tiny;
    tiny.budget = 16;
    DistanceResult r = systolic_distance(toric_complex(3), 1, tiny);
    CHECK(r.status == DistanceResult::Status::BudgetExceeded);
}

TEST_CASE("tensor product: hamming x transpose-rep-3 is the [[27,4,3]] complex") {
    ChainComplex q = tensor_product(hamming_complex(), transpose_rep3_complex());
    CHECK_FALSE(validate(q).has_value());
    CHECK(q.dim(1) == 27);
    CHECK(homology_dim(q, 1) == 4);
    DistanceResult d1 = systolic_distance(q, 1);
    DistanceResult d1co = cosystolic_distance(q, 1);
    REQUIRE(d1.exact());
    REQUIRE(d1co.exact());
    CHECK(std::min(d1.value, d1co.value) == 3);
}

TEST_CASE("tensor product: cyclic x cyclic gives the toric layer dims") {
    for (int d : {2, 3}) {
        ChainComplex t = toric_complex(d);
        CHECK(t.dim(2) == d * d);
        CHECK(t.dim(1) == 2 * d * d);
        CHECK(t.dim(0) == d * d);
        CHECK_FALSE(validate(t).has_value());
    }
}

TEST_CASE("tensor with a one-dimensional point complex is the identity") {
    ChainComplex point(0, {1}, {});
    ChainComplex ham = hamming_complex();
    ChainComplex prod = tensor_product(ham, point);
    CHECK(prod.dim(0) == ham.dim(0));
    CHECK(prod.dim(1) == ham.dim(1));
    CHECK(prod.boundary(1) == ham.boundary(1));
}

TEST_CASE("tensor products always validate (property)") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        ChainComplex a = random_three_term(rng, 1 + trial % 3, 1 + (trial * 3) % 4, 1 + trial % 4);
        ChainComplex b = ChainComplex::classical_code(random_matrix(rng, 1 + trial % 3, 1 + (trial * 5) % 4));
        CHECK_FALSE(validate(tensor_product(a, b)).has_value());
        CHECK_FALSE(validate(tensor_product(b, a)).has_value());
    }
}

TEST_CASE("kunneth identity on named instances") {
    CHECK(kunneth_check(hamming_complex(), transpose_rep3_complex(), 1).ok);   // 4 = 4*1 + 0*0
    CHECK(kunneth_check(cyclic_rep_complex(3), cyclic_rep_complex(3), 1).ok);  // 2 = 1*1 + 1*1
    CHECK(homology_dim(toric_complex(3), 1) == 2);
}

TEST_CASE("kunneth identity on 50 random 2-term pairs") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        ChainComplex a = ChainComplex::classical_code(random_matrix(rng, 1 + trial % 6, 1 + (trial * 3) % 6));
        ChainComplex b =
            ChainComplex::classical_code(random_matrix(rng, 1 + (trial * 5) % 6, 1 + (trial * 7) % 6));
        for (int k = 0; k <= 2; ++k) CHECK(kunneth_check(a, b, k).ok);
    }
}

TEST_CASE("product distance formula on corpus instances") {
    CHECK(product_distance_check(cyclic_rep_complex(3), cyclic_rep_complex(3), 1).ok);
    CHECK(product_distance_check(hamming_complex(), transpose_rep3_complex(), 1).ok);

    // Full-rank second factor: empty homology on one side exercises the
    // infinity convention.
    ChainComplex full_rank = ChainComplex::classical_code(BinaryMatrix::identity(3));
    CHECK(product_distance_check(hamming_complex(), full_rank, 1).ok);

    ChainComplex three = toric_complex(2);
    CheckResult rejected = product_distance_check(hamming_complex(), three, 1);
    CHECK_FALSE(rejected.ok);  // second factor must be 2-term
}

TEST_CASE("dist arithmetic follows the infinity conventions") {
    Dist inf = Dist::infinity();
    CHECK((inf * Dist(3)) == inf);
    CHECK(min(inf, Dist(5)) == Dist(5));
    CHECK(min(inf, inf) == inf);
    CHECK_THROWS_AS((void)(inf * Dist(0)), std::invalid_argument);
}

TEST_CASE("cosystolic distance equals systolic of the cochain complex") {
    ChainComplex t = toric_complex(3);
    DistanceResult direct = cosystolic_distance(t, 1);
    DistanceResult via = systolic_distance(cochain(t), t.lo() + t.hi() - 1);
    REQUIRE(direct.exact());
    REQUIRE(via.exact());
    CHECK(direct.value == via.value);
    CHECK(direct.value == 3);
}
