#include <doctest.h>

#include "alg2/classify.hpp"
#include "alg2/jordan.hpp"
#include "test_util.hpp"

using namespace alg2;

namespace {
const FieldSpec Q = FieldSpec::rational();
Scalar q(long n, long d = 1) { return Scalar::of(Q, n, d); }
}  // namespace

TEST_CASE("the catalog algebras J1..J6 satisfy the Jordan identity") {
    CHECK(is_jordan_symbolic(Algebra::zero(Q)));
    for (int k = 1; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(is_jordan_symbolic(jordan_catalog_algebra(k)));
    }
}

TEST_CASE("computed verdicts for the mu12 family") {
    // mu12(alpha4) is isomorphic to mu14(alpha4 - 1) when alpha4 != 1 and to
    // J5 when alpha4 = 1, so exactly alpha4 = 1 is a Jordan product.
    for (long a4 : {-2L, -1L, 0L, 2L, 3L}) {
        CAPTURE(a4);
        CHECK_FALSE(is_jordan_symbolic(representative(Family::Mu12, Q, {q(a4)})));
    }
    Algebra mu12_1 = representative(Family::Mu12, Q, {q(1)});
    CHECK(is_jordan_symbolic(mu12_1));
    Algebra j5 = jordan_catalog_algebra(5);
    CHECK(transform(mu12_1, BasisChange(q(1), q(-1), q(0), q(1))) == j5);
}

TEST_CASE("non-Jordan verdicts") {
    CHECK_FALSE(is_jordan_symbolic(representative(Family::Mu17, Q, {})));
    // cross = -(e1 + e2) on two idempotents.
    CHECK_FALSE(is_jordan_symbolic(representative(Family::Mu11, Q, {q(-1), q(-1)})));
    // mu14 is never Jordan.
    for (long a4 : {-1L, 1L, 2L})
        CHECK_FALSE(is_jordan_symbolic(representative(Family::Mu14, Q, {q(a4)})));
}

TEST_CASE("mu16 verdicts pinned: beta2 in {0, 1} yes, 1/4 no") {
    CHECK(is_jordan_symbolic(representative(Family::Mu16, Q, {q(0)})));
    CHECK(is_jordan_symbolic(representative(Family::Mu16, Q, {q(1)})));
    CHECK_FALSE(is_jordan_symbolic(representative(Family::Mu16, Q, {q(1, 4)})));
}

TEST_CASE("commutativity is necessary and checked first") {
    Algebra noncomm = Algebra::from_products(Q, e1(Q), e2(Q), {q(0), q(0)}, e2(Q));
    JordanVerdict v = jordan_symbolic(noncomm);
    CHECK_FALSE(v.commutative);
    CHECK_FALSE(v.jordan);
    CHECK_FALSE(v.lhs.has_value());  // rejected before expansion
}

TEST_CASE("the defect report names the first differing monomial") {
    JordanVerdict v = jordan_symbolic(representative(Family::Mu14, Q, {q(1)}));
    REQUIRE(v.defect.has_value());
    CHECK(v.defect->monomial == "x1^2*x2*y2");
    CHECK(v.defect->output_coordinate == 1);
    CHECK(v.defect->lhs == q(1));
    CHECK(v.defect->rhs == q(0));
}

TEST_CASE("pointwise checks over prime fields") {
    FieldSpec f3 = FieldSpec::prime(3), f5 = FieldSpec::prime(5);
    CHECK(is_jordan_pointwise(Algebra::zero(f3)));
    Algebra j2_f5 = Algebra::from_products(f5, e1(f5), {Scalar::of(f5, 0), Scalar::of(f5, 0)},
                                           {Scalar::of(f5, 0), Scalar::of(f5, 0)}, e2(f5));
    CHECK(is_jordan_pointwise(j2_f5));
    Algebra mu17_f5 = Algebra::from_products(f5, e2(f5), e2(f5), e2(f5),
                                             {Scalar::of(f5, 0), Scalar::of(f5, 0)});
    CHECK_FALSE(is_jordan_pointwise(mu17_f5));
    CHECK_THROWS_AS(is_jordan_pointwise(Algebra::zero(Q)), unsupported_field_error);
    CHECK_THROWS_AS(is_jordan_pointwise(Algebra::zero(FieldSpec::prime(2))),
                    unsupported_field_error);
}

TEST_CASE("symbolic truth implies pointwise truth mod 3, 5, 7") {
    for (int k = 1; k <= 6; ++k) {
        Algebra J = jordan_catalog_algebra(k);
        for (std::uint64_t p : {3ull, 5ull, 7ull}) {
            auto reduced = reduce_mod_p(J, p);
            REQUIRE(reduced.has_value());
            CHECK(is_jordan_pointwise(*reduced));
        }
    }
}

TEST_CASE("reduction mod p fails exactly on vanishing denominators") {
    Algebra third = Algebra::from_products(Q, {q(1, 3), q(0)}, {q(0), q(0)}, {q(0), q(0)},
                                           {q(0), q(0)});
    CHECK_FALSE(reduce_mod_p(third, 3).has_value());
    CHECK(reduce_mod_p(third, 5).has_value());
}

TEST_CASE("the Jordan property is transform-invariant") {
    std::mt19937_64 rng(61);
    for (int k = 1; k <= 6; ++k) {
        Algebra J = jordan_catalog_algebra(k);
        for (int trial = 0; trial < 20; ++trial) {
            BasisChange M = testutil::random_basis_change(Q, rng);
            CHECK(is_jordan_symbolic(transform(J, M)));
        }
    }
    Algebra bad = representative(Family::Mu14, Q, {q(1)});
    for (int trial = 0; trial < 20; ++trial) {
        BasisChange M = testutil::random_basis_change(Q, rng);
        CHECK_FALSE(is_jordan_symbolic(transform(bad, M)));
    }
    // Exhaustively over F5 on a catalog member.
    FieldSpec f5 = FieldSpec::prime(5);
    Algebra j3 = *reduce_mod_p(jordan_catalog_algebra(3), 5);
    for (const BasisChange& M : testutil::all_invertible(f5))
        CHECK(is_jordan_pointwise(transform(j3, M)));
}

TEST_CASE("the idempotent-pair lemma holds in every symbolically Jordan algebra") {
    std::mt19937_64 rng(62);
    int trials = 0;
    while (trials < 1000) {
        std::uniform_int_distribution<long> pick(-2, 2);
        Algebra A = representative(Family::Mu11, Q, {q(pick(rng)), q(pick(rng))});
        if (!is_jordan_symbolic(A)) continue;
        IdempotentSet idem = idempotents(A);
        std::vector<Vector2> pts;
        if (idem.is_finite()) {
            pts = idem.points();
        } else {
            pts = {idem.line().base, idem.line().base + idem.line().direction};
        }
        for (const Vector2& v1 : pts) {
            for (const Vector2& v2 : pts) {
                Vector2 w = testutil::random_vector(Q, rng);
                Vector2 lhs = multiply(A, multiply(A, v1, v2), multiply(A, v1 + v2, w));
                Vector2 rhs = multiply(A, v1 + v2, multiply(A, multiply(A, v1, v2), w));
                CHECK(lhs == rhs);
                ++trials;
            }
        }
    }
}

TEST_CASE("catalog report reflects the computed truth") {
    CatalogReport report = jordan_catalog_check(200);
    // The only failing check is the alpha4 = 1 member of mu12, which is a
    // Jordan algebra isomorphic to J5.
    int failures = 0;
    for (const CatalogCheck& c : report.checks) {
        if (!c.passed) {
            ++failures;
            CHECK(c.name == "mu12(alpha4=1) is not a Jordan product");
        }
    }
    CHECK(failures == 1);
    CHECK_FALSE(report.all_passed);
}

TEST_CASE("jordan report json") {
    nlohmann::json j = jordan_report_json(jordan_catalog_algebra(3));
    CHECK(j["commutative"] == true);
    CHECK(j["jordan_symbolic"] == true);
    CHECK(j["jordan_pointwise_p"]["5"] == true);
    CHECK_FALSE(j.contains("failing_coefficient"));

    nlohmann::json bad = jordan_report_json(representative(Family::Mu14, Q, {q(1)}));
    CHECK(bad["jordan_symbolic"] == false);
    CHECK(bad["failing_coefficient"]["monomial"] == "x1^2*x2*y2");
}
