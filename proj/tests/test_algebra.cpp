#include <doctest.h>

#include <set>

#include "alg2/algebra.hpp"
#include "alg2/json_io.hpp"
#include "test_util.hpp"

using namespace alg2;

namespace {
const FieldSpec Q = FieldSpec::rational();
Scalar q(long n, long d = 1) { return Scalar::of(Q, n, d); }

Algebra mu11(const Scalar& a2, const Scalar& b2) {
    const FieldSpec& f = a2.field();
    Vector2 cross{a2, b2};
    return Algebra::from_products(f, e1(f), cross, cross, e2(f));
}
}  // namespace

TEST_CASE("basis change construction and inverse") {
    BasisChange m(q(2), q(0), q(3), q(1, 2));
    CHECK(m.delta() == q(1));
    CHECK(m.apply(e1(Q)) == Vector2{q(2), q(3)});
    CHECK(m.apply_inverse(m.apply(Vector2{q(5), q(-7)})) == Vector2{q(5), q(-7)});
    CHECK(m * m.inverse() == BasisChange::identity(Q));
    CHECK_THROWS_AS(BasisChange(q(1), q(2), q(2), q(4)), singular_matrix_error);
}

TEST_CASE("multiply is the bilinear table evaluation") {
    std::mt19937_64 rng(5);
    Algebra zero = Algebra::zero(Q);
    CHECK(multiply(zero, testutil::random_vector(Q, rng), testutil::random_vector(Q, rng))
              .is_zero());
    FieldSpec f5 = FieldSpec::prime(5);
    CHECK_THROWS_AS(multiply(zero, e1(f5), e2(f5)), field_mismatch_error);

    // Only nonzero product mu(e1,e2) = e1 + e2.
    Algebra single = Algebra::from_products(Q, {q(0), q(0)}, {q(1), q(1)}, {q(0), q(0)},
                                            {q(0), q(0)});
    CHECK(multiply(single, e1(Q), e2(Q)) == Vector2{q(1), q(1)});
    CHECK(multiply(single, e2(Q), e1(Q)).is_zero());

    // mu11(1,1): the displayed idempotent vector (1/3, 1/3).
    Vector2 v{q(1, 3), q(1, 3)};
    CHECK(multiply(mu11(q(1), q(1)), v, v) == v);
}

TEST_CASE("transform: identity and a hand-computed change of basis") {
    std::mt19937_64 rng(6);
    Algebra A = testutil::random_algebra(Q, rng);
    CHECK(transform(A, BasisChange::identity(Q)) == A);

    // mu(e1,e2) = 2e1 + 3e2, mu(e2,e1) = -2e1 - 3e2, squares zero;
    // new basis e1' = 2e1 + 3e2, e2' = (1/2) e2.
    Algebra B = Algebra::from_products(Q, {q(0), q(0)}, {q(2), q(3)}, {q(-2), q(-3)},
                                       {q(0), q(0)});
    BasisChange M = BasisChange::from_columns({q(2), q(3)}, {q(0), q(1, 2)});
    Algebra T = transform(B, M);
    CHECK(T.product(1, 2) == e1(Q));
    CHECK(T.product(2, 1) == Vector2{q(-1), q(0)});
    CHECK(T.product(1, 1).is_zero());
    CHECK(T.product(2, 2).is_zero());
}

TEST_CASE("transform is pointwise conjugation over F3, exhaustively") {
    FieldSpec f3 = FieldSpec::prime(3);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        Algebra A = testutil::random_algebra(f3, rng);
        BasisChange M = testutil::random_basis_change(f3, rng);
        Algebra B = transform(A, M);
        for (std::uint64_t i = 0; i < 9; ++i) {
            for (std::uint64_t j = 0; j < 9; ++j) {
                Vector2 x{Scalar::from_residue(f3, i % 3), Scalar::from_residue(f3, i / 3)};
                Vector2 y{Scalar::from_residue(f3, j % 3), Scalar::from_residue(f3, j / 3)};
                CHECK(multiply(B, x, y) == M.apply_inverse(multiply(A, M.apply(x), M.apply(y))));
            }
        }
    }
}

TEST_CASE("the action laws hold") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        Algebra A = testutil::random_algebra(Q, rng);
        BasisChange M = testutil::random_basis_change(Q, rng);
        BasisChange N = testutil::random_basis_change(Q, rng);
        CHECK(transform(transform(A, M), N) == transform(A, M * N));
        CHECK(transform(A, BasisChange::identity(Q)) == A);
    }
}

TEST_CASE("skew and symmetric parts") {
    Algebra comm = mu11(q(2), q(-1, 3));
    CHECK(skew_part(comm).is_zero_algebra());
    CHECK(sym_part(comm) == comm);

    // mu(e1,e2) = e1, everything else zero.
    Algebra A = Algebra::from_products(Q, {q(0), q(0)}, {q(1), q(0)}, {q(0), q(0)},
                                       {q(0), q(0)});
    Algebra S = skew_part(A), P = sym_part(A);
    CHECK(S.product(1, 2) == Vector2{q(1, 2), q(0)});
    CHECK(S.product(2, 1) == Vector2{q(-1, 2), q(0)});
    CHECK(P.product(1, 2) == Vector2{q(1, 2), q(0)});
    CHECK(P.product(2, 1) == Vector2{q(1, 2), q(0)});

    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 1000; ++trial) {
        Algebra R = testutil::random_algebra(Q, rng);
        Algebra sum = Algebra::from_products(
            Q, skew_part(R).product(1, 1) + sym_part(R).product(1, 1),
            skew_part(R).product(1, 2) + sym_part(R).product(1, 2),
            skew_part(R).product(2, 1) + sym_part(R).product(2, 1),
            skew_part(R).product(2, 2) + sym_part(R).product(2, 2));
        CHECK(sum == R);
    }
}

TEST_CASE("skew part is anticommutative and satisfies Jacobi") {
    std::mt19937_64 rng(12);
    std::array<Vector2, 2> basis{e1(Q), e2(Q)};
    for (int trial = 0; trial < 50; ++trial) {
        Algebra S = skew_part(testutil::random_algebra(Q, rng));
        for (const Vector2& x : basis)
            for (const Vector2& y : basis)
                CHECK(multiply(S, x, y) == (q(-1) * multiply(S, y, x)));
        // Jacobi holds identically in dimension 2.
        for (const Vector2& x : basis)
            for (const Vector2& y : basis)
                for (const Vector2& z : basis) {
                    Vector2 jac = multiply(S, multiply(S, x, y), z) +
                                  multiply(S, multiply(S, y, z), x) +
                                  multiply(S, multiply(S, z, x), y);
                    CHECK(jac.is_zero());
                }
    }
}

TEST_CASE("skew/symmetric split rejects characteristic 2") {
    FieldSpec f2 = FieldSpec::prime(2);
    Algebra A = Algebra::zero(f2);
    CHECK_THROWS_AS(skew_part(A), unsupported_field_error);
    CHECK_THROWS_AS(sym_part(A), unsupported_field_error);
}

TEST_CASE("idempotents: finite cases over Q") {
    CHECK(idempotents(Algebra::zero(Q)).points().empty());

    IdempotentSet set = idempotents(mu11(q(1), q(1)));
    REQUIRE(set.is_finite());
    REQUIRE(set.points().size() == 3);
    std::set<std::pair<std::string, std::string>> rendered;
    for (const Vector2& v : set.points()) rendered.insert({v.x1.render(), v.x2.render()});
    CHECK(rendered.count({"1", "0"}) == 1);
    CHECK(rendered.count({"0", "1"}) == 1);
    CHECK(rendered.count({"1/3", "1/3"}) == 1);
    // Sorted by the canonical rendering of (x1, x2).
    for (std::size_t i = 1; i < set.points().size(); ++i) {
        auto prev = std::pair(set.points()[i - 1].x1.render(), set.points()[i - 1].x2.render());
        auto cur = std::pair(set.points()[i].x1.render(), set.points()[i].x2.render());
        CHECK(prev < cur);
    }
}

TEST_CASE("idempotents: the line case") {
    IdempotentSet set = idempotents(mu11(q(1, 2), q(1, 2)));
    REQUIRE(set.is_line());
    CHECK(set.line().base == e1(Q));
    CHECK(set.line().direction == Vector2{q(-1), q(1)});
    // Every point of the line is idempotent.
    Algebra A = mu11(q(1, 2), q(1, 2));
    for (long t = -3; t <= 3; ++t) {
        Vector2 v = set.line().base + q(t) * set.line().direction;
        CHECK(multiply(A, v, v) == v);
    }
}

TEST_CASE("idempotents over F_p by enumeration") {
    FieldSpec f5 = FieldSpec::prime(5);
    // beta2 = 1/2 = 3 over F5 with alpha4 = 0: e1 + b*e2 all idempotent.
    Algebra A = Algebra::from_products(f5, e1(f5), {Scalar::of(f5, 0), Scalar::of(f5, 3)},
                                       {Scalar::of(f5, 0), Scalar::of(f5, 3)},
                                       {Scalar::of(f5, 0), Scalar::of(f5, 0)});
    IdempotentSet set = idempotents(A);
    REQUIRE(set.is_finite());
    CHECK(set.points().size() == 5);
    for (const Vector2& v : set.points()) CHECK(multiply(A, v, v) == v);
}

TEST_CASE("idempotent set transforms by the inverse matrix") {
    std::mt19937_64 rng(14);
    FieldSpec f5 = FieldSpec::prime(5);
    for (int trial = 0; trial < 40; ++trial) {
        Algebra A = testutil::random_algebra(f5, rng, trial % 2 == 0);
        BasisChange M = testutil::random_basis_change(f5, rng);
        IdempotentSet before = idempotents(A);
        IdempotentSet after = idempotents(transform(A, M));
        if (!before.is_finite()) continue;
        REQUIRE(after.is_finite());
        std::set<std::pair<std::uint64_t, std::uint64_t>> expected, got;
        for (const Vector2& v : before.points()) {
            Vector2 w = M.apply_inverse(v);
            expected.insert({w.x1.residue(), w.x2.residue()});
        }
        for (const Vector2& v : after.points()) got.insert({v.x1.residue(), v.x2.residue()});
        CHECK(expected == got);
    }
}

TEST_CASE("elimination-based idempotents agree with enumeration over odd primes") {
    std::mt19937_64 rng(15);
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        FieldSpec f = FieldSpec::prime(p);
        for (int trial = 0; trial < 150; ++trial) {
            Algebra A = testutil::random_algebra(f, rng, trial % 2 == 0);
            IdempotentSet via_enum = idempotents(A);
            IdempotentSet via_elim = idempotents_by_elimination(A);
            std::set<std::pair<std::uint64_t, std::uint64_t>> enum_pts, elim_pts;
            if (via_enum.is_finite())
                for (const Vector2& v : via_enum.points())
                    enum_pts.insert({v.x1.residue(), v.x2.residue()});
            if (via_elim.is_finite()) {
                for (const Vector2& v : via_elim.points())
                    elim_pts.insert({v.x1.residue(), v.x2.residue()});
            } else if (via_elim.is_line()) {
                for (std::uint64_t k = 0; k < p; ++k) {
                    Vector2 v =
                        via_elim.line().base + Scalar::from_residue(f, k) * via_elim.line().direction;
                    if (!v.is_zero()) elim_pts.insert({v.x1.residue(), v.x2.residue()});
                }
            }
            CHECK(enum_pts == elim_pts);
        }
    }
}

TEST_CASE("structural predicates") {
    StructuralPredicates zero = structural_predicates(Algebra::zero(Q));
    CHECK(zero.commutative);
    CHECK(zero.anticommutative);
    CHECK(zero.associative);
    CHECK_FALSE(zero.unital);
    CHECK(zero.image_dim == 0);

    // J1: e1e1 = e1, e1e2 = e2e1 = e2, e2e2 = e2.
    Algebra j1 = Algebra::from_products(Q, e1(Q), e2(Q), e2(Q), e2(Q));
    StructuralPredicates sp = structural_predicates(j1);
    CHECK(sp.commutative);
    CHECK(sp.associative);
    CHECK(sp.unital);
    CHECK(sp.unit.value() == e1(Q));
    CHECK(sp.image_dim == 2);

    // mu18: e1e1 = e2 only.
    Algebra mu18 = Algebra::from_products(Q, e2(Q), {q(0), q(0)}, {q(0), q(0)}, {q(0), q(0)});
    StructuralPredicates sp18 = structural_predicates(mu18);
    CHECK(sp18.commutative);
    CHECK(sp18.associative);
    CHECK_FALSE(sp18.unital);
    CHECK(sp18.image_dim == 1);
}

TEST_CASE("structural predicates are transform-invariant") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 100; ++trial) {
        Algebra A = testutil::random_algebra(Q, rng, trial % 3 == 0);
        BasisChange M = testutil::random_basis_change(Q, rng);
        CHECK(structural_predicates(A) == structural_predicates(transform(A, M)));
    }
}

TEST_CASE("algebra json round trip") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Algebra A = testutil::random_algebra(Q, rng);
        CHECK(algebra_from_json(algebra_to_json(A)) == A);
    }
    Algebra A5 = testutil::random_algebra(FieldSpec::prime(5), rng);
    CHECK(algebra_from_json(algebra_to_json(A5)) == A5);
    Algebra A2 = testutil::random_algebra(FieldSpec::prime(2), rng);
    nlohmann::json j2 = algebra_to_json(A2);
    CHECK(j2["field"] == "F2");
    CHECK(algebra_from_json(j2) == A2);
}

TEST_CASE("algebra json rejects malformed documents") {
    auto doc = [](const char* text) { return nlohmann::json::parse(text); };
    CHECK_THROWS_AS(algebra_from_json_text("{"), parse_error);
    CHECK_THROWS_AS(algebra_from_json(doc(R"({"field":"Q"})")), parse_error);
    CHECK_THROWS_AS(
        algebra_from_json(doc(
            R"({"field":"Q","table":{"e1e1":["0","0"],"e1e2":["0","0"],"e2e1":["0","0"],"e2e2":["0","0"]},"extra":1})")),
        parse_error);
    CHECK_THROWS_AS(
        algebra_from_json(doc(
            R"({"field":"Q","table":{"e1e1":["0","0"],"e1e2":["0","0"],"e2e1":["0","0"],"e3e3":["0","0"]}})")),
        parse_error);
    CHECK_THROWS_AS(
        algebra_from_json(doc(
            R"({"field":"Q","table":{"e1e1":["0","1/1"],"e1e2":["0","0"],"e2e1":["0","0"],"e2e2":["0","0"]}})")),
        parse_error);
    CHECK_THROWS_AS(
        algebra_from_json(doc(
            R"({"field":"R","table":{"e1e1":["0","0"],"e1e2":["0","0"],"e2e1":["0","0"],"e2e2":["0","0"]}})")),
        bad_argument_error);
    CHECK_THROWS_AS(
        algebra_from_json(doc(
            R"({"field":{"p":9},"table":{"e1e1":["0","0"],"e1e2":["0","0"],"e2e1":["0","0"],"e2e2":["0","0"]}})")),
        bad_argument_error);
    // {"p":2} is the same field as "F2".
    Algebra viaP = algebra_from_json(doc(
        R"({"field":{"p":2},"table":{"e1e1":["1","0"],"e1e2":["0","0"],"e2e1":["0","0"],"e2e2":["0","1"]}})"));
    CHECK(viaP.field() == FieldSpec::prime(2));
}
