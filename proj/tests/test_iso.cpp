#include <doctest.h>

#include "alg2/iso.hpp"
#include "test_util.hpp"

using namespace alg2;

namespace {
const FieldSpec Q = FieldSpec::rational();
Scalar q(long n, long d = 1) { return Scalar::of(Q, n, d); }
}  // namespace

TEST_CASE("fingerprint examples") {
    InvariantFingerprint zero = fingerprint(Algebra::zero(Q));
    CHECK(zero.commutative);
    CHECK(zero.anticommutative);
    CHECK(zero.associative);
    CHECK_FALSE(zero.unital);
    CHECK(zero.image_dim == 0);
    CHECK(zero.skew_trivial.value());
    CHECK(zero.profile_kind == InvariantFingerprint::ProfileKind::count);
    CHECK(zero.idempotent_count == 0);
    CHECK(zero.square_map_rank == 0);

    // J2: e1e1 = e1, e2e2 = e2, cross 0.
    Algebra j2 = Algebra::from_products(Q, e1(Q), {q(0), q(0)}, {q(0), q(0)}, e2(Q));
    CHECK(fingerprint(j2).idempotent_count == 3);

    // mu18: e1e1 = e2 only.
    Algebra mu18 = Algebra::from_products(Q, e2(Q), {q(0), q(0)}, {q(0), q(0)}, {q(0), q(0)});
    InvariantFingerprint fp = fingerprint(mu18);
    CHECK(fp.idempotent_count == 0);
    CHECK(fp.image_dim == 1);
    CHECK(fp.commutative);
}

TEST_CASE("fingerprints have no skew verdict in characteristic 2 and can see planes") {
    FieldSpec f2 = FieldSpec::prime(2);
    Scalar z = Scalar::zero(f2), o = Scalar::one(f2);
    Algebra plane = Algebra::from_products(f2, e1(f2), {o, o}, {o, o}, e2(f2));
    InvariantFingerprint fp = fingerprint(plane);
    CHECK_FALSE(fp.skew_trivial.has_value());
    CHECK(fp.profile_kind == InvariantFingerprint::ProfileKind::plane);
    (void)z;
}

TEST_CASE("fingerprint is transform-invariant on 10^4 rational instances") {
    std::mt19937_64 rng(41);
    int failures = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        Algebra A = testutil::random_algebra(Q, rng, trial % 3 == 0);
        BasisChange M = testutil::random_basis_change(Q, rng);
        if (!(fingerprint(A) == fingerprint(transform(A, M)))) ++failures;
    }
    CHECK(failures == 0);
    FieldSpec f3 = FieldSpec::prime(3);
    for (int trial = 0; trial < 60; ++trial) {
        Algebra A = testutil::random_algebra(f3, rng);
        BasisChange M = testutil::random_basis_change(f3, rng);
        CHECK(fingerprint(A) == fingerprint(transform(A, M)));
    }
}

TEST_CASE("brute force witnesses") {
    FieldSpec f5 = FieldSpec::prime(5);
    // A rigid table: identity is the first witness for A vs A.
    Algebra A = testutil::table(f5, {1, 1, 2, 0, 0, 0, 1, 1});
    auto self = isomorphic_bruteforce(A, A);
    REQUIRE(self.has_value());
    CHECK(self->matrix == BasisChange::identity(f5));

    auto mu14 = [&](long a4) {
        return Algebra::from_products(f5, e1(f5), {Scalar::of(f5, 0), Scalar::of(f5, 0)},
                                      {Scalar::of(f5, 0), Scalar::of(f5, 0)},
                                      {Scalar::of(f5, a4), Scalar::of(f5, 0)});
    };
    CHECK_FALSE(isomorphic_bruteforce(mu14(1), mu14(2)).has_value());  // 2 is a non-square mod 5
    auto witness = isomorphic_bruteforce(mu14(1), mu14(4));
    REQUIRE(witness.has_value());
    CHECK(transform(mu14(1), witness->matrix) == mu14(4));
}

TEST_CASE("brute force rejects unsupported fields") {
    CHECK_THROWS_AS(isomorphic_bruteforce(Algebra::zero(Q), Algebra::zero(Q)),
                    unsupported_field_error);
    FieldSpec f7 = FieldSpec::prime(7);
    CHECK_THROWS_AS(isomorphic_bruteforce(Algebra::zero(f7), Algebra::zero(f7)),
                    unsupported_field_error);
}

TEST_CASE("brute-force isomorphism behaves as an equivalence relation") {
    FieldSpec f3 = FieldSpec::prime(3);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        Algebra A = testutil::random_algebra(f3, rng);
        BasisChange M = testutil::random_basis_change(f3, rng);
        Algebra B = transform(A, M);
        auto ab = isomorphic_bruteforce(A, B);
        REQUIRE(ab.has_value());
        // Symmetry: the inverse witness works.
        CHECK(transform(B, ab->matrix.inverse()) == A);
        // Transitivity: witnesses compose.
        BasisChange N = testutil::random_basis_change(f3, rng);
        Algebra C = transform(B, N);
        auto bc = isomorphic_bruteforce(B, C);
        REQUIRE(bc.has_value());
        CHECK(transform(A, ab->matrix * bc->matrix) == C);
    }
}

TEST_CASE("exhaustive classification over F2 and F3") {
    OrbitPartition f2 = classify_exhaustive(FieldSpec::prime(2));
    CHECK(f2.class_count == 52);
    CHECK(f2.burnside_class_count.value() == 52);
    std::uint64_t total2 = 0;
    for (const Orbit& orb : f2.orbits) {
        total2 += orb.size;
        CHECK(6 % orb.stabilizer_order == 0);
        CHECK(orb.size * orb.stabilizer_order == 6);
    }
    CHECK(total2 == 256);

    OrbitPartition f3 = classify_exhaustive(FieldSpec::prime(3));
    CHECK(f3.class_count == 162);  // pinned from the first audited run
    CHECK(f3.burnside_class_count.value() == 162);
    std::uint64_t total3 = 0;
    for (const Orbit& orb : f3.orbits) {
        total3 += orb.size;
        CHECK(orb.size * orb.stabilizer_order == 48);  // orbit-stabilizer over GL(2,F3)
    }
    CHECK(total3 == 6561);
}

TEST_CASE("stabilizer orders recomputed directly") {
    FieldSpec f3 = FieldSpec::prime(3);
    OrbitPartition part = classify_exhaustive(f3);
    auto matrices = testutil::all_invertible(f3);
    REQUIRE(matrices.size() == 48);
    for (std::size_t i = 0; i < part.orbits.size(); i += 17) {
        const Orbit& orb = part.orbits[i];
        Algebra rep(f3, orb.min_constants[0], orb.min_constants[1], orb.min_constants[2],
                    orb.min_constants[3], orb.min_constants[4], orb.min_constants[5],
                    orb.min_constants[6], orb.min_constants[7]);
        std::uint64_t stab = 0;
        for (const BasisChange& M : matrices)
            if (transform(rep, M) == rep) ++stab;
        CHECK(stab == orb.stabilizer_order);
    }
}

TEST_CASE("fingerprints are constant on every F2 and F3 orbit") {
    for (std::uint64_t p : {2ull, 3ull}) {
        FieldSpec f = FieldSpec::prime(p);
        OrbitPartition part = classify_exhaustive(f);
        std::vector<InvariantFingerprint> rep_fp;
        for (const Orbit& orb : part.orbits) {
            Algebra rep(f, orb.min_constants[0], orb.min_constants[1], orb.min_constants[2],
                        orb.min_constants[3], orb.min_constants[4], orb.min_constants[5],
                        orb.min_constants[6], orb.min_constants[7]);
            rep_fp.push_back(fingerprint(rep));
        }
        std::uint64_t total = 1;
        for (int i = 0; i < 8; ++i) total *= p;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            Algebra A = table_from_index(f, idx);
            CHECK(fingerprint(A) == rep_fp[part.orbit_of(idx)]);
        }
    }
}

TEST_CASE("expensive and oversized fields are gated") {
    CHECK_THROWS_AS(classify_exhaustive(FieldSpec::prime(5), false), bad_argument_error);
    CHECK_THROWS_AS(classify_exhaustive(FieldSpec::prime(7), true), unsupported_field_error);
    CHECK_THROWS_AS(classify_exhaustive(FieldSpec::rational()), unsupported_field_error);
}

TEST_CASE("orbit report format") {
    OrbitPartition part = classify_exhaustive(FieldSpec::prime(2));
    std::string report = orbit_report_text(part);
    CHECK(report.find("min=0,0,0,0,0,0,0,0 size=1 stabilizer=6") == 0);
    CHECK(std::count(report.begin(), report.end(), '\n') == 52);
}
