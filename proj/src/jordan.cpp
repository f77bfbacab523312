#include "alg2/jordan.hpp"

#include <map>
#include <random>

#include "alg2/classify.hpp"
#include "alg2/json_io.hpp"

namespace alg2 {

namespace {

// Sparse polynomial in (x1, x2, y1, y2) over a field; exponents stay tiny.
using Expo = std::array<int, 4>;
using MPoly = std::map<Expo, Scalar>;

MPoly mono(const FieldSpec& f, Expo e) { return {{e, Scalar::one(f)}}; }

void add_term(MPoly& p, const Expo& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

MPoly operator+(const MPoly& p, const MPoly& q) {
    MPoly out = p;
    for (const auto& [e, c] : q) add_term(out, e, c);
    return out;
}

MPoly operator*(const MPoly& p, const MPoly& q) {
    MPoly out;
    for (const auto& [e1, c1] : p)
        for (const auto& [e2, c2] : q)
            add_term(out, {e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]}, c1 * c2);
    return out;
}

MPoly scaled(const MPoly& p, const Scalar& s) {
    MPoly out;
    for (const auto& [e, c] : p) add_term(out, e, c * s);
    return out;
}

using VecPoly = std::array<MPoly, 2>;  // a vector of K^2 with polynomial entries

VecPoly mu_poly(const Algebra& A, const VecPoly& u, const VecPoly& v) {
    VecPoly out;
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            MPoly factor = u[static_cast<std::size_t>(i - 1)] * v[static_cast<std::size_t>(j - 1)];
            Vector2 c = A.product(i, j);
            out[0] = out[0] + scaled(factor, c.x1);
            out[1] = out[1] + scaled(factor, c.x2);
        }
    }
    return out;
}

BiPolynomial collect(const FieldSpec& f, const VecPoly& p) {
    BiPolynomial out;
    for (auto& plane : out.coeff)
        for (auto& row : plane) row = {Scalar::zero(f), Scalar::zero(f)};
    for (int o = 0; o < 2; ++o) {
        for (const auto& [e, c] : p[static_cast<std::size_t>(o)]) {
            if (e[0] + e[1] != 3 || e[2] + e[3] != 1)
                throw error("internal: Jordan expansion is not homogeneous of degree (3,1)");
            out.coeff[static_cast<std::size_t>(o)][static_cast<std::size_t>(e[1])]
                     [static_cast<std::size_t>(e[3])] = c;
        }
    }
    return out;
}

std::string monomial_name(int x2pow, int ypick) {
    int x1pow = 3 - x2pow;
    std::string s;
    auto append = [&](const std::string& var, int pow) {
        if (pow == 0) return;
        if (!s.empty()) s += "*";
        s += var;
        if (pow > 1) s += "^" + std::to_string(pow);
    };
    append("x1", x1pow);
    append("x2", x2pow);
    append(ypick == 0 ? "y1" : "y2", 1);
    return s;
}

}  // namespace

JordanVerdict jordan_symbolic(const Algebra& A) {
    const FieldSpec& f = A.field();
    if (f.characteristic() == 2)
        throw unsupported_field_error("the Jordan identity check requires characteristic != 2");
    JordanVerdict out;
    out.commutative = A.alpha2() == A.alpha3() && A.beta2() == A.beta3();
    if (!out.commutative) return out;

    VecPoly v{mono(f, {1, 0, 0, 0}), mono(f, {0, 1, 0, 0})};
    VecPoly w{mono(f, {0, 0, 1, 0}), mono(f, {0, 0, 0, 1})};
    VecPoly vv = mu_poly(A, v, v);
    VecPoly lhs = mu_poly(A, mu_poly(A, v, w), vv);
    VecPoly rhs = mu_poly(A, v, mu_poly(A, w, vv));
    BiPolynomial L = collect(f, lhs), R = collect(f, rhs);
    out.lhs = L;
    out.rhs = R;
    for (int o = 0; o < 2 && !out.defect; ++o)
        for (int k = 0; k <= 3 && !out.defect; ++k)
            for (int j = 0; j <= 1 && !out.defect; ++j) {
                const Scalar& a = L.coeff[static_cast<std::size_t>(o)][static_cast<std::size_t>(k)]
                                         [static_cast<std::size_t>(j)];
                const Scalar& b = R.coeff[static_cast<std::size_t>(o)][static_cast<std::size_t>(k)]
                                         [static_cast<std::size_t>(j)];
                if (!(a == b)) out.defect = JordanDefect{monomial_name(k, j), o + 1, a, b};
            }
    out.jordan = !out.defect.has_value();
    return out;
}

bool is_jordan_symbolic(const Algebra& A) { return jordan_symbolic(A).jordan; }

bool is_jordan_pointwise(const Algebra& A) {
    const FieldSpec& f = A.field();
    if (!f.is_prime()) throw unsupported_field_error("pointwise Jordan check needs a finite field");
    if (f.p() == 2) throw unsupported_field_error("pointwise Jordan check requires p != 2");
    if (!(A.alpha2() == A.alpha3() && A.beta2() == A.beta3())) return false;
    std::vector<Vector2> all;
    for (std::uint64_t i = 0; i < f.p(); ++i)
        for (std::uint64_t j = 0; j < f.p(); ++j)
            all.push_back({Scalar::from_residue(f, i), Scalar::from_residue(f, j)});
    for (const Vector2& v : all) {
        Vector2 vv = multiply(A, v, v);
        for (const Vector2& w : all) {
            if (!(multiply(A, multiply(A, v, w), vv) == multiply(A, v, multiply(A, w, vv))))
                return false;
        }
    }
    return true;
}

Algebra jordan_catalog_algebra(int k) {
    FieldSpec q = FieldSpec::rational();
    auto val = [&](long n, long d = 1) { return Scalar::of(q, n, d); };
    switch (k) {
        case 1: return representative(Family::Mu11, q, {val(0), val(1)});
        case 2: return representative(Family::Mu11, q, {val(0), val(0)});
        case 3: return representative(Family::Mu11, q, {val(1, 2), val(1, 2)});
        case 4: return representative(Family::Mu16, q, {val(1)});
        case 5: return representative(Family::Mu16, q, {val(0)});
        case 6: return representative(Family::Mu18, q, {});
        default: throw bad_argument_error("the Jordan catalog has entries J1..J6");
    }
}

std::optional<Algebra> reduce_mod_p(const Algebra& A, std::uint64_t p) {
    if (!A.field().is_rational()) throw bad_argument_error("reduce_mod_p expects a rational algebra");
    FieldSpec fp = FieldSpec::prime(p);
    std::array<Scalar, 8> mapped{Scalar::zero(fp), Scalar::zero(fp), Scalar::zero(fp),
                                 Scalar::zero(fp), Scalar::zero(fp), Scalar::zero(fp),
                                 Scalar::zero(fp), Scalar::zero(fp)};
    for (std::size_t i = 0; i < 8; ++i) {
        const mpq_class& q = A.constants()[i].rational();
        mpz_class den = q.get_den();
        if (mpz_class(den % p) == 0) return std::nullopt;
        mpz_class num_mod = q.get_num() % static_cast<long>(p);
        if (num_mod < 0) num_mod += static_cast<long>(p);
        mpz_class den_mod = den % static_cast<long>(p);
        Scalar num_s = Scalar::from_residue(fp, num_mod.get_ui());
        Scalar den_s = Scalar::from_residue(fp, den_mod.get_ui());
        mapped[i] = num_s / den_s;
    }
    return Algebra(fp, mapped[0], mapped[1], mapped[2], mapped[3], mapped[4], mapped[5],
                   mapped[6], mapped[7]);
}

namespace {

Vector2 random_vector(const FieldSpec& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    return {Scalar::of(f, num(rng), den(rng)), Scalar::of(f, num(rng), den(rng))};
}

bool lemma_holds(const Algebra& A, const Vector2& v1, const Vector2& v2, const Vector2& w) {
    Vector2 v12 = multiply(A, v1, v2);
    Vector2 sum = v1 + v2;
    return multiply(A, v12, multiply(A, sum, w)) == multiply(A, sum, multiply(A, v12, w));
}

}  // namespace

CatalogReport jordan_catalog_check(int lemma_trials) {
    CatalogReport report;
    FieldSpec q = FieldSpec::rational();
    auto val = [&](long n, long d = 1) { return Scalar::of(q, n, d); };
    auto add = [&](const std::string& name, bool passed, std::string detail = "") {
        report.checks.push_back({name, passed, std::move(detail)});
        if (!passed) report.all_passed = false;
    };

    for (int k = 1; k <= 6; ++k) {
        JordanVerdict v = jordan_symbolic(jordan_catalog_algebra(k));
        add("J" + std::to_string(k) + " satisfies the Jordan identity", v.jordan,
            v.defect ? "first defect at " + v.defect->monomial : "");
    }
    for (long a4 : {0L, 1L, -1L, 2L}) {
        Algebra mu12 = representative(Family::Mu12, q, {val(a4)});
        JordanVerdict v = jordan_symbolic(mu12);
        add("mu12(alpha4=" + std::to_string(a4) + ") is not a Jordan product", !v.jordan,
            v.jordan ? "computed verdict: Jordan (isomorphic to J5 via e2 -> e2 - e1)" : "");
    }
    {
        JordanVerdict v = jordan_symbolic(representative(Family::Mu17, q, {}));
        add("mu17 is not a Jordan product", !v.jordan);
    }
    {
        Algebra lam = representative(Family::Mu11, q, {val(-1), val(-1)});
        JordanVerdict v = jordan_symbolic(lam);
        add("mu11 with cross -(e1+e2) is not a Jordan product", !v.jordan);
    }
    {
        std::mt19937_64 rng(0x6a5d2ull);
        bool ok = true;
        std::string detail;
        int done = 0;
        while (done < lemma_trials && ok) {
            for (int k : {1, 2, 3}) {
                Algebra J = jordan_catalog_algebra(k);
                IdempotentSet idem = idempotents(J);
                std::vector<Vector2> pts;
                if (idem.is_finite()) {
                    pts = idem.points();
                } else if (idem.is_line()) {
                    pts = {idem.line().base, idem.line().base + idem.line().direction};
                }
                for (const Vector2& v1 : pts) {
                    for (const Vector2& v2 : pts) {
                        Vector2 w = random_vector(q, rng);
                        if (!lemma_holds(J, v1, v2, w)) {
                            ok = false;
                            detail = "J" + std::to_string(k) + " with w = (" + w.x1.render() +
                                     ", " + w.x2.render() + ")";
                        }
                        ++done;
                    }
                }
            }
        }
        add("idempotent-pair lemma on J1, J2, J3 with random w", ok, detail);
    }
    {
        Algebra J1 = jordan_catalog_algebra(1);
        Vector2 v1 = e1(q), v2 = e2(q);
        bool independent = !det2(multiply(J1, v1, v2), v1 + v2).is_zero();
        bool assoc = structural_predicates(J1).associative;
        add("J1: independent e1e2 and e1+e2 force associativity", independent && assoc);
    }
    return report;
}

nlohmann::json jordan_report_json(const Algebra& A) {
    nlohmann::json out;
    out["algebra"] = algebra_to_json(A);
    if (A.field().is_rational()) {
        JordanVerdict v = jordan_symbolic(A);
        out["commutative"] = v.commutative;
        out["jordan_symbolic"] = v.jordan;
        nlohmann::json pw = nlohmann::json::object();
        for (std::uint64_t p : {3ull, 5ull, 7ull}) {
            auto reduced = reduce_mod_p(A, p);
            if (reduced) pw[std::to_string(p)] = is_jordan_pointwise(*reduced);
        }
        out["jordan_pointwise_p"] = pw;
        if (v.defect) {
            out["failing_coefficient"] = {{"monomial", v.defect->monomial},
                                          {"output_coordinate", v.defect->output_coordinate},
                                          {"lhs", v.defect->lhs.render()},
                                          {"rhs", v.defect->rhs.render()}};
        }
    } else {
        if (A.field().p() == 2)
            throw unsupported_field_error("the Jordan identity check requires characteristic != 2");
        JordanVerdict v = jordan_symbolic(A);
        out["commutative"] = v.commutative;
        out["jordan_symbolic"] = v.jordan;
        out["jordan_pointwise_p"] = {
            {std::to_string(A.field().p()), is_jordan_pointwise(A)}};
        if (v.defect) {
            out["failing_coefficient"] = {{"monomial", v.defect->monomial},
                                          {"output_coordinate", v.defect->output_coordinate},
                                          {"lhs", v.defect->lhs.render()},
                                          {"rhs", v.defect->rhs.render()}};
        }
    }
    return out;
}

}  // namespace alg2
