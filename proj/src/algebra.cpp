#include "alg2/algebra.hpp"

#include <algorithm>

#include "poly.hpp"

namespace alg2 {

Vector2 e1(const FieldSpec& f) { return {Scalar::one(f), Scalar::zero(f)}; }
Vector2 e2(const FieldSpec& f) { return {Scalar::zero(f), Scalar::one(f)}; }

Scalar det2(const Vector2& u, const Vector2& v) { return u.x1 * v.x2 - u.x2 * v.x1; }

BasisChange::BasisChange(Scalar a, Scalar b, Scalar c, Scalar d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)),
      delta_(a_ * d_ - b_ * c_) {
    if (delta_.is_zero()) throw singular_matrix_error("singular basis change (delta = 0)");
}

BasisChange BasisChange::identity(const FieldSpec& f) {
    return BasisChange(Scalar::one(f), Scalar::zero(f), Scalar::zero(f), Scalar::one(f));
}

BasisChange BasisChange::from_columns(const Vector2& u, const Vector2& v) {
    return BasisChange(u.x1, v.x1, u.x2, v.x2);
}

Vector2 BasisChange::apply(const Vector2& x) const {
    return {a_ * x.x1 + b_ * x.x2, c_ * x.x1 + d_ * x.x2};
}

Vector2 BasisChange::apply_inverse(const Vector2& x) const {
    return {(d_ * x.x1 - b_ * x.x2) / delta_, (a_ * x.x2 - c_ * x.x1) / delta_};
}

BasisChange BasisChange::inverse() const {
    return BasisChange(d_ / delta_, -b_ / delta_, -c_ / delta_, a_ / delta_);
}

BasisChange operator*(const BasisChange& m, const BasisChange& n) {
    return BasisChange(m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                       m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_);
}

namespace {

void require_field(const FieldSpec& f, const Scalar& s, const char* what) {
    if (!(s.field() == f))
        throw field_mismatch_error(std::string(what) + ": expected " + f.render() + ", got " +
                                   s.field().render());
}

}  // namespace

Algebra::Algebra(FieldSpec field, Scalar alpha1, Scalar beta1, Scalar alpha2, Scalar beta2,
                 Scalar alpha3, Scalar beta3, Scalar alpha4, Scalar beta4)
    : field_(field),
      c_{std::move(alpha1), std::move(beta1), std::move(alpha2), std::move(beta2),
         std::move(alpha3), std::move(beta3), std::move(alpha4), std::move(beta4)} {
    for (const Scalar& s : c_) require_field(field_, s, "algebra constant");
}

Algebra Algebra::zero(const FieldSpec& f) {
    Scalar z = Scalar::zero(f);
    return Algebra(f, z, z, z, z, z, z, z, z);
}

Algebra Algebra::from_products(const FieldSpec& f, const Vector2& p11, const Vector2& p12,
                               const Vector2& p21, const Vector2& p22) {
    return Algebra(f, p11.x1, p11.x2, p12.x1, p12.x2, p21.x1, p21.x2, p22.x1, p22.x2);
}

Vector2 Algebra::product(int i, int j) const {
    std::size_t idx = static_cast<std::size_t>(2 * ((i - 1) * 2 + (j - 1)));
    return {c_[idx], c_[idx + 1]};
}

bool Algebra::is_zero_algebra() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector2 multiply(const Algebra& A, const Vector2& x, const Vector2& y) {
    require_field(A.field(), x.x1, "multiply operand");
    require_field(A.field(), y.x1, "multiply operand");
    Vector2 acc = x.x1 * y.x1 * A.product(1, 1) + x.x1 * y.x2 * A.product(1, 2);
    acc = acc + x.x2 * y.x1 * A.product(2, 1) + x.x2 * y.x2 * A.product(2, 2);
    return acc;
}

Algebra transform(const Algebra& A, const BasisChange& M) {
    if (!(M.field() == A.field()))
        throw field_mismatch_error("transform: matrix over " + M.field().render() +
                                   ", algebra over " + A.field().render());
    Vector2 f1 = M.apply(e1(A.field()));
    Vector2 f2 = M.apply(e2(A.field()));
    return Algebra::from_products(A.field(), M.apply_inverse(multiply(A, f1, f1)),
                                  M.apply_inverse(multiply(A, f1, f2)),
                                  M.apply_inverse(multiply(A, f2, f1)),
                                  M.apply_inverse(multiply(A, f2, f2)));
}

namespace {

Algebra half_combination(const Algebra& A, bool skew) {
    if (A.field().characteristic() == 2)
        throw unsupported_field_error("skew/symmetric split needs characteristic != 2");
    Scalar half = Scalar::of(A.field(), 1, 2);
    auto mix = [&](const Vector2& p, const Vector2& q) {
        return skew ? half * (p - q) : half * (p + q);
    };
    return Algebra::from_products(A.field(), mix(A.product(1, 1), A.product(1, 1)),
                                  mix(A.product(1, 2), A.product(2, 1)),
                                  mix(A.product(2, 1), A.product(1, 2)),
                                  mix(A.product(2, 2), A.product(2, 2)));
}

}  // namespace

Algebra skew_part(const Algebra& A) { return half_combination(A, true); }
Algebra sym_part(const Algebra& A) { return half_combination(A, false); }

namespace {

bool render_pair_less(const Vector2& u, const Vector2& v) {
    auto ru = std::pair(u.x1.render(), u.x2.render());
    auto rv = std::pair(v.x1.render(), v.x2.render());
    return ru < rv;
}

IdempotentSet finite_set(std::vector<Vector2> pts) {
    std::sort(pts.begin(), pts.end(), render_pair_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return IdempotentSet{std::move(pts)};
}

bool is_idempotent(const Algebra& A, const Vector2& v) {
    return !v.is_zero() && multiply(A, v, v) == v;
}

/// Canonical line rendering: direction scaled so its last nonzero coordinate
/// is 1, base the line point with x2 = 0 when reachable, else x1 = 0.
IdempotentSet line_set(Vector2 base, Vector2 dir) {
    if (!dir.x2.is_zero()) {
        dir = dir.x2.inverse() * dir;
        base = base - base.x2 * dir;  // x2 -> 0
    } else {
        dir = dir.x1.inverse() * dir;
        base = base - base.x1 * dir;  // x1 -> 0
    }
    return IdempotentSet{IdempotentLine{base, dir}};
}

IdempotentSet idempotents_enumerate(const Algebra& A) {
    const FieldSpec& f = A.field();
    std::vector<Vector2> pts;
    for (std::uint64_t i = 0; i < f.p(); ++i) {
        for (std::uint64_t j = 0; j < f.p(); ++j) {
            Vector2 v{Scalar::from_residue(f, i), Scalar::from_residue(f, j)};
            if (is_idempotent(A, v)) pts.push_back(v);
        }
    }
    if (pts.size() == f.p() * f.p() - 1) return IdempotentSet{IdempotentPlane{}};
    return finite_set(std::move(pts));
}

}  // namespace

IdempotentSet idempotents_by_elimination(const Algebra& A) {
    using detail::BiPoly;
    using detail::Poly;
    const FieldSpec& f = A.field();
    Scalar z = Scalar::zero(f), o = Scalar::one(f);
    Scalar sigma = A.alpha2() + A.alpha3();
    Scalar tau = A.beta2() + A.beta3();

    // f1(a,b) = alpha1 a^2 + sigma ab + alpha4 b^2 - a
    // f2(a,b) = beta1 a^2  + tau ab  + beta4 b^2  - b
    BiPoly g1(3);
    g1[0] = Poly({z, -o, A.alpha1()});          // const-in-b: alpha1 a^2 - a
    g1[1] = Poly({z, sigma});                   // b * (sigma a)
    g1[2] = Poly::constant(A.alpha4());         // b^2
    BiPoly g2(3);
    g2[0] = Poly({z, z, A.beta1()});            // beta1 a^2
    g2[1] = Poly({-o, tau});                    // b * (tau a - 1)
    g2[2] = Poly::constant(A.beta4());          // b^2
    detail::bipoly_trim(g1);
    detail::bipoly_trim(g2);

    auto restrict_at = [&](const BiPoly& h, const Scalar& a0) {
        std::vector<Scalar> c;
        for (const Poly& coeff : h) c.push_back(coeff.eval(a0));
        return Poly(std::move(c));
    };
    auto solve_columns = [&](const std::vector<Scalar>& a_candidates)
        -> std::variant<std::vector<Vector2>, IdempotentSet> {
        std::vector<Vector2> pts;
        for (const Scalar& a0 : a_candidates) {
            Poly r1 = restrict_at(g1, a0), r2 = restrict_at(g2, a0);
            if (r1.is_zero() && r2.is_zero())
                return line_set(Vector2{a0, z}, Vector2{z, o});  // vertical line a = a0
            Poly common = r1.is_zero() ? r2 : (r2.is_zero() ? r1 : detail::poly_gcd(r1, r2, f));
            if (common.is_zero() || common.degree() < 0) continue;
            if (common.degree() == 0) continue;
            for (const Scalar& b0 : detail::poly_roots_in_field(common, f)) {
                Vector2 v{a0, b0};
                if (is_idempotent(A, v)) pts.push_back(v);
            }
        }
        return pts;
    };

    std::vector<Scalar> a_candidates;
    if (detail::bipoly_deg_b(g1) < 1) {
        // f1 = alpha1 a^2 - a = a (alpha1 a - 1); f2 always depends on b.
        a_candidates.push_back(z);
        if (!A.alpha1().is_zero()) a_candidates.push_back(A.alpha1().inverse());
    } else {
        Poly res = detail::resultant_b(g1, g2, f);
        if (res.is_zero()) {
            auto lf = detail::common_linear_factor(g1, g2, f);
            if (!lf) throw error("idempotent elimination: vanishing resultant without a line");
            // u*b + v1*a + v0 = 0
            if (!lf->b_coeff.is_zero()) {
                Scalar s = -lf->a_coeff / lf->b_coeff, t = -lf->const_coeff / lf->b_coeff;
                return line_set(Vector2{z, t}, Vector2{o, s});
            }
            Scalar a0 = -lf->const_coeff / lf->a_coeff;
            return line_set(Vector2{a0, z}, Vector2{z, o});
        }
        a_candidates = detail::poly_roots_in_field(res, f);
    }
    auto solved = solve_columns(a_candidates);
    if (std::holds_alternative<IdempotentSet>(solved)) return std::get<IdempotentSet>(solved);
    auto pts = std::get<std::vector<Vector2>>(solved);
    std::erase_if(pts, [](const Vector2& v) { return v.is_zero(); });
    return finite_set(std::move(pts));
}

IdempotentSet idempotents(const Algebra& A) {
    if (A.field().is_prime()) return idempotents_enumerate(A);
    return idempotents_by_elimination(A);
}

namespace {

int rank2(std::vector<Vector2> rows) {
    // Rank of the span of a list of vectors in K^2.
    std::erase_if(rows, [](const Vector2& v) { return v.is_zero(); });
    if (rows.empty()) return 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (!det2(rows[0], rows[i]).is_zero()) return 2;
    return 1;
}

}  // namespace

StructuralPredicates structural_predicates(const Algebra& A) {
    StructuralPredicates out;
    const FieldSpec& f = A.field();
    out.commutative = A.alpha2() == A.alpha3() && A.beta2() == A.beta3();
    // mu(x,y) = -mu(y,x) on basis pairs, including the diagonal ones.
    {
        Vector2 p11 = A.product(1, 1), p22 = A.product(2, 2);
        bool squares_cancel = (p11 + p11).is_zero() && (p22 + p22).is_zero();
        out.anticommutative =
            squares_cancel && A.alpha2() == -A.alpha3() && A.beta2() == -A.beta3();
    }
    out.associative = true;
    std::array<Vector2, 2> basis{e1(f), e2(f)};
    for (const Vector2& x : basis)
        for (const Vector2& y : basis)
            for (const Vector2& z : basis)
                if (!(multiply(A, multiply(A, x, y), z) == multiply(A, x, multiply(A, y, z))))
                    out.associative = false;
    // Two-sided unit: four vector equations linear in u = (u1, u2).
    // mu(u, e1) = e1, mu(u, e2) = e2, mu(e1, u) = e1, mu(e2, u) = e2.
    {
        // mu(u, e1) = u1*p11 + u2*p21, etc. Set up 8 scalar equations.
        std::vector<std::array<Scalar, 3>> eqs;  // c1*u1 + c2*u2 = rhs
        auto add_eq = [&](const Vector2& cu1, const Vector2& cu2, const Vector2& rhs) {
            eqs.push_back({cu1.x1, cu2.x1, rhs.x1});
            eqs.push_back({cu1.x2, cu2.x2, rhs.x2});
        };
        add_eq(A.product(1, 1), A.product(2, 1), e1(f));
        add_eq(A.product(1, 2), A.product(2, 2), e2(f));
        add_eq(A.product(1, 1), A.product(1, 2), e1(f));
        add_eq(A.product(2, 1), A.product(2, 2), e2(f));
        // Solve the overdetermined system exactly.
        std::optional<Vector2> unit;
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        for (std::size_t i = 0; i < eqs.size() && !pivot; ++i)
            for (std::size_t j = i + 1; j < eqs.size() && !pivot; ++j) {
                Scalar det = eqs[i][0] * eqs[j][1] - eqs[i][1] * eqs[j][0];
                if (!det.is_zero()) pivot = {i, j};
            }
        std::vector<Vector2> candidates;
        if (pivot) {
            auto [i, j] = *pivot;
            Scalar det = eqs[i][0] * eqs[j][1] - eqs[i][1] * eqs[j][0];
            Scalar u1 = (eqs[i][2] * eqs[j][1] - eqs[i][1] * eqs[j][2]) / det;
            Scalar u2 = (eqs[i][0] * eqs[j][2] - eqs[i][2] * eqs[j][0]) / det;
            candidates.push_back({u1, u2});
        }
        for (const Vector2& u : candidates) {
            bool ok = multiply(A, u, e1(f)) == e1(f) && multiply(A, u, e2(f)) == e2(f) &&
                      multiply(A, e1(f), u) == e1(f) && multiply(A, e2(f), u) == e2(f);
            if (ok) {
                out.unital = true;
                out.unit = u;
            }
        }
        // Rank-0 coefficient case: a unit would need mu = id on basis, impossible
        // unless handled above; nothing to do.
    }
    out.image_dim =
        rank2({A.product(1, 1), A.product(1, 2), A.product(2, 1), A.product(2, 2)});
    return out;
}

}  // namespace alg2
