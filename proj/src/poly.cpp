#include "poly.hpp"

#include <algorithm>

namespace alg2::detail {

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(x.field());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly operator+(const Poly& p, const Poly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    const FieldSpec& f = p.c_.front().field();
    std::vector<Scalar> out(std::max(p.c_.size(), q.c_.size()), Scalar::zero(f));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i, f) + q.coeff(i, f);
    return Poly(std::move(out));
}

Poly operator-(const Poly& p, const Poly& q) {
    if (q.is_zero()) return p;
    return p + q.scaled(Scalar::of(q.c_.front().field(), -1));
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    const FieldSpec& f = p.c_.front().field();
    std::vector<Scalar> out(p.c_.size() + q.c_.size() - 1, Scalar::zero(f));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(out));
}

Poly Poly::scaled(const Scalar& s) const {
    if (is_zero() || s.is_zero()) return Poly();
    std::vector<Scalar> out = c_;
    for (auto& x : out) x *= s;
    return Poly(std::move(out));
}

void bipoly_trim(BiPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int bipoly_deg_b(const BiPoly& f) { return static_cast<int>(f.size()) - 1; }

namespace {

Poly det_poly(std::vector<std::vector<Poly>>& m) {
    // Laplace expansion; matrices here are at most 4x4.
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * det_poly(minor);
        if (j % 2) {
            acc = acc - term;
        } else {
            acc = acc + term;
        }
    }
    return acc;
}

}  // namespace

Poly resultant_b(const BiPoly& f, const BiPoly& g, const FieldSpec& field) {
    int df = bipoly_deg_b(f), dg = bipoly_deg_b(g);
    if (df < 1 || dg < 1) throw bad_argument_error("resultant_b: inputs must depend on b");
    std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<Poly>> syl(n, std::vector<Poly>(n, Poly()));
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) syl[r][r + k] = f[static_cast<std::size_t>(df - k)];
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k) syl[dg + r][r + k] = g[static_cast<std::size_t>(dg - k)];
    (void)field;
    return det_poly(syl);
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factor(abs(n))) {
        std::size_t sz = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

std::vector<Scalar> rational_roots(const Poly& p) {
    // Integerize: multiply by the lcm of coefficient denominators.
    mpz_class lcm = 1;
    for (const Scalar& c : p.coeffs()) {
        mpz_class d = c.rational().get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
    }
    std::vector<mpz_class> z;
    for (const Scalar& c : p.coeffs()) {
        mpq_class q = c.rational() * mpq_class(lcm);
        z.push_back(q.get_num());
    }
    std::vector<Scalar> roots;
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) roots.push_back(Scalar::from_rational(mpq_class(0)));
    if (low + 1 >= z.size()) return roots;  // constant or pure power of x
    const mpz_class& a0 = z[low];
    const mpz_class& an = z.back();
    for (const mpz_class& num : divisors(a0)) {
        for (const mpz_class& den : divisors(an)) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                mpq_class cand(sign * num, den);
                cand.canonicalize();
                Scalar s = Scalar::from_rational(cand);
                if (p.eval(s).is_zero()) roots.push_back(s);
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Scalar& x, const Scalar& y) {
        return canonical_less(x, y);
    });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::vector<Scalar> poly_roots_in_field(const Poly& p, const FieldSpec& field) {
    if (p.is_zero()) throw bad_argument_error("poly_roots_in_field: zero polynomial");
    if (field.is_rational()) return rational_roots(p);
    std::vector<Scalar> roots;
    for (std::uint64_t r = 0; r < field.p(); ++r) {
        Scalar s = Scalar::from_residue(field, r);
        if (p.eval(s).is_zero()) roots.push_back(s);
    }
    return roots;
}

Poly poly_gcd(Poly p, Poly q, const FieldSpec& field) {
    while (!q.is_zero()) {
        // p mod q by long division.
        Poly r = p;
        while (!r.is_zero() && r.degree() >= q.degree()) {
            Scalar factor = r.lead() / q.lead();
            int shift = r.degree() - q.degree();
            std::vector<Scalar> shifted(static_cast<std::size_t>(shift), Scalar::zero(field));
            for (const Scalar& c : q.coeffs()) shifted.push_back(c * factor);
            r = r - Poly(std::move(shifted));
        }
        p = q;
        q = r;
    }
    if (!p.is_zero()) p = p.scaled(p.lead().inverse());
    return p;
}

std::optional<LinearFactor> common_linear_factor(const BiPoly& f, const BiPoly& g,
                                                 const FieldSpec& field) {
    // Both f and g have b-degree <= 2 and total degree <= 2. A shared
    // component must be a line u*b + v1*a + v0 = 0. Solve for the line by
    // checking which lines annihilate both: a line with u != 0 gives
    // b = -(v1*a + v0)/u; substitute and require identical vanishing.
    auto substitute_vanishes = [&](const BiPoly& h, const Scalar& slope, const Scalar& icept) {
        // b := slope*a + icept
        Poly b_of_a(std::vector<Scalar>{icept, slope});
        Poly acc;
        Poly power = Poly::constant(Scalar::one(field));
        for (const Poly& coeff : h) {
            acc = acc + coeff * power;
            power = power * b_of_a;
        }
        return acc.is_zero();
    };
    // Candidate non-vertical lines come from factoring f as a quadratic in b
    // over Q(a); instead probe directly: b = s*a + t must make both vanish,
    // which yields polynomial conditions we solve by sampling two a-values.
    // f restricted to a = a0 is a univariate quadratic in b; common roots at
    // two sample points determine candidate (s, t) pairs.
    auto restrict_at = [&](const BiPoly& h, const Scalar& a0) {
        std::vector<Scalar> c;
        for (const Poly& coeff : h) c.push_back(coeff.eval(a0));
        return Poly(std::move(c));
    };
    std::vector<Scalar> samples;
    long nsamples = field.is_prime() ? static_cast<long>(field.p()) : 8;
    for (long v = 0; v < nsamples; ++v) samples.push_back(Scalar::of(field, v));
    std::vector<std::pair<Scalar, std::vector<Scalar>>> sections;
    for (const Scalar& a0 : samples) {
        Poly fa = restrict_at(f, a0), ga = restrict_at(g, a0);
        if (fa.is_zero() && ga.is_zero()) {
            // Vertical line a = a0 is itself a common component.
            return LinearFactor{Scalar::zero(field), -a0, Scalar::one(field)};
        }
        Poly common = fa.is_zero() ? ga : (ga.is_zero() ? fa : poly_gcd(fa, ga, field));
        if (common.is_zero() || common.degree() < 1) continue;
        std::vector<Scalar> roots = poly_roots_in_field(common, field);
        if (!roots.empty()) sections.emplace_back(a0, roots);
        if (sections.size() >= 2) break;
    }
    if (sections.size() < 2) return std::nullopt;
    const auto& [a1, roots1] = sections[0];
    const auto& [a2, roots2] = sections[1];
    for (const Scalar& b1 : roots1) {
        for (const Scalar& b2 : roots2) {
            Scalar slope = (b2 - b1) / (a2 - a1);
            Scalar icept = b1 - slope * a1;
            if (substitute_vanishes(f, slope, icept) && substitute_vanishes(g, slope, icept)) {
                // Line b - slope*a - icept = 0.
                return LinearFactor{Scalar::one(field), -icept, -slope};
            }
        }
    }
    return std::nullopt;
}

}  // namespace alg2::detail
