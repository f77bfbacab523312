#pragma once

// Small exact-polynomial helpers used by the idempotent solver and the
// classifier. Internal to the library; not installed.

#include <vector>

#include "alg2/fields.hpp"

namespace alg2::detail {

/// Dense univariate polynomial, coefficients low-to-high, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Scalar& s) { return Poly({s}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(std::size_t i, const FieldSpec& f) const {
        return i < c_.size() ? c_[i] : Scalar::zero(f);
    }
    const Scalar& lead() const { return c_.back(); }

    Scalar eval(const Scalar& x) const;

    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    Poly scaled(const Scalar& s) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

/// f(a,b) viewed as a polynomial in b whose coefficients are Poly in a.
using BiPoly = std::vector<Poly>;  // index = power of b

void bipoly_trim(BiPoly& f);
int bipoly_deg_b(const BiPoly& f);

/// Res_b(f, g) as a polynomial in a. Both inputs must have positive b-degree.
Poly resultant_b(const BiPoly& f, const BiPoly& g, const FieldSpec& field);

/// All roots of p in its own field: rational-root theorem over Q (exact,
/// arbitrary precision), residue scan over F_p. p must be nonzero.
std::vector<Scalar> poly_roots_in_field(const Poly& p, const FieldSpec& field);

/// Monic gcd of two univariate polynomials (Euclid).
Poly poly_gcd(Poly p, Poly q, const FieldSpec& field);

/// Common linear factor u*b + (v0 + v1*a) of two bivariate quadratics known
/// to share one (used for idempotent lines). Returns coefficients {u, v0, v1}.
struct LinearFactor {
    Scalar b_coeff, const_coeff, a_coeff;
};
std::optional<LinearFactor> common_linear_factor(const BiPoly& f, const BiPoly& g,
                                                 const FieldSpec& field);

}  // namespace alg2::detail
