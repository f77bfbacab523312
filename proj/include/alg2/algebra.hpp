#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alg2/fields.hpp"

namespace alg2 {

struct Vector2 {
    Scalar x1, x2;

    const FieldSpec& field() const { return x1.field(); }
    bool is_zero() const { return x1.is_zero() && x2.is_zero(); }

    friend Vector2 operator+(const Vector2& u, const Vector2& v) {
        return {u.x1 + v.x1, u.x2 + v.x2};
    }
    friend Vector2 operator-(const Vector2& u, const Vector2& v) {
        return {u.x1 - v.x1, u.x2 - v.x2};
    }
    friend Vector2 operator*(const Scalar& s, const Vector2& v) { return {s * v.x1, s * v.x2}; }
    friend bool operator==(const Vector2&, const Vector2&) = default;
};

Vector2 e1(const FieldSpec& f);
Vector2 e2(const FieldSpec& f);
/// det(u | v)
Scalar det2(const Vector2& u, const Vector2& v);

/// Invertible change of basis. Rows (a b / c d); columns are the new basis
/// vectors expressed in the old one; acts on coordinates by M*x.
class BasisChange {
public:
    /// Throws singular_matrix_error if ad - bc = 0.
    BasisChange(Scalar a, Scalar b, Scalar c, Scalar d);
    static BasisChange identity(const FieldSpec& f);
    static BasisChange from_columns(const Vector2& u, const Vector2& v);

    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }
    const Scalar& c() const { return c_; }
    const Scalar& d() const { return d_; }
    const Scalar& delta() const { return delta_; }
    const FieldSpec& field() const { return a_.field(); }

    Vector2 apply(const Vector2& x) const;
    Vector2 apply_inverse(const Vector2& x) const;
    BasisChange inverse() const;
    /// Matrix product; transform(transform(A, M), N) = transform(A, M * N).
    friend BasisChange operator*(const BasisChange& m, const BasisChange& n);
    friend bool operator==(const BasisChange&, const BasisChange&) = default;

private:
    Scalar a_, b_, c_, d_, delta_;
};

/// A 2-dimensional algebra given by its eight structure constants:
/// e1*e1 = alpha1*e1 + beta1*e2, e1*e2 = alpha2*e1 + beta2*e2,
/// e2*e1 = alpha3*e1 + beta3*e2, e2*e2 = alpha4*e1 + beta4*e2.
class Algebra {
public:
    Algebra(FieldSpec field, Scalar alpha1, Scalar beta1, Scalar alpha2, Scalar beta2,
            Scalar alpha3, Scalar beta3, Scalar alpha4, Scalar beta4);
    static Algebra zero(const FieldSpec& f);
    /// Products given as vectors, in table order e1e1, e1e2, e2e1, e2e2.
    static Algebra from_products(const FieldSpec& f, const Vector2& p11, const Vector2& p12,
                                 const Vector2& p21, const Vector2& p22);

    const FieldSpec& field() const { return field_; }
    const Scalar& alpha1() const { return c_[0]; }
    const Scalar& beta1() const { return c_[1]; }
    const Scalar& alpha2() const { return c_[2]; }
    const Scalar& beta2() const { return c_[3]; }
    const Scalar& alpha3() const { return c_[4]; }
    const Scalar& beta3() const { return c_[5]; }
    const Scalar& alpha4() const { return c_[6]; }
    const Scalar& beta4() const { return c_[7]; }
    /// Constants in the order (alpha1, beta1, alpha2, beta2, alpha3, beta3, alpha4, beta4).
    const std::array<Scalar, 8>& constants() const { return c_; }

    /// mu(e_i, e_j) for i, j in {1, 2}.
    Vector2 product(int i, int j) const;
    bool is_zero_algebra() const;

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    FieldSpec field_;
    std::array<Scalar, 8> c_;
};

/// Bilinear evaluation mu(x, y).
Vector2 multiply(const Algebra& A, const Vector2& x, const Vector2& y);

/// The GL(2,K) action: mu'(x,y) = M^-1 * mu(Mx, My), computed by direct
/// evaluation on basis pairs.
Algebra transform(const Algebra& A, const BasisChange& M);

/// mu_a(x,y) = (mu(x,y) - mu(y,x))/2 and mu_s = (mu(x,y) + mu(y,x))/2.
/// Characteristic 2 rejected.
Algebra skew_part(const Algebra& A);
Algebra sym_part(const Algebra& A);

struct IdempotentLine {
    Vector2 base, direction;
    friend bool operator==(const IdempotentLine&, const IdempotentLine&) = default;
};
struct IdempotentPlane {
    friend bool operator==(const IdempotentPlane&, const IdempotentPlane&) = default;
};
/// The nonzero solutions of mu(v,v) = v. Finite lists are duplicate-free and
/// sorted by the rendering of (x1, x2).
struct IdempotentSet {
    std::variant<std::vector<Vector2>, IdempotentLine, IdempotentPlane> value;

    bool is_finite() const { return std::holds_alternative<std::vector<Vector2>>(value); }
    bool is_line() const { return std::holds_alternative<IdempotentLine>(value); }
    bool is_plane() const { return std::holds_alternative<IdempotentPlane>(value); }
    const std::vector<Vector2>& points() const { return std::get<std::vector<Vector2>>(value); }
    const IdempotentLine& line() const { return std::get<IdempotentLine>(value); }
};

/// Exact idempotent computation: enumeration of all p^2 vectors over F_p,
/// elimination to a degree <= 4 resultant plus rational root search over Q.
IdempotentSet idempotents(const Algebra& A);

/// The Q-style case analysis run over any field; used as an independent
/// cross-check of the enumeration path over F_p.
IdempotentSet idempotents_by_elimination(const Algebra& A);

struct StructuralPredicates {
    bool commutative = false;
    bool anticommutative = false;
    bool associative = false;
    bool unital = false;
    int image_dim = 0;
    std::optional<Vector2> unit;  // witness, not part of equality

    friend bool operator==(const StructuralPredicates& p, const StructuralPredicates& q) {
        return p.commutative == q.commutative && p.anticommutative == q.anticommutative &&
               p.associative == q.associative && p.unital == q.unital &&
               p.image_dim == q.image_dim;
    }
};

StructuralPredicates structural_predicates(const Algebra& A);

}  // namespace alg2
