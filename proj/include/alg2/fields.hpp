#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace alg2 {

// Error hierarchy. parse_error maps to CLI exit code 2, everything else to 1.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct field_mismatch_error : error {
    using error::error;
};
struct division_by_zero_error : error {
    using error::error;
};
struct unsupported_field_error : error {
    using error::error;
};
struct singular_matrix_error : error {
    using error::error;
};
struct bad_argument_error : error {
    using error::error;
};
struct parse_error : error {
    using error::error;
};

/// Exhaustive square-root search over F_p is only offered below this bound.
inline constexpr std::uint64_t kPrimeSqrtLimit = 997;

class FieldSpec {
public:
    enum class Kind { rational, prime };

    static FieldSpec rational() { return FieldSpec(Kind::rational, 0); }
    /// Throws bad_argument_error unless p is prime.
    static FieldSpec prime(std::uint64_t p);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::rational; }
    bool is_prime() const { return kind_ == Kind::prime; }
    std::uint64_t p() const { return p_; }
    std::uint64_t characteristic() const { return is_rational() ? 0 : p_; }

    std::string render() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

/// An exact field element: a reduced rational over Q, a residue in [0,p) over F_p.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rational()), rat_(0), res_(0) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of(const FieldSpec& f, long value);
    static Scalar of(const FieldSpec& f, long num, long den);
    static Scalar from_rational(mpq_class q);
    static Scalar from_residue(const FieldSpec& f, std::uint64_t r);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Numerator/denominator view; only valid over Q.
    const mpq_class& rational() const;
    /// Residue view; only valid over F_p.
    std::uint64_t residue() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    /// "n/d" in lowest terms with the sign on the numerator over Q, bare residue over F_p.
    std::string render() const;
    /// Strict inverse of render(); throws parse_error on anything else.
    static Scalar parse(const FieldSpec& f, const std::string& text);

private:
    Scalar(const FieldSpec& f, mpq_class q, std::uint64_t r)
        : field_(f), rat_(std::move(q)), res_(r) {}

    FieldSpec field_;
    mpq_class rat_;      // valid iff rational
    std::uint64_t res_;  // valid iff prime
};

/// Total order used wherever a deterministic choice among scalars is needed:
/// residue order over F_p; (height, numeric value) over Q, where
/// height = max(|numerator|, denominator).
bool canonical_less(const Scalar& x, const Scalar& y);
bool canonical_less(const std::vector<Scalar>& x, const std::vector<Scalar>& y);

/// A square root in the field, if one exists. Deterministic choice: the
/// nonnegative root over Q, the smaller residue over F_p. Over F_p requires
/// p <= kPrimeSqrtLimit.
std::optional<Scalar> is_square(const Scalar& x);

/// Canonical representative of x modulo nonzero squares: 0 -> 0; over F_p a
/// square -> 1, a non-square -> the least positive non-residue; over Q the
/// signed squarefree integer part.
Scalar canonical_square_class(const Scalar& x);
/// Canonical representative of x modulo nonzero cubes (Q only); the scaling
/// witness s with s^3 * x = result is unique.
Scalar canonical_cube_class_q(const Scalar& x);

/// Result of solving a*t^2 + b*t + c = 0 over the coefficients' field.
struct QuadraticRoots {
    bool identically_zero = false;  // a = b = c = 0: every t is a root
    std::vector<Scalar> roots;      // sorted by canonical_less, duplicates collapsed
};

QuadraticRoots solve_quadratic(const Scalar& a, const Scalar& b, const Scalar& c);

namespace detail {
bool is_prime_u64(std::uint64_t n);
/// Prime factorization via trial division and Pollard rho.
std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n);
mpz_class squarefree_part(const mpz_class& n);
}  // namespace detail

}  // namespace alg2
