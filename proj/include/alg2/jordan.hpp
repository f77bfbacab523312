#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alg2/algebra.hpp"

namespace alg2 {

/// Coefficients of a polynomial map K^2 x K^2 -> K^2, homogeneous of degree 3
/// in v = (x1, x2) and degree 1 in w = (y1, y2). Monomials are ordered
/// x1^3 y1, x1^3 y2, x1^2 x2 y1, ..., x2^3 y2 within each output coordinate.
struct BiPolynomial {
    // coeff[out][k][j]: out in {0,1}, k = power of x2 (power of x1 = 3 - k),
    // j = 0 for y1, 1 for y2.
    std::array<std::array<std::array<Scalar, 2>, 4>, 2> coeff;

    friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;
};

struct JordanDefect {
    std::string monomial;  // e.g. "x1^2*x2*y1"
    int output_coordinate; // 1 or 2
    Scalar lhs, rhs;
};

struct JordanVerdict {
    bool commutative = false;
    bool jordan = false;
    std::optional<JordanDefect> defect;  // first differing coefficient
    std::optional<BiPolynomial> lhs, rhs;
};

/// Exact verdict on the Jordan identity (vw)v^2 = v(wv^2): commutativity plus
/// coefficient-wise equality of both sides expanded as BiPolynomials.
/// Characteristic 2 rejected.
JordanVerdict jordan_symbolic(const Algebra& A);
bool is_jordan_symbolic(const Algebra& A);

/// The identity evaluated on every pair of vectors of a prime field.
bool is_jordan_pointwise(const Algebra& A);

struct CatalogCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CatalogReport {
    std::vector<CatalogCheck> checks;
    bool all_passed = true;
};

/// Reproduces the dimension-2 Jordan catalog: J1..J6 pass, the cited
/// counterexamples fail, the idempotent-pair lemma and the associativity
/// proposition hold. Discrepancies are reported, never silently patched.
CatalogReport jordan_catalog_check(int lemma_trials = 1000);

/// J1..J6 over the rationals.
Algebra jordan_catalog_algebra(int k);

/// Constant-wise reduction mod p; absent when a denominator vanishes mod p.
std::optional<Algebra> reduce_mod_p(const Algebra& A, std::uint64_t p);

nlohmann::json jordan_report_json(const Algebra& A);

}  // namespace alg2
