#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "alg2/algebra.hpp"

namespace alg2 {

/// q(u,v) = b1*u^2 + 2*b2*uv + b4*v^2, the form attached to the e2-components
/// of the symmetric products once the skew part is normalized.
struct QuadraticForm {
    Scalar b1, b2, b4;

    /// Discriminant b2^2 - b1*b4; its square class is preserved by the
    /// automorphisms of the normalized skew part.
    Scalar discriminant() const { return b2 * b2 - b1 * b4; }
};

enum class Family {
    Zero,
    Mu1, Mu2, Mu3, Mu4, Mu5, Mu6, Mu7, Mu8, Mu9, Mu10,
    Mu11, Mu12, Mu13K, Mu14, Mu15, Mu15K, Mu16, Mu17, Mu18, Mu18K,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);
/// Parameter names of a family, in display order.
std::vector<std::string> family_param_names(Family f);

struct ClassLabel {
    Family family;
    FieldSpec field;
    std::vector<std::pair<std::string, Scalar>> params;
    std::string residual_note;

    friend bool operator==(const ClassLabel& x, const ClassLabel& y) {
        return x.family == y.family && x.field == y.field && x.params == y.params;
    }
    std::string render() const;
};

struct ReductionStep {
    std::string name;
    BasisChange matrix;
    Algebra after;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;

    /// Product of the step matrices in application order; transform(input,
    /// composed) equals the final representative exactly.
    BasisChange composed(const FieldSpec& f) const;
};

enum class SkewKind { skew_nontrivial, symmetric };

struct SkewReduction {
    Algebra reduced;
    BasisChange witness;
    SkewKind kind;
};

/// Normalizes a nontrivial skew part to mu_a(e1,e2) = e1; the identity on
/// commutative input. Characteristic 2 rejected.
SkewReduction reduce_skew(const Algebra& A);

struct GaussReduction {
    Algebra reduced;
    BasisChange witness;
};

/// Kills the cross term of the attached quadratic form with the upper
/// triangular matrix (1, -b2/b1 / 0, 1); requires beta1 != 0.
GaussReduction gauss_reduce(const Algebra& A);

struct Classification {
    ClassLabel label;
    ReductionTrace trace;
};

/// Full classification over Q or F_p with p odd. Deterministic label; the
/// composed trace witness maps the input onto representative(label) exactly.
Classification classify(const Algebra& A);

/// The family's displayed multiplication table for the given parameters;
/// parameters violating the family's side conditions are rejected.
Algebra representative(const ClassLabel& label);
Algebra representative(Family family, const FieldSpec& field, const std::vector<Scalar>& params);

nlohmann::json label_to_json(const ClassLabel& label);
nlohmann::json classification_to_json(const Classification& c);

}  // namespace alg2
