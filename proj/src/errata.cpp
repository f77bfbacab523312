#include "alg2/errata.hpp"

namespace alg2 {

const std::vector<Erratum>& errata() {
    static const std::vector<Erratum> entries = {
        {"basis-change-final-component",
         "the displayed change-of-basis system labels its eighth component beta'_1, so beta'_4 "
         "never appears",
         "the eighth formula computes beta'_4; the direct evaluation mu' = f^-1 o mu o (f x f) "
         "matches the seven correctly labeled components and fixes the eighth"},
        {"f2-size-6-isotropy",
         "the reference text says orbits with 6 elements have isotropy subgroup Sigma_3",
         "an orbit of size 6 has trivial isotropy G1; size x isotropy order = 6 for every orbit"},
        {"f2-s6-orbit-member",
         "the s6 orbit row lists the malformed member \"(0,R2,R2),0)\"",
         "the computed orbit of s6 = (0,R3,R3,0) is {(0,R1,R1,0), (0,R2,R2,0), (0,R3,R3,0)}"},
        {"f2-s10-orbit-member",
         "the s10 orbit row lists the member (R3,R3,R3,R1)",
         "the computed orbit of s10 = (R2,0,0,R1) is {(R1,R3,R3,R3), (R2,0,0,R1), "
         "(R3,R3,R3,R2)}; both the relabeling route and the matrix route agree"},
        {"f2-s15-orbit-member",
         "the s15 orbit row lists the member (R2,R3,R1,R3)",
         "the computed orbit of s15 = (R3,R1,R2,R3) is {(R1,R2,R3,R1), (R2,R3,R1,R2), "
         "(R3,R1,R2,R3)}; both the relabeling route and the matrix route agree"},
        {"one-idempotent-quadratic-condition",
         "the family with a single idempotent, cross product e1 + beta2*e2 and square "
         "alpha4*e1 is stated for alpha4*(1 - 2*beta2) <= 1",
         "no second idempotent exists exactly when 4*alpha4*beta2^2*b^2 + 4*beta2*b + 1 - "
         "2*beta2 = 0 has no root; over the reals that is alpha4*(1 - 2*beta2) > 1, the "
         "opposite direction, so the toolkit decides membership by root non-existence"},
        {"mu16-display-label",
         "the mu16 table displays its symmetric cross entry as mu14(e2,e1)",
         "the entry belongs to mu16; the family reads e1e1 = e1, e1e2 = e2e1 = beta2*e2, "
         "e2e2 = 0 with beta2 != 1/2"},
        {"mu18K-side-condition-wording",
         "the side condition for the no-idempotent family over a non-closed field reads \"we "
         "alpha2 = 0 or alpha2 != 0 and alpha2*a^2 + beta2*a - 1 has no solutions\"",
         "the sentence is garbled; the defining property is that no nonzero vector is "
         "idempotent, which the toolkit tests directly"},
        {"mu12-family-overlap",
         "mu12 (e1e1 = e1, e1e2 = e2e1 = e1, e2e2 = alpha4*e1) is listed as a family of its "
         "own and declared never to be a Jordan product",
         "the basis change e2 -> e2 - e1 maps mu12(alpha4) onto the cross-free algebra with "
         "e2e2 = (alpha4 - 1)*e1; hence mu12(alpha4) is isomorphic to mu14(alpha4 - 1) for "
         "alpha4 != 1 and mu12(1) is isomorphic to the Jordan algebra with e1e1 = e1 and all "
         "other products zero"},
    };
    return entries;
}

nlohmann::json errata_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const Erratum& e : errata())
        arr.push_back({{"id", e.id}, {"claim", e.claim}, {"computed", e.computed}});
    return arr;
}

}  // namespace alg2
