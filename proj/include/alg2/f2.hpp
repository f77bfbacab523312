#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "alg2/algebra.hpp"

namespace alg2::f2 {

/// R-codes name the possible products over F_2: 0, e1, e2, e3 = e1 + e2.
enum class Rcode : std::uint8_t { R0 = 0, R1 = 1, R2 = 2, R3 = 3 };

/// R_i + R_i = 0, R_i + R_j = R_k for {i,j,k} = {1,2,3}; R0 is neutral.
Rcode rcode_add(Rcode x, Rcode y);
std::string rcode_render(Rcode r);

/// Multiplication table over F_2 keyed by the first four products
/// (e1e1, e1e2, e2e1, e2e2); bijective with the 256 algebras.
using Seq4 = std::array<Rcode, 4>;
/// Products on all pairs from {e1, e2, e3}, in the order
/// (e1e1, e1e2, e2e1, e2e2, e1e3, e2e3, e3e1, e3e2, e3e3).
using Seq9 = std::array<Rcode, 9>;

Seq9 extend(const Seq4& s);

Seq4 seq_of_algebra(const Algebra& A);
Algebra algebra_of_seq(const Seq4& s);

std::uint8_t seq_index(const Seq4& s);  // base-4 digits, lexicographic
Seq4 seq_from_index(std::uint8_t idx);
std::string seq_render(const Seq4& s);

/// The six permutations of {e1, e2, e3}; c is the 3-cycle 1 -> 2 -> 3 -> 1.
enum class Perm : std::uint8_t { Id = 0, T12, T13, T23, C, C2 };

int perm_apply(Perm p, int i);       // image of i in {1,2,3}
Perm perm_compose(Perm p, Perm q);   // (p o q)(i) = p(q(i))
Perm perm_inverse(Perm p);
std::string perm_render(Perm p);
const std::array<Perm, 6>& all_perms();

/// The basis-change matrix over F_2 that corresponds to each permutation.
BasisChange matrix_for_perm(Perm p);

/// Relabeling action on multiplication tables; coincides with converting to
/// an algebra, transforming by matrix_for_perm, and re-encoding.
Seq4 perm_act(Perm p, const Seq4& s);

/// Subgroup labels G1..G6 of the permutation group, as in the classical
/// listing: G1 trivial, G2..G4 generated by one transposition, G5 the
/// 3-cycles, G6 everything.
std::string isotropy_label(const std::vector<Perm>& elements);

struct OrbitRecord {
    Seq4 representative;        // lexicographic minimum, R0 < R1 < R2 < R3
    std::vector<Seq4> members;  // sorted
    std::vector<Perm> isotropy;
    std::string isotropy_name;
};

struct OrbitSummary {
    std::vector<OrbitRecord> orbits;
    int class_count = 0;
    std::vector<std::pair<int, int>> histogram;     // (orbit size, count)
    std::array<int, 6> burnside_fixed_points{};     // |Fix(g)| per group element
    bool burnside_balanced = false;
};

OrbitSummary enumerate_orbits();

}  // namespace alg2::f2
