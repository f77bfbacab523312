#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alg2/algebra.hpp"

namespace alg2 {

/// Cheap isomorphism invariants; equal for isomorphic algebras.
struct InvariantFingerprint {
    bool commutative = false;
    bool anticommutative = false;
    bool associative = false;
    bool unital = false;
    int image_dim = 0;
    std::optional<bool> skew_trivial;  // mu_a = 0; absent in characteristic 2
    enum class ProfileKind { count, line, plane } profile_kind = ProfileKind::count;
    int idempotent_count = 0;  // meaningful for profile_kind == count
    int square_map_rank = 0;   // dim span{mu(v,v)}

    friend bool operator==(const InvariantFingerprint&, const InvariantFingerprint&) = default;
    std::string render() const;
};

InvariantFingerprint fingerprint(const Algebra& A);

/// A basis change with transform(A, matrix) = B exactly.
struct IsoWitness {
    BasisChange matrix;
};

/// Scans all invertible matrices over F_q in lexicographic (a,b,c,d) order and
/// returns the first witness. Only fields with q <= max_q are accepted.
std::optional<IsoWitness> isomorphic_bruteforce(const Algebra& A, const Algebra& B,
                                                std::uint64_t max_q = 5);

struct Orbit {
    std::array<Scalar, 8> min_constants;  // lexicographically minimal member
    std::uint64_t size = 0;
    std::uint64_t stabilizer_order = 0;
};

struct OrbitPartition {
    FieldSpec field;
    std::vector<Orbit> orbits;  // sorted by minimal member
    std::uint64_t class_count = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> size_histogram;
    /// Independent Burnside recount; computed for q <= 3 only.
    std::optional<std::uint64_t> burnside_class_count;

    /// Orbit index of a given table; the partition retains a full index.
    std::uint32_t orbit_of(std::uint64_t table_index) const {
        return membership[table_index];
    }
    std::vector<std::uint32_t> membership;  // table index -> orbit position
};

/// Full orbit partition of all q^8 tables under GL(2, F_q). q in {2, 3} runs
/// unconditionally; q = 5 must be enabled with expensive_ok. Larger fields are
/// rejected. threads = 0 picks the hardware concurrency for q = 5.
OrbitPartition classify_exhaustive(const FieldSpec& field, bool expensive_ok = false,
                                   unsigned threads = 0);

/// Table index encoding: base-q digits in constants() order, most significant
/// first.
std::uint64_t table_index(const Algebra& A);
Algebra table_from_index(const FieldSpec& f, std::uint64_t index);

/// Line-oriented report, one orbit per line:
///   min=<8 scalars> size=<n> stabilizer=<m>
std::string orbit_report_text(const OrbitPartition& p);

}  // namespace alg2
