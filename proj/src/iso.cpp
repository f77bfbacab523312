#include "alg2/iso.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace alg2 {

std::string InvariantFingerprint::render() const {
    std::string s;
    s += commutative ? "comm " : "noncomm ";
    s += anticommutative ? "anticomm " : "";
    s += associative ? "assoc " : "nonassoc ";
    s += unital ? "unital " : "";
    s += "im" + std::to_string(image_dim) + " ";
    if (skew_trivial) s += *skew_trivial ? "skew0 " : "skew+ ";
    switch (profile_kind) {
        case ProfileKind::count: s += "idem" + std::to_string(idempotent_count); break;
        case ProfileKind::line: s += "idemline"; break;
        case ProfileKind::plane: s += "idemplane"; break;
    }
    s += " sq" + std::to_string(square_map_rank);
    return s;
}

InvariantFingerprint fingerprint(const Algebra& A) {
    InvariantFingerprint fp;
    StructuralPredicates sp = structural_predicates(A);
    fp.commutative = sp.commutative;
    fp.anticommutative = sp.anticommutative;
    fp.associative = sp.associative;
    fp.unital = sp.unital;
    fp.image_dim = sp.image_dim;
    if (A.field().characteristic() != 2) fp.skew_trivial = skew_part(A).is_zero_algebra();
    IdempotentSet idem = idempotents(A);
    if (idem.is_finite()) {
        fp.profile_kind = InvariantFingerprint::ProfileKind::count;
        fp.idempotent_count = static_cast<int>(idem.points().size());
    } else if (idem.is_line()) {
        fp.profile_kind = InvariantFingerprint::ProfileKind::line;
    } else {
        fp.profile_kind = InvariantFingerprint::ProfileKind::plane;
    }
    // Polarization: the squares span the same space as e1^2, e2^2, (e1+e2)^2.
    Vector2 s1 = A.product(1, 1);
    Vector2 s2 = A.product(2, 2);
    Vector2 cross = A.product(1, 2) + A.product(2, 1);
    std::vector<Vector2> gens{s1, s2, s1 + s2 + cross};
    std::erase_if(gens, [](const Vector2& v) { return v.is_zero(); });
    int rank = 0;
    if (!gens.empty()) {
        rank = 1;
        for (std::size_t i = 1; i < gens.size(); ++i)
            if (!det2(gens[0], gens[i]).is_zero()) rank = 2;
    }
    fp.square_map_rank = rank;
    return fp;
}

namespace {

void require_small_finite(const FieldSpec& f, std::uint64_t max_q, const char* what) {
    if (!f.is_prime())
        throw unsupported_field_error(std::string(what) + ": unsupported field for brute force");
    if (f.p() > max_q)
        throw unsupported_field_error(std::string(what) + ": field F" + std::to_string(f.p()) +
                                      " above the brute-force bound");
}

}  // namespace

std::optional<IsoWitness> isomorphic_bruteforce(const Algebra& A, const Algebra& B,
                                                std::uint64_t max_q) {
    if (!(A.field() == B.field())) throw field_mismatch_error("brute force: mixed fields");
    require_small_finite(A.field(), max_q, "isomorphic_bruteforce");
    const FieldSpec& f = A.field();
    std::uint64_t p = f.p();
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b)
            for (std::uint64_t c = 0; c < p; ++c)
                for (std::uint64_t d = 0; d < p; ++d) {
                    if ((a * d % p + p - b * c % p) % p == 0) continue;
                    BasisChange M(Scalar::from_residue(f, a), Scalar::from_residue(f, b),
                                  Scalar::from_residue(f, c), Scalar::from_residue(f, d));
                    if (transform(A, M) == B) return IsoWitness{M};
                }
    return std::nullopt;
}

std::uint64_t table_index(const Algebra& A) {
    std::uint64_t p = A.field().p();
    std::uint64_t idx = 0;
    for (const Scalar& s : A.constants()) idx = idx * p + s.residue();
    return idx;
}

Algebra table_from_index(const FieldSpec& f, std::uint64_t index) {
    std::uint64_t p = f.p();
    std::array<Scalar, 8> c{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
                            Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    for (int i = 7; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = Scalar::from_residue(f, index % p);
        index /= p;
    }
    return Algebra(f, c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]);
}

namespace {

/// transform() is linear in the structure constants; per matrix we tabulate
/// the induced 8x8 map over F_p once and then act on digit vectors.
struct LinearAction {
    std::uint64_t p;
    std::vector<std::array<std::uint8_t, 64>> maps;  // row-major 8x8 per matrix

    std::uint64_t apply(std::size_t m, const std::array<std::uint8_t, 8>& digits) const {
        const auto& map = maps[m];
        std::uint64_t idx = 0;
        for (int r = 0; r < 8; ++r) {
            std::uint64_t acc = 0;
            for (int c = 0; c < 8; ++c)
                acc += static_cast<std::uint64_t>(map[static_cast<std::size_t>(8 * r + c)]) *
                       digits[static_cast<std::size_t>(c)];
            idx = idx * p + acc % p;
        }
        return idx;
    }
};

LinearAction build_action(const FieldSpec& f) {
    LinearAction act;
    std::uint64_t p = f.p();
    act.p = p;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b)
            for (std::uint64_t c = 0; c < p; ++c)
                for (std::uint64_t d = 0; d < p; ++d) {
                    if ((a * d % p + p - b * c % p) % p == 0) continue;
                    BasisChange M(Scalar::from_residue(f, a), Scalar::from_residue(f, b),
                                  Scalar::from_residue(f, c), Scalar::from_residue(f, d));
                    std::array<std::uint8_t, 64> lin{};
                    for (int col = 0; col < 8; ++col) {
                        std::uint64_t unit = 1;
                        for (int k = 0; k < 7 - col; ++k) unit *= p;
                        Algebra basis_table = table_from_index(f, unit);
                        Algebra img = transform(basis_table, M);
                        int row = 0;
                        for (const Scalar& s : img.constants()) {
                            lin[static_cast<std::size_t>(8 * row + col)] =
                                static_cast<std::uint8_t>(s.residue());
                            ++row;
                        }
                    }
                    act.maps.push_back(lin);
                }
    return act;
}

std::array<std::uint8_t, 8> digits_of(std::uint64_t idx, std::uint64_t p) {
    std::array<std::uint8_t, 8> d{};
    for (int i = 7; i >= 0; --i) {
        d[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(idx % p);
        idx /= p;
    }
    return d;
}

}  // namespace

OrbitPartition classify_exhaustive(const FieldSpec& field, bool expensive_ok, unsigned threads) {
    require_small_finite(field, 5, "classify_exhaustive");
    if (field.p() == 5 && !expensive_ok)
        throw bad_argument_error("classify_exhaustive over F5 requires the expensive flag");
    std::uint64_t p = field.p();
    std::uint64_t total = 1;
    for (int i = 0; i < 8; ++i) total *= p;
    LinearAction act = build_action(field);
    std::size_t group_order = act.maps.size();

    // A table seeds an orbit iff it is the orbit's lexicographic minimum:
    // abort the scan as soon as any group image is smaller.
    struct Found {
        std::uint64_t rep, size, stab;
    };
    auto scan_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<Found>& out) {
        std::vector<std::uint64_t> orbit;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            auto digits = digits_of(idx, p);
            orbit.clear();
            bool minimal = true;
            std::uint64_t stab = 0;
            for (std::size_t m = 0; m < group_order; ++m) {
                std::uint64_t img = act.apply(m, digits);
                if (img < idx) {
                    minimal = false;
                    break;
                }
                if (img == idx) ++stab;
                orbit.push_back(img);
            }
            if (!minimal) continue;
            std::sort(orbit.begin(), orbit.end());
            orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
            out.push_back({idx, orbit.size(), stab});
        }
    };

    std::vector<Found> found;
    if (p == 5) {
        unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::vector<Found>> parts(n);
        std::vector<std::thread> pool;
        std::uint64_t chunk = (total + n - 1) / n;
        for (unsigned t = 0; t < n; ++t) {
            std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
            pool.emplace_back([&, lo, hi, t]() { scan_range(lo, hi, parts[t]); });
        }
        for (auto& th : pool) th.join();
        for (auto& part : parts) found.insert(found.end(), part.begin(), part.end());
        std::sort(found.begin(), found.end(),
                  [](const Found& x, const Found& y) { return x.rep < y.rep; });
    } else {
        scan_range(0, total, found);
    }

    OrbitPartition out{field, {}, 0, {}, std::nullopt, {}};
    out.membership.assign(total, 0);
    std::map<std::uint64_t, std::uint64_t> hist;
    for (const Found& f2 : found) {
        Orbit orb;
        orb.min_constants = table_from_index(field, f2.rep).constants();
        orb.size = f2.size;
        orb.stabilizer_order = f2.stab;
        hist[f2.size]++;
        out.orbits.push_back(std::move(orb));
    }
    out.class_count = out.orbits.size();
    for (auto [k, v] : hist) out.size_histogram.emplace_back(k, v);

    // Membership table: expand each orbit once more from its representative.
    for (std::uint32_t oi = 0; oi < out.orbits.size(); ++oi) {
        std::uint64_t rep = 0;
        for (const Scalar& s : out.orbits[oi].min_constants) rep = rep * p + s.residue();
        auto digits = digits_of(rep, p);
        for (std::size_t m = 0; m < group_order; ++m)
            out.membership[act.apply(m, digits)] = oi;
    }

    // Burnside recount: class count = average number of fixed tables.
    if (p <= 3) {
        std::uint64_t fix_total = 0;
        for (std::size_t m = 0; m < group_order; ++m) {
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                if (act.apply(m, digits_of(idx, p)) == idx) ++fix_total;
            }
        }
        out.burnside_class_count = fix_total / group_order;
    }
    return out;
}

std::string orbit_report_text(const OrbitPartition& p) {
    std::string out;
    for (const Orbit& orb : p.orbits) {
        out += "min=";
        for (std::size_t i = 0; i < 8; ++i) {
            if (i) out += ",";
            out += orb.min_constants[i].render();
        }
        out += " size=" + std::to_string(orb.size);
        out += " stabilizer=" + std::to_string(orb.stabilizer_order);
        out += "\n";
    }
    return out;
}

}  // namespace alg2
