#include "alg2/f2.hpp"

#include <algorithm>
#include <map>

namespace alg2::f2 {

Rcode rcode_add(Rcode x, Rcode y) {
    return static_cast<Rcode>(static_cast<std::uint8_t>(x) ^ static_cast<std::uint8_t>(y));
}

std::string rcode_render(Rcode r) {
    switch (r) {
        case Rcode::R0: return "0";
        case Rcode::R1: return "R1";
        case Rcode::R2: return "R2";
        case Rcode::R3: return "R3";
    }
    return "?";
}

Seq9 extend(const Seq4& s) {
    auto [i, j, k, l] = s;
    return {i,
            j,
            k,
            l,
            rcode_add(i, j),
            rcode_add(k, l),
            rcode_add(i, k),
            rcode_add(j, l),
            rcode_add(rcode_add(i, j), rcode_add(k, l))};
}

namespace {

const FieldSpec& f2_field() {
    static const FieldSpec f = FieldSpec::prime(2);
    return f;
}

Vector2 rcode_vector(Rcode r) {
    const FieldSpec& f = f2_field();
    switch (r) {
        case Rcode::R0: return {Scalar::zero(f), Scalar::zero(f)};
        case Rcode::R1: return e1(f);
        case Rcode::R2: return e2(f);
        case Rcode::R3: return e1(f) + e2(f);
    }
    throw bad_argument_error("bad rcode");
}

Rcode vector_rcode(const Vector2& v) {
    std::uint8_t lo = static_cast<std::uint8_t>(v.x1.residue());
    std::uint8_t hi = static_cast<std::uint8_t>(v.x2.residue());
    return static_cast<Rcode>(lo | (hi << 1));
}

}  // namespace

Seq4 seq_of_algebra(const Algebra& A) {
    if (!(A.field() == f2_field())) throw field_mismatch_error("seq_of_algebra needs F2");
    return {vector_rcode(A.product(1, 1)), vector_rcode(A.product(1, 2)),
            vector_rcode(A.product(2, 1)), vector_rcode(A.product(2, 2))};
}

Algebra algebra_of_seq(const Seq4& s) {
    return Algebra::from_products(f2_field(), rcode_vector(s[0]), rcode_vector(s[1]),
                                  rcode_vector(s[2]), rcode_vector(s[3]));
}

std::uint8_t seq_index(const Seq4& s) {
    return static_cast<std::uint8_t>(
        (static_cast<unsigned>(s[0]) << 6) | (static_cast<unsigned>(s[1]) << 4) |
        (static_cast<unsigned>(s[2]) << 2) | static_cast<unsigned>(s[3]));
}

Seq4 seq_from_index(std::uint8_t idx) {
    return {static_cast<Rcode>((idx >> 6) & 3), static_cast<Rcode>((idx >> 4) & 3),
            static_cast<Rcode>((idx >> 2) & 3), static_cast<Rcode>(idx & 3)};
}

std::string seq_render(const Seq4& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) out += ",";
        out += rcode_render(s[i]);
    }
    return out + ")";
}

namespace {

// Permutations as images of (1, 2, 3).
constexpr std::array<std::array<int, 3>, 6> kPermImages = {{
    {1, 2, 3},  // Id
    {2, 1, 3},  // T12
    {3, 2, 1},  // T13
    {1, 3, 2},  // T23
    {2, 3, 1},  // C:  1->2, 2->3, 3->1
    {3, 1, 2},  // C2
}};

}  // namespace

int perm_apply(Perm p, int i) { return kPermImages[static_cast<std::size_t>(p)][i - 1]; }

Perm perm_compose(Perm p, Perm q) {
    std::array<int, 3> img{};
    for (int i = 1; i <= 3; ++i) img[i - 1] = perm_apply(p, perm_apply(q, i));
    for (std::size_t k = 0; k < 6; ++k)
        if (kPermImages[k] == img) return static_cast<Perm>(k);
    throw error("permutation composition table corrupted");
}

Perm perm_inverse(Perm p) {
    for (Perm q : all_perms())
        if (perm_compose(p, q) == Perm::Id) return q;
    throw error("permutation inverse not found");
}

std::string perm_render(Perm p) {
    switch (p) {
        case Perm::Id: return "Id";
        case Perm::T12: return "t12";
        case Perm::T13: return "t13";
        case Perm::T23: return "t23";
        case Perm::C: return "c";
        case Perm::C2: return "c2";
    }
    return "?";
}

const std::array<Perm, 6>& all_perms() {
    static const std::array<Perm, 6> all = {Perm::Id,  Perm::T12, Perm::T13,
                                            Perm::T23, Perm::C,   Perm::C2};
    return all;
}

BasisChange matrix_for_perm(Perm p) {
    const FieldSpec& f = f2_field();
    Scalar z = Scalar::zero(f), o = Scalar::one(f);
    switch (p) {
        case Perm::Id: return BasisChange(o, z, z, o);   // M1
        case Perm::T12: return BasisChange(z, o, o, z);  // M2
        case Perm::T13: return BasisChange(o, z, o, o);  // M3
        case Perm::T23: return BasisChange(o, o, z, o);  // M4
        case Perm::C: return BasisChange(z, o, o, o);    // M5
        case Perm::C2: return BasisChange(o, o, o, z);   // M6
    }
    throw bad_argument_error("bad permutation");
}

Seq4 perm_act(Perm p, const Seq4& s) {
    Seq9 ext = extend(s);
    // Position of the pair (i, j), i, j in {1..3}, inside a Seq9.
    auto pos = [](int i, int j) -> std::size_t {
        static constexpr int table[3][3] = {{0, 1, 4}, {2, 3, 5}, {6, 7, 8}};
        return static_cast<std::size_t>(table[i - 1][j - 1]);
    };
    Perm inv = perm_inverse(p);
    auto relabel = [&](Rcode r) {
        if (r == Rcode::R0) return r;
        return static_cast<Rcode>(perm_apply(inv, static_cast<int>(r)));
    };
    Seq4 out;
    static constexpr std::pair<int, int> kPairs[4] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    for (std::size_t m = 0; m < 4; ++m) {
        auto [i, j] = kPairs[m];
        out[m] = relabel(ext[pos(perm_apply(p, i), perm_apply(p, j))]);
    }
    return out;
}

std::string isotropy_label(const std::vector<Perm>& elements) {
    auto has = [&](Perm p) {
        return std::find(elements.begin(), elements.end(), p) != elements.end();
    };
    switch (elements.size()) {
        case 1: return "G1";
        case 2:
            if (has(Perm::T12)) return "G2";
            if (has(Perm::T13)) return "G3";
            return "G4";
        case 3: return "G5";
        case 6: return "G6";
        default: throw error("impossible isotropy order " + std::to_string(elements.size()));
    }
}

OrbitSummary enumerate_orbits() {
    OrbitSummary out;
    std::array<bool, 256> seen{};
    for (Perm g : all_perms()) {
        int fixed = 0;
        for (int idx = 0; idx < 256; ++idx) {
            Seq4 s = seq_from_index(static_cast<std::uint8_t>(idx));
            if (perm_act(g, s) == s) ++fixed;
        }
        out.burnside_fixed_points[static_cast<std::size_t>(g)] = fixed;
    }
    std::map<int, int> hist;
    for (int idx = 0; idx < 256; ++idx) {
        if (seen[static_cast<std::size_t>(idx)]) continue;
        Seq4 s = seq_from_index(static_cast<std::uint8_t>(idx));
        OrbitRecord rec;
        for (Perm g : all_perms()) {
            Seq4 t = perm_act(g, s);
            if (t == s) rec.isotropy.push_back(g);
            if (!seen[seq_index(t)]) {
                seen[seq_index(t)] = true;
                rec.members.push_back(t);
            }
        }
        std::sort(rec.members.begin(), rec.members.end());
        rec.representative = rec.members.front();
        rec.isotropy_name = isotropy_label(rec.isotropy);
        hist[static_cast<int>(rec.members.size())]++;
        out.orbits.push_back(std::move(rec));
    }
    std::sort(out.orbits.begin(), out.orbits.end(),
              [](const OrbitRecord& a, const OrbitRecord& b) {
                  return a.representative < b.representative;
              });
    out.class_count = static_cast<int>(out.orbits.size());
    for (auto [size, count] : hist) out.histogram.emplace_back(size, count);
    int fix_sum = 0;
    for (int v : out.burnside_fixed_points) fix_sum += v;
    out.burnside_balanced = (fix_sum == 6 * out.class_count);
    return out;
}

}  // namespace alg2::f2
