#include "alg2/fields.hpp"

#include <algorithm>
#include <cstdlib>

namespace alg2 {

namespace detail {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for 64-bit inputs with this base set.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xa1927ULL);
    while (true) {
        mpz_class x = rng.get_z_range(n - 2) + 2;
        mpz_class y = x;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const mpz_class& n, std::vector<std::pair<mpz_class, unsigned>>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) > 0) {
        for (auto& [p, e] : out) {
            if (p == n) {
                ++e;
                return;
            }
        }
        out.emplace_back(n, 1);
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n) {
    if (n <= 0) throw bad_argument_error("factor: argument must be positive");
    std::vector<std::pair<mpz_class, unsigned>> out;
    mpz_class m = n;
    for (std::uint64_t p = 2; p <= 100000 && mpz_class(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) m /= p, ++e;
            out.emplace_back(p, e);
        }
    }
    if (m > 1) factor_into(m, out);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

mpz_class squarefree_part(const mpz_class& n) {
    if (n == 0) return 0;
    mpz_class r = 1;
    for (const auto& [p, e] : factor(abs(n))) {
        if (e % 2) r *= p;
    }
    return n < 0 ? -r : r;
}

}  // namespace detail

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!detail::is_prime_u64(p))
        throw bad_argument_error("field F" + std::to_string(p) + ": modulus is not prime");
    if (p >= (1ull << 31))
        throw bad_argument_error("field F" + std::to_string(p) + ": modulus too large");
    return FieldSpec(Kind::prime, p);
}

std::string FieldSpec::render() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(const FieldSpec& f) {
    return f.is_rational() ? Scalar(f, mpq_class(1), 0) : Scalar(f, mpq_class(0), 1 % f.p());
}

Scalar Scalar::of(const FieldSpec& f, long value) {
    if (f.is_rational()) return Scalar(f, mpq_class(value), 0);
    long m = static_cast<long>(f.p());
    long r = value % m;
    if (r < 0) r += m;
    return Scalar(f, mpq_class(0), static_cast<std::uint64_t>(r));
}

Scalar Scalar::of(const FieldSpec& f, long num, long den) {
    if (den == 0) throw division_by_zero_error("scalar with zero denominator");
    if (f.is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(f, q, 0);
    }
    return of(f, num) / of(f, den);
}

Scalar Scalar::from_rational(mpq_class q) {
    q.canonicalize();
    return Scalar(FieldSpec::rational(), std::move(q), 0);
}

Scalar Scalar::from_residue(const FieldSpec& f, std::uint64_t r) {
    if (!f.is_prime()) throw field_mismatch_error("residue scalar requires a prime field");
    return Scalar(f, mpq_class(0), r % f.p());
}

bool Scalar::is_zero() const { return field_.is_rational() ? rat_ == 0 : res_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? rat_ == 1 : res_ == 1 % field_.p(); }

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw field_mismatch_error("rational() on a prime-field scalar");
    return rat_;
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime()) throw field_mismatch_error("residue() on a rational scalar");
    return res_;
}

namespace {

void require_same_field(const Scalar& x, const Scalar& y) {
    if (!(x.field() == y.field()))
        throw field_mismatch_error("scalars from different fields: " + x.field().render() +
                                   " vs " + y.field().render());
}

}  // namespace

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, mpq_class(-rat_), 0);
    return Scalar(field_, mpq_class(0), res_ == 0 ? 0 : field_.p() - res_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero_error("inverse of zero in " + field_.render());
    if (field_.is_rational()) return Scalar(field_, mpq_class(1) / rat_, 0);
    // Fermat: r^(p-2) mod p.
    std::uint64_t p = field_.p();
    std::uint64_t r = 1, b = res_, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
        b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
        e >>= 1;
    }
    return Scalar(field_, mpq_class(0), r);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    require_same_field(x, y);
    if (x.field_.is_rational()) return Scalar(x.field_, mpq_class(x.rat_ + y.rat_), 0);
    return Scalar(x.field_, mpq_class(0), (x.res_ + y.res_) % x.field_.p());
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
    require_same_field(x, y);
    if (x.field_.is_rational()) return Scalar(x.field_, mpq_class(x.rat_ * y.rat_), 0);
    std::uint64_t p = x.field_.p();
    return Scalar(x.field_, mpq_class(0),
                  static_cast<std::uint64_t>((static_cast<unsigned __int128>(x.res_) * y.res_) % p));
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
    if (!(x.field_ == y.field_)) return false;
    return x.field_.is_rational() ? x.rat_ == y.rat_ : x.res_ == y.res_;
}

std::string Scalar::render() const {
    if (field_.is_prime()) return std::to_string(res_);
    std::string s = rat_.get_num().get_str();
    if (rat_.get_den() != 1) s += "/" + rat_.get_den().get_str();
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    auto fail = [&]() -> Scalar {
        throw parse_error("invalid scalar \"" + text + "\" for field " + f.render());
    };
    if (text.empty()) return fail();
    if (f.is_prime()) {
        if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
            return fail();
        if (text.size() > 1 && text[0] == '0') return fail();
        mpz_class v(text);
        if (v >= static_cast<long>(f.p())) return fail();
        return from_residue(f, v.get_ui());
    }
    auto is_canonical_int = [](const std::string& s) {
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        if (!std::all_of(s.begin() + i, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            return false;
        if (s.size() - i > 1 && s[i] == '0') return false;
        if (s[0] == '-' && s == "-0") return false;
        return true;
    };
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_canonical_int(text)) return fail();
        return from_rational(mpq_class(mpz_class(text)));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_canonical_int(num) || !is_canonical_int(den) || den[0] == '-') return fail();
    mpz_class n(num), d(den);
    if (d <= 1) return fail();  // "x/1" and "x/0" are not canonical
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) return fail();
    mpq_class q(n, d);
    q.canonicalize();
    return from_rational(q);
}

bool canonical_less(const Scalar& x, const Scalar& y) {
    require_same_field(x, y);
    if (x.field().is_prime()) return x.residue() < y.residue();
    const mpq_class &a = x.rational(), &b = y.rational();
    mpz_class ha = std::max(mpz_class(abs(a.get_num())), a.get_den());
    mpz_class hb = std::max(mpz_class(abs(b.get_num())), b.get_den());
    if (ha != hb) return ha < hb;
    return a < b;
}

bool canonical_less(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (canonical_less(x[i], y[i])) return true;
        if (canonical_less(y[i], x[i])) return false;
    }
    return x.size() < y.size();
}

std::optional<Scalar> is_square(const Scalar& x) {
    if (x.is_zero()) return Scalar::zero(x.field());
    if (x.field().is_prime()) {
        std::uint64_t p = x.field().p();
        if (p > kPrimeSqrtLimit)
            throw unsupported_field_error("square root search unsupported for p > " +
                                          std::to_string(kPrimeSqrtLimit));
        for (std::uint64_t r = 0; r <= p / 2; ++r) {
            if ((r * r) % p == x.residue()) return Scalar::from_residue(x.field(), r);
        }
        return std::nullopt;
    }
    const mpq_class& q = x.rational();
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Scalar::from_rational(mpq_class(rn, rd));
    }
    return std::nullopt;
}

Scalar canonical_square_class(const Scalar& x) {
    if (x.is_zero()) return x;
    if (x.field().is_prime()) {
        if (is_square(x)) return Scalar::one(x.field());
        for (std::uint64_t n = 2; n < x.field().p(); ++n) {
            Scalar cand = Scalar::from_residue(x.field(), n);
            if (!is_square(cand)) return cand;
        }
        throw error("no non-residue found");  // unreachable for p > 2
    }
    const mpq_class& q = x.rational();
    return Scalar::from_rational(mpq_class(detail::squarefree_part(q.get_num() * q.get_den())));
}

Scalar canonical_cube_class_q(const Scalar& x) {
    if (!x.field().is_rational())
        throw field_mismatch_error("cube-class normalization is Q-only");
    if (x.is_zero()) return x;
    const mpq_class& q = x.rational();
    mpz_class m = q.get_num() * q.get_den() * q.get_den();
    // -1 is a cube, so the representative is always positive.
    mpz_class r = 1;
    for (const auto& [p, e] : detail::factor(abs(m))) {
        for (unsigned i = 0; i < e % 3; ++i) r *= p;
    }
    return Scalar::from_rational(mpq_class(r));
}

QuadraticRoots solve_quadratic(const Scalar& a, const Scalar& b, const Scalar& c) {
    require_same_field(a, b);
    require_same_field(b, c);
    QuadraticRoots out;
    const FieldSpec& f = a.field();
    if (a.is_zero() && b.is_zero() && c.is_zero()) {
        out.identically_zero = true;
        return out;
    }
    if (a.is_zero()) {
        if (!b.is_zero()) out.roots.push_back(-c / b);
        return out;  // a = b = 0, c != 0: no roots
    }
    if (f.characteristic() == 2) {
        // Only F_2 exists here; scan both residues.
        for (std::uint64_t r = 0; r < 2; ++r) {
            Scalar t = Scalar::from_residue(f, r);
            if ((a * t * t + b * t + c).is_zero()) out.roots.push_back(t);
        }
    } else {
        Scalar two = Scalar::of(f, 2);
        Scalar disc = b * b - Scalar::of(f, 4) * a * c;
        if (auto r = is_square(disc)) {
            Scalar t1 = (-b + *r) / (two * a);
            Scalar t2 = (-b - *r) / (two * a);
            out.roots.push_back(t1);
            if (!(t2 == t1)) out.roots.push_back(t2);
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
    return out;
}

}  // namespace alg2
