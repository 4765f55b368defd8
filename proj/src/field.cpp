#include "constakit/field.hpp"

#include <algorithm>
#include <numeric>

namespace constakit {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Modular inverse of a mod m for gcd(a, m) = 1.
std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m) {
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
    while (new_r != 0) {
        long long quot = r / new_r;
        std::swap(t -= quot * new_t, new_t);
        std::swap(r -= quot * new_r, new_r);
    }
    if (r != 1) fail(errc::bad_argument, "inverse does not exist");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<long long>(m) : t);
}

// --- dense Z_p[x] helpers used during construction (constant term first) ---

using ZpPoly = std::vector<std::uint32_t>;

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zp_deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
    }
    zp_trim(out);
    return out;
}

std::uint32_t zp_pow_scalar(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p, cur = base % p;
    while (e) {
        if (e & 1) acc = acc * cur % p;
        cur = cur * cur % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

ZpPoly zp_mod(ZpPoly a, const ZpPoly& f, std::uint64_t p) {
    zp_trim(a);
    std::uint32_t lead_inv = zp_pow_scalar(f.back(), p - 2, p);
    while (zp_deg(a) >= zp_deg(f)) {
        std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - f.size();
        for (std::size_t j = 0; j < f.size(); ++j) {
            std::uint64_t sub = c * f[j] % p;
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
        }
        zp_trim(a);
    }
    return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        a = zp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint32_t inv = zp_pow_scalar(a.back(), p - 2, p);
        for (auto& c : a) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
    }
    return a;
}

ZpPoly zp_powmod(const ZpPoly& base, std::uint64_t e, const ZpPoly& f, std::uint64_t p) {
    ZpPoly acc{1};
    ZpPoly cur = zp_mod(base, f, p);
    while (e) {
        if (e & 1) acc = zp_mod(zp_mul(acc, cur, p), f, p);
        cur = zp_mod(zp_mul(cur, cur, p), f, p);
        e >>= 1;
    }
    return acc;
}

ZpPoly zp_sub(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
    }
    zp_trim(a);
    return a;
}

// Rabin test: f of degree s is irreducible iff x^(p^s) = x mod f and
// gcd(x^(p^(s/t)) - x, f) = 1 for every prime t dividing s.
bool zp_is_irreducible(const ZpPoly& f, std::uint64_t p) {
    int s = zp_deg(f);
    if (s < 1) return false;
    if (s == 1) return true;
    const ZpPoly x{0, 1};
    for (std::uint64_t t : distinct_prime_factors(static_cast<std::uint64_t>(s))) {
        ZpPoly h = x;
        std::uint64_t reps = static_cast<std::uint64_t>(s) / t;
        for (std::uint64_t i = 0; i < reps; ++i) h = zp_powmod(h, p, f, p);
        ZpPoly g = zp_gcd(zp_sub(h, x, p), f, p);
        if (g != ZpPoly{1}) return false;
    }
    ZpPoly h = x;
    for (int i = 0; i < s; ++i) h = zp_powmod(h, p, f, p);
    return h == x;
}

}  // namespace

Field FieldSpec::make(std::uint64_t p, std::uint32_t s) { return build(p, s, nullptr); }

Field FieldSpec::make(std::uint64_t p, std::uint32_t s, const std::vector<std::uint32_t>& modulus) {
    return build(p, s, &modulus);
}

Field FieldSpec::build(std::uint64_t p, std::uint32_t s, const std::vector<std::uint32_t>* modulus) {
    if (p > max_field_size) fail(errc::field_too_large, "characteristic exceeds the size bound");
    if (!is_prime_u64(p)) fail(errc::composite_p, "p = " + std::to_string(p) + " is not prime");
    if (s < 1) fail(errc::bad_argument, "extension degree must be at least 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q > max_field_size) fail(errc::field_too_large, "p^s exceeds the size bound");
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->s_ = s;
    spec->q_ = q;

    if (modulus != nullptr) {
        if (modulus->size() != static_cast<std::size_t>(s) + 1) {
            fail(errc::bad_argument, "modulus must have degree s");
        }
        for (auto c : *modulus) {
            if (c >= p) fail(errc::bad_argument, "modulus coefficients must be reduced mod p");
        }
        if (modulus->back() != 1) fail(errc::bad_argument, "modulus must be monic");
        if (!zp_is_irreducible(*modulus, p)) {
            fail(errc::reducible_modulus, "modulus is not irreducible over F_p");
        }
        spec->modulus_ = *modulus;
    } else {
        // Tuple (a0, ..., a_{s-1}) taken in lexicographic order, a0 most
        // significant; first irreducible candidate wins.
        std::vector<std::uint32_t> cand(s + 1, 0);
        cand[s] = 1;
        bool found = false;
        for (std::uint64_t rank = 0; rank < q && !found; ++rank) {
            std::uint64_t rest = rank;
            for (std::uint32_t i = 0; i < s; ++i) {
                std::uint64_t weight = 1;
                for (std::uint32_t j = 0; j + i + 1 < s; ++j) weight *= p;
                cand[i] = static_cast<std::uint32_t>(rest / weight);
                rest %= weight;
            }
            if (zp_is_irreducible(cand, p)) found = true;
        }
        if (!found) fail(errc::bad_argument, "no irreducible modulus found");
        spec->modulus_ = cand;
    }

    // Bootstrap element arithmetic on digit vectors, used until tables exist.
    auto mul_elem = [&](const ZpPoly& a, const ZpPoly& b) {
        ZpPoly r = zp_mod(zp_mul(a, b, p), spec->modulus_, p);
        r.resize(s, 0);
        return r;
    };
    auto pow_elem = [&](ZpPoly base, std::uint64_t e) {
        ZpPoly acc(s, 0);
        acc[0] = 1;
        while (e) {
            if (e & 1) acc = mul_elem(acc, base);
            base = mul_elem(base, base);
            e >>= 1;
        }
        return acc;
    };
    auto encode = [&](const ZpPoly& d) {
        std::uint64_t v = 0;
        for (std::uint32_t i = s; i-- > 0;) v = v * p + (i < d.size() ? d[i] : 0);
        return static_cast<std::uint32_t>(v);
    };

    const ZpPoly one_digits = [&] {
        ZpPoly o(s, 0);
        o[0] = 1;
        return o;
    }();

    const auto q1_primes = distinct_prime_factors(q - 1);
    std::uint32_t gen_value = (q == 2) ? 1 : 0;
    for (std::uint64_t rank = 1; rank < q && gen_value == 0; ++rank) {
        std::uint32_t v = spec->value_from_rank(rank);
        ZpPoly d(s, 0);
        std::uint64_t rest = v;
        for (std::uint32_t i = 0; i < s; ++i) {
            d[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        bool primitive = true;
        for (std::uint64_t f : q1_primes) {
            if (pow_elem(d, (q - 1) / f) == one_digits) {
                primitive = false;
                break;
            }
        }
        if (primitive) gen_value = v;
    }
    spec->generator_ = gen_value;

    spec->exp_.assign(q - 1, 0);
    spec->log_.assign(q, 0);
    ZpPoly gen_digits(s, 0);
    {
        std::uint64_t rest = gen_value;
        for (std::uint32_t i = 0; i < s; ++i) {
            gen_digits[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
    }
    ZpPoly cur = one_digits;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
        std::uint32_t v = encode(cur);
        spec->exp_[i] = v;
        spec->log_[v] = static_cast<std::uint32_t>(i);
        cur = mul_elem(cur, gen_digits);
    }
    if (cur != one_digits) fail(errc::bad_argument, "generator table construction failed");

    return spec;
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t out = 0, weight = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        std::uint64_t da = a % p_, db = b % p_;
        a = static_cast<std::uint32_t>(a / p_);
        b = static_cast<std::uint32_t>(b / p_);
        std::uint64_t d = da + db;
        if (d >= p_) d -= p_;
        out += d * weight;
        weight *= p_;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
    std::uint64_t out = 0, weight = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        std::uint64_t da = a % p_;
        a = static_cast<std::uint32_t>(a / p_);
        out += (da == 0 ? 0 : p_ - da) * weight;
        weight *= p_;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t idx = log_[a] + log_[b];
    if (idx >= q_ - 1) idx -= q_ - 1;
    return exp_[idx];
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t FieldSpec::div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

std::uint32_t FieldSpec::pow(std::uint32_t a, long long e) const {
    if (a == 0) {
        if (e < 0) fail(errc::division_by_zero, "negative power of zero");
        return e == 0 ? 1 : 0;
    }
    std::uint64_t period = q_ - 1;
    long long r = e % static_cast<long long>(period);
    if (r < 0) r += static_cast<long long>(period);
    return exp_[(log_[a] * static_cast<std::uint64_t>(r)) % period];
}

std::uint64_t FieldSpec::order(std::uint32_t a) const {
    if (a == 0) fail(errc::zero_element, "zero has no multiplicative order");
    return (q_ - 1) / std::gcd<std::uint64_t>(q_ - 1, log_[a]);
}

std::optional<std::uint64_t> FieldSpec::dlog(std::uint32_t a) const {
    if (a == 0) return std::nullopt;
    return static_cast<std::uint64_t>(log_[a]);
}

std::vector<std::uint32_t> FieldSpec::digits(std::uint32_t v) const {
    std::vector<std::uint32_t> d(s_);
    for (std::uint32_t i = 0; i < s_; ++i) {
        d[i] = static_cast<std::uint32_t>(v % p_);
        v = static_cast<std::uint32_t>(v / p_);
    }
    return d;
}

std::uint32_t FieldSpec::from_digits(const std::vector<std::uint32_t>& d) const {
    if (d.size() != s_) fail(errc::bad_argument, "digit vector must have length s");
    std::uint64_t v = 0;
    for (std::uint32_t i = s_; i-- > 0;) {
        if (d[i] >= p_) fail(errc::bad_argument, "digit out of range");
        v = v * p_ + d[i];
    }
    return static_cast<std::uint32_t>(v);
}

std::uint64_t FieldSpec::lex_rank(std::uint32_t v) const {
    auto d = digits(v);
    std::uint64_t rank = 0;
    for (std::uint32_t i = 0; i < s_; ++i) rank = rank * p_ + d[i];
    return rank;
}

std::uint32_t FieldSpec::value_from_rank(std::uint64_t rank) const {
    // rank = c0 * p^(s-1) + ... + c_{s-1}, so peeling from the low end fills
    // c_{s-1} first.
    std::vector<std::uint32_t> d(s_);
    for (std::uint32_t i = s_; i-- > 0;) {
        d[i] = static_cast<std::uint32_t>(rank % p_);
        rank /= p_;
    }
    return from_digits(d);
}

Felt felt_from_int(const Field& f, long long v) {
    if (v >= 0) {
        if (static_cast<std::uint64_t>(v) >= f->q()) {
            fail(errc::bad_argument, "element value out of range");
        }
        return Felt(f, static_cast<std::uint32_t>(v));
    }
    if (static_cast<std::uint64_t>(-v) >= f->q()) {
        fail(errc::bad_argument, "element value out of range");
    }
    return -Felt(f, static_cast<std::uint32_t>(-v));
}

Felt root_of_unity(const Field& f, std::uint64_t n) {
    if (n < 1) fail(errc::bad_argument, "root order must be at least 1");
    if ((f->q() - 1) % n != 0) {
        fail(errc::no_such_root_of_unity,
             "no primitive " + std::to_string(n) + "-th root of unity: " + std::to_string(n) +
                 " does not divide q-1 = " + std::to_string(f->q() - 1));
    }
    return Felt(f, f->pow(f->generator_value(), static_cast<long long>((f->q() - 1) / n)));
}

Felt prth_root(const Field& f, const Felt& lam, std::uint32_t r) {
    if (lam.is_zero()) fail(errc::zero_element, "p^r-th root of zero is excluded");
    std::uint64_t period = f->q() - 1;
    std::uint64_t pr = 1 % period;
    for (std::uint32_t i = 0; i < r; ++i) pr = pr * (f->p() % period) % period;
    if (pr == 0) pr = period;  // period = 1 edge: exponent irrelevant
    std::uint64_t e = (period == 1) ? 1 : inv_mod_u64(pr, period);
    return lam.pow(static_cast<long long>(e));
}

std::optional<Felt> nth_root_of(const Field& f, const Felt& lam, std::uint64_t n) {
    if (n < 1) fail(errc::bad_argument, "root degree must be at least 1");
    if (lam.is_zero()) fail(errc::zero_element, "n-th root of zero is excluded");
    std::uint64_t period = f->q() - 1;
    if (period == 0) return std::nullopt;
    std::uint64_t target = *f->dlog(lam.value());
    std::uint64_t n_red = n % period;
    std::uint64_t n_for_gcd = (n_red == 0) ? period : n_red;
    std::uint64_t d = std::gcd(n_for_gcd, period);
    if (target % d != 0) return std::nullopt;
    std::uint64_t period_d = period / d;
    std::uint64_t k = 0;
    if (period_d > 1) {
        std::uint64_t n_unit = (n_for_gcd / d) % period_d;
        k = inv_mod_u64(n_unit, period_d) * ((target / d) % period_d) % period_d;
    }
    return Felt(f, f->pow(f->generator_value(), static_cast<long long>(k)));
}

}  // namespace constakit
