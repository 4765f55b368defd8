#include "constakit/cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace constakit {

namespace {

constexpr std::uint64_t kMaxCosetModulus = 10000000;

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t operator()() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

Poly poly_x(const Field& f) { return Poly::monomial(f, 1); }

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
    Poly acc = Poly::one(base.field());
    Poly cur = base % mod;
    while (e) {
        if (e & 1) acc = (acc * cur) % mod;
        cur = (cur * cur) % mod;
        e >>= 1;
    }
    return acc;
}

Poly random_poly(const Field& f, std::size_t max_degree, SplitMix64& rng) {
    std::vector<std::uint32_t> c(max_degree + 1);
    for (auto& v : c) v = static_cast<std::uint32_t>(rng() % f->q());
    return Poly(f, std::move(c));
}

// Equal-degree split of a monic product of irreducibles that all have degree d.
void edf(const Poly& g, std::uint64_t d, SplitMix64& rng, std::vector<Poly>& out) {
    if (static_cast<std::uint64_t>(g.degree()) == d) {
        out.push_back(g.monicize());
        return;
    }
    const Field& f = g.field();
    const std::uint64_t q = f->q();
    while (true) {
        Poly u = random_poly(f, static_cast<std::size_t>(g.degree()) - 1, rng);
        if (u.is_zero() || u.degree() == 0) continue;
        Poly shared = gcd(u, g);
        Poly split = Poly::zero(f);
        if (shared.degree() > 0 && shared.degree() < g.degree()) {
            split = shared;
        } else if (f->p() == 2) {
            // trace map over F_2: sum of u^(2^i), i < s*d
            Poly t = u % g;
            Poly acc = t;
            std::uint64_t bits = static_cast<std::uint64_t>(f->s()) * d;
            for (std::uint64_t i = 1; i < bits; ++i) {
                t = (t * t) % g;
                acc = (acc + t) % g;
            }
            split = gcd(acc, g);
        } else {
            // norm to F_q, then the (q-1)/2 power sends it to +-1 mod each factor
            Poly t = u % g;
            Poly norm = t;
            for (std::uint64_t i = 1; i < d; ++i) {
                t = powmod(t, q, g);
                norm = (norm * t) % g;
            }
            Poly w = powmod(norm, (q - 1) / 2, g);
            split = gcd(w - Poly::one(f), g);
        }
        if (split.degree() > 0 && split.degree() < g.degree()) {
            edf(split, d, rng, out);
            edf(g / split, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t m) {
    if (m < 1) fail(errc::bad_argument, "modulus must be at least 1");
    if (m == 1) return 1;
    if (std::gcd(q % m, m) != 1) {
        fail(errc::not_coprime, "q and m must be coprime for a multiplicative order");
    }
    std::uint64_t base = q % m;
    std::uint64_t acc = base;
    std::uint64_t ord = 1;
    while (acc != 1) {
        acc = acc * base % m;
        ++ord;
        if (ord > m) fail(errc::bad_argument, "order computation exceeded the modulus");
    }
    return ord;
}

std::vector<Coset> cyclotomic_cosets(std::uint64_t n, std::uint64_t q) {
    if (n < 1) fail(errc::bad_argument, "modulus must be at least 1");
    if (n > kMaxCosetModulus) fail(errc::too_large, "coset modulus exceeds the desk-scale bound");
    if (n > 1 && std::gcd(q % n, n) != 1) fail(errc::not_coprime, "q and n must be coprime");
    std::vector<bool> seen(n, false);
    std::vector<Coset> out;
    const std::uint64_t qr = q % n;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        Coset c;
        c.n = n;
        c.q = q;
        c.rep = i;
        std::uint64_t cur = i;
        do {
            seen[cur] = true;
            c.members.push_back(cur);
            cur = cur * qr % n;
        } while (cur != i);
        std::sort(c.members.begin(), c.members.end());
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Poly> factor_squarefree_monic(const Poly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "cannot factor the zero polynomial");
    if (!f.is_monic()) fail(errc::bad_argument, "factorization engine expects a monic input");
    if (f.degree() == 0) return {};
    if (!f.is_squarefree()) fail(errc::bad_argument, "factorization engine expects a squarefree input");

    const Field& field = f.field();
    const std::uint64_t q = field->q();
    SplitMix64 rng(0x5eedc0de5eedc0deull);

    std::vector<std::pair<Poly, std::uint64_t>> buckets;  // product of degree-d irreducibles
    Poly work = f;
    Poly h = poly_x(field) % work;
    std::uint64_t d = 0;
    while (work.degree() > 0) {
        ++d;
        if (2 * d > static_cast<std::uint64_t>(work.degree())) {
            buckets.emplace_back(work, static_cast<std::uint64_t>(work.degree()));
            break;
        }
        h = powmod(h, q, work);
        Poly g = gcd(h - poly_x(field), work);
        if (g.degree() > 0) {
            buckets.emplace_back(g, d);
            work = work / g;
            h = h % work;
        }
    }

    std::vector<Poly> factors;
    for (const auto& [g, deg] : buckets) edf(g, deg, rng, factors);
    std::sort(factors.begin(), factors.end(), canonical_less);
    return factors;
}

FactorList factor_binomial(const Field& f, std::uint64_t m, const Felt& c) {
    if (m < 1) fail(errc::bad_argument, "exponent must be at least 1");
    if (m % f->p() == 0) {
        fail(errc::not_coprime_to_characteristic,
             "x^m - c is squarefree only for m coprime to the characteristic");
    }
    if (c.is_zero()) fail(errc::zero_constant, "x^m requires a nonzero constant");
    if (m > FieldSpec::max_field_size) fail(errc::too_large, "binomial degree exceeds the desk-scale bound");

    FactorList out{Poly::binomial(f, m, c), {}};
    for (auto& g : factor_squarefree_monic(out.target)) out.factors.emplace_back(std::move(g), 1);
    return out;
}

FactorGrid factor_grid(const Field& f, std::uint32_t a, std::uint64_t m, const Felt& scale,
                       GridVariant variant) {
    if (m < 1) fail(errc::bad_argument, "m must be at least 1");
    if (m % 2 == 0) fail(errc::even_m, "the odd part m must be odd");
    if (scale.is_zero()) fail(errc::zero_scale, "grid scale must be nonzero");
    if (a >= 32 || m > FieldSpec::max_field_size || (m << a) > FieldSpec::max_field_size) {
        fail(errc::too_large, "grid size exceeds the desk-scale bound");
    }

    const std::uint64_t rows = std::uint64_t{1} << a;
    const std::uint64_t root_order = (variant == GridVariant::all) ? rows : rows * 2;

    FactorGrid grid{a,
                    m,
                    variant,
                    root_of_unity(f, root_order),
                    scale,
                    factor_binomial(f, m, one_of(f)),
                    {},
                    {},
                    Poly::zero(f)};

    const Felt scale_inv = scale.inv();
    for (std::uint64_t k = 1; k <= rows; ++k) {
        std::uint64_t t = k;
        if (variant == GridVariant::even) t = 2 * k;
        if (variant == GridVariant::odd) t = 2 * k - 1;
        grid.twist_exponents.push_back(t);
        Felt c = scale_inv * grid.alpha.pow(-static_cast<long long>(t));
        std::vector<Poly> row;
        row.reserve(grid.base.factors.size());
        for (const auto& [g, mult] : grid.base.factors) {
            row.push_back(g.substitute_scaled(c).monicize());
        }
        grid.entries.push_back(std::move(row));
    }

    const std::uint64_t big_n = rows * m;
    Felt scale_n = scale.pow(static_cast<long long>(big_n));
    grid.target = Poly::binomial(f, big_n, variant == GridVariant::odd ? -scale_n : scale_n);
    return grid;
}

Poly minimal_polynomial(const Field& f, std::uint64_t n, const Coset& coset) {
    if (n < 1) fail(errc::bad_argument, "n must be at least 1");
    if (coset.n != n || coset.q != f->q()) {
        fail(errc::bad_argument, "coset does not belong to this n and q");
    }
    if (n > 1 && std::gcd(f->q() % n, n) != 1) fail(errc::not_coprime, "n must be coprime to q");

    const std::uint64_t t = multiplicative_order(f->q(), n);
    std::uint64_t ext_q = 1;
    for (std::uint64_t i = 0; i < t * f->s(); ++i) {
        ext_q *= f->p();
        if (ext_q > FieldSpec::max_field_size) {
            fail(errc::too_large, "splitting field exceeds the desk-scale bound");
        }
    }

    const Field ext = (t == 1) ? f : make_field(f->p(), f->s() * static_cast<std::uint32_t>(t));
    const Felt zeta = root_of_unity(ext, n);

    // product of (X - zeta^j) over the coset, computed in the splitting field
    Poly prod = Poly::one(ext);
    for (std::uint64_t j : coset.members) {
        prod = prod * Poly::binomial(ext, 1, zeta.pow(static_cast<long long>(j)));
    }
    if (t == 1) return prod;

    // pull coefficients back through the embedding b -> sum b_i rho^i, rho the
    // canonical (lex-smallest) root of the base modulus in the splitting field
    std::optional<Felt> rho;
    Poly base_modulus(ext, std::vector<std::uint32_t>(f->modulus().begin(), f->modulus().end()));
    for (std::uint64_t rank = 0; rank < ext->q() && !rho; ++rank) {
        Felt cand(ext, ext->value_from_rank(rank));
        if (base_modulus.eval(cand).is_zero()) rho = cand;
    }
    if (!rho) fail(errc::bad_argument, "base modulus has no root in the splitting field");

    std::unordered_map<std::uint32_t, std::uint32_t> back;
    back.reserve(f->q());
    for (std::uint64_t b = 0; b < f->q(); ++b) {
        auto digits = f->digits(static_cast<std::uint32_t>(b));
        std::uint32_t image = 0;
        for (std::uint32_t i = f->s(); i-- > 0;) {
            image = ext->add(ext->mul(image, rho->value()), digits[i]);
        }
        back[image] = static_cast<std::uint32_t>(b);
    }

    std::vector<std::uint32_t> coeffs;
    coeffs.reserve(static_cast<std::size_t>(prod.degree()) + 1);
    for (int i = 0; i <= prod.degree(); ++i) {
        auto it = back.find(prod.coeff_value(static_cast<std::size_t>(i)));
        if (it == back.end()) {
            fail(errc::bad_argument, "coset product has a coefficient outside the base field");
        }
        coeffs.push_back(it->second);
    }
    return Poly(f, std::move(coeffs));
}

}  // namespace constakit
