#pragma once

#include <cstdint>
#include <vector>

#include "constakit/field.hpp"
#include "constakit/poly.hpp"

namespace constakit {

// ord_m(q): least t >= 1 with q^t = 1 (mod m).  Requires gcd(q, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t m);

// q-cyclotomic coset of its smallest member modulo n.
struct Coset {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t rep = 0;                // smallest member
    std::vector<std::uint64_t> members;   // sorted ascending
};

// Partition of {0, ..., n-1} into q-cyclotomic cosets, sorted by representative.
std::vector<Coset> cyclotomic_cosets(std::uint64_t n, std::uint64_t q);

// Complete factorization into monic irreducibles with multiplicities,
// canonically sorted by (degree, coefficient tuple).
struct FactorList {
    Poly target;
    std::vector<std::pair<Poly, std::uint64_t>> factors;

    Poly product() const {
        Poly acc = Poly::one(target.field());
        for (const auto& [g, e] : factors) acc = acc * g.pow(e);
        return acc;
    }
};

// Factorization of x^m - c for gcd(m, p) = 1 and c != 0 (squarefree, so every
// multiplicity is 1).
FactorList factor_binomial(const Field& f, std::uint64_t m, const Felt& c);

// General engine behind factor_binomial: Cantor-Zassenhaus on a monic
// squarefree input, deterministic (fixed-seed splitting, canonical sort).
std::vector<Poly> factor_squarefree_monic(const Poly& f);

enum class GridVariant { all, even, odd };

// Twisted factor grid for x^(2^a m) -+ scale^(2^a m): row k twists the
// factors f_i of x^m - 1 by alpha^(-t(k)) and rescales by scale^(-1), where
//   all:  alpha has order 2^a,     t(k) = k      (target x^N - scale^N)
//   even: alpha has order 2^(a+1), t(k) = 2k     (target x^N - scale^N)
//   odd:  alpha has order 2^(a+1), t(k) = 2k-1   (target x^N + scale^N)
struct FactorGrid {
    std::uint32_t a = 0;
    std::uint64_t m = 0;
    GridVariant variant = GridVariant::all;
    Felt alpha;
    Felt scale;
    FactorList base;                              // factorization of x^m - 1
    std::vector<std::uint64_t> twist_exponents;   // t(k) for k = 1..2^a
    std::vector<std::vector<Poly>> entries;       // entries[k-1][i], monic
    Poly target;
};

FactorGrid factor_grid(const Field& f, std::uint32_t a, std::uint64_t m, const Felt& scale,
                       GridVariant variant);

// Monic irreducible factor of x^n - 1 whose roots are zeta^j for j in the
// coset, zeta the canonical primitive n-th root in the splitting field
// F_{q^t}, t = ord_n(q).
Poly minimal_polynomial(const Field& f, std::uint64_t n, const Coset& coset);

}  // namespace constakit
