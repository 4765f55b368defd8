#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "constakit/bigint.hpp"
#include "constakit/cyclo.hpp"
#include "constakit/field.hpp"
#include "constakit/matrix.hpp"
#include "constakit/poly.hpp"

namespace constakit {

// n = 2^a * m * p^r with m odd and coprime to p.
struct CodeShape {
    std::uint64_t p = 0;
    std::uint32_t a = 0;
    std::uint64_t m = 0;
    std::uint32_t r = 0;
    std::uint64_t n = 0;

    std::uint64_t pr() const {
        std::uint64_t v = 1;
        for (std::uint32_t i = 0; i < r; ++i) v *= p;
        return v;
    }
    std::uint64_t two_a() const { return std::uint64_t{1} << a; }
    // 2^a * m, the squarefree exponent of the ambient binomial
    std::uint64_t M() const { return two_a() * m; }

    bool operator==(const CodeShape&) const = default;
};

CodeShape shape_decompose(std::uint64_t n, std::uint64_t p);

// lam-constacyclic code of length n: the ideal of F_q[x]/(x^n - lam)
// generated by a monic divisor of x^n - lam.
class ConstaCode {
  public:
    ConstaCode(Field field, CodeShape shape, Felt lam, Poly gen);

    const Field& field() const { return field_; }
    const CodeShape& shape() const { return shape_; }
    const Felt& lam() const { return lam_; }
    const Poly& gen() const { return gen_; }
    std::uint64_t n() const { return shape_.n; }
    std::uint64_t dim() const { return shape_.n - static_cast<std::uint64_t>(gen_.degree()); }

    bool operator==(const ConstaCode& o) const {
        return lam_ == o.lam_ && gen_ == o.gen_ && shape_.n == o.shape_.n;
    }

  private:
    Field field_;
    CodeShape shape_;
    Felt lam_;
    Poly gen_;
};

// Canonical squarefree factor base: the sorted irreducible factors of
// x^(2^a m) - lam0, lam0 the p^r-th root of lam.  Every monic divisor of
// x^n - lam is a product of these with exponents in [0, p^r].
std::vector<Poly> factor_base(const Field& f, const CodeShape& shape, const Felt& lam);

struct ExponentVector {
    std::vector<Poly> base;
    std::vector<std::uint64_t> exps;
};

ConstaCode build_code(const Field& f, const CodeShape& shape, const Felt& lam,
                      const ExponentVector& ev);

// Direct construction from an explicit generator; the generator is monicized
// and must divide x^n - lam.
ConstaCode make_code(const Field& f, std::uint64_t n, const Felt& lam, const Poly& gen);

struct EnumeratedCode {
    std::vector<std::uint64_t> exps;
    ConstaCode code;
};

// Streams every lam-constacyclic code of the shape in lexicographic exponent
// order ((0,...,0) first, last position fastest).  Restartable value cursor.
class CodeEnumerator {
  public:
    CodeEnumerator(Field field, CodeShape shape, Felt lam);

    const std::vector<Poly>& base() const { return base_; }
    BigUint total() const;
    std::optional<EnumeratedCode> next();

  private:
    Field field_;
    CodeShape shape_;
    Felt lam_;
    std::vector<Poly> base_;
    std::vector<std::uint64_t> exps_;
    bool done_ = false;
};

// Dual under the standard inner product: a lam^(-1)-constacyclic code with
// generator monicize(reciprocal((x^n - lam) / gen)).
ConstaCode dual(const ConstaCode& c);

// lam = lam^(-1) and gen = dual generator (forces dim = n/2).
bool is_self_dual(const ConstaCode& c);

// dim x n matrix whose rows are x^i * gen, i = 0..dim-1.
FMatrix generator_matrix(const ConstaCode& c);

// Coordinate-wise scaling by powers of delta, delta^n = lam.  Scaling word w
// by delta^i sends the lam-constacyclic code onto its cyclic image; the
// inverse scaling delta^(-i) comes back.
struct MonomialMap {
    Felt delta;
    std::uint64_t n;

    std::vector<std::uint32_t> constacyclic_to_cyclic(const std::vector<std::uint32_t>& w) const;
    std::vector<std::uint32_t> cyclic_to_constacyclic(const std::vector<std::uint32_t>& w) const;
};

struct CyclicEquivalence {
    MonomialMap map;
    ConstaCode cyclic;  // generator monicize(gen(delta * x))
};

// The monomially equivalent cyclic code, when some delta with delta^n = lam
// exists; nullopt otherwise.
std::optional<CyclicEquivalence> cyclic_equivalent(const ConstaCode& c);

}  // namespace constakit
