#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "constakit/errors.hpp"

namespace constakit {

class FieldSpec;

// Shared immutable handle; all element types keep one so values stay valid
// independently of construction order.
using Field = std::shared_ptr<const FieldSpec>;

// F_{p^s} = F_p[x]/(modulus), elements packed as c0 + c1*p + ... + c_{s-1}*p^{s-1}.
// Immutable after construction; all operations are pure, so concurrent use is safe.
class FieldSpec {
  public:
    // Desk-scale guard: exp/log tables are O(q) and every search loop is O(q).
    static constexpr std::uint64_t max_field_size = 1000000;

    // Default modulus: the lexicographically smallest monic irreducible of
    // degree s, ordering candidate tuples (a0, ..., a_{s-1}) with a0 most
    // significant and residues 0 < 1 < ... < p-1.
    static Field make(std::uint64_t p, std::uint32_t s);
    static Field make(std::uint64_t p, std::uint32_t s, const std::vector<std::uint32_t>& modulus);

    std::uint64_t p() const { return p_; }
    std::uint32_t s() const { return s_; }
    std::uint64_t q() const { return q_; }
    // Length s+1, constant term first, monic.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same(const FieldSpec& other) const { return p_ == other.p_ && modulus_ == other.modulus_; }

    // Canonical primitive element: the first element of multiplicative order
    // q-1 in the total order used for the modulus search.
    std::uint32_t generator_value() const { return generator_; }

    // Packed-value arithmetic.  Values must be < q.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, long long e) const;
    std::uint64_t order(std::uint32_t a) const;
    std::optional<std::uint64_t> dlog(std::uint32_t a) const;

    std::vector<std::uint32_t> digits(std::uint32_t v) const;
    std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const;
    // Rank of v in the element total order (digit tuple compared c0 first).
    std::uint64_t lex_rank(std::uint32_t v) const;
    std::uint32_t value_from_rank(std::uint64_t rank) const;

  private:
    FieldSpec() = default;
    static Field build(std::uint64_t p, std::uint32_t s,
                       const std::vector<std::uint32_t>* modulus);

    std::uint64_t p_ = 0;
    std::uint32_t s_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> exp_;  // exp_[i] = generator^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
};

class Felt {
  public:
    Felt(Field field, std::uint32_t value) : field_(std::move(field)), v_(value) {
        if (!field_) fail(errc::bad_argument, "element requires a field");
        if (v_ >= field_->q()) fail(errc::bad_argument, "element value out of range");
    }

    const Field& field() const { return field_; }
    std::uint32_t value() const { return v_; }
    std::vector<std::uint32_t> coeffs() const { return field_->digits(v_); }
    std::uint64_t lex_rank() const { return field_->lex_rank(v_); }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Felt operator+(const Felt& o) const { return with(field_->add(v_, check(o))); }
    Felt operator-(const Felt& o) const { return with(field_->sub(v_, check(o))); }
    Felt operator*(const Felt& o) const { return with(field_->mul(v_, check(o))); }
    Felt operator/(const Felt& o) const { return with(field_->div(v_, check(o))); }
    Felt operator-() const { return with(field_->neg(v_)); }
    Felt inv() const { return with(field_->inv(v_)); }
    Felt pow(long long e) const { return with(field_->pow(v_, e)); }

    bool operator==(const Felt& o) const { return check(o) == v_ ? true : v_ == o.v_; }
    bool operator!=(const Felt& o) const { return !(*this == o); }

  private:
    Felt with(std::uint32_t value) const { return Felt(field_, value); }
    std::uint32_t check(const Felt& o) const {
        if (!field_->same(*o.field_)) fail(errc::field_mismatch, "elements from different fields");
        return o.v_;
    }

    Field field_;
    std::uint32_t v_;
};

inline bool lex_less(const Felt& a, const Felt& b) { return a.lex_rank() < b.lex_rank(); }

inline Field make_field(std::uint64_t p, std::uint32_t s) { return FieldSpec::make(p, s); }
inline Field make_field(std::uint64_t p, std::uint32_t s, const std::vector<std::uint32_t>& modulus) {
    return FieldSpec::make(p, s, modulus);
}

inline Felt felt(const Field& f, std::uint32_t packed) { return Felt(f, packed); }

// Signed convenience: -v means the additive inverse of the element encoded by v.
Felt felt_from_int(const Field& f, long long v);

inline Felt zero_of(const Field& f) { return Felt(f, 0); }
inline Felt one_of(const Field& f) { return Felt(f, 1); }
inline Felt generator(const Field& f) { return Felt(f, f->generator_value()); }

inline std::uint64_t element_order(const Felt& x) { return x.field()->order(x.value()); }

// Canonical primitive n-th root of unity: generator^((q-1)/n).
Felt root_of_unity(const Field& f, std::uint64_t n);

// The unique lam0 with lam0^(p^r) = lam, via lam^e, e = (p^r)^(-1) mod (q-1).
Felt prth_root(const Field& f, const Felt& lam, std::uint32_t r);

// Some delta with delta^n = lam, or nullopt; canonical choice is generator^k
// for the smallest non-negative k solving n*k = dlog(lam) mod (q-1).
std::optional<Felt> nth_root_of(const Field& f, const Felt& lam, std::uint64_t n);

}  // namespace constakit
