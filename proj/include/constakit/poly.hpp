#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "constakit/field.hpp"

namespace constakit {

// Dense univariate polynomial over one field; coefficients packed, constant
// term first, no trailing zeros (the zero polynomial has no coefficients).
class Poly {
  public:
    explicit Poly(Field field) : field_(std::move(field)) { require_field(); }

    Poly(Field field, std::vector<std::uint32_t> packed_coeffs)
        : field_(std::move(field)), c_(std::move(packed_coeffs)) {
        require_field();
        for (auto v : c_) {
            if (v >= field_->q()) fail(errc::bad_argument, "coefficient out of range");
        }
        trim();
    }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return Poly(f, {1}); }
    static Poly from_felts(const Field& f, const std::vector<Felt>& coeffs);
    static Poly constant(const Felt& c) { return Poly(c.field(), {c.value()}); }
    // c * x^degree
    static Poly monomial(const Field& f, std::size_t degree, std::uint32_t packed = 1);
    // x^degree - c
    static Poly binomial(const Field& f, std::size_t degree, const Felt& c);

    const Field& field() const { return field_; }
    const std::vector<std::uint32_t>& values() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    std::uint32_t coeff_value(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Felt coeff(std::size_t i) const { return Felt(field_, coeff_value(i)); }
    Felt constant_term() const { return coeff(0); }
    Felt lead() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Felt& c) const;  // c * f

    bool operator==(const Poly& o) const { return field_->same(*o.field_) && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Quotient and remainder with deg r < deg divisor.
    std::pair<Poly, Poly> divrem(const Poly& divisor) const;
    Poly operator/(const Poly& o) const { return divrem(o).first; }
    Poly operator%(const Poly& o) const { return divrem(o).second; }

    Poly pow(std::uint64_t e) const;
    Felt eval(const Felt& x) const;
    Poly derivative() const;

    // f(c * x); rejects c = 0 because the map must stay degree-preserving.
    Poly substitute_scaled(const Felt& c) const;
    // x^deg(f) * f(1/x): the coefficient reversal.  Needs f != 0 and f(0) != 0.
    Poly reciprocal(bool make_monic = false) const;
    Poly monicize() const;
    bool is_squarefree() const;

  private:
    void require_field() const {
        if (!field_) fail(errc::bad_argument, "polynomial requires a field");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const FieldSpec& check(const Poly& o) const {
        if (!field_->same(*o.field_)) fail(errc::field_mismatch, "polynomials from different fields");
        return *field_;
    }

    Field field_;
    std::vector<std::uint32_t> c_;
};

// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

// Total order: degree first, then coefficient tuples from the constant term
// up, each compared in the element order.  Used everywhere a factor list or
// pair needs a canonical arrangement.
bool canonical_less(const Poly& a, const Poly& b);

}  // namespace constakit
