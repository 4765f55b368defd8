#include "constakit/poly.hpp"

#include <algorithm>

namespace constakit {

Poly Poly::from_felts(const Field& f, const std::vector<Felt>& coeffs) {
    std::vector<std::uint32_t> packed;
    packed.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!f->same(*c.field())) fail(errc::field_mismatch, "coefficient from a different field");
        packed.push_back(c.value());
    }
    return Poly(f, std::move(packed));
}

Poly Poly::monomial(const Field& f, std::size_t degree, std::uint32_t packed) {
    std::vector<std::uint32_t> c(degree + 1, 0);
    c[degree] = packed;
    return Poly(f, std::move(c));
}

Poly Poly::binomial(const Field& f, std::size_t degree, const Felt& c) {
    if (!f->same(*c.field())) fail(errc::field_mismatch, "constant from a different field");
    if (degree == 0) return Poly(f, {f->sub(1, c.value())});
    std::vector<std::uint32_t> v(degree + 1, 0);
    v[0] = f->neg(c.value());
    v[degree] = 1;
    return Poly(f, std::move(v));
}

Felt Poly::lead() const {
    if (c_.empty()) fail(errc::zero_polynomial, "zero polynomial has no leading coefficient");
    return Felt(field_, c_.back());
}

Poly Poly::operator+(const Poly& o) const {
    const FieldSpec& F = check(o);
    std::vector<std::uint32_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = F.add(coeff_value(i), o.coeff_value(i));
    }
    return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
    const FieldSpec& F = check(o);
    std::vector<std::uint32_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = F.sub(coeff_value(i), o.coeff_value(i));
    }
    return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    const FieldSpec& F = check(o);
    if (c_.empty() || o.c_.empty()) return Poly(field_);
    std::vector<std::uint32_t> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            out[i + j] = F.add(out[i + j], F.mul(c_[i], o.c_[j]));
        }
    }
    return Poly(field_, std::move(out));
}

Poly Poly::operator-() const {
    std::vector<std::uint32_t> out(c_);
    for (auto& v : out) v = field_->neg(v);
    return Poly(field_, std::move(out));
}

Poly Poly::scaled(const Felt& c) const {
    if (!field_->same(*c.field())) fail(errc::field_mismatch, "scalar from a different field");
    std::vector<std::uint32_t> out(c_);
    for (auto& v : out) v = field_->mul(v, c.value());
    return Poly(field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
    const FieldSpec& F = check(divisor);
    if (divisor.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    if (degree() < divisor.degree()) return {Poly(field_), *this};
    std::uint32_t lead_inv = F.inv(divisor.c_.back());
    std::vector<std::uint32_t> rem(c_);
    std::vector<std::uint32_t> quot(c_.size() - divisor.c_.size() + 1, 0);
    const std::size_t dsz = divisor.c_.size();
    for (std::size_t pos = rem.size(); pos-- > dsz - 1;) {
        if (rem[pos] == 0) continue;
        std::uint32_t factor = F.mul(rem[pos], lead_inv);
        std::size_t shift = pos - (dsz - 1);
        quot[shift] = factor;
        for (std::size_t j = 0; j < dsz; ++j) {
            rem[shift + j] = F.sub(rem[shift + j], F.mul(factor, divisor.c_[j]));
        }
    }
    return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Poly Poly::pow(std::uint64_t e) const {
    Poly acc = Poly::one(field_);
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Felt Poly::eval(const Felt& x) const {
    if (!field_->same(*x.field())) fail(errc::field_mismatch, "point from a different field");
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = field_->add(field_->mul(acc, x.value()), c_[i]);
    }
    return Felt(field_, acc);
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<std::uint32_t> out(c_.size() - 1, 0);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        std::uint32_t scalar = static_cast<std::uint32_t>(i % field_->p());
        out[i - 1] = field_->mul(c_[i], scalar);
    }
    return Poly(field_, std::move(out));
}

Poly Poly::substitute_scaled(const Felt& c) const {
    if (!field_->same(*c.field())) fail(errc::field_mismatch, "scale from a different field");
    if (c.is_zero()) fail(errc::zero_scale, "substitution scale must be nonzero");
    std::vector<std::uint32_t> out(c_);
    std::uint32_t power = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = field_->mul(out[i], power);
        power = field_->mul(power, c.value());
    }
    return Poly(field_, std::move(out));
}

Poly Poly::reciprocal(bool make_monic) const {
    if (c_.empty()) fail(errc::zero_polynomial, "reciprocal of the zero polynomial");
    if (c_[0] == 0) fail(errc::zero_constant_term, "reciprocal requires a nonzero constant term");
    std::vector<std::uint32_t> out(c_.rbegin(), c_.rend());
    Poly rec(field_, std::move(out));
    return make_monic ? rec.monicize() : rec;
}

Poly Poly::monicize() const {
    if (c_.empty()) fail(errc::zero_polynomial, "cannot monicize the zero polynomial");
    if (c_.back() == 1) return *this;
    return scaled(Felt(field_, field_->inv(c_.back())));
}

bool Poly::is_squarefree() const {
    if (c_.empty()) fail(errc::zero_polynomial, "squarefreeness of the zero polynomial");
    return gcd(*this, derivative()).is_one();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.is_zero() ? r0 : r0.monicize();
}

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& F = *a.field();
    for (int i = 0; i <= a.degree(); ++i) {
        std::uint64_t ra = F.lex_rank(a.coeff_value(static_cast<std::size_t>(i)));
        std::uint64_t rb = F.lex_rank(b.coeff_value(static_cast<std::size_t>(i)));
        if (ra != rb) return ra < rb;
    }
    return false;
}

}  // namespace constakit
