#include "constakit/code.hpp"

#include <algorithm>

namespace constakit {

CodeShape shape_decompose(std::uint64_t n, std::uint64_t p) {
    if (n < 1) fail(errc::bad_argument, "length must be at least 1");
    if (p < 2) fail(errc::bad_argument, "characteristic must be at least 2");
    CodeShape shape;
    shape.p = p;
    shape.n = n;
    std::uint64_t rest = n;
    while (rest % p == 0) {
        rest /= p;
        ++shape.r;
    }
    while (rest % 2 == 0) {
        rest /= 2;
        ++shape.a;
    }
    shape.m = rest;
    return shape;
}

namespace {

void check_shape(const Field& f, const CodeShape& shape) {
    if (shape.p != f->p()) fail(errc::bad_argument, "shape characteristic does not match the field");
    if (shape.m % 2 == 0 || shape.m % shape.p == 0) {
        fail(errc::bad_argument, "shape m must be odd and coprime to p");
    }
    if (shape.two_a() * shape.m * shape.pr() != shape.n) {
        fail(errc::bad_argument, "shape components do not multiply to n");
    }
}

Poly ambient_binomial(const Field& f, std::uint64_t n, const Felt& lam) {
    return Poly::binomial(f, n, lam);
}

}  // namespace

ConstaCode::ConstaCode(Field field, CodeShape shape, Felt lam, Poly gen)
    : field_(std::move(field)), shape_(shape), lam_(std::move(lam)), gen_(std::move(gen)) {
    check_shape(field_, shape_);
    if (lam_.is_zero()) fail(errc::zero_element, "lambda must be a unit");
    if (!gen_.is_monic()) fail(errc::bad_argument, "generator must be monic");
    if (static_cast<std::uint64_t>(gen_.degree()) > shape_.n) {
        fail(errc::bad_argument, "generator degree exceeds the length");
    }
    Poly rem = ambient_binomial(field_, shape_.n, lam_) % gen_;
    if (!rem.is_zero()) fail(errc::bad_argument, "generator does not divide x^n - lambda");
}

std::vector<Poly> factor_base(const Field& f, const CodeShape& shape, const Felt& lam) {
    check_shape(f, shape);
    if (lam.is_zero()) fail(errc::zero_element, "lambda must be a unit");
    Felt lam0 = prth_root(f, lam, shape.r);
    FactorList fl = factor_binomial(f, shape.M(), lam0);
    std::vector<Poly> base;
    base.reserve(fl.factors.size());
    for (auto& [g, mult] : fl.factors) base.push_back(std::move(g));
    return base;
}

ConstaCode build_code(const Field& f, const CodeShape& shape, const Felt& lam,
                      const ExponentVector& ev) {
    std::vector<Poly> canonical = factor_base(f, shape, lam);
    if (ev.base != canonical) {
        fail(errc::bad_base, "exponent vector base is not the canonical factor base");
    }
    if (ev.exps.size() != canonical.size()) {
        fail(errc::bad_base, "exponent count does not match the factor base");
    }
    const std::uint64_t cap = shape.pr();
    Poly gen = Poly::one(f);
    for (std::size_t i = 0; i < canonical.size(); ++i) {
        if (ev.exps[i] > cap) {
            fail(errc::exponent_range, "factor exponent exceeds p^r");
        }
        gen = gen * canonical[i].pow(ev.exps[i]);
    }
    return ConstaCode(f, shape, lam, std::move(gen));
}

ConstaCode make_code(const Field& f, std::uint64_t n, const Felt& lam, const Poly& gen) {
    if (gen.is_zero()) fail(errc::zero_polynomial, "generator must be nonzero");
    return ConstaCode(f, shape_decompose(n, f->p()), lam, gen.monicize());
}

CodeEnumerator::CodeEnumerator(Field field, CodeShape shape, Felt lam)
    : field_(std::move(field)),
      shape_(shape),
      lam_(std::move(lam)),
      base_(factor_base(field_, shape_, lam_)),
      exps_(base_.size(), 0) {}

BigUint CodeEnumerator::total() const {
    return BigUint::pow(shape_.pr() + 1, static_cast<std::uint64_t>(base_.size()));
}

std::optional<EnumeratedCode> CodeEnumerator::next() {
    if (done_) return std::nullopt;
    Poly gen = Poly::one(field_);
    for (std::size_t i = 0; i < base_.size(); ++i) gen = gen * base_[i].pow(exps_[i]);
    EnumeratedCode out{exps_, ConstaCode(field_, shape_, lam_, std::move(gen))};
    // advance the odometer, last position fastest
    const std::uint64_t cap = shape_.pr();
    std::size_t i = exps_.size();
    while (i > 0) {
        --i;
        if (exps_[i] < cap) {
            ++exps_[i];
            std::fill(exps_.begin() + static_cast<std::ptrdiff_t>(i) + 1, exps_.end(), 0);
            return out;
        }
    }
    done_ = true;
    return out;
}

ConstaCode dual(const ConstaCode& c) {
    const Field& f = c.field();
    Poly check = ambient_binomial(f, c.n(), c.lam()) / c.gen();
    Poly dual_gen = check.reciprocal(true);
    return ConstaCode(f, c.shape(), c.lam().inv(), std::move(dual_gen));
}

bool is_self_dual(const ConstaCode& c) {
    if (c.lam() != c.lam().inv()) return false;
    ConstaCode d = dual(c);
    return d.lam() == c.lam() && d.gen() == c.gen();
}

FMatrix generator_matrix(const ConstaCode& c) {
    const std::uint64_t k = c.dim();
    if (k == 0) fail(errc::zero_dimension, "zero code has no generator matrix");
    FMatrix g(c.field(), static_cast<std::size_t>(k), static_cast<std::size_t>(c.n()));
    const auto& coeffs = c.gen().values();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            g.set(i, i + j, coeffs[j]);
        }
    }
    return g;
}

std::vector<std::uint32_t> MonomialMap::constacyclic_to_cyclic(
    const std::vector<std::uint32_t>& w) const {
    if (w.size() != n) fail(errc::bad_argument, "word length does not match the map");
    const FieldSpec& F = *delta.field();
    std::vector<std::uint32_t> out(w.size());
    std::uint32_t power = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out[i] = F.mul(w[i], power);
        power = F.mul(power, delta.value());
    }
    return out;
}

std::vector<std::uint32_t> MonomialMap::cyclic_to_constacyclic(
    const std::vector<std::uint32_t>& w) const {
    if (w.size() != n) fail(errc::bad_argument, "word length does not match the map");
    const FieldSpec& F = *delta.field();
    const std::uint32_t dinv = F.inv(delta.value());
    std::vector<std::uint32_t> out(w.size());
    std::uint32_t power = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out[i] = F.mul(w[i], power);
        power = F.mul(power, dinv);
    }
    return out;
}

std::optional<CyclicEquivalence> cyclic_equivalent(const ConstaCode& c) {
    const Field& f = c.field();
    std::optional<Felt> delta = nth_root_of(f, c.lam(), c.n());
    if (!delta) return std::nullopt;
    Poly cyclic_gen = c.gen().substitute_scaled(*delta).monicize();
    ConstaCode cyclic(f, c.shape(), one_of(f), std::move(cyclic_gen));
    return CyclicEquivalence{MonomialMap{*delta, c.n()}, std::move(cyclic)};
}

}  // namespace constakit
