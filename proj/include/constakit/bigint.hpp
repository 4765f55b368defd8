#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace constakit {

// Unsigned arbitrary-precision integer, just large enough for exact code
// counts: products and powers of word-sized values, decimal rendering,
// comparison.  Limbs are base 2^32, least significant first, no trailing
// zero limbs (zero is an empty limb vector).
class BigUint {
  public:
    BigUint() = default;

    explicit BigUint(std::uint64_t v) {
        if (v != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
            std::uint32_t hi = static_cast<std::uint32_t>(v >> 32);
            if (hi != 0) limbs_.push_back(hi);
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    void mul_u64(std::uint64_t f) {
        if (f == 0 || is_zero()) {
            limbs_.clear();
            return;
        }
        BigUint lo = *this;
        lo.mul_u32(static_cast<std::uint32_t>(f & 0xffffffffu));
        std::uint32_t hi = static_cast<std::uint32_t>(f >> 32);
        if (hi != 0) {
            BigUint hipart = *this;
            hipart.mul_u32(hi);
            hipart.shift_limbs(1);
            lo.add(hipart);
        }
        *this = lo;
    }

    static BigUint pow(std::uint64_t base, std::uint64_t exponent) {
        BigUint result(1);
        for (std::uint64_t i = 0; i < exponent; ++i) result.mul_u64(base);
        return result;
    }

    bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }
    bool operator!=(const BigUint& other) const { return limbs_ != other.limbs_; }
    bool operator==(std::uint64_t v) const { return *this == BigUint(v); }

    bool fits_u64() const { return limbs_.size() <= 2; }

    std::uint64_t as_u64() const {
        std::uint64_t v = 0;
        if (limbs_.size() > 0) v |= limbs_[0];
        if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        return v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> work(limbs_);
        std::string out;
        while (!work.empty()) {
            // divide by 10^9 in place, collect remainder
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            std::string chunk = std::to_string(rem);
            if (work.empty()) {
                out.insert(0, chunk);
            } else {
                out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
            }
        }
        return out;
    }

  private:
    void mul_u32(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    void shift_limbs(std::size_t count) {
        if (is_zero()) return;
        limbs_.insert(limbs_.begin(), count, 0u);
    }

    void add(const BigUint& other) {
        if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0u);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t cur = carry + limbs_[i];
            if (i < other.limbs_.size()) cur += other.limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    std::vector<std::uint32_t> limbs_;
};

}  // namespace constakit
