#pragma once

#include <stdexcept>
#include <string>

namespace constakit {

// Every library failure carries one of these codes so callers can react
// programmatically instead of parsing messages.
enum class errc {
    composite_p,
    reducible_modulus,
    field_too_large,
    division_by_zero,
    field_mismatch,
    zero_element,
    no_such_root,
    zero_scale,
    zero_constant_term,
    zero_polynomial,
    not_coprime,
    not_coprime_to_characteristic,
    zero_constant,
    no_such_root_of_unity,
    even_m,
    bad_base,
    exponent_range,
    zero_dimension,
    too_large,
    rank_deficient,
    hypothesis_violated,
    bad_argument,
};

inline const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::composite_p: return "CompositeP";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::field_too_large: return "FieldTooLarge";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::zero_element: return "ZeroElement";
        case errc::no_such_root: return "NoSuchRoot";
        case errc::zero_scale: return "ZeroScale";
        case errc::zero_constant_term: return "ZeroConstantTerm";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::not_coprime: return "NotCoprime";
        case errc::not_coprime_to_characteristic: return "NotCoprimeToCharacteristic";
        case errc::zero_constant: return "ZeroConstant";
        case errc::no_such_root_of_unity: return "NoSuchRootOfUnity";
        case errc::even_m: return "EvenM";
        case errc::bad_base: return "BadBase";
        case errc::exponent_range: return "ExponentRange";
        case errc::zero_dimension: return "ZeroDimension";
        case errc::too_large: return "TooLarge";
        case errc::rank_deficient: return "RankDeficient";
        case errc::hypothesis_violated: return "HypothesisViolated";
        case errc::bad_argument: return "BadArgument";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

}  // namespace constakit
