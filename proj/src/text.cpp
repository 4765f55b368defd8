#include "constakit/text.hpp"

#include <charconv>
#include <string>

namespace constakit {

namespace {

std::uint64_t parse_uint(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        fail(errc::bad_argument, std::string("expected an unsigned integer for ") + what +
                                     ", got \"" + std::string(s) + "\"");
    }
    return v;
}

}  // namespace

Felt parse_element(const Field& f, std::string_view token) {
    if (token.empty()) fail(errc::bad_argument, "empty element token");
    bool negate = false;
    if (token.front() == '-') {
        negate = true;
        token.remove_prefix(1);
        if (token.empty()) fail(errc::bad_argument, "dangling '-' in element token");
    }
    Felt x = zero_of(f);
    if (token.front() == 'b') {
        token.remove_prefix(1);
        std::uint64_t k = 1;
        if (!token.empty()) {
            if (token.front() != '^') {
                fail(errc::bad_argument, "malformed generator token, expected b or b^K");
            }
            token.remove_prefix(1);
            k = parse_uint(token, "generator exponent");
        }
        x = generator(f).pow(static_cast<long long>(k % (f->q() - 1)));
    } else {
        std::uint64_t v = parse_uint(token, "element value");
        if (v >= f->q()) {
            fail(errc::bad_argument, "element value " + std::to_string(v) +
                                         " out of range for q = " + std::to_string(f->q()));
        }
        x = Felt(f, static_cast<std::uint32_t>(v));
    }
    return negate ? -x : x;
}

std::string format_element(const Felt& x) { return std::to_string(x.value()); }

std::string format_element_pow(const Felt& x) {
    if (x.value() == 0) return "0";
    std::uint64_t k = *x.field()->dlog(x.value());
    if (k == 0) return "1";
    if (k == 1) return "b";
    return "b^" + std::to_string(k);
}

Poly parse_poly(const Field& f, std::string_view csv) {
    std::vector<std::uint32_t> coeffs;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string_view token =
            csv.substr(start, comma == std::string_view::npos ? csv.size() - start
                                                              : comma - start);
        coeffs.push_back(parse_element(f, token).value());
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Poly(f, std::move(coeffs));
}

std::string format_poly(const Poly& g) {
    if (g.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= g.degree(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(g.coeff_value(static_cast<std::size_t>(i)));
    }
    return out;
}

std::string pretty_poly(const Poly& g) {
    if (g.is_zero()) return "0";
    std::string out;
    for (int i = g.degree(); i >= 0; --i) {
        std::uint32_t v = g.coeff_value(static_cast<std::size_t>(i));
        if (v == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || v != 1) out += std::to_string(v);
        if (i > 0) {
            out += 'x';
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace constakit
