#include "constakit/oracle.hpp"

#include <algorithm>

#include "constakit/matrix.hpp"

namespace constakit {

namespace {

// Advances a base-q odometer over `digits`; returns false once it wraps.
bool advance(std::vector<std::uint32_t>& digits, std::uint64_t q) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] + 1 < q) {
            ++digits[i];
            std::fill(digits.begin() + static_cast<std::ptrdiff_t>(i) + 1, digits.end(), 0);
            return true;
        }
    }
    return false;
}

std::uint64_t pow_checked(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > limit / base) return limit + 1;
        out *= base;
    }
    return out;
}

std::uint32_t weight(const std::vector<std::uint32_t>& w) {
    std::uint32_t count = 0;
    for (std::uint32_t v : w) {
        if (v != 0) ++count;
    }
    return count;
}

}  // namespace

CodewordSet codeword_set(const ConstaCode& c, const OracleBounds& bounds) {
    const Field& f = c.field();
    const std::uint64_t q = f->q();
    const std::uint64_t dim = c.dim();
    if (pow_checked(q, dim, bounds.max_words) > bounds.max_words) {
        fail(errc::too_large, "codeword set would exceed " + std::to_string(bounds.max_words) +
                                  " words");
    }
    CodewordSet ws{f, c.n(), {}};
    if (dim == 0) {
        // the zero ideal: exactly the zero word
        ws.words.insert(std::vector<std::uint32_t>(c.n(), 0));
        return ws;
    }
    FMatrix g = generator_matrix(c);
    std::vector<std::uint32_t> coeffs(dim, 0);
    do {
        std::vector<std::uint32_t> word(c.n(), 0);
        for (std::uint64_t row = 0; row < dim; ++row) {
            if (coeffs[row] == 0) continue;
            for (std::uint64_t col = 0; col < c.n(); ++col) {
                word[col] = f->add(word[col], f->mul(coeffs[row], g.at(row, col)));
            }
        }
        ws.words.insert(std::move(word));
    } while (advance(coeffs, q));
    return ws;
}

bool check_shift_closure(const CodewordSet& ws, const Felt& lam) {
    const Field& f = ws.field;
    for (const auto& w : ws.words) {
        std::vector<std::uint32_t> shifted(w.size());
        // lambda-constacyclic shift: (c_0..c_{n-1}) -> (lam*c_{n-1}, c_0, .., c_{n-2})
        shifted[0] = f->mul(lam.value(), w.back());
        std::copy(w.begin(), w.end() - 1, shifted.begin() + 1);
        if (!ws.contains(shifted)) return false;
    }
    return true;
}

CodewordSet bruteforce_dual(const CodewordSet& ws, const OracleBounds& bounds) {
    const Field& f = ws.field;
    const std::uint64_t q = f->q();
    const std::uint64_t n = ws.n;
    CodewordSet dual{f, n, {}};
    if (pow_checked(q, n, bounds.max_space) <= bounds.max_space) {
        // Full scan of the ambient space.
        std::vector<std::uint32_t> cand(n, 0);
        do {
            bool ortho = true;
            for (const auto& w : ws.words) {
                std::uint32_t dot = 0;
                for (std::uint64_t i = 0; i < n; ++i) {
                    dot = f->add(dot, f->mul(cand[i], w[i]));
                }
                if (dot != 0) {
                    ortho = false;
                    break;
                }
            }
            if (ortho) dual.words.insert(cand);
        } while (advance(cand, q));
        return dual;
    }
    // Ambient space too big to scan: solve for the nullspace of the word list
    // and expand its span instead.
    FMatrix rows(f, ws.words.size(), n);
    std::uint64_t r = 0;
    for (const auto& w : ws.words) {
        for (std::uint64_t i = 0; i < n; ++i) rows.set(r, i, w[i]);
        ++r;
    }
    FMatrix basis = nullspace(rows);
    if (pow_checked(q, basis.rows(), bounds.max_words) > bounds.max_words) {
        fail(errc::too_large, "dual codeword set would exceed " +
                                  std::to_string(bounds.max_words) + " words");
    }
    std::vector<std::uint32_t> coeffs(basis.rows(), 0);
    do {
        std::vector<std::uint32_t> word(n, 0);
        for (std::uint64_t row = 0; row < basis.rows(); ++row) {
            if (coeffs[row] == 0) continue;
            for (std::uint64_t col = 0; col < n; ++col) {
                word[col] = f->add(word[col], f->mul(coeffs[row], basis.at(row, col)));
            }
        }
        dual.words.insert(std::move(word));
    } while (basis.rows() > 0 && advance(coeffs, q));
    return dual;
}

bool check_matrix_selfdual(const FMatrix& g) {
    FMatrix reduced = g;
    std::uint64_t k = row_reduce(reduced);
    if (k != g.rows()) fail(errc::rank_deficient, "generator matrix rows are dependent");
    if (2 * k != g.cols()) return false;
    FMatrix gram_matrix = gram(g);
    return gram_matrix.is_zero();
}

MinDistanceResult min_distance(const ConstaCode& c, std::uint32_t cap,
                               const OracleBounds& bounds) {
    if (c.dim() == 0) return {MinDistanceResult::Kind::unbounded, 0};
    const Field& f = c.field();
    const std::uint64_t q = f->q();
    if (pow_checked(q, c.dim(), bounds.max_words) <= bounds.max_words) {
        CodewordSet ws = codeword_set(c, bounds);
        std::uint32_t best = static_cast<std::uint32_t>(c.n()) + 1;
        for (const auto& w : ws.words) {
            std::uint32_t wt = weight(w);
            if (wt > 0 && wt < best) best = wt;
        }
        return {MinDistanceResult::Kind::exact, best};
    }
    // Too many words to enumerate: sample low-degree multiples of the generator
    // for an upper bound.
    const Poly& gen = c.gen();
    std::uint32_t best = static_cast<std::uint32_t>(c.n()) + 1;
    std::uint32_t gen_wt = 0;
    for (int i = 0; i <= gen.degree(); ++i) {
        if (gen.coeff_value(i) != 0) ++gen_wt;
    }
    best = std::min(best, gen_wt);
    // Scalar multiples preserve weight, so sampling pays off only from degree 1
    // up; cap the loop at ~250k candidates.
    const std::uint64_t budget = 250000;
    std::uint64_t sample_degree = 0;
    while (sample_degree < 2 && pow_checked(q, sample_degree + 2, budget) <= budget) {
        ++sample_degree;
    }
    if (sample_degree == 0) {
        if (best <= cap) return {MinDistanceResult::Kind::at_most, best};
        return {MinDistanceResult::Kind::above_cap, cap};
    }
    std::vector<std::uint32_t> coeffs(sample_degree + 1, 0);
    do {
        std::vector<Felt> fs;
        for (std::uint32_t v : coeffs) fs.emplace_back(f, v);
        Poly mult = Poly::from_felts(f, fs);
        if (mult.degree() < 0) continue;
        Poly word = (gen * mult) % Poly::binomial(f, c.n(), c.lam());
        if (word.degree() < 0) continue;
        std::uint32_t wt = 0;
        for (int i = 0; i <= word.degree(); ++i) {
            if (word.coeff_value(i) != 0) ++wt;
        }
        if (wt > 0) best = std::min(best, wt);
    } while (advance(coeffs, q));
    if (best <= cap) return {MinDistanceResult::Kind::at_most, best};
    return {MinDistanceResult::Kind::above_cap, cap};
}

}  // namespace constakit
