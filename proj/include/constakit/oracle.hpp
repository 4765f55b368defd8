#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "constakit/code.hpp"
#include "constakit/matrix.hpp"

namespace constakit {

// Safety rails for the brute-force checks; raise deliberately per call.
struct OracleBounds {
    std::uint64_t max_words = 20000;  // largest codeword set materialized
    std::uint64_t max_space = 20000;  // largest full ambient space scanned
};

struct CodewordSet {
    Field field;
    std::uint64_t n = 0;
    std::set<std::vector<std::uint32_t>> words;

    bool contains(const std::vector<std::uint32_t>& w) const { return words.count(w) > 0; }
};

// All q^dim codewords, from scratch (span of the shifted generator rows).
CodewordSet codeword_set(const ConstaCode& c, const OracleBounds& bounds = {});

// Definition-level membership test: w -> (lam*w_{n-1}, w_0, ..., w_{n-2})
// stays inside the set.
bool check_shift_closure(const CodewordSet& ws, const Felt& lam);

// Orthogonal complement as an explicit set: full ambient scan when q^n fits
// the bound, otherwise the null space of a basis extracted from ws, expanded.
CodewordSet bruteforce_dual(const CodewordSet& ws, const OracleBounds& bounds = {});

// Full-row-rank check, then: k doubled equals n and G G^T = 0.
bool check_matrix_selfdual(const FMatrix& g);

struct MinDistanceResult {
    enum class Kind {
        exact,      // exhaustive scan, value is the true minimum distance
        at_most,    // sampled search found a codeword of this weight <= cap
        above_cap,  // sampled search found nothing of weight <= cap
        unbounded,  // zero code: no nonzero codewords
    };
    Kind kind = Kind::unbounded;
    std::uint32_t value = 0;
};

// Exact when q^dim fits the bound; otherwise a deterministic sampled upper
// bound (diagnostic only).
MinDistanceResult min_distance(const ConstaCode& c, std::uint32_t cap,
                               const OracleBounds& bounds = {});

}  // namespace constakit
