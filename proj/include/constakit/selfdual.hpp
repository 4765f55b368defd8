#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "constakit/bigint.hpp"
#include "constakit/code.hpp"
#include "constakit/cyclo.hpp"

namespace constakit {

// Factors of x^M + 1 split into self-reciprocal ones and reciprocal pairs
// (h, h*), h the canonically smaller of the two.
struct PairClassification {
    Poly target;
    std::vector<Poly> self_reciprocal;
    std::vector<std::pair<Poly, Poly>> pairs;
};

PairClassification classify_factors(const Field& f, std::uint64_t M);

struct ExistenceVerdict {
    bool exists = false;
    // structural criterion: certificate when true, blocking factors when false
    std::optional<ConstaCode> witness;
    std::vector<Poly> obstruction;
    // order-parity criterion: the computed ord_m(q)
    std::optional<std::uint64_t> ord_m_q;
};

// Self-dual negacyclic codes of length n = 2^a m p^r exist iff no factor of
// x^(2^a m) + 1 is self-reciprocal; witness generator prod h_i^(p^r).
ExistenceVerdict selfdual_exists_structural(const Field& f, const CodeShape& shape);

// Published order-parity criterion: under q = 1 (mod 2^(a+1)) and a >= 1,
// existence iff ord_m(q) is odd.  HypothesisViolated outside that range.
ExistenceVerdict selfdual_exists_paper(const Field& f, const CodeShape& shape);

// Streams all self-dual negacyclic codes: generators
// prod h_i^(b_i) (h_i*)^(p^r - b_i) over b in [0, p^r]^t.  Empty when the
// structural obstruction is present.
class SelfDualEnumerator {
  public:
    SelfDualEnumerator(Field field, CodeShape shape);

    const PairClassification& classification() const { return cls_; }
    BigUint total() const;
    std::optional<EnumeratedCode> next();

  private:
    Field field_;
    CodeShape shape_;
    PairClassification cls_;
    std::vector<std::uint64_t> b_;
    bool done_ = false;
};

// Runs both criteria side by side.  agree is empty when the order-parity
// hypothesis fails; the oracle certifies the structural witness when asked
// and the length permits.
struct ConsistencyReport {
    CodeShape shape;
    ExistenceVerdict structural;
    bool paper_applicable = false;
    std::optional<ExistenceVerdict> paper;
    std::optional<bool> agree;
    bool oracle_checked = false;
    bool oracle_confirms = false;
};

ConsistencyReport consistency_report(const Field& f, const CodeShape& shape,
                                     bool run_oracle = true,
                                     std::uint64_t oracle_length_bound = 512);

}  // namespace constakit
