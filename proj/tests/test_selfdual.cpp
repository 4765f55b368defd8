#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "constakit/oracle.hpp"
#include "constakit/selfdual.hpp"

using namespace constakit;

namespace {

// Existence by sweeping every divisor-generator and testing self-duality
// through the matrix oracle, independent of the ideal-level dual.
bool exhaustive_selfdual_exists(const Field& f, std::uint64_t n) {
    CodeEnumerator en(f, shape_decompose(n, f->p()), felt_from_int(f, -1));
    while (auto ec = en.next()) {
        if (ec->code.dim() == 0 || 2 * ec->code.dim() != n) continue;
        if (check_matrix_selfdual(generator_matrix(ec->code))) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("classify_factors splits x^M + 1 into pairs and palindromes") {
    struct Case {
        std::uint64_t p;
        std::uint32_t s;
        std::uint64_t M;
    };
    for (auto [p, s, M] : {Case{5, 1, 2}, Case{5, 1, 4}, Case{5, 1, 14}, Case{3, 2, 10},
                           Case{3, 2, 16}, Case{13, 1, 6}, Case{5, 1, 3}, Case{5, 1, 7}}) {
        Field f = make_field(p, s);
        PairClassification cls = classify_factors(f, M);
        CHECK(cls.target == Poly::binomial(f, M, felt_from_int(f, -1)));

        Poly prod = Poly::one(f);
        for (const auto& h : cls.self_reciprocal) {
            CHECK(h.is_monic());
            CHECK(h.reciprocal(true) == h);
            prod = prod * h;
        }
        for (const auto& [h, hr] : cls.pairs) {
            CHECK(h.reciprocal(true) == hr);
            CHECK(hr.reciprocal(true) == h);
            CHECK(h != hr);
            CHECK(canonical_less(h, hr));
            prod = prod * h * hr;
        }
        CHECK(prod == cls.target);

        // agreement with the coset picture: factors of x^M + 1 sit on the odd
        // residues mod 2M, and a factor is self-reciprocal exactly when its
        // coset is closed under negation
        auto cosets = cyclotomic_cosets(2 * M, f->q());
        std::uint64_t palindromes = 0;
        for (const auto& c : cosets) {
            if (c.rep % 2 == 0) continue;
            bool closed = true;
            std::set<std::uint64_t> members(c.members.begin(), c.members.end());
            for (auto j : c.members)
                if (members.count((2 * M - j) % (2 * M)) == 0) closed = false;
            if (closed) ++palindromes;
        }
        CHECK(palindromes == cls.self_reciprocal.size());
    }
}

TEST_CASE("structural existence matches the exhaustive code sweep") {
    // q = 7 (q = 3 mod 4) exercises genuine obstructions at even length;
    // q = 1 mod 4 fields are obstruction-free there
    for (std::uint64_t q : {5ull, 7ull, 9ull, 13ull}) {
        Field f = q == 9 ? make_field(3, 2) : make_field(q, 1);
        for (std::uint64_t n = 2; n <= 16; ++n) {
            CodeShape sh = shape_decompose(n, f->p());
            ExistenceVerdict v = selfdual_exists_structural(f, sh);
            CHECK(v.exists == exhaustive_selfdual_exists(f, n));
            if (v.exists) {
                REQUIRE(v.witness.has_value());
                CHECK(is_self_dual(*v.witness));
                CHECK(check_matrix_selfdual(generator_matrix(*v.witness)));
                CHECK(2 * v.witness->dim() == n);
            } else {
                CHECK_FALSE(v.obstruction.empty());
                for (const auto& h : v.obstruction) CHECK(h.reciprocal(true) == h);
            }
        }
    }
}

TEST_CASE("odd lengths never carry a self-dual code") {
    // dim = n/2 is impossible, and structurally x + 1 always divides x^M + 1
    // for odd M
    Field f = make_field(5, 1);
    for (std::uint64_t n : {1ull, 3ull, 5ull, 7ull, 9ull, 15ull, 35ull}) {
        ExistenceVerdict v = selfdual_exists_structural(f, shape_decompose(n, 5));
        CHECK_FALSE(v.exists);
        bool has_linear_palindrome = false;
        for (const auto& h : v.obstruction)
            if (h == Poly(f, {1, 1})) has_linear_palindrome = true;
        CHECK(has_linear_palindrome);
    }
}

TEST_CASE("order-parity criterion reproduces the published verdicts") {
    Field f5 = make_field(5, 1);
    ExistenceVerdict v70 = selfdual_exists_paper(f5, shape_decompose(70, 5));
    CHECK_FALSE(v70.exists);
    CHECK(v70.ord_m_q == 6);

    Field f9 = make_field(3, 2);
    ExistenceVerdict v30 = selfdual_exists_paper(f9, shape_decompose(30, 3));
    CHECK_FALSE(v30.exists);
    CHECK(v30.ord_m_q == 2);

    ExistenceVerdict v126 = selfdual_exists_paper(f9, shape_decompose(126, 3));
    CHECK(v126.exists);
    CHECK(v126.ord_m_q == 3);
}

TEST_CASE("order-parity criterion rejects shapes outside its hypothesis") {
    // a = 0
    Field f5 = make_field(5, 1);
    CHECK_THROWS_AS(selfdual_exists_paper(f5, shape_decompose(15, 5)), error);
    // q = 7: 2^(a+1) = 4 does not divide q - 1 = 6
    Field f7 = make_field(7, 1);
    try {
        selfdual_exists_paper(f7, shape_decompose(14, 7));
        FAIL("hypothesis q = 1 mod 2^(a+1) not enforced");
    } catch (const error& e) {
        CHECK(e.code() == errc::hypothesis_violated);
    }
}

TEST_CASE("even characteristic is out of scope for the structural criterion") {
    Field f2 = make_field(2, 1);
    CHECK_THROWS_AS(selfdual_exists_structural(f2, shape_decompose(2, 2)), error);
    CHECK_THROWS_AS(SelfDualEnumerator(f2, shape_decompose(4, 2)), error);
    Field f4 = make_field(2, 2);
    try {
        selfdual_exists_structural(f4, shape_decompose(6, 2));
        FAIL("characteristic 2 accepted");
    } catch (const error& e) {
        CHECK(e.code() == errc::hypothesis_violated);
    }
}

TEST_CASE("self-dual enumerator emits exactly the self-dual codes") {
    struct Case {
        std::uint64_t p;
        std::uint32_t s;
        std::uint64_t n;
    };
    for (auto [p, s, n] : {Case{5, 1, 10}, Case{5, 1, 20}, Case{3, 2, 6}, Case{13, 1, 4}}) {
        Field f = make_field(p, s);
        CodeShape sh = shape_decompose(n, p);
        SelfDualEnumerator en(f, sh);
        BigUint total = en.total();
        REQUIRE(total.fits_u64());

        std::set<std::vector<std::uint32_t>> seen;
        while (auto ec = en.next()) {
            CHECK(is_self_dual(ec->code));
            CHECK(2 * ec->code.dim() == n);
            CHECK(seen.insert(ec->code.gen().values()).second);
        }
        CHECK(seen.size() == total.as_u64());

        // cross-count: sweep the full enumeration and count self-dual codes
        std::uint64_t direct = 0;
        CodeEnumerator full(f, sh, felt_from_int(f, -1));
        while (auto ec = full.next())
            if (is_self_dual(ec->code)) ++direct;
        CHECK(direct == total.as_u64());
    }
}

TEST_CASE("self-dual count follows the pair formula") {
    // (p^r + 1)^t with t the number of reciprocal pairs
    Field f = make_field(5, 1);
    CodeShape sh = shape_decompose(10, 5);
    SelfDualEnumerator en(f, sh);
    CHECK(en.classification().pairs.size() == 1);
    CHECK(en.classification().self_reciprocal.empty());
    CHECK(en.total() == 6);

    CodeShape sh20 = shape_decompose(20, 5);
    SelfDualEnumerator en20(f, sh20);
    CHECK(en20.classification().pairs.size() == 1);
    CHECK(en20.total() == 6);

    // obstruction present: x^2 + 1 is irreducible over F_7 and self-reciprocal,
    // so length 2 has no self-dual negacyclic code and nothing is emitted
    Field f7 = make_field(7, 1);
    SelfDualEnumerator en2(f7, shape_decompose(2, 7));
    CHECK(en2.total().is_zero());
    CHECK_FALSE(en2.next().has_value());
    CHECK(en2.classification().self_reciprocal.size() == 1);
}

TEST_CASE("consistency report certifies the two published disagreements") {
    Field f5 = make_field(5, 1);
    ConsistencyReport r70 = consistency_report(f5, shape_decompose(70, 5));
    CHECK(r70.structural.exists);
    CHECK(r70.paper_applicable);
    REQUIRE(r70.paper.has_value());
    CHECK_FALSE(r70.paper->exists);
    REQUIRE(r70.agree.has_value());
    CHECK_FALSE(*r70.agree);
    CHECK(r70.oracle_checked);
    CHECK(r70.oracle_confirms);
    REQUIRE(r70.structural.witness.has_value());
    CHECK(r70.structural.witness->dim() == 35);

    Field f9 = make_field(3, 2);
    ConsistencyReport r30 = consistency_report(f9, shape_decompose(30, 3));
    REQUIRE(r30.agree.has_value());
    CHECK_FALSE(*r30.agree);
    CHECK(r30.structural.exists);
    CHECK(r30.oracle_confirms);

    ConsistencyReport r126 = consistency_report(f9, shape_decompose(126, 3));
    REQUIRE(r126.agree.has_value());
    CHECK(*r126.agree);
    CHECK(r126.structural.exists);
    REQUIRE(r126.paper.has_value());
    CHECK(r126.paper->exists);
}

TEST_CASE("consistency report marks inapplicable shapes instead of disagreeing") {
    Field f7 = make_field(7, 1);
    ConsistencyReport r = consistency_report(f7, shape_decompose(14, 7));
    CHECK_FALSE(r.paper_applicable);
    CHECK_FALSE(r.paper.has_value());
    CHECK_FALSE(r.agree.has_value());
}

TEST_CASE("structural witnesses are oracle-verified at small scale") {
    // full codeword-set verification: shift closure, brute-force dual
    // equality, matrix self-duality
    Field f = make_field(5, 1);
    ExistenceVerdict v = selfdual_exists_structural(f, shape_decompose(10, 5));
    REQUIRE(v.exists);
    REQUIRE(v.witness.has_value());
    CodewordSet ws = codeword_set(*v.witness);
    CHECK(ws.words.size() == 3125);
    CHECK(check_shift_closure(ws, v.witness->lam()));
    CodewordSet dws = bruteforce_dual(ws);
    CHECK(dws.words == ws.words);
}

TEST_CASE("structural criterion is total under the parity hypothesis") {
    // wherever the order-parity criterion applies, the structural verdict is
    // defined and the report always reaches a verdict
    for (std::uint64_t q : {5ull, 9ull, 13ull, 17ull}) {
        Field f = q == 9 ? make_field(3, 2) : make_field(q, 1);
        for (std::uint64_t n = 2; n <= 40; n += 2) {
            CodeShape sh = shape_decompose(n, f->p());
            if (sh.a < 1) continue;
            if ((f->q() - 1) % (std::uint64_t{1} << (sh.a + 1)) != 0) continue;
            ConsistencyReport r = consistency_report(f, sh, false);
            CHECK(r.paper_applicable);
            CHECK(r.agree.has_value());
        }
    }
}
