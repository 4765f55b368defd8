#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "constakit/code.hpp"
#include "constakit/oracle.hpp"

using namespace constakit;

namespace {

// Count the monic divisors of x^n - lam by scanning every monic polynomial of
// degree <= n/2 and pairing it with its cofactor.  Divisors of a binomial
// have a nonzero constant term, which prunes the scan.
std::uint64_t brute_divisor_count(const Field& f, std::uint64_t n, const Felt& lam) {
    Poly target = Poly::binomial(f, n, lam);
    std::uint64_t count = 0;
    for (std::uint64_t d = 0; 2 * d <= n; ++d) {
        std::uint64_t space = 1;
        for (std::uint64_t i = 0; i < d; ++i) space *= f->q();
        for (std::uint64_t enc = 0; enc < space; ++enc) {
            std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t v = enc;
            for (std::uint64_t i = 0; i < d; ++i) {
                c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % f->q());
                v /= f->q();
            }
            c.back() = 1;
            if (c[0] == 0 && d > 0) continue;
            if (!(target % Poly(f, c)).is_zero()) continue;
            count += (2 * d == n) ? 1 : 2;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("shape_decompose splits out the 2-part, odd part and p-part") {
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        for (std::uint64_t n = 1; n <= 300; ++n) {
            CodeShape sh = shape_decompose(n, p);
            CHECK(sh.p == p);
            CHECK(sh.n == n);
            CHECK(sh.two_a() * sh.m * sh.pr() == n);
            CHECK(sh.m % 2 == 1);
            CHECK(sh.m % p != 0);
            CHECK(sh.M() == sh.two_a() * sh.m);
        }
    }
    CodeShape sh = shape_decompose(70, 5);
    CHECK(sh.a == 1);
    CHECK(sh.m == 7);
    CHECK(sh.r == 1);
    CHECK_THROWS_AS(shape_decompose(0, 5), error);
}

TEST_CASE("factor_base generates every divisor exponent base") {
    Field f = make_field(5, 1);
    CodeShape sh = shape_decompose(10, 5);
    Felt lam = felt_from_int(f, -1);
    auto base = factor_base(f, sh, lam);
    REQUIRE(base.size() == 2);
    CHECK(std::is_sorted(base.begin(), base.end(), canonical_less));

    // the base multiplies to x^M - lam0 and its p^r-th power is x^n - lam
    Felt lam0 = prth_root(f, lam, sh.r);
    Poly prod = Poly::one(f);
    for (const auto& g : base) {
        CHECK(g.is_monic());
        prod = prod * g;
    }
    CHECK(prod == Poly::binomial(f, sh.M(), lam0));
    CHECK(prod.pow(sh.pr()) == Poly::binomial(f, sh.n, lam));
}

TEST_CASE("make_code validates and monicizes the generator") {
    Field f = make_field(5, 1);
    Felt lam = felt_from_int(f, -1);
    ConstaCode c = make_code(f, 10, lam, Poly(f, {2, 1}));
    CHECK(c.n() == 10);
    CHECK(c.dim() == 9);
    CHECK(c.gen() == Poly(f, {2, 1}));

    // non-monic input is scaled to its monic associate
    ConstaCode c2 = make_code(f, 10, lam, Poly(f, {4, 2}));
    CHECK(c2.gen() == Poly(f, {2, 1}));

    CHECK_THROWS_AS(make_code(f, 10, lam, Poly(f, {1, 1})), error);
    CHECK_THROWS_AS(make_code(f, 10, zero_of(f), Poly::one(f)), error);
    CHECK_THROWS_AS(make_code(f, 10, lam, Poly::zero(f)), error);
}

TEST_CASE("enumerator walks exponent vectors in lexicographic order") {
    Field f = make_field(5, 1);
    CodeShape sh = shape_decompose(10, 5);
    Felt lam = felt_from_int(f, -1);
    CodeEnumerator en(f, sh, lam);
    REQUIRE(en.base().size() == 2);
    CHECK(en.total() == 36);  // (5 + 1)^2

    std::vector<std::vector<std::uint64_t>> exps;
    std::set<std::vector<std::uint32_t>> gens;
    while (auto ec = en.next()) {
        exps.push_back(ec->exps);
        CHECK(gens.insert(ec->code.gen().values()).second);

        // generator is the exponent product over the base
        Poly expect = Poly::one(f);
        for (std::size_t i = 0; i < ec->exps.size(); ++i)
            expect = expect * en.base()[i].pow(ec->exps[i]);
        CHECK(ec->code.gen() == expect);
        CHECK(ec->code.dim() == 10 - static_cast<std::uint64_t>(expect.degree()));
    }
    REQUIRE(exps.size() == 36);
    CHECK(exps.front() == std::vector<std::uint64_t>{0, 0});
    CHECK(exps[1] == std::vector<std::uint64_t>{0, 1});
    CHECK(exps[6] == std::vector<std::uint64_t>{1, 0});
    CHECK(exps.back() == std::vector<std::uint64_t>{5, 5});
}

TEST_CASE("code count equals the exhaustive divisor count") {
    struct Case {
        std::uint64_t p;
        std::uint32_t s;
        std::uint64_t n;
        long long lam;
    };
    for (auto [p, s, n, lam] : {Case{5, 1, 4, 1}, Case{5, 1, 5, 1}, Case{5, 1, 8, 2},
                                Case{5, 1, 10, -1}, Case{3, 2, 4, -1}, Case{3, 2, 6, 1},
                                Case{3, 2, 8, 1}, Case{7, 1, 7, 3}}) {
        Field f = make_field(p, s);
        Felt lv = felt_from_int(f, lam);
        CodeEnumerator en(f, shape_decompose(n, p), lv);
        BigUint total = en.total();
        REQUIRE(total.fits_u64());
        CHECK(total.as_u64() == brute_divisor_count(f, n, lv));

        std::uint64_t emitted = 0;
        while (en.next()) ++emitted;
        CHECK(emitted == total.as_u64());
    }
}

TEST_CASE("dual inverts lambda and complements the dimension") {
    struct Case {
        std::uint64_t p;
        std::uint32_t s;
        std::uint64_t n;
        long long lam;
    };
    for (auto [p, s, n, lam] : {Case{5, 1, 10, -1}, Case{5, 1, 8, 2}, Case{3, 2, 12, 1},
                                Case{5, 2, 6, -1}}) {
        Field f = make_field(p, s);
        Felt lv = felt_from_int(f, lam);
        CodeEnumerator en(f, shape_decompose(n, p), lv);
        while (auto ec = en.next()) {
            ConstaCode d = dual(ec->code);
            CHECK(d.lam() == lv.inv());
            CHECK(d.dim() + ec->code.dim() == n);
            ConstaCode dd = dual(d);
            CHECK(dd.lam() == lv);
            CHECK(dd.gen() == ec->code.gen());
        }
    }
}

TEST_CASE("dual matches the brute-force orthogonal complement") {
    Field f = make_field(5, 1);
    Felt lam = felt_from_int(f, -1);
    CodeEnumerator en(f, shape_decompose(10, 5), lam);
    std::uint64_t checked = 0;
    while (auto ec = en.next()) {
        std::uint64_t dim = ec->code.dim();
        if (dim == 0 || dim > 6 || 10 - dim > 6) continue;  // keep both sets <= 5^6
        CodewordSet ws = codeword_set(ec->code);
        CodewordSet dual_ws = bruteforce_dual(ws);
        ConstaCode d = dual(ec->code);
        CodewordSet expect = codeword_set(d);
        CHECK(dual_ws.words == expect.words);
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("self-duality follows the exponent complement rule") {
    Field f = make_field(5, 1);
    Felt lam = felt_from_int(f, -1);
    // x^10 + 1 = ((x + 2)(x + 3))^5 and reciprocation swaps the two linears,
    // so gen (x+2)^i (x+3)^j is self-dual exactly when i + j = 5
    ConstaCode a = make_code(f, 10, lam, Poly(f, {2, 1}).pow(5));
    CHECK(is_self_dual(a));
    CHECK(dual(a).gen() == a.gen());
    std::uint64_t found = 0;
    CodeEnumerator en(f, shape_decompose(10, 5), lam);
    while (auto ec = en.next()) {
        if (is_self_dual(ec->code)) {
            CHECK(ec->code.dim() == 5);
            CHECK(dual(ec->code).gen() == ec->code.gen());
            CHECK(ec->exps[0] + ec->exps[1] == 5);
            ++found;
        }
    }
    CHECK(found == 6);  // one factor pair: p^r + 1 exponent splits

    // cyclic x^10 - 1 = ((x-1)(x+1))^5 has palindromic linears, so the same
    // complement rule forces i = 5 - i and no self-dual code exists
    ConstaCode c = make_code(f, 10, one_of(f),
                             Poly(f, {4, 1}).pow(2) * Poly(f, {1, 1}).pow(3));
    CHECK(c.dim() == 5);
    CHECK_FALSE(is_self_dual(c));
}

TEST_CASE("generator matrix rows are the shifted generator") {
    Field f = make_field(5, 1);
    ConstaCode c = make_code(f, 10, felt_from_int(f, -1), Poly(f, {2, 1}).pow(3));
    FMatrix g = generator_matrix(c);
    REQUIRE(g.rows() == c.dim());
    REQUIRE(g.cols() == 10);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            std::uint32_t expect = 0;
            if (j >= i && j - i <= static_cast<std::size_t>(c.gen().degree()))
                expect = c.gen().coeff_value(j - i);
            CHECK(g.at(i, j) == expect);
        }
    CHECK(rank(g) == c.dim());
    CHECK_THROWS_AS(generator_matrix(make_code(f, 4, one_of(f), Poly::binomial(f, 4, one_of(f)))),
                    error);
}

TEST_CASE("monomial map scales words both ways") {
    Field f = make_field(5, 1);
    MonomialMap mp{felt(f, 2), 6};
    std::vector<std::uint32_t> w = {1, 0, 3, 4, 2, 1};
    auto fwd = mp.constacyclic_to_cyclic(w);
    CHECK(mp.cyclic_to_constacyclic(fwd) == w);
    // coordinate i is scaled by delta^i
    for (std::size_t i = 0; i < w.size(); ++i)
        CHECK(fwd[i] == (felt(f, w[i]) * felt(f, 2).pow(static_cast<long long>(i))).value());
    CHECK_THROWS_AS(mp.constacyclic_to_cyclic({1, 2}), error);
}

TEST_CASE("cyclic_equivalent maps codeword sets onto each other") {
    Field f = make_field(5, 1);
    Felt lam = felt_from_int(f, -1);
    CodeEnumerator en(f, shape_decompose(10, 5), lam);
    std::uint64_t checked = 0;
    while (auto ec = en.next()) {
        if (ec->code.dim() == 0 || ec->code.dim() > 6) continue;
        auto eq = cyclic_equivalent(ec->code);
        REQUIRE(eq.has_value());
        CHECK(eq->map.delta.pow(10) == lam);
        CHECK(eq->cyclic.lam() == one_of(f));
        CHECK(eq->cyclic.gen() == ec->code.gen().substitute_scaled(eq->map.delta).monicize());

        CodewordSet ws = codeword_set(ec->code);
        CodewordSet cs = codeword_set(eq->cyclic);
        REQUIRE(ws.words.size() == cs.words.size());
        for (const auto& w : ws.words) CHECK(cs.contains(eq->map.constacyclic_to_cyclic(w)));
        for (const auto& w : cs.words) CHECK(ws.contains(eq->map.cyclic_to_constacyclic(w)));
        ++checked;
    }
    CHECK(checked >= 10);

    // lambda = 2 has no 10th root in F_5, so no cyclic image exists
    ConstaCode no = make_code(f, 10, felt(f, 2), Poly::one(f));
    CHECK_FALSE(cyclic_equivalent(no).has_value());
}

TEST_CASE("exponent vector construction rejects foreign bases") {
    Field f = make_field(5, 1);
    CodeShape sh = shape_decompose(10, 5);
    Felt lam = felt_from_int(f, -1);
    auto base = factor_base(f, sh, lam);

    ExponentVector ok{base, {2, 3}};
    ConstaCode c = build_code(f, sh, lam, ok);
    CHECK(c.gen() == base[0].pow(2) * base[1].pow(3));

    ExponentVector too_many{base, {2, 3, 1}};
    CHECK_THROWS_AS(build_code(f, sh, lam, too_many), error);
    ExponentVector out_of_range{base, {6, 0}};
    CHECK_THROWS_AS(build_code(f, sh, lam, out_of_range), error);
    ExponentVector wrong_base{{base[1], base[0]}, {2, 3}};
    CHECK_THROWS_AS(build_code(f, sh, lam, wrong_base), error);
}
