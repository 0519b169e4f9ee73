#include "doctest.h"
#include "pieri/betti.hpp"

using namespace pieri;

namespace {

BettiTable table(std::initializer_list<std::tuple<int, int, long long>> entries) {
    BettiTable t;
    for (auto& [i, j, v] : entries) t.set(i, j, Rational(v));
    return t;
}

}  // namespace

TEST_CASE("herzog-kuhl pure tables") {
    auto d1 = hk_pure_table({0, 1, 2, 4});
    CHECK(d1.at(0, 0) == Rational(3));
    CHECK(d1.at(1, 1) == Rational(8));
    CHECK(d1.at(2, 2) == Rational(6));
    CHECK(d1.at(3, 4) == Rational(1));
    auto d2 = hk_pure_table({0, 1, 3, 4});
    CHECK(d2.at(0, 0) == Rational(1));
    CHECK(d2.at(1, 1) == Rational(2));
    CHECK(d2.at(2, 3) == Rational(2));
    CHECK(d2.at(3, 4) == Rational(1));
    // Koszul: binomial coefficients
    auto k = hk_pure_table({0, 1, 2, 3});
    CHECK(k.at(0, 0) == Rational(1));
    CHECK(k.at(1, 1) == Rational(3));
    CHECK(k.at(2, 2) == Rational(3));
    CHECK(k.at(3, 3) == Rational(1));
    CHECK_THROWS(hk_pure_table({0, 1, 1, 2}));
    // uniqueness as the kernel of the HK equations: verified against a direct solve
    // sum_i (-1)^i B_i d_i^k = 0 for k = 0..c-1
    for (auto d : std::vector<DegreeSequence>{{0, 1, 2, 4}, {0, 2, 3, 7}, {0, 1, 3, 5}}) {
        auto t = hk_pure_table(d);
        for (int k2 = 0; k2 < (int)d.size() - 1; ++k2) {
            Rational sum(0);
            for (size_t i = 0; i < d.size(); ++i) {
                Rational term = t.at((int)i, d[i]);
                long long power = 1;
                for (int p = 0; p < k2; ++p) power *= d[i];
                term *= Rational(power);
                sum += (i % 2) ? -term : term;
            }
            CHECK(sum == Rational(0));
        }
    }
}

TEST_CASE("impurity and degree sequences") {
    auto pure = hk_pure_table({0, 1, 2, 4});
    CHECK(impurity(pure) == 0);
    auto b = table({{0, 0, 8}, {1, 1, 21}, {2, 2, 15}, {2, 3, 1}, {3, 4, 3}});
    CHECK(top_degree_sequence(b) == DegreeSequence{0, 1, 2, 4});
    CHECK(impurity(b) == 1);
    auto three_rows = table({{0, 0, 15}, {1, 1, 24}, {1, 2, 10}, {2, 3, 24}, {2, 4, 3}, {3, 5, 8}});
    CHECK(top_degree_sequence(three_rows) == DegreeSequence{0, 1, 3, 5});
    CHECK(bottom_degree_sequence(three_rows) == DegreeSequence{0, 2, 4, 5});
    CHECK_THROWS(impurity(BettiTable{}));
}

TEST_CASE("first worked numeric decomposition: coefficients 5/2 and 1/2") {
    auto b = table({{0, 0, 8}, {1, 1, 21}, {2, 2, 15}, {2, 3, 1}, {3, 4, 3}});
    auto dec = bs_decompose_numeric(b);
    CHECK(dec.success());
    REQUIRE(dec.steps.size() == 2);
    CHECK(dec.steps[0].coefficient == Rational(5, 2));
    CHECK(dec.steps[0].degrees == DegreeSequence{0, 1, 2, 4});
    CHECK(dec.steps[1].coefficient == Rational(1, 2));
    CHECK(dec.steps[1].degrees == DegreeSequence{0, 1, 3, 4});
    // reassembly is exact
    BettiTable sum;
    for (auto& s : dec.steps)
        for (auto& [k, v] : s.diagram.entries)
            sum.set(k.first, k.second, sum.at(k.first, k.second) + s.coefficient * v);
    CHECK(sum == b);
    // impurity strictly decreases along the steps
    CHECK(impurity(b) == 1);
}

TEST_CASE("second worked numeric decomposition: coefficients 1 and 5") {
    auto b = table({{0, 0, 8}, {1, 1, 18}, {2, 2, 6}, {2, 3, 10}, {3, 4, 6}});
    auto dec = bs_decompose_numeric(b);
    CHECK(dec.success());
    REQUIRE(dec.steps.size() == 2);
    CHECK(dec.steps[0].coefficient == Rational(1));
    CHECK(dec.steps[1].coefficient == Rational(5));
    CHECK(dec.steps[0].degrees == DegreeSequence{0, 1, 2, 4});
    CHECK(dec.steps[1].degrees == DegreeSequence{0, 1, 3, 4});
}

TEST_CASE("third worked numeric decomposition: the displayed chain of three") {
    auto b = table({{0, 0, 15}, {1, 1, 24}, {1, 2, 10}, {2, 3, 24}, {2, 4, 3}, {3, 5, 8}});
    auto dec = bs_decompose_numeric(b);
    CHECK(dec.success());
    REQUIRE(dec.steps.size() == 3);
    CHECK(dec.steps[0].coefficient == Rational(8, 5));
    CHECK(dec.steps[0].degrees == DegreeSequence{0, 1, 3, 5});
    auto first = dec.steps[0].diagram;
    CHECK(first.at(0, 0) == Rational(8));
    CHECK(first.at(1, 1) == Rational(15));
    CHECK(first.at(2, 3) == Rational(10));
    CHECK(first.at(3, 5) == Rational(3));
    CHECK(dec.steps[1].coefficient == Rational(8, 5));
    CHECK(dec.steps[1].degrees == DegreeSequence{0, 2, 3, 5});
    CHECK(dec.steps[2].degrees == DegreeSequence{0, 2, 4, 5});
    auto third = dec.steps[2].diagram;
    CHECK(third.at(0, 0) == Rational(3));
    CHECK(third.at(1, 2) == Rational(10));
    CHECK(third.at(2, 4) == Rational(15));
    CHECK(third.at(3, 5) == Rational(8));
    // the displayed diagram forces 1/5, not the misprinted 3: reassembly is exact
    CHECK(dec.steps[2].coefficient == Rational(1, 5));
    BettiTable sum;
    for (auto& s : dec.steps)
        for (auto& [k, v] : s.diagram.entries)
            sum.set(k.first, k.second, sum.at(k.first, k.second) + s.coefficient * v);
    CHECK(sum == b);
    // degree sequences chain in the partial order
    for (size_t s = 0; s + 1 < dec.steps.size(); ++s)
        for (size_t i = 0; i < dec.steps[s].degrees.size(); ++i)
            CHECK(dec.steps[s].degrees[i] <= dec.steps[s + 1].degrees[i]);
    // impurity strictly decreases step by step
    BettiTable running = b;
    int prev = impurity(running);
    for (auto& s : dec.steps) {
        for (auto& [k, v] : s.diagram.entries)
            running.set(k.first, k.second, running.at(k.first, k.second) - s.coefficient * v);
        if (running.is_zero()) break;
        int cur = impurity(running);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("tables from complexes: the nonminimal example's betti numbers") {
    auto spec = CokernelSpec::make(Partition{4, 2, 1}, {Partition{5, 3, 1}, Partition{5, 2, 2}}, 4);
    auto cone = mapping_cone_resolution(spec);
    auto minimal = minimize(cone, 2);
    auto numeric = to_numeric(from_complex(minimal));
    CHECK(numeric.at(0, 0) == Rational(140));
    CHECK(numeric.at(1, 2) == Rational(520));
    CHECK(numeric.at(2, 3) == Rational(300));
    CHECK(numeric.at(2, 4) == Rational(300));
    CHECK(numeric.at(3, 5) == Rational(45));
    CHECK(numeric.at(3, 6) == Rational(224));
    CHECK(numeric.at(4, 8) == Rational(60));
    CHECK(numeric.entries.size() == 7);
    long long totals[5] = {0, 0, 0, 0, 0};
    for (auto& [k, v] : numeric.entries) totals[k.first] += v.num().to_int64();
    CHECK(totals[0] == 140);
    CHECK(totals[1] == 520);
    CHECK(totals[2] == 600);
    CHECK(totals[3] == 269);
    CHECK(totals[4] == 60);
}

TEST_CASE("HK divisibility of numeric shadows") {
    // sum_i (-1)^i sum_j B_ij q^j divisible by (1-q)^n for finite-length complexes
    auto spec = CokernelSpec::make(Partition{2, 1}, {Partition{3, 1}, Partition{2, 2}}, 3);
    auto numeric = to_numeric(from_complex(resolve(spec)));
    // evaluate the numerator and its first n-1 derivatives at q = 1
    for (int der = 0; der < 3; ++der) {
        Rational sum(0);
        for (auto& [k, v] : numeric.entries) {
            long long c = 1;
            for (int t = 0; t < der; ++t) c *= k.second - t;
            sum += (k.first % 2 ? -v : v) * Rational(c);
        }
        CHECK(sum == Rational(0));
    }
}

TEST_CASE("equivariant pure table evaluates to the HK numbers up to scale") {
    EquivariantComplex c;
    auto t = equivariant_pure_table({0, 1, 3, 5}, 3, &c);
    CHECK(*t.at(0, 0) == SymmetricPolynomial::schur(Partition{2, 1}, 3));
    CHECK(*t.at(1, 1) == SymmetricPolynomial::schur(Partition{3, 1}, 3));
    CHECK(*t.at(2, 3) == SymmetricPolynomial::schur(Partition{3, 3}, 3));
    CHECK(*t.at(3, 5) == SymmetricPolynomial::schur(Partition{3, 3, 2}, 3));
    auto numeric = to_numeric(t);
    auto hk = hk_pure_table({0, 1, 3, 5});
    // proportional
    Rational ratio = numeric.at(0, 0) / hk.at(0, 0);
    for (auto& [k, v] : hk.entries) CHECK(numeric.at(k.first, k.second) == ratio * v);
}

TEST_CASE("equivariant decomposition of a pure table is a single positive step") {
    auto t = equivariant_pure_table({0, 2, 3, 5}, 3);
    auto dec = bs_decompose_equivariant(t);
    CHECK(dec.success());
    REQUIRE(dec.steps.size() == 1);
    CHECK(is_positive(dec.steps[0].verdict));
    // coefficient is a ratio of equal Schur polynomials, i.e. 1
    CHECK(dec.steps[0].coefficient == SchurFraction(SymmetricPolynomial::one(3)));
}

TEST_CASE("countersimplicial: the greedy aborts with certificate weight (6,3,0)") {
    // B(M + M + N) for M = coker((3) -> (2)), N = coker((3,1) -> (1,1)), n = 3
    auto m = pure_resolution(Partition{2}, Partition{3}, 3);
    auto nres = pure_resolution(Partition{1, 1}, Partition{3, 1}, 3);
    EquivariantBettiTable t;
    t.n = 3;
    for (int copy = 0; copy < 2; ++copy)
        for (auto& [k, mult] : m.terms)
            t.add(k.hom_degree, k.internal_degree, SymmetricPolynomial::schur(k.partition, 3, mult));
    for (auto& [k, mult] : nres.terms)
        t.add(k.hom_degree, k.internal_degree, SymmetricPolynomial::schur(k.partition, 3, mult));

    // sanity: the displayed table
    CHECK(*t.at(0, 0) == SymmetricPolynomial::parse("2*s(2) + s(1,1)", 3));
    CHECK(*t.at(1, 1) == SymmetricPolynomial::parse("2*s(3)", 3));
    CHECK(*t.at(1, 2) == SymmetricPolynomial::parse("s(3,1)", 3));
    CHECK(*t.at(2, 3) == SymmetricPolynomial::parse("s(3,2)", 3));
    CHECK(*t.at(2, 4) == SymmetricPolynomial::parse("2*s(3,3)", 3));
    CHECK(*t.at(3, 5) == SymmetricPolynomial::parse("2*s(3,3,1) + s(3,2,2)", 3));

    auto dec = bs_decompose_equivariant(t);
    REQUIRE_FALSE(dec.success());
    REQUIRE(dec.steps.size() == 1);
    // the step coefficient is 2 s_3 / s_31
    CHECK(dec.steps[0].coefficient ==
          SchurFraction(SymmetricPolynomial::parse("2*s(3)", 3), SymmetricPolynomial::parse("s(3,1)", 3)));
    CHECK(dec.failure->i == 2);
    CHECK(dec.failure->j == 3);
    CHECK(dec.failure->certificate_weight == std::vector<int>{6, 3, 0});
    CHECK(dec.failure->residual_numerator ==
          SymmetricPolynomial::parse("-s(6,3) + s(6,2,1) + s(5,4) + s(5,2,2) + s(4,4,1) - s(3,3,3)", 3));
    // the same failure under the bottom-sequence pivot
    auto dec2 = bs_decompose_equivariant(t, 6, true);
    CHECK_FALSE(dec2.success());
}

TEST_CASE("one-impure-column solve: numeric specialization matches the numeric greedy") {
    // the (a,b) = (3,2) member of the first displayed family
    auto spec = CokernelSpec::make(Partition{3, 2}, {Partition{4, 2}, Partition{3, 3}}, 3);
    auto t = from_complex(resolve(spec));
    auto dec = bs_decompose_equivariant(t);
    CHECK(dec.success());
    auto numeric = bs_decompose_numeric(to_numeric(t));
    CHECK(numeric.success());
    REQUIRE(dec.steps.size() == numeric.steps.size());
    for (size_t s = 0; s < dec.steps.size(); ++s) {
        CHECK(dec.steps[s].degrees == numeric.steps[s].degrees);
        // specializing the fraction at x = 1 recovers the numeric coefficient
        // relative to the two diagram scalings
        Rational eq(dec.steps[s].coefficient.num().eval_at_ones(),
                    dec.steps[s].coefficient.den().eval_at_ones());
        Rational scale(to_numeric(dec.steps[s].table).at(0, dec.steps[s].degrees[0]).num(),
                       numeric.steps[s].diagram.at(0, numeric.steps[s].degrees[0]).num());
        CHECK(eq * scale == numeric.steps[s].coefficient);
    }
}
