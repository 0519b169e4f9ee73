#include "doctest.h"
#include "pieri/fraction.hpp"

using namespace pieri;

namespace {
SymmetricPolynomial S(std::initializer_list<int> p, int n, long long c = 1) {
    return SymmetricPolynomial::schur(Partition(p), n, c);
}
}  // namespace

TEST_CASE("fraction arithmetic and cross-multiplied equality") {
    int n = 2;
    SchurFraction a(S({4}, n) - S({3, 1}, n));
    SchurFraction b(S({7}, n), S({3}, n));
    CHECK(a == b);  // s_3(s_4 - s_31) = s_7
    CHECK(a + b == b * SchurFraction(S({}, n, 2)));
    CHECK((a - b).is_zero());  // the cleared numerator cancels exactly
    CHECK((a - b) == SchurFraction(SymmetricPolynomial(n)));
    CHECK(a * SchurFraction(S({3}, n)) == SchurFraction(S({7}, n)));
}

TEST_CASE("positivity ladder finds witnesses") {
    int n = 2;
    auto v1 = check_schur_positive(SchurFraction(S({4}, n) - S({3, 1}, n)));
    REQUIRE(is_positive(v1));
    auto w1 = std::get<Positive>(v1).witness;
    CHECK(w1.is_schur_positive());
    CHECK((w1 * (S({4}, n) - S({3, 1}, n))).is_schur_positive());

    auto v2 = check_schur_positive(SchurFraction(S({4}, n) - S({3, 1}, n) - S({2, 2}, n)), 8);
    REQUIRE(is_positive(v2));
    auto w2 = std::get<Positive>(v2).witness;
    CHECK((w2 * (S({4}, n) - S({3, 1}, n) - S({2, 2}, n))).is_schur_positive());

    // already Schur-positive numerator and denominator
    auto v3 = check_schur_positive(SchurFraction(S({2, 1}, n), S({1}, n)));
    CHECK(is_positive(v3));
}

TEST_CASE("the countersimplicial entry is refuted with weight (6,3,0)") {
    int n = 3;
    SymmetricPolynomial f =
        -S({6, 3}, n) + S({6, 2, 1}, n) + S({5, 4}, n) + S({5, 2, 2}, n) + S({4, 4, 1}, n) - S({3, 3, 3}, n);
    auto v = check_schur_positive(SchurFraction(f));
    REQUIRE(is_not_positive(v));
    CHECK(std::get<NotPositive>(v).certificate_weight == std::vector<int>{6, 3, 0});
    // certificate verifiable by re-expansion
    auto mono = monomial_expansion(f);
    CHECK(mono.at({6, 3, 0}) < 0);
}

TEST_CASE("positive times positive never refutes") {
    int n = 2;
    std::vector<SchurFraction> positives = {
        SchurFraction(S({4}, n) - S({3, 1}, n)),
        SchurFraction(S({2}, n), S({1, 1}, n)),
        SchurFraction(S({3, 2}, n)),
    };
    for (auto& a : positives)
        for (auto& b : positives) {
            auto v = check_schur_positive(a * b, 8);
            CHECK_FALSE(is_not_positive(v));
        }
}

TEST_CASE("zero and sign normalization") {
    int n = 2;
    CHECK(is_positive(check_schur_positive(SchurFraction(SymmetricPolynomial(n)))));
    // -f / -g with f, g Schur-positive is positive after orientation
    auto v = check_schur_positive(SchurFraction(-S({2}, n), -S({1}, n)));
    CHECK(is_positive(v));
}
