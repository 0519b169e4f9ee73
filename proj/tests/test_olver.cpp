#include <random>

#include "doctest.h"
#include "pieri/critical.hpp"
#include "pieri/olver.hpp"
#include "pieri/schur.hpp"

using namespace pieri;

namespace {

bool weight_homogeneous(const PieriInclusion& inc) {
    const auto& dom = ssyt_list(inc.beta, inc.n);
    const auto& cod = ssyt_list(inc.alpha, inc.n);
    for (size_t j = 0; j < inc.columns.size(); ++j) {
        auto wj = dom[j].weight(inc.n);
        for (auto& [coord, c] : inc.columns[j]) {
            auto wt = cod[coord.second].weight(inc.n);
            for (int i = 0; i < inc.n; ++i) wt[i] += coord.first[i];
            if (wt != wj) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("single box map on a single row is the obvious one") {
    // beta = (1), alpha = (): V -> V (x) K
    auto inc = olver_single_box(Partition{1}, Partition{}, 2);
    REQUIRE(inc.columns.size() == 2);
    for (size_t j = 0; j < 2; ++j) {
        REQUIRE(inc.columns[j].size() == 1);
        auto& [coord, c] = *inc.columns[j].begin();
        CHECK(c == Rational(1));
        CHECK(coord.first[j] == 1);
    }
}

TEST_CASE("canonical tableau maps to beta_k x_k (x) T_alpha plus lower terms") {
    struct Case {
        Partition beta, alpha;
        int n;
    };
    for (auto& [beta, alpha, n] : std::vector<Case>{{Partition{2, 1}, Partition{1, 1}, 2},
                                                    {Partition{2, 1}, Partition{2}, 2},
                                                    {Partition{3, 2}, Partition{2, 2}, 3},
                                                    {Partition{3, 2, 1}, Partition{3, 2}, 3}}) {
        int k = 0;
        for (int j = 1; j <= beta.length(); ++j)
            if (beta.part(j) != alpha.part(j)) k = j;
        auto inc = olver_single_box(beta, alpha, n);
        std::vector<int> ek(n, 0);
        ek[k - 1] = 1;
        Rational lead = inc.entry(ek, canonical_tableau(alpha), canonical_tableau(beta));
        CHECK(lead == Rational(beta.part(k)));
    }
}

TEST_CASE("two-box composition coefficient matches the closed form") {
    // remove column j then column i (i < j): coefficient of x_i x_j (x) T_alpha
    // equals beta_i beta_j (1 - 1/(beta_i - beta_j + j - i))
    struct Case {
        Partition beta, alpha;
        int n;
    };
    for (auto& [beta, alpha, n] : std::vector<Case>{{Partition{2, 1}, Partition{1}, 2},
                                                    {Partition{3, 1}, Partition{2}, 2},
                                                    {Partition{3, 2}, Partition{2, 1}, 3},
                                                    {Partition{4, 2}, Partition{3, 1}, 3}}) {
        auto cols = strip_columns(alpha, beta);
        REQUIRE(cols.size() == 2);
        int i = cols[0], j = cols[1];
        auto inc = pieri_inclusion(beta, alpha, n, {j, i});  // decreasing order
        std::vector<int> mono(n, 0);
        mono[i - 1] += 1;
        mono[j - 1] += 1;
        Rational got = inc.entry(mono, canonical_tableau(alpha), canonical_tableau(beta));
        long long bi = beta.part(i), bj = beta.part(j);
        Rational expect = Rational(bi * bj) * (Rational(1) - Rational(1, bi - bj + j - i));
        CHECK(got == expect);
    }
}

TEST_CASE("increasing order leading coefficient is the falling product") {
    // coefficient of x^{strip} (x) T_alpha under f_1 equals prod_j beta_j^(falling m_j)
    struct Case {
        Partition beta, alpha;
        int n;
    };
    for (auto& [beta, alpha, n] : std::vector<Case>{{Partition{2, 1}, Partition{1}, 2},
                                                    {Partition{5, 1}, Partition{3, 1}, 2},
                                                    {Partition{3, 2, 1}, Partition{2, 1}, 3},
                                                    {Partition{3, 3, 1}, Partition{3, 1}, 3}}) {
        auto inc = pieri_inclusion(beta, alpha, n);
        std::vector<int> mono(n, 0);
        long long expect = 1;
        for (int j = 1; j <= beta.length(); ++j) {
            int m = beta.part(j) - alpha.part(j);
            mono[j - 1] += m;
            for (int t = 0; t < m; ++t) expect *= beta.part(j) - t;
        }
        Rational got = inc.entry(mono, canonical_tableau(alpha), canonical_tableau(beta));
        CHECK(got == Rational(expect));
    }
}

TEST_CASE("pieri inclusions over the small grid: rank, weights, proportionality, scalar") {
    int checked_pairs = 0, checked_swaps = 0;
    for (int n = 2; n <= 3; ++n) {
        for (int bsz = 1; bsz <= 6; ++bsz) {
            for (auto& beta : partitions_of(bsz, n)) {
                for (int asz = 0; asz < bsz; ++asz) {
                    for (auto& alpha : partitions_of(asz, n)) {
                        if (!is_vertical_strip(beta, alpha)) continue;
                        auto f1 = pieri_inclusion(beta, alpha, n);
                        CHECK(weight_homogeneous(f1));
                        CHECK(f1.to_linear_map().rank() == dimension(beta, n));
                        ++checked_pairs;

                        auto order = default_removal_order(beta, alpha);
                        for (size_t i = 0; i + 1 < order.size(); ++i) {
                            if (order[i] == order[i + 1]) continue;
                            auto swapped = order;
                            std::swap(swapped[i], swapped[i + 1]);
                            auto fs = pieri_inclusion(beta, alpha, n, swapped);
                            // proportional, with the adjacent-transposition scalar taken
                            // at the shape seen by the swapped pair
                            auto lm1 = f1.to_linear_map();
                            auto lms = fs.to_linear_map();
                            auto q = proportionality_ratio(lms.columns, lm1.columns);
                            REQUIRE(q.has_value());
                            int ci = order[i], cj = order[i + 1];
                            int removed_before = (int)std::count(order.begin(), order.begin() + i, ci);
                            Rational expect = Rational(1) - Rational(1, beta.part(ci) - removed_before -
                                                                            beta.part(cj) + cj - ci);
                            CHECK(*q == expect);
                            // the closed formula verbatim whenever column ci was untouched
                            if (removed_before == 0)
                                CHECK(*q == Rational(1) -
                                                Rational(1, beta.part(ci) - beta.part(cj) + cj - ci));
                            ++checked_swaps;
                        }
                    }
                }
            }
        }
    }
    CHECK(checked_pairs > 50);
    CHECK(checked_swaps > 20);
}

TEST_CASE("exterior variant: transposition scalar is 1 + 1/(...) and maps are nonzero") {
    auto order_valid = [](const Partition& beta, const Partition& alpha, std::vector<int> order) {
        std::vector<int> parts = beta.parts();
        for (int c : order) {
            if (c > (int)parts.size() || parts[c - 1] <= alpha.part(c)) return false;
            parts[c - 1] -= 1;
            for (size_t k = 0; k + 1 < parts.size(); ++k)
                if (parts[k] < parts[k + 1]) return false;
        }
        return true;
    };
    int checked = 0;
    for (int n = 2; n <= 3; ++n) {
        for (int bsz = 2; bsz <= 4; ++bsz) {
            for (auto& beta : partitions_of(bsz, n)) {
                for (auto& alpha : partitions_of(bsz - 2, n)) {
                    if (!is_horizontal_strip(beta, alpha)) continue;
                    auto cols = strip_columns(alpha, beta);
                    REQUIRE(cols.size() == 2);
                    int i = cols[0], j = cols[1];
                    auto fdec = pieri_inclusion_exterior(beta, alpha, n, {j, i});
                    CHECK_FALSE(fdec.to_linear_map().is_zero());
                    if (!order_valid(beta, alpha, {i, j})) continue;
                    auto finc = pieri_inclusion_exterior(beta, alpha, n, {i, j});
                    auto q = proportionality_ratio(fdec.to_linear_map().columns,
                                                   finc.to_linear_map().columns);
                    REQUIRE(q.has_value());
                    // on signed sorted wedge coordinates the swapped order picks up
                    // the orientation sign alongside the 1 + 1/(...) factor
                    Rational mag = Rational(1) + Rational(1, beta.part(i) - beta.part(j) + j - i);
                    CHECK((*q == -mag || *q == mag));
                    CHECK_FALSE(q->is_zero());
                    ++checked;
                }
            }
        }
    }
    CHECK(checked >= 5);
}

TEST_CASE("acyclicity lemma: two-step compositions are nonzero") {
    // nu subset mu subset lambda, all three strips vertical: the composite
    // S_lambda -> A (x) S_mu -> A (x) S_nu is nonzero in its lowest degree
    std::mt19937 rng(20240817);
    int done = 0;
    while (done < 20) {
        int n = 2 + (int)(rng() % 2);
        auto nus = partitions_of((int)(rng() % 3), n);
        Partition nu = nus[rng() % nus.size()];
        auto mus = vertical_strip_extensions(nu, 1 + (int)(rng() % 2), n);
        if (mus.empty()) continue;
        Partition mu = mus[rng() % mus.size()];
        auto lams = vertical_strip_extensions(mu, 1 + (int)(rng() % 2), n);
        std::vector<Partition> ok;
        for (auto& l : lams)
            if (is_vertical_strip(l, nu)) ok.push_back(l);
        if (ok.empty()) continue;
        Partition lambda = ok[rng() % ok.size()];
        auto upper = pieri_inclusion(lambda, mu, n);
        auto lower = pieri_inclusion(mu, nu, n);
        auto comp = composed_degree_map(upper, lower, lambda.size() - nu.size());
        CHECK_FALSE(comp.is_zero());
        CHECK(comp.rank() > 0);
        ++done;
    }
    // a pinned small instance
    auto upper = pieri_inclusion(Partition{2, 1}, Partition{2}, 2);
    auto lower = pieri_inclusion(Partition{2}, Partition{1}, 2);
    CHECK(composed_degree_map(upper, lower, 2).rank() > 0);
}

TEST_CASE("induced degree map cokernel matches the cokernel decomposition") {
    // coker dimension in degree d is the sum of dim S_lambda over strips
    // lambda of alpha avoiding beta
    Partition alpha{2, 1}, beta{3, 2};
    int n = 3;
    auto inc = pieri_inclusion(beta, alpha, n);
    for (int d = inc.box_count; d <= 4; ++d) {
        auto slice = induced_degree_map(inc, d);
        long long codim = (long long)slice.row_labels.size() - slice.rank();
        long long expect = 0;
        for (auto& lam : vertical_strip_extensions(alpha, d, n))
            if (!is_vertical_strip(lam, beta)) expect += dimension(lam, n);
        CHECK(codim == expect);
    }
}
