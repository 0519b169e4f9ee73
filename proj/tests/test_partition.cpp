#include <algorithm>
#include <set>

#include "doctest.h"
#include "pieri/critical.hpp"
#include "pieri/partition.hpp"

using namespace pieri;

TEST_CASE("dual partition counts rows of the diagram") {
    CHECK(Partition{3, 1}.dual() == Partition{2, 1, 1});
    CHECK(Partition{}.dual() == Partition{});
    CHECK(Partition{4, 4, 3, 2, 1}.dual() == Partition{5, 4, 3, 2});
    for (auto& p : partitions_of(6, 6))
        CHECK(p.dual().dual() == p);
}

TEST_CASE("vertical and horizontal strips") {
    CHECK(is_vertical_strip(Partition{5, 4, 3, 2, 2, 1}, Partition{4, 4, 3, 2, 1}));
    CHECK(is_vertical_strip(Partition{3, 1}, Partition{3, 1}));
    CHECK_FALSE(is_vertical_strip(Partition{3, 3}, Partition{1, 1}));
    CHECK_FALSE(is_vertical_strip(Partition{2}, Partition{3}));
    // duality: beta/alpha HS iff dual(beta)/dual(alpha) VS
    for (auto& b : partitions_of(5, 4))
        for (auto& a : partitions_of(3, 4))
            CHECK(is_horizontal_strip(b, a) == is_vertical_strip(b.dual(), a.dual()));
}

TEST_CASE("union and lexicographic order") {
    CHECK(partition_union(Partition{4, 3, 0}, Partition{3, 3, 3}) == Partition{4, 3, 3});
    CHECK(lex_less(Partition{3, 1, 0}, Partition{4, 3, 0}));
    Partition a{3, 2};
    CHECK(partition_union(a, a) == a);
    CHECK_FALSE(lex_less(a, a));
    // total order extending containment
    auto all = partitions_of(5, 5);
    for (auto& p : all)
        for (auto& q : all) {
            if (p == q) continue;
            CHECK(lex_less(p, q) != lex_less(q, p));
            if (q.contains(p)) CHECK_FALSE(lex_less(q, p));
        }
}

TEST_CASE("partition text round trip") {
    CHECK(Partition::parse("(5,3,1,0)") == Partition{5, 3, 1});
    CHECK(Partition::parse("()") == Partition{});
    CHECK(Partition{5, 3, 1}.str() == "(5,3,1)");
    CHECK_THROWS(Partition::parse("(1,2)"));
}

TEST_CASE("critical boxes follow the defining formula") {
    // the worked width-8 example: boxes at rows alpha_{j-1}+1 for columns 2..8
    Partition alpha{4, 4, 3, 2, 1}, beta{5, 4, 3, 2, 2, 1};
    auto cb = critical_boxes(alpha, beta, 8);
    REQUIRE(cb.boxes.size() == 7);
    std::vector<int> rows, cols;
    for (auto& b : cb.boxes) {
        rows.push_back(b.row);
        cols.push_back(b.column);
    }
    CHECK(cols == std::vector<int>{2, 3, 4, 5, 6, 7, 8});
    CHECK(rows == std::vector<int>{5, 5, 4, 3, 2, 1, 1});

    auto cb2 = critical_boxes(Partition{3, 1}, Partition{5, 1}, 4);
    std::vector<int> rows2;
    for (auto& b : cb2.boxes) rows2.push_back(b.row);
    CHECK(rows2 == std::vector<int>{4, 2, 1});

    // strip entirely in column n leaves no critical boxes
    CHECK(critical_boxes(Partition{2, 2}, Partition{2, 2, 1}, 3).boxes.empty());
    CHECK_THROWS(critical_boxes(Partition{3, 3}, Partition{3, 3}, 4));
}

namespace {

// oracle: filter the power set of critical-box columns for the run condition
std::set<std::vector<int>> admissible_by_powerset(const Partition& alpha, const Partition& beta, int n,
                                                  int size) {
    auto cols = strip_columns(alpha, beta);
    std::set<int> anchors;
    for (int c : cols)
        if (c + 1 <= n) anchors.insert(c + 1);
    int c1 = cols.front();
    std::vector<int> candidates;
    for (int j = c1 + 1; j <= n; ++j) candidates.push_back(j);
    std::set<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << candidates.size()); ++mask) {
        std::vector<int> sub;
        for (size_t i = 0; i < candidates.size(); ++i)
            if (mask & (1u << i)) sub.push_back(candidates[i]);
        if ((int)sub.size() != size) continue;
        bool ok = true;
        for (size_t i = 0; i < sub.size(); ++i) {
            bool run_start = i == 0 || sub[i - 1] + 1 != sub[i];
            if (run_start && !anchors.count(sub[i])) ok = false;
        }
        if (ok) out.insert(sub);
    }
    return out;
}

}  // namespace

TEST_CASE("admissible subsets match the worked width-8 example") {
    Partition alpha{4, 4, 3, 2, 1}, beta{5, 4, 3, 2, 2, 1};
    // generated by arbitrary unions of {2},{2,3},{2,3,4},{2,3,4,5},{6},{7},{7,8}
    auto ad2 = admissible_subsets(alpha, beta, 8, 2);
    std::set<std::vector<int>> got;
    for (auto& a : ad2) got.insert(a.columns);
    CHECK(got == std::set<std::vector<int>>{{2}, {6}, {7}});
    CHECK(admissible_subsets(alpha, beta, 8, 1).size() == 1);
    CHECK(admissible_subsets(alpha, beta, 8, 1)[0].columns.empty());

    for (int i = 1; i <= 6; ++i) {
        auto ad = admissible_subsets(alpha, beta, 8, i);
        std::set<std::vector<int>> lhs;
        for (auto& a : ad) lhs.insert(a.columns);
        CHECK(lhs == admissible_by_powerset(alpha, beta, 8, i - 1));
    }
}

TEST_CASE("admissible subsets against power-set oracle on a grid") {
    for (auto& beta : partitions_of(6, 4)) {
        for (auto& alpha : partitions_of(4, 4)) {
            if (!is_vertical_strip(beta, alpha) || beta == alpha) continue;
            for (int i = 1; i <= 5; ++i) {
                auto ad = admissible_subsets(alpha, beta, 4, i);
                std::set<std::vector<int>> lhs;
                for (auto& a : ad) lhs.insert(a.columns);
                CHECK(lhs == admissible_by_powerset(alpha, beta, 4, i - 1));
                std::set<Partition> images;
                for (auto& J : ad) {
                    Partition bJ = beta_of(alpha, beta, J.columns);
                    CHECK(bJ.contains(beta));
                    // beta(J) determines J within a fixed stage
                    CHECK(images.insert(bJ).second);
                }
            }
        }
    }
}

TEST_CASE("beta_of builds the smallest containing partition") {
    Partition alpha{5, 3, 1}, beta{6, 4, 1};
    CHECK(beta_of(alpha, beta, {2}) == Partition{6, 6, 1});
    CHECK(beta_of(alpha, beta, {3}) == Partition{6, 4, 4});
    CHECK(beta_of(alpha, beta, {2, 3}) == Partition{6, 6, 4});
    CHECK(beta_of(alpha, beta, {3, 4}) == Partition{6, 4, 4, 2});
    CHECK(beta_of(alpha, beta, {}) == beta);
}

TEST_CASE("multi-admissible stages reproduce the single-columns example") {
    Partition alpha{4, 3, 1};
    std::vector<Partition> betas{Partition{6, 3, 1}, Partition{4, 3, 3}};
    auto stage = [&](int i) {
        std::set<Partition> got;
        for (auto& m : multi_admissible(alpha, betas, 4, i)) got.insert(m.beta_J);
        return got;
    };
    CHECK(stage(1) == std::set<Partition>{Partition{6, 3, 1}, Partition{4, 3, 3}});
    CHECK(stage(2) == std::set<Partition>{Partition{6, 5, 1}, Partition{6, 3, 3}, Partition{4, 3, 3, 2}});
    CHECK(stage(3) == std::set<Partition>{Partition{6, 5, 3}, Partition{6, 3, 3, 2}});
    // degree 4: beta^1(2,3) u beta^2 = beta^1(2,3) is discarded, and (6,5,4,2) is not minimal
    CHECK(stage(4) == std::set<Partition>{Partition{6, 5, 3, 2}});
    CHECK(multi_admissible(alpha, betas, 4, 5).empty());
}

TEST_CASE("multi-admissible rejects bad specs and reduces to the single case") {
    Partition alpha{3, 1};
    CHECK_THROWS(multi_admissible(alpha, {Partition{4, 2}}, 3, 1));           // two columns
    CHECK_THROWS(multi_admissible(alpha, {Partition{3, 1}}, 3, 1));           // empty strip
    CHECK_THROWS(multi_admissible(alpha, {Partition{3, 2}, Partition{5, 1}}, 3, 1));  // lex order
    for (int i = 1; i <= 3; ++i) {
        auto multi = multi_admissible(alpha, {Partition{5, 1}}, 3, i);
        auto single = admissible_subsets(alpha, Partition{5, 1}, 3, i);
        REQUIRE(multi.size() == single.size());
        for (size_t k = 0; k < multi.size(); ++k)
            CHECK(multi[k].beta_J == beta_of(alpha, Partition{5, 1}, single[k].columns));
    }
    // returned beta(J) are pairwise incomparable within a stage
    Partition a2{4, 2, 1};
    std::vector<Partition> b2{Partition{5, 2, 1}, Partition{4, 4, 1}, Partition{4, 2, 2}};
    for (int i = 1; i <= 4; ++i) {
        auto ms = multi_admissible(a2, b2, 4, i);
        for (auto& x : ms)
            for (auto& y : ms)
                if (!(x.beta_J == y.beta_J)) CHECK_FALSE(x.beta_J.contains(y.beta_J));
    }
}
