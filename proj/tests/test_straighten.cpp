#include <stdexcept>
#include "doctest.h"
#include "pieri/olver.hpp"
#include "pieri/schur.hpp"
#include "pieri/straighten.hpp"

using namespace pieri;

TEST_CASE("straighten is the identity on semistandard tableaux") {
    for (auto& shape : partitions_of(4, 3)) {
        for (auto& t : ssyt_list(shape, 3)) {
            auto expr = straighten(t, 3);
            REQUIRE(expr.size() == 1);
            CHECK(expr[0].first == t);
            CHECK(expr[0].second == Rational(1));
        }
    }
}

TEST_CASE("two-box column relation has the expected sign") {
    // shape with two parts of one box: the class of [2|1] is -[1|2]
    Tableau bad{{{2}, {1}}};
    auto expr = straighten(bad, 2);
    REQUIRE(expr.size() == 1);
    CHECK(expr[0].first == Tableau{{{1}, {2}}});
    CHECK(expr[0].second == Rational(-1));
}

TEST_CASE("straightened fillings span exactly the module") {
    // rank of all straightened fillings equals the dimension, weight by weight
    for (auto& shape : std::vector<Partition>{Partition{2, 1}, Partition{2, 2}, Partition{3, 1}, Partition{2, 1, 1}}) {
        int n = 3;
        long long total = 0;
        for (auto& w : monomials_of_degree(n, shape.size())) {
            const WeightSlice& slice = weight_slice(shape, n, w);
            if (slice.fillings.empty()) continue;
            RowReducer red((int)slice.ssyt.size());
            int rank = 0;
            for (auto& expr : slice.by_filling) {
                SparseVec v;
                for (auto& [i, c] : expr) v[i] = c;
                if (red.add_row(std::move(v))) ++rank;
            }
            CHECK(rank == (int)slice.ssyt.size());
            total += (long long)slice.ssyt.size();
        }
        CHECK(total == dimension(shape, n));
    }
}

TEST_CASE("straighten is weight preserving and idempotent through re-expansion") {
    int n = 3;
    Tableau f{{{2, 3}, {1}}};  // shape (2,1), scrambled
    auto expr = straighten(f, n);
    for (auto& [t, c] : expr) {
        CHECK(t.is_semistandard());
        CHECK(t.weight(n) == f.weight(n));
        auto again = straighten(t, n);
        REQUIRE(again.size() == 1);
        CHECK(again[0].second == Rational(1));
    }
}

TEST_CASE("raising operators kill exactly the highest weight vector") {
    int n = 3;
    Partition shape{3, 1};
    // at the highest weight the slice is one-dimensional and killed by all e_t
    const WeightSlice& top = weight_slice(shape, n, {3, 1, 0});
    REQUIRE(top.ssyt.size() == 1);
    for (int t = 1; t < n; ++t) {
        auto m = raising_matrix(shape, n, {3, 1, 0}, t);
        CHECK(m[0].empty());
    }
    // a non-highest weight vector is not killed by every raising operator
    const WeightSlice& mid = weight_slice(shape, n, {2, 1, 1});
    bool some_nonzero = false;
    for (int t = 1; t < n; ++t) {
        auto m = raising_matrix(shape, n, {2, 1, 1}, t);
        for (size_t j = 0; j < mid.ssyt.size(); ++j)
            if (!m[j].empty()) some_nonzero = true;
    }
    CHECK(some_nonzero);
}

TEST_CASE("size cap guards explicit construction") {
    long long old = schur_module_size_cap();
    set_schur_module_size_cap(10);
    CHECK_THROWS_AS(enforce_size_cap(Partition{4, 2, 1}, 4), std::length_error);
    set_schur_module_size_cap(old);
    CHECK_NOTHROW(enforce_size_cap(Partition{4, 2, 1}, 4));
}
