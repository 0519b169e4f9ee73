#pragma once

#include <vector>

#include "pieri/linear.hpp"
#include "pieri/partition.hpp"
#include "pieri/rational.hpp"
#include "pieri/tableau.hpp"

namespace pieri {

// Linear combination of semistandard tableaux of one shape.
using TableauCombination = std::vector<std::pair<Tableau, Rational>>;

// Expresses the class of a filling (rows weakly increasing) in the
// semistandard basis of the Schur module. Idempotent on semistandard input.
// The quotient is by single-box exchange relations between adjacent rows,
// escalating to multi-box exchanges only if the rank certificate demands it.
TableauCombination straighten(const Tableau& filling, int n);

// Straightening data for one (shape, n, weight) slice, cached globally.
struct WeightSlice {
    std::vector<Tableau> ssyt;                               // basis, in ssyt_with_content order
    std::vector<std::vector<std::pair<int, Rational>>> by_filling;  // filling index -> expansion
    std::vector<Tableau> fillings;                           // all fillings of this content
    int filling_index(const Tableau& t) const;
};

const WeightSlice& weight_slice(const Partition& shape, int n, const std::vector<int>& w);

// Matrix of the raising operator e_t on the weight-w slice of the Schur
// module: rows index ssyt of weight w + eps_t - eps_{t+1}, columns ssyt of
// weight w.
std::vector<SparseVec> raising_matrix(const Partition& shape, int n, const std::vector<int>& w, int t);

// Maximum allowed module dimension for explicit-matrix work; throws past it.
long long schur_module_size_cap();
void set_schur_module_size_cap(long long cap);
void enforce_size_cap(const Partition& shape, int n);

}  // namespace pieri
