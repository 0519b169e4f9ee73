#pragma once

#include <map>
#include <vector>

#include "pieri/linear.hpp"
#include "pieri/partition.hpp"
#include "pieri/straighten.hpp"
#include "pieri/tableau.hpp"

namespace pieri {

// Equivariant map S_beta -> Sym^b V (x) S_alpha V in semistandard bases.
// Columns follow ssyt_list(beta, n); image coordinates are (monomial, index
// into ssyt_list(alpha, n)) pairs with monomials as exponent vectors.
struct PieriInclusion {
    Partition beta, alpha;
    int n = 0;
    int box_count = 0;  // |beta/alpha|
    using Coord = std::pair<std::vector<int>, int>;
    std::vector<std::map<Coord, Rational>> columns;

    LinearMap to_linear_map() const;
    // coefficient of x^mono (x) T in the image of the column tableau
    Rational entry(const std::vector<int>& mono, const Tableau& t, const Tableau& column) const;
};

// Olver's map S_beta -> V (x) S_alpha for a single added box.
PieriInclusion olver_single_box(const Partition& beta, const Partition& alpha, int n);

// Composite Pieri inclusion along a box-removal order (paper column indices,
// one entry per removed box). Defaults to weakly increasing column order.
PieriInclusion pieri_inclusion(const Partition& beta, const Partition& alpha, int n,
                               std::vector<int> removal_order = {});

// Exterior variant: projection to wedge^b V instead of Sym^b V. The monomial
// coordinate holds the strictly increasing wedge word.
PieriInclusion pieri_inclusion_exterior(const Partition& beta, const Partition& alpha, int n,
                                        std::vector<int> removal_order = {});

// The degree-d slice of the A-linear extension
// Sym^{d-b} V (x) S_beta -> Sym^d V (x) S_alpha.
LinearMap induced_degree_map(const PieriInclusion& inc, int d);

// Composition of two induced maps on the degree-d slice:
// Sym^{d-b1-b2} (x) S_lambda -> Sym^d (x) S_nu through S_mu.
LinearMap composed_degree_map(const PieriInclusion& upper, const PieriInclusion& lower, int d);

// increasing removal order of beta/alpha (one column index per box)
std::vector<int> default_removal_order(const Partition& beta, const Partition& alpha);

// monomial exponent helpers shared by the slice builders
std::vector<std::vector<int>> monomials_of_degree(int n, int d);

}  // namespace pieri
