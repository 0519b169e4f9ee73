#pragma once

#include <optional>

#include "pieri/complex.hpp"
#include "pieri/partition.hpp"

namespace pieri {

// Multiplicity of S_lambda in Tor_i(M, K)_j for M given by the presentation, i.e.
// the exact number of degree-j generators of shape lambda in homological
// degree i of the minimal resolution. Computed as Koszul homology of the
// presented module restricted to highest-weight subspaces; every matrix comes
// from the explicit Olver presentation. Returns nullopt when the working
// slices exceed the effort-scaled size budget.
std::optional<long long> tor_multiplicity(const CokernelSpec& spec, const Partition& lambda,
                                          int hom_degree, int internal_degree, int effort = 1);

}  // namespace pieri
