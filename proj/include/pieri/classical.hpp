#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pieri/complex.hpp"
#include "pieri/partition.hpp"
#include "pieri/rational.hpp"

namespace pieri {

enum class Family { B, C, D };

// Rank-n classical group of type B (SO(2n+1)), C (Sp(2n)) or D (SO(2n)).
struct GroupType {
    Family family;
    int rank;

    int tau() const { return family == Family::B ? 1 : 0; }
    int dim_f() const { return 2 * rank + tau(); }
    // doubled rho entries, so type B stays integral
    std::vector<int> rho2() const;
    bool is_dominant(const std::vector<int>& w) const;
    std::string str() const;
};

using Weight = std::vector<int>;

struct BottResult {
    bool zero = true;
    int degree = 0;       // cohomological degree ell(sigma)
    Weight weight;        // highest weight of the cohomology group (dual applied)
    bool dualized = false;  // whether taking the dual changed the weight
};

// The dotted Weyl normal form of w: either a nontrivial stabilizer (no
// cohomology) or the unique dominant representative with its length.
BottResult dotted_bott(const GroupType& g, const Weight& w);

// Cohomology of S_lambda Q (x) wedge^i R-perp on the isotropic Grassmannian,
// per the closed strip formulas; keys are cohomological degrees.
std::map<int, std::vector<Weight>> wedge_cohomology(const GroupType& g, const Partition& lambda, int i);

// Same cohomology computed through the Pieri expansion and the dotted Weyl
// action; the independent route used as an oracle.
std::map<int, std::vector<Weight>> wedge_cohomology_bott(const GroupType& g, const Partition& lambda,
                                                         int i);

// Terms of the minimal free resolution of the geometric module attached to
// lambda: per homological degree, (internal degree, weight, grade) where grade
// records the H^0/H^1 filtration step.
struct GeometricTerm {
    int hom_degree;
    int internal_degree;
    Weight weight;
    int grade;  // 0 for H^0 terms, 1 for H^1 terms
};
std::vector<GeometricTerm> geometric_module_terms(const GroupType& g, const Partition& lambda);

// Assembled iterated-cone term list for the orthosymplectic analogue of a
// Pieri resolution, with the minimality verdict of the hypothesis check.
struct SheafPieriTerms {
    std::vector<GeometricTerm> terms;  // hom_degree = cone degree
    bool minimal_claim = false;        // type C, or no linear differentials
    bool linear_differential = false;  // hypothesis failure flag for B/D
};
SheafPieriTerms sheaf_pieri_terms(const GroupType& g, const Partition& alpha,
                                  const std::vector<Partition>& betas);

// Stable-range tensor product decomposition V_lambda (x) V_mu.
std::map<Partition, long long> newell_littlewood(const Partition& lambda, const Partition& mu, int n);

// Weyl dimension of the irreducible V_lambda for the classical group.
long long classical_dimension(const GroupType& g, const Weight& lambda);

std::string weight_str(const Weight& w);
Weight parse_weight(const std::string& text, int rank);

}  // namespace pieri
