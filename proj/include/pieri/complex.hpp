#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pieri/partition.hpp"
#include "pieri/schur.hpp"

namespace pieri {

// Generator-level description of an equivariant complex of free modules:
// multiplicity of A(-internalDegree) (x) S_partition at each homological degree.
struct TermKey {
    int hom_degree;
    int internal_degree;
    Partition partition;
    bool operator<(const TermKey& o) const {
        if (hom_degree != o.hom_degree) return hom_degree < o.hom_degree;
        if (internal_degree != o.internal_degree) return internal_degree < o.internal_degree;
        return partition < o.partition;
    }
    bool operator==(const TermKey& o) const {
        return hom_degree == o.hom_degree && internal_degree == o.internal_degree &&
               partition == o.partition;
    }
};

enum class Provenance { GuaranteedMinimal, MappingConePossiblyNonminimal };

// A candidate cancellation between equal (partition, degree) terms in adjacent
// homological degrees, annotated by minimize when ranks are not computed.
struct CancellationCandidate {
    Partition partition;
    int internal_degree;
    int lower_hom_degree;  // pairs degrees (lower, lower+1)
    long long multiplicity_low, multiplicity_high;
};

struct EquivariantComplex {
    int n = 0;
    std::map<TermKey, long long> terms;
    Provenance provenance = Provenance::GuaranteedMinimal;
    std::vector<CancellationCandidate> candidates;  // filled by minimize when not cancelling

    void add(int hom, int internal, const Partition& p, long long mult = 1);
    int length() const;  // largest nonempty homological degree
    long long multiplicity(int hom, int internal, const Partition& p) const;
    // terms of one homological degree
    std::vector<std::pair<TermKey, long long>> slice(int hom) const;
    Partition generator() const;                 // the degree-0 partition
    std::vector<Partition> relations() const;    // degree-1 partitions, lex-decreasing
    bool operator==(const EquivariantComplex& o) const { return n == o.n && terms == o.terms; }
};

// Presentation data: coker( (+)_i A(-|beta^i/alpha|) (x) S_{beta^i} -> A (x) S_alpha ).
struct CokernelSpec {
    Partition alpha;
    std::vector<Partition> relations;  // strictly lex-decreasing, pairwise non-nested vertical strips
    int n = 0;

    void validate() const;
    static CokernelSpec make(Partition alpha, std::vector<Partition> betas, int n);  // sorts input
};

// The pure resolution for beta/alpha supported in column 1: terms alpha(d,i)
// with jumps e_1 = beta_1 - alpha_1, e_i = alpha_{i-1} - alpha_i + 1.
EquivariantComplex pure_resolution(const Partition& alpha, const Partition& beta, int n);

// The e_1 pure complexes with jump sequence e = (0, e_1, ..., e_n): i boxes in
// column 1 and e_1 - i in column n.
std::vector<EquivariantComplex> pure_family(const std::vector<int>& e, int n);

// Theorem-level terms for one relation: F_i = (+)_{J in Ad(alpha;beta)_i} beta(J).
EquivariantComplex pieri_resolution_single(const Partition& alpha, const Partition& beta, int n);

// Minimal resolution when every relation is a single column.
EquivariantComplex pieri_resolution_columns(const CokernelSpec& spec);

// Iterated mapping cone for general relation lists; possibly nonminimal.
EquivariantComplex mapping_cone_resolution(const CokernelSpec& spec);

// Convenience dispatcher: single relation / single columns / general cone.
EquivariantComplex resolve(const CokernelSpec& spec);

// GL-decomposition of the cokernel module through the given degree:
// all lambda with (lambda, alpha) in VS, |lambda/alpha| <= bound, and
// (lambda, beta^i) not in VS for every relation.
std::vector<std::pair<Partition, int>> cokernel_character(const CokernelSpec& spec, int degree_bound);

struct EulerCheck {
    bool divisible = false;        // numerator divisible by prod (1 - x_k t)
    bool finite_length = false;    // quotient terminates (Cohen-Macaulay of codim n)
    bool schur_positive = false;   // every computed quotient coefficient is a character
    std::vector<SymmetricPolynomial> quotient;  // H_M(t) coefficients, degree 0.. bound
};

// Forms sum_i (-1)^i ch(F_i) t^j and divides by prod_k (1 - x_k t); checks the
// quotient is a genuine (truncated) Hilbert series.
EulerCheck verify_euler(const EquivariantComplex& c, int degree_bound = -1);

// Candidate cancellations and, effort permitting, exact minimization. Exact
// multiplicities come from Koszul-homology ranks computed from the
// presentation's Olver matrices (see tor.hpp).
EquivariantComplex minimize(const EquivariantComplex& c, int effort = 1);

std::string render_text(const EquivariantComplex& c, bool diagrams = false);

}  // namespace pieri
