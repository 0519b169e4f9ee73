#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pieri/complex.hpp"
#include "pieri/fraction.hpp"
#include "pieri/rational.hpp"
#include "pieri/schur.hpp"

namespace pieri {

// Numeric graded Betti table: (homological degree i, internal degree j) -> count.
// Displayed with the usual convention: column i, row j - i.
struct BettiTable {
    std::map<std::pair<int, int>, Rational> entries;

    Rational at(int i, int j) const;
    void set(int i, int j, Rational v);
    bool is_zero() const { return entries.empty(); }
    int columns() const;  // number of nonzero homological degrees
    bool operator==(const BettiTable& o) const { return entries == o.entries; }
    std::string str() const;
};

struct EquivariantBettiTable {
    int n = 0;
    std::map<std::pair<int, int>, SymmetricPolynomial> entries;

    const SymmetricPolynomial* at(int i, int j) const;
    void add(int i, int j, const SymmetricPolynomial& f);
};

using DegreeSequence = std::vector<int>;  // strictly increasing, d_0 = 0 for pure use

// Herzog-Kuhl pure table for the degree sequence, scaled to the minimal
// positive integral entries.
BettiTable hk_pure_table(const DegreeSequence& d);

int impurity(const BettiTable& b);
DegreeSequence top_degree_sequence(const BettiTable& b);
DegreeSequence bottom_degree_sequence(const BettiTable& b);

struct DecompositionStep {
    Rational coefficient;
    DegreeSequence degrees;
    BettiTable diagram;
};

struct Decomposition {
    std::vector<DecompositionStep> steps;
    BettiTable residual;  // zero on success
    bool success() const { return residual.is_zero(); }
};

// Greedy chain decomposition along top degree sequences (bottom with
// use_bottom). Non-decomposable inputs end with a nonzero residual.
Decomposition bs_decompose_numeric(const BettiTable& b, bool use_bottom = false);

// Equivariant tables from complexes and their numeric shadows.
EquivariantBettiTable from_complex(const EquivariantComplex& c);
BettiTable to_numeric(const EquivariantBettiTable& t);

// The equivariant pure table with the given degree sequence (the column-one
// resolution family), optionally returning the underlying complex.
EquivariantBettiTable equivariant_pure_table(const DegreeSequence& d, int n,
                                             EquivariantComplex* complex_out = nullptr);

struct EquivariantStep {
    SchurFraction coefficient;
    DegreeSequence degrees;
    EquivariantBettiTable table;
    PositivityVerdict verdict;
};

struct EquivariantFailure {
    int i = 0, j = 0;                       // entry where certification failed
    SymmetricPolynomial residual_numerator;  // cleared residual entry
    std::vector<int> certificate_weight;
};

struct EquivariantDecomposition {
    std::vector<EquivariantStep> steps;
    std::optional<EquivariantFailure> failure;
    bool success() const { return !failure.has_value(); }
};

// Greedy equivariant decomposition with Schur-fraction coefficients; each
// residual entry is certified Schur-positive, and the first uncertifiable
// entry aborts with its certificate.
EquivariantDecomposition bs_decompose_equivariant(const EquivariantBettiTable& t, int effort = 6,
                                                  bool use_bottom = false);

}  // namespace pieri
