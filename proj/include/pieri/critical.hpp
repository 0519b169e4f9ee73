#pragma once

#include <vector>

#include "pieri/partition.hpp"

namespace pieri {

// Critical boxes of a vertical strip beta/alpha inside the width-n grid:
// one box (alpha_{j-1}+1, j) for each column index j with c_1 < j <= n,
// where c_1 is the first column of beta/alpha.
struct CriticalBox {
    int row;
    int column;
    bool operator==(const CriticalBox& o) const { return row == o.row && column == o.column; }
};

struct CriticalBoxSet {
    int ambient_width = 0;
    std::vector<CriticalBox> boxes;  // ordered by column
};

CriticalBoxSet critical_boxes(const Partition& alpha, const Partition& beta, int n);

// Column indices of the skew shape beta/alpha (parts that differ).
std::vector<int> strip_columns(const Partition& alpha, const Partition& beta);

// Single-relation admissible subset: a set of critical-box column indices, each
// maximal run of which starts at c+1 for some column c of beta/alpha.
struct AdmissibleSet {
    std::vector<int> columns;  // sorted ascending; empty = the empty set
    bool operator==(const AdmissibleSet& o) const { return columns == o.columns; }
    bool operator<(const AdmissibleSet& o) const { return columns < o.columns; }
};

// Smallest partition containing beta and the critical boxes (of C(alpha,beta))
// in the given columns.
Partition beta_of(const Partition& alpha, const Partition& beta, const std::vector<int>& columns);

// Ad(alpha; beta)_i = admissible subsets with #J + 1 = i, inside width n. Sorted by column list.
std::vector<AdmissibleSet> admissible_subsets(const Partition& alpha, const Partition& beta, int n, int i);

// Multi-relation admissible data: a set I of relation indices (0-based into the
// relation list) with one admissible subset per chosen relation.
struct MultiAdmissibleSet {
    std::vector<std::pair<int, std::vector<int>>> entries;  // (relation index, columns), sorted by index
    Partition beta_J;                                       // union of beta^i(J_i)
    int s = 0;                                              // sum of (#J_i + 1)
};

// Checks the preconditions of the single-column case: each beta^i/alpha a
// nonempty single column, strictly lex-decreasing, pairwise non-nested.
void check_single_column_spec(const Partition& alpha, const std::vector<Partition>& betas, int n);

// Ad(alpha; beta^1,...,beta^r)_i of the single-column case: irredundant stage
// (beta(J)/alpha has exactly s(J) distinct columns) followed by keeping only
// inclusion-minimal beta(J).
std::vector<MultiAdmissibleSet> multi_admissible(const Partition& alpha,
                                                 const std::vector<Partition>& betas, int n, int i);

}  // namespace pieri
