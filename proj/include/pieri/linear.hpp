#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pieri/rational.hpp"

namespace pieri {

using SparseVec = std::map<int, Rational>;  // column index -> entry

// Incremental Gauss-Jordan elimination over the rationals. Rows are reduced
// against the current echelon set as they arrive; pivots are leftmost.
class RowReducer {
public:
    explicit RowReducer(int ncols) : ncols_(ncols) {}

    // Reduces v against the stored rows; returns the residue.
    SparseVec reduce(SparseVec v) const;
    // Reduces and, if nonzero, inserts; returns true if the row increased the rank.
    bool add_row(SparseVec v);

    int rank() const { return (int)rows_.size(); }
    int ncols() const { return ncols_; }
    const std::map<int, SparseVec>& rows() const { return rows_; }  // pivot col -> row
    bool has_pivot(int col) const { return rows_.count(col) != 0; }

private:
    int ncols_;
    std::map<int, SparseVec> rows_;  // keyed by pivot column; rows are monic and fully reduced
};

// Kernel basis of the linear system given by equation rows over `ncols`
// unknowns (one basis vector per free column).
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& equations, int ncols);

// Rank of a matrix given by columns.
int column_rank(const std::vector<SparseVec>& columns, int nrows);

// Labeled sparse matrix with exact rational entries, column-major.
struct LinearMap {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<SparseVec> columns;  // one per column label

    int rank() const { return column_rank(columns, (int)row_labels.size()); }
    bool is_zero() const;
    // triples (rowLabel, colLabel, "p/q")
    std::vector<std::tuple<std::string, std::string, std::string>> triples() const;
};

// q with A = q * B, if one exists and both maps are nonzero.
std::optional<Rational> proportionality_ratio(const std::vector<SparseVec>& a,
                                              const std::vector<SparseVec>& b);

}  // namespace pieri
