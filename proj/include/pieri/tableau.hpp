#pragma once

#include <string>
#include <vector>

#include "pieri/partition.hpp"

namespace pieri {

// Filling of a shape with entries in 1..n, one multiset per part (the
// column-convention diagram, drawn transposed here as rows). Rows are kept
// sorted ascending;
// row lengths need not be monotone mid-computation (Olver moves pass through
// such shapes).
struct Tableau {
    std::vector<std::vector<int>> rows;

    std::vector<int> shape() const;
    std::vector<int> weight(int n) const;
    bool is_semistandard() const;  // requires partition shape; adjacent rows pointwise strict
    std::string str() const;
    std::string key() const;  // canonical encoding for map keys

    bool operator==(const Tableau& o) const { return rows == o.rows; }
    bool operator<(const Tableau& o) const { return rows < o.rows; }
};

// The highest weight vector: part i filled with the value i.
Tableau canonical_tableau(const Partition& shape);

// All semistandard tableaux of the given shape with entries <= n, ordered.
const std::vector<Tableau>& ssyt_list(const Partition& shape, int n);

// Index of a semistandard tableau within ssyt_list(shape, n).
int ssyt_index(const Partition& shape, int n, const Tableau& t);

// Semistandard tableaux of given shape and content (weight) w, entries <= len(w).
std::vector<Tableau> ssyt_with_content(const Partition& shape, const std::vector<int>& w);

// All fillings (rows sorted, arbitrary column relations) of the shape with
// total content w.
std::vector<Tableau> fillings_with_content(const Partition& shape, const std::vector<int>& w);

}  // namespace pieri
