#include "pieri/linear.hpp"

#include <optional>
#include <stdexcept>
#include <tuple>

namespace pieri {

namespace {

void axpy(SparseVec& v, const Rational& c, const SparseVec& w) {
    if (c.is_zero()) return;
    for (auto& [j, x] : w) {
        auto it = v.find(j);
        if (it == v.end()) {
            Rational t = c * x;
            if (!t.is_zero()) v.emplace(j, std::move(t));
        } else {
            it->second += c * x;
            if (it->second.is_zero()) v.erase(it);
        }
    }
}

}  // namespace

SparseVec RowReducer::reduce(SparseVec v) const {
    // stored rows are monic with leftmost pivots and mutually reduced, so each
    // elimination only touches columns at or beyond the cancelled one
    for (auto it = v.begin(); it != v.end();) {
        auto rit = rows_.find(it->first);
        if (rit == rows_.end()) {
            ++it;
            continue;
        }
        int col = it->first;
        Rational c = -it->second;
        axpy(v, c, rit->second);
        it = v.upper_bound(col);
    }
    return v;
}

bool RowReducer::add_row(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int pivot = v.begin()->first;
    Rational inv = Rational(1) / v.begin()->second;
    for (auto& [j, x] : v) x *= inv;
    // back-substitute into existing rows
    for (auto& [p, row] : rows_) {
        auto it = row.find(pivot);
        if (it != row.end()) {
            Rational c = -it->second;
            axpy(row, c, v);
        }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
}

std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& equations, int ncols) {
    RowReducer red(ncols);
    for (auto& e : equations) red.add_row(e);
    std::vector<SparseVec> basis;
    for (int j = 0; j < ncols; ++j) {
        if (red.has_pivot(j)) continue;
        SparseVec v;
        v[j] = Rational(1);
        for (auto& [p, row] : red.rows()) {
            auto it = row.find(j);
            if (it != row.end()) v[p] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int column_rank(const std::vector<SparseVec>& columns, int nrows) {
    RowReducer red(nrows);
    int r = 0;
    for (auto& c : columns)
        if (red.add_row(c)) ++r;
    return r;
}

bool LinearMap::is_zero() const {
    for (auto& c : columns)
        if (!c.empty()) return false;
    return true;
}

std::vector<std::tuple<std::string, std::string, std::string>> LinearMap::triples() const {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (size_t j = 0; j < columns.size(); ++j)
        for (auto& [i, x] : columns[j]) out.emplace_back(row_labels[i], col_labels[j], x.str());
    return out;
}

std::optional<Rational> proportionality_ratio(const std::vector<SparseVec>& a,
                                              const std::vector<SparseVec>& b) {
    if (a.size() != b.size()) return std::nullopt;
    std::optional<Rational> q;
    for (size_t j = 0; j < a.size(); ++j) {
        if (a[j].size() != b[j].size()) return std::nullopt;
        auto ia = a[j].begin();
        auto ib = b[j].begin();
        for (; ia != a[j].end(); ++ia, ++ib) {
            if (ia->first != ib->first) return std::nullopt;
            Rational r = ia->second / ib->second;
            if (!q) {
                q = r;
            } else if (*q != r) {
                return std::nullopt;
            }
        }
    }
    return q;
}

}  // namespace pieri
