#include "pieri/tableau.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace pieri {

std::vector<int> Tableau::shape() const {
    std::vector<int> s;
    s.reserve(rows.size());
    for (auto& r : rows) s.push_back((int)r.size());
    return s;
}

std::vector<int> Tableau::weight(int n) const {
    std::vector<int> w(n, 0);
    for (auto& r : rows)
        for (int v : r) {
            if (v < 1 || v > n) throw std::invalid_argument("Tableau: entry out of range");
            ++w[v - 1];
        }
    return w;
}

bool Tableau::is_semistandard() const {
    for (size_t r = 0; r + 1 < rows.size(); ++r) {
        if (rows[r + 1].size() > rows[r].size()) return false;
        for (size_t p = 0; p < rows[r + 1].size(); ++p)
            if (rows[r + 1][p] <= rows[r][p]) return false;
    }
    for (auto& r : rows)
        if (!std::is_sorted(r.begin(), r.end())) return false;
    return true;
}

std::string Tableau::str() const {
    std::string out = "[";
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) out += "|";
        for (size_t p = 0; p < rows[r].size(); ++p) {
            if (p) out += ",";
            out += std::to_string(rows[r][p]);
        }
    }
    return out + "]";
}

std::string Tableau::key() const { return str(); }

Tableau canonical_tableau(const Partition& shape) {
    Tableau t;
    for (int r = 1; r <= shape.length(); ++r) t.rows.emplace_back(shape.part(r), r);
    return t;
}

namespace {

void enumerate_ssyt(const Partition& shape, int n, int row, Tableau& cur, std::vector<Tableau>& out) {
    if (row == shape.length()) {
        out.push_back(cur);
        return;
    }
    int len = shape.part(row + 1);
    std::vector<int> vals(len, 0);
    auto rec = [&](auto&& self, int p) -> void {
        if (p == len) {
            cur.rows.push_back(vals);
            enumerate_ssyt(shape, n, row + 1, cur, out);
            cur.rows.pop_back();
            return;
        }
        int lo = p > 0 ? vals[p - 1] : 1;
        if (row > 0) lo = std::max(lo, cur.rows[row - 1][p] + 1);
        for (int v = lo; v <= n; ++v) {
            vals[p] = v;
            self(self, p + 1);
        }
    };
    rec(rec, 0);
}

std::map<std::pair<std::vector<int>, int>, std::vector<Tableau>> g_ssyt_cache;
std::map<std::pair<std::vector<int>, int>, std::map<std::string, int>> g_ssyt_index;
std::mutex g_ssyt_mutex;

}  // namespace

const std::vector<Tableau>& ssyt_list(const Partition& shape, int n) {
    std::lock_guard<std::mutex> lock(g_ssyt_mutex);
    auto k = std::make_pair(shape.parts(), n);
    auto it = g_ssyt_cache.find(k);
    if (it != g_ssyt_cache.end()) return it->second;
    std::vector<Tableau> out;
    Tableau cur;
    enumerate_ssyt(shape, n, 0, cur, out);
    std::sort(out.begin(), out.end());
    auto& slot = g_ssyt_cache[k];
    slot = std::move(out);
    auto& idx = g_ssyt_index[k];
    for (size_t i = 0; i < slot.size(); ++i) idx[slot[i].key()] = (int)i;
    return slot;
}

int ssyt_index(const Partition& shape, int n, const Tableau& t) {
    ssyt_list(shape, n);
    std::lock_guard<std::mutex> lock(g_ssyt_mutex);
    auto& idx = g_ssyt_index[std::make_pair(shape.parts(), n)];
    auto it = idx.find(t.key());
    if (it == idx.end()) throw std::invalid_argument("ssyt_index: not a basis tableau");
    return it->second;
}

std::vector<Tableau> ssyt_with_content(const Partition& shape, const std::vector<int>& w) {
    std::vector<Tableau> out;
    for (auto& t : ssyt_list(shape, (int)w.size()))
        if (t.weight((int)w.size()) == w) out.push_back(t);
    return out;
}

namespace {

// multisets of given size over 1..n with content <= bound, enumerated as sorted rows
void enumerate_rows(int size, int n, std::vector<int>& avail, int minval, std::vector<int>& row,
                    std::vector<std::vector<int>>& out) {
    if ((int)row.size() == size) {
        out.push_back(row);
        return;
    }
    for (int v = minval; v <= n; ++v) {
        if (avail[v - 1] == 0) continue;
        --avail[v - 1];
        row.push_back(v);
        enumerate_rows(size, n, avail, v, row, out);
        row.pop_back();
        ++avail[v - 1];
    }
}

void enumerate_fillings(const Partition& shape, int n, int row, std::vector<int>& avail, Tableau& cur,
                        std::vector<Tableau>& out) {
    if (row == shape.length()) {
        out.push_back(cur);
        return;
    }
    std::vector<std::vector<int>> rows;
    std::vector<int> tmp;
    enumerate_rows(shape.part(row + 1), n, avail, 1, tmp, rows);
    for (auto& r : rows) {
        for (int v : r) --avail[v - 1];
        cur.rows.push_back(r);
        enumerate_fillings(shape, n, row + 1, avail, cur, out);
        cur.rows.pop_back();
        for (int v : r) ++avail[v - 1];
    }
}

}  // namespace

std::vector<Tableau> fillings_with_content(const Partition& shape, const std::vector<int>& w) {
    std::vector<Tableau> out;
    std::vector<int> avail = w;
    int total = 0;
    for (int v : w) total += v;
    if (total != shape.size()) return out;
    Tableau cur;
    enumerate_fillings(shape, (int)w.size(), 0, avail, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pieri
