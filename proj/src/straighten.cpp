#include "pieri/straighten.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>

#include "pieri/schur.hpp"

namespace pieri {

namespace {

std::atomic<long long> g_size_cap{5000};

// fillings of an arbitrary row-length shape with prescribed total content
void rows_of_size(int size, const std::vector<int>& avail_in, std::vector<std::vector<int>>& out) {
    std::vector<int> avail = avail_in;
    std::vector<int> row;
    auto rec = [&](auto&& self, int minval) -> void {
        if ((int)row.size() == size) {
            out.push_back(row);
            return;
        }
        for (int v = minval; v <= (int)avail.size(); ++v) {
            if (!avail[v - 1]) continue;
            --avail[v - 1];
            row.push_back(v);
            self(self, v);
            row.pop_back();
            ++avail[v - 1];
        }
    };
    rec(rec, 1);
}

void fillings_of_shape_rec(const std::vector<int>& lens, size_t row, std::vector<int>& avail,
                           Tableau& cur, std::vector<Tableau>& out) {
    if (row == lens.size()) {
        out.push_back(cur);
        return;
    }
    std::vector<std::vector<int>> rows;
    rows_of_size(lens[row], avail, rows);
    for (auto& r : rows) {
        for (int v : r) --avail[v - 1];
        cur.rows.push_back(r);
        fillings_of_shape_rec(lens, row + 1, avail, cur, out);
        cur.rows.pop_back();
        for (int v : r) ++avail[v - 1];
    }
}

std::vector<Tableau> fillings_of_shape(const std::vector<int>& lens, const std::vector<int>& w) {
    std::vector<Tableau> out;
    int total = 0;
    for (int v : w) total += v;
    int need = 0;
    for (int v : lens) need += v;
    if (total != need) return out;
    std::vector<int> avail = w;
    Tableau cur;
    fillings_of_shape_rec(lens, 0, avail, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

// sub-multisets of a sorted row, with binomial multiplicities
void sub_multisets(const std::vector<int>& row, int k,
                   std::vector<std::pair<std::vector<int>, long long>>& out) {
    std::vector<std::pair<int, int>> runs;  // (value, multiplicity)
    for (int v : row) {
        if (!runs.empty() && runs.back().first == v)
            ++runs.back().second;
        else
            runs.emplace_back(v, 1);
    }
    std::vector<int> chosen;
    auto binom = [](int a, int b) {
        long long r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    auto rec = [&](auto&& self, size_t i, int left, long long coeff) -> void {
        if (left == 0) {
            out.emplace_back(chosen, coeff);
            return;
        }
        if (i == runs.size()) return;
        for (int take = 0; take <= std::min(left, runs[i].second); ++take) {
            for (int t = 0; t < take; ++t) chosen.push_back(runs[i].first);
            self(self, i + 1, left - take, coeff * binom(runs[i].second, take));
            for (int t = 0; t < take; ++t) chosen.pop_back();
        }
    };
    rec(rec, 0, k, 1);
}

struct SliceKey {
    std::vector<int> shape;
    int n;
    std::vector<int> w;
    bool operator<(const SliceKey& o) const {
        return std::tie(shape, n, w) < std::tie(o.shape, o.n, o.w);
    }
};

std::map<SliceKey, WeightSlice> g_slices;
std::mutex g_slice_mutex;

std::map<std::pair<SliceKey, int>, std::vector<SparseVec>> g_raising;
std::mutex g_raising_mutex;

// multiset difference / union on sorted rows
std::vector<int> row_minus(const std::vector<int>& row, const std::vector<int>& sub) {
    std::vector<int> out;
    size_t j = 0;
    for (int v : row) {
        if (j < sub.size() && sub[j] == v) {
            ++j;
            continue;
        }
        out.push_back(v);
    }
    return out;
}

std::vector<int> row_plus(const std::vector<int>& row, const std::vector<int>& add) {
    std::vector<int> out = row;
    out.insert(out.end(), add.begin(), add.end());
    std::sort(out.begin(), out.end());
    return out;
}

WeightSlice build_slice(const Partition& shape, const std::vector<int>& w) {
    WeightSlice slice;
    slice.fillings = fillings_of_shape(shape.parts(), w);
    std::map<std::string, int> index;
    std::vector<bool> is_ssyt(slice.fillings.size());
    std::vector<int> colid(slice.fillings.size());
    int next_nonssyt = 0, n_ssyt = 0;
    for (size_t i = 0; i < slice.fillings.size(); ++i) {
        index[slice.fillings[i].key()] = (int)i;
        is_ssyt[i] = slice.fillings[i].is_semistandard();
        if (is_ssyt[i]) ++n_ssyt;
    }
    int n_fill = (int)slice.fillings.size();
    int n_non = n_fill - n_ssyt;
    std::vector<int> ssyt_pos(slice.fillings.size(), -1);
    int next_ssyt = 0;
    for (size_t i = 0; i < slice.fillings.size(); ++i) {
        if (is_ssyt[i]) {
            slice.ssyt.push_back(slice.fillings[i]);
            ssyt_pos[i] = next_ssyt;
            colid[i] = n_non + next_ssyt++;
        } else {
            colid[i] = next_nonssyt++;
        }
    }

    RowReducer red(n_fill);
    int m = shape.length();
    auto add_exchange_relations = [&](int k) {
        for (int r = 0; r + 1 < m; ++r) {
            if (shape.part(r + 2) - k < 0) continue;
            std::vector<int> lens = shape.parts();
            lens[r] += k;
            lens[r + 1] -= k;
            for (auto& F : fillings_of_shape(lens, w)) {
                SparseVec rel;
                std::vector<std::pair<std::vector<int>, long long>> subs;
                sub_multisets(F.rows[r], k, subs);
                for (auto& [sub, coeff] : subs) {
                    Tableau target = F;
                    target.rows[r] = row_minus(F.rows[r], sub);
                    target.rows[r + 1] = row_plus(F.rows[r + 1], sub);
                    int idx = index.at(target.key());
                    auto it = rel.find(colid[idx]);
                    if (it == rel.end())
                        rel[colid[idx]] = Rational(coeff);
                    else {
                        it->second += Rational(coeff);
                        if (it->second.is_zero()) rel.erase(it);
                    }
                }
                red.add_row(std::move(rel));
            }
        }
    };

    int max_k = 1;
    for (int r = 2; r <= m; ++r) max_k = std::max(max_k, shape.part(r));
    add_exchange_relations(1);
    for (int k = 2; red.rank() < n_non && k <= max_k; ++k) add_exchange_relations(k);
    if (red.rank() != n_non)
        throw std::logic_error("straighten: exchange relations have deficient rank for shape " +
                               shape.str());
    for (int i = 0; i < n_ssyt; ++i)
        if (red.has_pivot(n_non + i))
            throw std::logic_error("straighten: relations meet the semistandard span for shape " +
                                   shape.str());

    slice.by_filling.resize(n_fill);
    for (int i = 0; i < n_fill; ++i) {
        if (is_ssyt[i]) {
            slice.by_filling[i] = {{ssyt_pos[i], Rational(1)}};
            continue;
        }
        SparseVec unit;
        unit[colid[i]] = Rational(1);
        SparseVec residue = red.reduce(std::move(unit));
        // residue is supported on semistandard columns only
        std::vector<std::pair<int, Rational>> expr;
        for (auto& [c, x] : residue) {
            if (c < n_non) throw std::logic_error("straighten: residue hit a non-semistandard column");
            expr.emplace_back(c - n_non, x);
        }
        slice.by_filling[i] = std::move(expr);
    }
    return slice;
}

}  // namespace

int WeightSlice::filling_index(const Tableau& t) const {
    auto it = std::lower_bound(fillings.begin(), fillings.end(), t);
    if (it == fillings.end() || !(*it == t)) throw std::invalid_argument("WeightSlice: unknown filling");
    return (int)(it - fillings.begin());
}

const WeightSlice& weight_slice(const Partition& shape, int n, const std::vector<int>& w) {
    SliceKey key{shape.parts(), n, w};
    {
        std::lock_guard<std::mutex> lock(g_slice_mutex);
        auto it = g_slices.find(key);
        if (it != g_slices.end()) return it->second;
    }
    WeightSlice built = build_slice(shape, w);
    std::lock_guard<std::mutex> lock(g_slice_mutex);
    return g_slices.emplace(key, std::move(built)).first->second;
}

TableauCombination straighten(const Tableau& filling, int n) {
    Tableau sorted = filling;
    std::vector<int> lens;
    for (auto& r : sorted.rows) {
        std::sort(r.begin(), r.end());
        lens.push_back((int)r.size());
    }
    while (!lens.empty() && lens.back() == 0) {
        lens.pop_back();
        sorted.rows.pop_back();
    }
    Partition shape(lens);  // throws if the row lengths do not decrease
    std::vector<int> w = sorted.weight(n);
    const WeightSlice& slice = weight_slice(shape, n, w);
    int idx = slice.filling_index(sorted);
    TableauCombination out;
    for (auto& [pos, c] : slice.by_filling[idx]) out.emplace_back(slice.ssyt[pos], c);
    return out;
}

std::vector<SparseVec> raising_matrix(const Partition& shape, int n, const std::vector<int>& w, int t) {
    if (t < 1 || t >= n) throw std::invalid_argument("raising_matrix: operator index out of range");
    SliceKey key{shape.parts(), n, w};
    {
        std::lock_guard<std::mutex> lock(g_raising_mutex);
        auto it = g_raising.find({key, t});
        if (it != g_raising.end()) return it->second;
    }
    std::vector<int> w2 = w;
    if (w2[t] == 0) {
        // no t+1 entries anywhere: zero map
        std::vector<SparseVec> zero(weight_slice(shape, n, w).ssyt.size());
        std::lock_guard<std::mutex> lock(g_raising_mutex);
        return g_raising.emplace(std::make_pair(key, t), std::move(zero)).first->second;
    }
    ++w2[t - 1];
    --w2[t];
    const WeightSlice& src = weight_slice(shape, n, w);
    const WeightSlice& dst = weight_slice(shape, n, w2);
    std::map<std::string, int> dst_index;
    for (size_t i = 0; i < dst.ssyt.size(); ++i) dst_index[dst.ssyt[i].key()] = (int)i;
    std::vector<SparseVec> cols(src.ssyt.size());
    for (size_t j = 0; j < src.ssyt.size(); ++j) {
        const Tableau& T = src.ssyt[j];
        for (size_t r = 0; r < T.rows.size(); ++r) {
            long long mult = std::count(T.rows[r].begin(), T.rows[r].end(), t + 1);
            if (!mult) continue;
            Tableau moved = T;
            auto it = std::find(moved.rows[r].begin(), moved.rows[r].end(), t + 1);
            *it = t;
            std::sort(moved.rows[r].begin(), moved.rows[r].end());
            for (auto& [ssyt_t, c] : straighten(moved, n)) {
                int i = dst_index.at(ssyt_t.key());
                auto cit = cols[j].find(i);
                if (cit == cols[j].end())
                    cols[j][i] = c * Rational(mult);
                else {
                    cit->second += c * Rational(mult);
                    if (cit->second.is_zero()) cols[j].erase(cit);
                }
            }
        }
    }
    std::lock_guard<std::mutex> lock(g_raising_mutex);
    return g_raising.emplace(std::make_pair(key, t), std::move(cols)).first->second;
}

long long schur_module_size_cap() { return g_size_cap.load(); }
void set_schur_module_size_cap(long long cap) { g_size_cap.store(cap); }

void enforce_size_cap(const Partition& shape, int n) {
    long long d = dimension(shape, n);
    if (d > g_size_cap.load())
        throw std::length_error("module dimension " + std::to_string(d) + " for shape " + shape.str() +
                                " exceeds the size cap " + std::to_string(g_size_cap.load()) +
                                " (PIERI_SIZE_CAP)");
}

}  // namespace pieri
