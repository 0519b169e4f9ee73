#include "pieri/olver.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "pieri/schur.hpp"

namespace pieri {

namespace {

std::string mono_label(const std::vector<int>& u) {
    std::string s = "x^(";
    for (size_t i = 0; i < u.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(u[i]);
    }
    return s + ")";
}

std::map<std::tuple<std::vector<int>, std::vector<int>, int>, PieriInclusion> g_single_cache;
std::mutex g_single_mutex;

}  // namespace

std::vector<std::vector<int>> monomials_of_degree(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

PieriInclusion olver_single_box(const Partition& beta, const Partition& alpha, int n) {
    {
        std::lock_guard<std::mutex> lock(g_single_mutex);
        auto it = g_single_cache.find({beta.parts(), alpha.parts(), n});
        if (it != g_single_cache.end()) return it->second;
    }
    if (!beta.contains(alpha) || beta.size() != alpha.size() + 1)
        throw std::invalid_argument("olver_single_box: beta/alpha must be a single box");
    int k = 0;
    for (int j = 1; j <= beta.length(); ++j)
        if (beta.part(j) != alpha.part(j)) k = j;
    enforce_size_cap(beta, n);
    enforce_size_cap(alpha, n);

    PieriInclusion map;
    map.beta = beta;
    map.alpha = alpha;
    map.n = n;
    map.box_count = 1;
    const auto& basis = ssyt_list(beta, n);
    const auto& alpha_basis = ssyt_list(alpha, n);
    (void)alpha_basis;
    map.columns.resize(basis.size());

    // J runs over increasing sequences 0 = j_1 < ... < j_r = k; the interior
    // indices are an arbitrary subset of 1..k-1.
    std::vector<int> interior;
    for (int j = 1; j < k; ++j) interior.push_back(j);

    for (size_t col = 0; col < basis.size(); ++col) {
        const Tableau& T = basis[col];
        for (unsigned mask = 0; mask < (1u << interior.size()); ++mask) {
            std::vector<int> J{0};
            for (size_t b = 0; b < interior.size(); ++b)
                if (mask & (1u << b)) J.push_back(interior[b]);
            J.push_back(k);
            int r = (int)J.size();
            long long cJ = 1;
            for (int i = 1; i + 1 < r; ++i) cJ *= beta.part(J[i]) - beta.part(k) + k - J[i];
            Rational scale = Rational((r % 2 == 0) ? 1 : -1, cJ);
            // cascade: row J[t+1] donates one entry to row J[t] (slot 0 = V)
            auto rec = [&](auto&& self, int t, Tableau cur, int carried, Rational coeff) -> void {
                if (t == r) {
                    int var = carried;
                    TableauCombination straightened = straighten(cur, n);
                    for (auto& [sst, c] : straightened) {
                        int idx = ssyt_index(alpha, n, sst);
                        PieriInclusion::Coord key{std::vector<int>(n, 0), idx};
                        key.first[var - 1] = 1;
                        auto& cell = map.columns[col][key];
                        cell += coeff * c * scale;
                        if (cell.is_zero()) map.columns[col].erase(key);
                    }
                    return;
                }
                int row = J[t];  // 1-based row donating an entry
                std::vector<int> distinct;
                for (int v : cur.rows[row - 1])
                    if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
                for (int v : distinct) {
                    long long mult = std::count(cur.rows[row - 1].begin(), cur.rows[row - 1].end(), v);
                    Tableau next = cur;
                    auto it = std::find(next.rows[row - 1].begin(), next.rows[row - 1].end(), v);
                    next.rows[row - 1].erase(it);
                    int next_carried = carried;
                    if (t == 1) {
                        next_carried = v;  // into the V slot
                    } else {
                        next.rows[J[t - 1] - 1].push_back(v);
                        std::sort(next.rows[J[t - 1] - 1].begin(), next.rows[J[t - 1] - 1].end());
                    }
                    self(self, t + 1, std::move(next), next_carried, coeff * Rational(mult));
                }
            };
            rec(rec, 1, T, 0, Rational(1));
        }
    }
    std::lock_guard<std::mutex> lock(g_single_mutex);
    return g_single_cache.emplace(std::make_tuple(beta.parts(), alpha.parts(), n), std::move(map))
        .first->second;
}

std::vector<int> default_removal_order(const Partition& beta, const Partition& alpha) {
    std::vector<int> order;
    for (int j = 1; j <= beta.length(); ++j)
        for (int t = 0; t < beta.part(j) - alpha.part(j); ++t) order.push_back(j);
    return order;
}

namespace {

PieriInclusion compose_chain(const Partition& beta, const Partition& alpha, int n,
                             std::vector<int> order, bool exterior) {
    if (!beta.contains(alpha)) throw std::invalid_argument("pieri_inclusion: alpha not contained in beta");
    if (exterior ? !is_horizontal_strip(beta, alpha) : !is_vertical_strip(beta, alpha))
        throw std::invalid_argument("pieri_inclusion: beta/alpha is not a strip of the required kind");
    if (order.empty()) order = default_removal_order(beta, alpha);
    int b = beta.size() - alpha.size();
    if ((int)order.size() != b) throw std::invalid_argument("pieri_inclusion: order has wrong length");
    {
        std::vector<int> sorted = order, expected = default_removal_order(beta, alpha);
        std::sort(sorted.begin(), sorted.end());
        if (sorted != expected) throw std::invalid_argument("pieri_inclusion: order does not match the strip");
    }
    enforce_size_cap(beta, n);
    enforce_size_cap(alpha, n);

    PieriInclusion out;
    out.beta = beta;
    out.alpha = alpha;
    out.n = n;
    out.box_count = b;
    const auto& basis = ssyt_list(beta, n);
    out.columns.resize(basis.size());

    // state per column: current shape mu and vector over (word, tableau index)
    Partition mu = beta;
    // coordinates: monomial exponents (symmetric) or signed wedge word (exterior)
    using State = std::map<PieriInclusion::Coord, Rational>;
    std::vector<State> states(basis.size());
    for (size_t c = 0; c < basis.size(); ++c)
        states[c][{std::vector<int>(n, 0), (int)c}] = Rational(1);

    for (int step = 0; step < b; ++step) {
        int col = order[step];
        std::vector<int> parts = mu.parts();
        int cur = col <= (int)parts.size() ? parts[col - 1] : 0;
        if (cur <= alpha.part(col))
            throw std::invalid_argument("pieri_inclusion: order removes from an exhausted column");
        parts[col - 1] -= 1;
        Partition next(parts);  // throws when the intermediate shape is invalid
        PieriInclusion single = olver_single_box(mu, next, n);
        for (auto& st : states) {
            State replaced;
            for (auto& [coord, coeff] : st) {
                const auto& img = single.columns[coord.second];
                for (auto& [icoord, ic] : img) {
                    int var = 0;
                    for (int i = 0; i < n; ++i)
                        if (icoord.first[i]) var = i + 1;
                    PieriInclusion::Coord key = {coord.first, icoord.second};
                    Rational c = coeff * ic;
                    if (!exterior) {
                        key.first[var - 1] += 1;
                    } else {
                        if (key.first[var - 1]) continue;  // repeated wedge factor
                        int before = 0;
                        for (int i = var; i < n; ++i) before += key.first[i];
                        if (before % 2) c = -c;
                        key.first[var - 1] = 1;
                    }
                    auto it = replaced.find(key);
                    if (it == replaced.end()) {
                        if (!c.is_zero()) replaced.emplace(key, c);
                    } else {
                        it->second += c;
                        if (it->second.is_zero()) replaced.erase(it);
                    }
                }
            }
            st = std::move(replaced);
        }
        mu = next;
    }
    if (mu != alpha) throw std::logic_error("pieri_inclusion: removal order did not reach alpha");
    for (size_t c = 0; c < basis.size(); ++c) out.columns[c] = std::move(states[c]);
    return out;
}

}  // namespace

PieriInclusion pieri_inclusion(const Partition& beta, const Partition& alpha, int n,
                               std::vector<int> removal_order) {
    return compose_chain(beta, alpha, n, std::move(removal_order), false);
}

PieriInclusion pieri_inclusion_exterior(const Partition& beta, const Partition& alpha, int n,
                                        std::vector<int> removal_order) {
    return compose_chain(beta, alpha, n, std::move(removal_order), true);
}

LinearMap PieriInclusion::to_linear_map() const {
    LinearMap lm;
    const auto& dom = ssyt_list(beta, n);
    const auto& cod = ssyt_list(alpha, n);
    for (auto& t : dom) lm.col_labels.push_back(t.str());
    std::map<Coord, int> row_index;
    auto monos = monomials_of_degree(n, box_count);
    for (auto& u : monos)
        for (size_t i = 0; i < cod.size(); ++i) {
            row_index[{u, (int)i}] = (int)lm.row_labels.size();
            lm.row_labels.push_back(mono_label(u) + "(x)" + cod[i].str());
        }
    lm.columns.resize(columns.size());
    for (size_t c = 0; c < columns.size(); ++c)
        for (auto& [coord, x] : columns[c]) lm.columns[c][row_index.at(coord)] = x;
    return lm;
}

Rational PieriInclusion::entry(const std::vector<int>& mono, const Tableau& t, const Tableau& column) const {
    int col = ssyt_index(beta, n, column);
    int idx = ssyt_index(alpha, n, t);
    auto it = columns[col].find({mono, idx});
    return it == columns[col].end() ? Rational(0) : it->second;
}

LinearMap induced_degree_map(const PieriInclusion& inc, int d) {
    int b = inc.box_count;
    if (d < b) throw std::invalid_argument("induced_degree_map: degree below the map's own degree");
    int n = inc.n;
    const auto& dom = ssyt_list(inc.beta, n);
    const auto& cod = ssyt_list(inc.alpha, n);
    auto dom_monos = monomials_of_degree(n, d - b);
    auto cod_monos = monomials_of_degree(n, d);
    LinearMap lm;
    std::map<std::vector<int>, int> cod_mono_index;
    for (auto& u : cod_monos) {
        cod_mono_index[u] = (int)cod_mono_index.size();
        for (auto& t : cod) lm.row_labels.push_back(mono_label(u) + "(x)" + t.str());
    }
    for (auto& u : dom_monos)
        for (auto& t : dom) lm.col_labels.push_back(mono_label(u) + "(x)" + t.str());
    lm.columns.resize(dom_monos.size() * dom.size());
    int col = 0;
    for (auto& u : dom_monos)
        for (size_t j = 0; j < dom.size(); ++j, ++col) {
            for (auto& [coord, x] : inc.columns[j]) {
                std::vector<int> shifted = coord.first;
                for (int i = 0; i < n; ++i) shifted[i] += u[i];
                int row = cod_mono_index.at(shifted) * (int)cod.size() + coord.second;
                lm.columns[col][row] = x;
            }
        }
    return lm;
}

LinearMap composed_degree_map(const PieriInclusion& upper, const PieriInclusion& lower, int d) {
    // upper: S_lambda -> Sym^{b1} (x) S_mu, lower: S_mu -> Sym^{b2} (x) S_nu
    if (upper.alpha != lower.beta) throw std::invalid_argument("composed_degree_map: shape mismatch");
    LinearMap up = induced_degree_map(upper, d - lower.box_count);
    LinearMap low = induced_degree_map(lower, d);
    LinearMap out;
    out.row_labels = low.row_labels;
    out.col_labels = up.col_labels;
    out.columns.resize(up.columns.size());
    for (size_t c = 0; c < up.columns.size(); ++c)
        for (auto& [mid, x] : up.columns[c])
            for (auto& [row, y] : low.columns[mid]) {
                auto it = out.columns[c].find(row);
                if (it == out.columns[c].end()) {
                    Rational t = x * y;
                    if (!t.is_zero()) out.columns[c].emplace(row, std::move(t));
                } else {
                    it->second += x * y;
                    if (it->second.is_zero()) out.columns[c].erase(it);
                }
            }
    return out;
}

}  // namespace pieri
