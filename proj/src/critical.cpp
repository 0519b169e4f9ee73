#include "pieri/critical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pieri {

std::vector<int> strip_columns(const Partition& alpha, const Partition& beta) {
    std::vector<int> cols;
    for (int j = 1; j <= beta.length(); ++j)
        if (beta.part(j) > alpha.part(j)) cols.push_back(j);
    return cols;
}

CriticalBoxSet critical_boxes(const Partition& alpha, const Partition& beta, int n) {
    if (!is_vertical_strip(beta, alpha) || beta == alpha)
        throw std::invalid_argument("critical_boxes: beta/alpha must be a nonempty vertical strip");
    if (beta.length() > n) throw std::invalid_argument("critical_boxes: beta does not fit in width n");
    CriticalBoxSet out;
    out.ambient_width = n;
    int c1 = strip_columns(alpha, beta).front();
    for (int j = c1 + 1; j <= n; ++j) out.boxes.push_back({alpha.part(j - 1) + 1, j});
    return out;
}

Partition beta_of(const Partition& alpha, const Partition& beta, const std::vector<int>& columns) {
    int len = beta.length();
    for (int j : columns) len = std::max(len, j);
    std::vector<int> h(len, 0);
    for (int j = 1; j <= len; ++j) h[j - 1] = beta.part(j);
    for (int j : columns) h[j - 1] = std::max(h[j - 1], alpha.part(j - 1) + 1);
    // minimal partition containing the required column heights
    for (int j = len - 1; j-- > 0;) h[j] = std::max(h[j], h[j + 1]);
    return Partition(std::move(h));
}

// Enumerates admissible column sets by size: walk columns c1+1..n, a column may
// enter the set if it extends a run (previous column in) or anchors one (j-1 is
// a strip column).
static void admissible_rec(int j, int n, bool prev_in, int count, int want,
                           const std::set<int>& anchors, std::vector<int>& cur,
                           std::vector<AdmissibleSet>& out) {
    if (j > n) {
        if (count == want) out.push_back({cur});
        return;
    }
    admissible_rec(j + 1, n, false, count, want, anchors, cur, out);
    if (count < want && (prev_in || anchors.count(j))) {
        cur.push_back(j);
        admissible_rec(j + 1, n, true, count + 1, want, anchors, cur, out);
        cur.pop_back();
    }
}

std::vector<AdmissibleSet> admissible_subsets(const Partition& alpha, const Partition& beta, int n,
                                              int i) {
    if (i < 1) throw std::invalid_argument("admissible_subsets: homological index must be >= 1");
    if (!is_vertical_strip(beta, alpha) || beta == alpha)
        throw std::invalid_argument("admissible_subsets: beta/alpha must be a nonempty vertical strip");
    std::vector<int> cols = strip_columns(alpha, beta);
    std::set<int> anchors;
    for (int c : cols)
        if (c + 1 <= n) anchors.insert(c + 1);
    std::vector<AdmissibleSet> out;
    std::vector<int> cur;
    admissible_rec(cols.front() + 1, n, false, 0, i - 1, anchors, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

void check_single_column_spec(const Partition& alpha, const std::vector<Partition>& betas, int n) {
    if (betas.empty()) throw std::invalid_argument("single-column spec: no relations");
    for (size_t i = 0; i < betas.size(); ++i) {
        if (!is_vertical_strip(betas[i], alpha) || betas[i] == alpha)
            throw std::invalid_argument("single-column spec: each beta/alpha must be a nonempty vertical strip");
        if (betas[i].length() > n) throw std::invalid_argument("single-column spec: beta exceeds width n");
        if (strip_columns(alpha, betas[i]).size() != 1)
            throw std::invalid_argument("single-column spec: beta/alpha must occupy a single column");
        for (size_t j = i + 1; j < betas.size(); ++j) {
            if (!lex_less(betas[j], betas[i]))
                throw std::invalid_argument("single-column spec: relations must strictly decrease in lex order");
            if (betas[i].contains(betas[j]) || betas[j].contains(betas[i]))
                throw std::invalid_argument("single-column spec: relations must be pairwise non-nested");
        }
    }
}

std::vector<MultiAdmissibleSet> multi_admissible(const Partition& alpha,
                                                 const std::vector<Partition>& betas, int n, int i) {
    if (i < 1) throw std::invalid_argument("multi_admissible: homological index must be >= 1");
    check_single_column_spec(alpha, betas, n);
    int r = (int)betas.size();

    // per-relation admissible subsets grouped by #J
    std::vector<std::vector<std::vector<AdmissibleSet>>> ad(r);  // ad[k][size] = sets with #J = size
    for (int k = 0; k < r; ++k) {
        ad[k].resize(i);
        for (int sz = 0; sz < i; ++sz) {
            auto sets = admissible_subsets(alpha, betas[k], n, sz + 1);
            ad[k][sz] = std::move(sets);
        }
    }

    // all tuples with s(J) = i satisfying the irredundancy condition
    std::vector<MultiAdmissibleSet> stage;
    std::vector<std::pair<int, std::vector<int>>> cur;
    auto emit = [&]() {
        MultiAdmissibleSet m;
        m.entries = cur;
        m.s = i;
        Partition u;
        int expected_cols = 0;
        for (auto& [k, J] : cur) {
            u = partition_union(u, beta_of(alpha, betas[k], J));
            expected_cols += (int)J.size() + 1;
        }
        m.beta_J = u;
        if ((int)strip_columns(alpha, u).size() == expected_cols) stage.push_back(std::move(m));
    };
    auto rec = [&](auto&& self, int k, int budget) -> void {
        if (budget == 0) {
            if (!cur.empty()) emit();
            return;
        }
        if (k == r) return;
        self(self, k + 1, budget);  // skip relation k
        for (int sz = 0; sz < budget; ++sz) {
            for (auto& J : ad[k][sz]) {
                cur.emplace_back(k, J.columns);
                self(self, k + 1, budget - sz - 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0, i);

    // keep inclusion-minimal beta(J)
    std::vector<MultiAdmissibleSet> out;
    for (auto& m : stage) {
        bool minimal = true;
        for (auto& other : stage)
            if (other.beta_J != m.beta_J && m.beta_J.contains(other.beta_J)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(m);
    }
    std::sort(out.begin(), out.end(),
              [](const MultiAdmissibleSet& a, const MultiAdmissibleSet& b) { return a.entries < b.entries; });
    return out;
}

}  // namespace pieri
