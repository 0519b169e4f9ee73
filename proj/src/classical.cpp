#include "pieri/classical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pieri/schur.hpp"

namespace pieri {

std::vector<int> GroupType::rho2() const {
    std::vector<int> r(rank);
    switch (family) {
        case Family::B:
            for (int i = 0; i < rank; ++i) r[i] = 2 * (rank - i) - 1;
            break;
        case Family::C:
            for (int i = 0; i < rank; ++i) r[i] = 2 * (rank - i);
            break;
        case Family::D:
            for (int i = 0; i < rank; ++i) r[i] = 2 * (rank - 1 - i);
            break;
    }
    return r;
}

bool GroupType::is_dominant(const Weight& w) const {
    if ((int)w.size() != rank) return false;
    for (int i = 0; i + 1 < rank; ++i)
        if (w[i] < w[i + 1]) return false;
    if (family == Family::D) {
        if (rank < 2) return false;
        return w[rank - 2] >= std::abs(w[rank - 1]);
    }
    return w[rank - 1] >= 0;
}

std::string GroupType::str() const {
    std::string f = family == Family::B ? "B" : family == Family::C ? "C" : "D";
    return f + std::to_string(rank);
}

std::string weight_str(const Weight& w) {
    std::string out = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    return out + ")";
}

Weight parse_weight(const std::string& text, int rank) {
    Weight w;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') {
            w.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) w.push_back(std::stoi(cur));
    while ((int)w.size() < rank) w.push_back(0);
    if ((int)w.size() != rank) throw std::invalid_argument("weight does not fit the rank");
    return w;
}

BottResult dotted_bott(const GroupType& g, const Weight& w) {
    int n = g.rank;
    if ((int)w.size() != n) throw std::invalid_argument("dotted_bott: weight has wrong length");
    if (g.family == Family::D && n < 2) throw std::invalid_argument("dotted_bott: type D needs rank >= 2");
    std::vector<int> rho = g.rho2();
    std::vector<long long> v(n);
    for (int i = 0; i < n; ++i) v[i] = 2LL * w[i] + rho[i];

    // singular (nontrivial dotted stabilizer) detection
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0 && g.family != Family::D) return BottResult{};
        for (int j = i + 1; j < n; ++j)
            if (std::llabs(v[i]) == std::llabs(v[j])) return BottResult{};
    }

    // length: positive roots made negative
    int length = 0;
    for (int i = 0; i < n; ++i) {
        if (g.family != Family::D && v[i] < 0) ++length;
        for (int j = i + 1; j < n; ++j) {
            if (v[i] < v[j]) ++length;
            if (v[i] + v[j] < 0) ++length;
        }
    }

    // dominant representative of the orbit
    std::vector<long long> u(n);
    int negatives = 0;
    for (int i = 0; i < n; ++i) {
        if (v[i] < 0) ++negatives;
        u[i] = std::llabs(v[i]);
    }
    std::sort(u.begin(), u.end(), std::greater<long long>());
    if (g.family == Family::D && negatives % 2) u[n - 1] = -u[n - 1];

    BottResult out;
    out.zero = false;
    out.degree = length;
    out.weight.resize(n);
    for (int i = 0; i < n; ++i) {
        long long b2 = u[i] - rho[i];
        if (b2 % 2) throw std::logic_error("dotted_bott: non-integral dominant weight");
        out.weight[i] = (int)(b2 / 2);
    }
    if (!g.is_dominant(out.weight)) throw std::logic_error("dotted_bott: normal form not dominant");
    // Bott produces the dual; only odd-rank type D sees a difference
    if (g.family == Family::D && n % 2 && out.weight[n - 1] != 0) {
        out.weight[n - 1] = -out.weight[n - 1];
        out.dualized = true;
    }
    return out;
}

namespace {

// partitions mu inside lambda with lambda/mu a horizontal strip of size k
std::vector<Partition> hs_subtractions(const Partition& lambda, int k) {
    std::vector<Partition> out;
    if (k < 0) return out;
    std::vector<int> cur;
    int m = lambda.length();
    auto rec = [&](auto&& self, int pos, int removed) -> void {
        if (pos > m) {
            if (removed == k) out.emplace_back(cur);
            return;
        }
        for (int drop = 0; drop <= 1; ++drop) {
            int v = lambda.part(pos) - drop;
            if (v < 0) continue;
            if (pos > 1 && v > cur[pos - 2]) continue;
            if (removed + drop > k) continue;
            // staying a partition also needs v >= lambda_{pos+1} - 1, checked next level
            if (v < lambda.part(pos + 1) - 1) continue;
            cur.push_back(v);
            self(self, pos + 1, removed + drop);
            cur.pop_back();
        }
    };
    rec(rec, 1, 0);
    return out;
}

void push_all(std::map<int, std::vector<Weight>>& out, int degree, const std::vector<Weight>& ws) {
    if (ws.empty()) return;
    auto& slot = out[degree];
    slot.insert(slot.end(), ws.begin(), ws.end());
}

Weight to_weight(const Partition& p, int n) {
    Weight w(n, 0);
    for (int i = 1; i <= std::min(n, p.length()); ++i) w[i - 1] = p.part(i);
    return w;
}

void sort_weights(std::map<int, std::vector<Weight>>& m) {
    for (auto it = m.begin(); it != m.end();) {
        std::sort(it->second.begin(), it->second.end());
        if (it->second.empty())
            it = m.erase(it);
        else
            ++it;
    }
}

}  // namespace

std::map<int, std::vector<Weight>> wedge_cohomology(const GroupType& g, const Partition& lambda, int i) {
    int n = g.rank;
    if (lambda.length() > n) throw std::invalid_argument("wedge_cohomology: lambda exceeds the rank");
    int bundle_rank = n + g.tau();
    std::map<int, std::vector<Weight>> out;
    if (i < 0 || i > bundle_rank) return out;

    if (g.family == Family::C) {
        std::vector<Weight> h0;
        for (auto& mu : hs_subtractions(lambda, i)) h0.push_back(to_weight(mu, n));
        push_all(out, 0, h0);
        sort_weights(out);
        return out;
    }

    if (g.family == Family::B) {
        if (lambda.part(n) > 0) {
            std::vector<Weight> h0;
            for (auto& mu : hs_subtractions(lambda, i)) h0.push_back(to_weight(mu, n));
            for (auto& mu : hs_subtractions(lambda, i - 1)) h0.push_back(to_weight(mu, n));
            push_all(out, 0, h0);
        } else {
            std::vector<Weight> h0, h1;
            for (auto& mu : hs_subtractions(lambda, i)) h0.push_back(to_weight(mu, n));
            if (i >= 2)
                for (auto& mu : hs_subtractions(lambda, i - 2)) h1.push_back(to_weight(mu, n));
            push_all(out, 0, h0);
            push_all(out, 1, h1);
        }
        sort_weights(out);
        return out;
    }

    // type D
    if (n < 2) throw std::invalid_argument("wedge_cohomology: type D needs rank >= 2");
    std::vector<Weight> h0, h1;
    // H^0: mu containing lambda by a horizontal strip of size n - i with
    // (mu_1 - 1, ..., mu_n - 1) dominant; the weight is its dual
    for (auto& mu : horizontal_strip_extensions(lambda, n - i, n)) {
        Weight shifted(n);
        for (int t = 1; t <= n; ++t) shifted[t - 1] = mu.part(t) - 1;
        if (!(shifted[n - 2] >= std::abs(shifted[n - 1]))) continue;
        bool dominant = true;
        for (int t = 0; t + 1 < n; ++t)
            if (shifted[t] < shifted[t + 1]) dominant = false;
        if (!dominant) continue;
        if (n % 2 && shifted[n - 1] != 0) shifted[n - 1] = -shifted[n - 1];  // dual
        h0.push_back(shifted);
    }
    if (lambda.part(n - 1) == 0 && lambda.part(n) == 0 && i >= 2)
        for (auto& mu : hs_subtractions(lambda, i - 2)) h1.push_back(to_weight(mu, n));
    push_all(out, 0, h0);
    push_all(out, 1, h1);
    sort_weights(out);
    return out;
}

namespace {

// Bott route for H^j(S_lambda Q (x) wedge^k R): expand by the Pieri rule and
// run the dotted Weyl action on each (mu_1 - 1, ..., mu_n - 1).
std::map<int, std::vector<Weight>> wedge_r_bott(const GroupType& g, const Partition& lambda, int k) {
    std::map<int, std::vector<Weight>> out;
    int n = g.rank;
    if (k < 0 || k > n) return out;
    for (auto& mu : horizontal_strip_extensions(lambda, n - k, n)) {
        Weight w(n);
        for (int t = 1; t <= n; ++t) w[t - 1] = mu.part(t) - 1;
        BottResult b = dotted_bott(g, w);
        if (!b.zero) out[b.degree].push_back(b.weight);
    }
    sort_weights(out);
    return out;
}

}  // namespace

std::map<int, std::vector<Weight>> wedge_cohomology_bott(const GroupType& g, const Partition& lambda,
                                                         int i) {
    int n = g.rank;
    if (g.family != Family::B) return wedge_r_bott(g, lambda, i);
    // type B: splice H(wedge^i R) and H(wedge^{i-1} R) along the connecting map
    auto a = wedge_r_bott(g, lambda, i);
    auto b = i >= 1 ? wedge_r_bott(g, lambda, i - 1) : std::map<int, std::vector<Weight>>{};
    std::map<int, std::vector<Weight>> out;
    if (lambda.part(n) > 0) {
        if (a.count(1) || b.count(1))
            throw std::logic_error("wedge_cohomology_bott: unexpected H^1 for full-length lambda");
        std::vector<Weight> h0;
        if (a.count(0)) h0.insert(h0.end(), a[0].begin(), a[0].end());
        if (b.count(0)) h0.insert(h0.end(), b[0].begin(), b[0].end());
        push_all(out, 0, h0);
    } else {
        // the connecting map is an isomorphism H^0(wedge^{i-1} R) -> H^1(wedge^i R)
        std::vector<Weight> b0 = b.count(0) ? b[0] : std::vector<Weight>{};
        std::vector<Weight> a1 = a.count(1) ? a[1] : std::vector<Weight>{};
        std::sort(b0.begin(), b0.end());
        std::sort(a1.begin(), a1.end());
        if (i >= 1 && b0 != a1)
            throw std::logic_error("wedge_cohomology_bott: connecting map is not a bijection");
        if (a.count(0)) push_all(out, 0, a[0]);
        if (b.count(1)) push_all(out, 1, b[1]);
    }
    sort_weights(out);
    return out;
}

std::vector<GeometricTerm> geometric_module_terms(const GroupType& g, const Partition& lambda) {
    std::vector<GeometricTerm> out;
    int bundle_rank = g.rank + g.tau();
    for (int i = 0; i <= bundle_rank; ++i) {
        auto h = wedge_cohomology(g, lambda, i);
        if (h.count(0))
            for (auto& w : h[0]) out.push_back({i, i, w, 0});
        auto h1 = wedge_cohomology(g, lambda, i + 1);
        if (h1.count(1))
            for (auto& w : h1[1]) out.push_back({i, i + 1, w, 1});
    }
    return out;
}

SheafPieriTerms sheaf_pieri_terms(const GroupType& g, const Partition& alpha,
                                  const std::vector<Partition>& betas) {
    int n = g.rank;
    CokernelSpec spec = CokernelSpec::make(alpha, betas, n);
    EquivariantComplex c = resolve(spec);
    if (c.provenance == Provenance::MappingConePossiblyNonminimal) c = minimize(c, 1);
    SheafPieriTerms out;
    // hypothesis: no linear differentials between adjacent terms of the
    // relative resolution
    for (auto& [k, m] : c.terms)
        for (auto& [k2, m2] : c.terms)
            if (k2.hom_degree == k.hom_degree + 1 && k2.internal_degree - k.internal_degree == 1)
                out.linear_differential = true;
    bool gl_minimal = c.provenance == Provenance::GuaranteedMinimal;
    out.minimal_claim = gl_minimal && (g.family == Family::C || !out.linear_differential);
    for (auto& [k, m] : c.terms) {
        for (auto& gt : geometric_module_terms(g, k.partition)) {
            for (long long copy = 0; copy < m; ++copy)
                out.terms.push_back(
                    {k.hom_degree + gt.hom_degree, k.internal_degree + gt.internal_degree, gt.weight,
                     gt.grade});
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const GeometricTerm& a, const GeometricTerm& b) {
        return std::tie(a.hom_degree, a.internal_degree, a.weight, a.grade) <
               std::tie(b.hom_degree, b.internal_degree, b.weight, b.grade);
    });
    return out;
}

std::map<Partition, long long> newell_littlewood(const Partition& lambda, const Partition& mu, int n) {
    if (n < lambda.length() + mu.length())
        throw std::invalid_argument("newell_littlewood: outside the stable range n >= l(lambda)+l(mu)");
    std::map<Partition, long long> out;
    int bound = std::min(lambda.size(), mu.size());
    for (int a = 0; a <= bound; ++a) {
        for (auto& alpha : partitions_of(a, n)) {
            if (!lambda.contains(alpha) || !mu.contains(alpha)) continue;
            SymmetricPolynomial left = skew_schur(lambda, alpha, n);
            SymmetricPolynomial right = skew_schur(mu, alpha, n);
            if (left.is_zero() || right.is_zero()) continue;
            SymmetricPolynomial prod = left * right;
            for (auto& [nu, c] : prod.terms()) {
                out[nu] += c;
                if (!out[nu]) out.erase(nu);
            }
        }
    }
    return out;
}

long long classical_dimension(const GroupType& g, const Weight& lambda) {
    int n = g.rank;
    if ((int)lambda.size() != n) throw std::invalid_argument("classical_dimension: wrong length");
    if (!g.is_dominant(lambda)) throw std::invalid_argument("classical_dimension: not dominant");
    std::vector<long long> l(n), m(n);
    auto rho = g.rho2();
    for (int i = 0; i < n; ++i) {
        l[i] = 2LL * lambda[i] + rho[i];
        m[i] = rho[i];
    }
    Rational dim(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dim *= Rational(BigInt(l[i] * l[i] - l[j] * l[j]), BigInt(m[i] * m[i] - m[j] * m[j]));
    if (g.family != Family::D)
        for (int i = 0; i < n; ++i) dim *= Rational(l[i], m[i]);
    if (!dim.is_integer()) throw std::logic_error("classical_dimension: non-integral Weyl product");
    return dim.num().to_int64();
}

}  // namespace pieri
