#include "pieri/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pieri/tableau.hpp"

namespace pieri {

SymmetricPolynomial SymmetricPolynomial::schur(const Partition& lambda, int n, long long coeff) {
    SymmetricPolynomial f(n);
    f.add_term(lambda, coeff);
    return f;
}

long long SymmetricPolynomial::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? 0 : it->second;
}

bool SymmetricPolynomial::is_schur_positive() const {
    for (auto& [p, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

long long SymmetricPolynomial::eval_at_ones() const {
    long long total = 0;
    for (auto& [p, c] : coeffs_) total += c * dimension(p, n_);
    return total;
}

void SymmetricPolynomial::add_term(const Partition& p, long long c) {
    if (c == 0 || p.length() > n_) return;
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
        coeffs_[p] = c;
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SymmetricPolynomial SymmetricPolynomial::operator+(const SymmetricPolynomial& o) const {
    if (n_ != o.n_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("SymmetricPolynomial: mixed variable counts");
    SymmetricPolynomial r = is_zero() ? SymmetricPolynomial(o.n_) : *this;
    for (auto& [p, c] : o.coeffs_) r.add_term(p, c);
    return r;
}

SymmetricPolynomial SymmetricPolynomial::operator-() const {
    SymmetricPolynomial r(n_);
    for (auto& [p, c] : coeffs_) r.coeffs_[p] = -c;
    return r;
}

SymmetricPolynomial SymmetricPolynomial::operator-(const SymmetricPolynomial& o) const {
    return *this + (-o);
}

namespace {

// Counts Littlewood-Richardson skew tableaux of shape nu/lambda with content mu.
// Cells are processed in reverse reading order (rows top to bottom, right to
// left) so the lattice condition can prune as we go.
long long lr_count(const Partition& nu, const Partition& lambda, const Partition& mu) {
    if (!nu.contains(lambda)) return 0;
    if (nu.size() != lambda.size() + mu.size()) return 0;
    int m = mu.length();
    if (m == 0) return nu == lambda ? 1 : 0;
    int rows = nu.length();
    std::vector<std::pair<int, int>> cells;  // (row, col), reverse reading order
    for (int r = 1; r <= rows; ++r)
        for (int c = nu.part(r); c > lambda.part(r); --c) cells.emplace_back(r, c);
    std::vector<int> remaining(m);
    for (int i = 0; i < m; ++i) remaining[i] = mu.part(i + 1);
    std::vector<int> placed(m, 0);
    // value placed at each cell, indexed like `cells`
    std::vector<int> val(cells.size(), 0);
    auto cell_index = [&](int r, int c) -> int {
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].first == r && cells[i].second == c) return (int)i;
        return -1;
    };
    long long count = 0;
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 1; v <= m; ++v) {
            if (remaining[v - 1] == 0) continue;
            // lattice: after placing v, #v must not exceed #(v-1)
            if (v > 1 && placed[v - 1] + 1 > placed[v - 2]) continue;
            // row weakly increasing: cell to the right (processed earlier) must be >= v
            int right = c < nu.part(r) ? val[cell_index(r, c + 1)] : 0;
            if (right != 0 && right < v) continue;
            // column strict: cell above (processed earlier) must be < v
            if (r > 1 && c > lambda.part(r - 1) && c <= nu.part(r - 1)) {
                int above = val[cell_index(r - 1, c)];
                if (above >= v) continue;
            }
            val[k] = v;
            --remaining[v - 1];
            ++placed[v - 1];
            self(self, k + 1);
            val[k] = 0;
            ++remaining[v - 1];
            --placed[v - 1];
        }
    };
    rec(rec, 0);
    return count;
}

std::vector<Partition> product_candidates(const Partition& lambda, const Partition& mu, int n) {
    // nu containing lambda, |nu| = |lambda| + |mu|, nu/lambda at most mu_1 wide per row
    std::vector<Partition> out;
    int total = lambda.size() + mu.size();
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int rem) -> void {
        if (row > n) {
            if (rem == 0) out.emplace_back(cur);
            return;
        }
        int lo = lambda.part(row);
        int hi = lambda.part(row) + mu.part(1);
        if (row > 1) hi = std::min(hi, cur[row - 2]);
        for (int v = lo; v <= std::min(hi, lo + rem); ++v) {
            cur.push_back(v);
            self(self, row + 1, rem - (v - lo));
            cur.pop_back();
        }
    };
    (void)total;
    rec(rec, 1, mu.size());
    return out;
}

}  // namespace

long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
    return lr_count(nu, lambda, mu);
}

SymmetricPolynomial SymmetricPolynomial::operator*(const SymmetricPolynomial& o) const {
    if (n_ != o.n_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("SymmetricPolynomial: mixed variable counts");
    int n = is_zero() ? o.n_ : n_;
    SymmetricPolynomial r(n);
    for (auto& [lam, a] : coeffs_) {
        for (auto& [mu, b] : o.coeffs_) {
            // single-row factors go through the cheaper Pieri route
            if (mu.length() <= 1) {
                SymmetricPolynomial p = pieri_multiply(lam, mu.part(1), PieriKind::Symmetric, n);
                for (auto& [nu, c] : p.terms()) r.add_term(nu, a * b * c);
                continue;
            }
            if (lam.length() <= 1) {
                SymmetricPolynomial p = pieri_multiply(mu, lam.part(1), PieriKind::Symmetric, n);
                for (auto& [nu, c] : p.terms()) r.add_term(nu, a * b * c);
                continue;
            }
            for (auto& nu : product_candidates(lam, mu, n)) {
                long long c = lr_count(nu, lam, mu);
                if (c) r.add_term(nu, a * b * c);
            }
        }
    }
    return r;
}

SymmetricPolynomial pieri_multiply(const Partition& lambda, int b, PieriKind kind, int n) {
    if (b < 0) throw std::invalid_argument("pieri_multiply: negative degree");
    SymmetricPolynomial r(n);
    if (lambda.length() > n) return r;
    auto strips = kind == PieriKind::Symmetric ? vertical_strip_extensions(lambda, b, n)
                                               : horizontal_strip_extensions(lambda, b, n);
    for (auto& beta : strips) r.add_term(beta, 1);
    return r;
}

SymmetricPolynomial skew_schur(const Partition& lambda, const Partition& alpha, int n) {
    SymmetricPolynomial r(n);
    if (!lambda.contains(alpha)) return r;
    for (auto& beta : partitions_of(lambda.size() - alpha.size(), n)) {
        long long c = lr_count(lambda, alpha, beta);
        if (c) r.add_term(beta, c);
    }
    return r;
}

MonomialExpansion schur_in_monomials(const Partition& lambda, int n) {
    MonomialExpansion out;
    if (lambda.length() > n) return out;
    for (auto& t : ssyt_list(lambda, n)) ++out[t.weight(n)];
    return out;
}

MonomialExpansion monomial_expansion(const SymmetricPolynomial& f) {
    MonomialExpansion out;
    for (auto& [p, c] : f.terms()) {
        for (auto& [w, k] : schur_in_monomials(p, f.vars())) {
            out[w] += c * k;
            if (out[w] == 0) out.erase(w);
        }
    }
    return out;
}

long long dimension(const Partition& lambda, int n) {
    if (lambda.length() > n) return 0;
    // Weyl: prod_{i<j} (l_i - l_j + j - i) / (j - i)
    long long num = 1, den = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            num *= lambda.part(i) - lambda.part(j) + j - i;
            den *= j - i;
            long long g = std::gcd(num, den);
            num /= g;
            den /= g;
        }
    if (den != 1) throw std::logic_error("dimension: non-integral Weyl product");
    return num;
}

DominanceResult dominance_compare(const std::vector<int>& w1, const std::vector<int>& w2) {
    long long s1 = std::accumulate(w1.begin(), w1.end(), 0LL);
    long long s2 = std::accumulate(w2.begin(), w2.end(), 0LL);
    if (s1 != s2) return DominanceResult::Incomparable;
    bool ge = true, le = true;
    long long p1 = 0, p2 = 0;
    size_t m = std::max(w1.size(), w2.size());
    for (size_t i = 0; i < m; ++i) {
        p1 += i < w1.size() ? w1[i] : 0;
        p2 += i < w2.size() ? w2[i] : 0;
        if (p1 < p2) ge = false;
        if (p1 > p2) le = false;
    }
    if (ge && le) return DominanceResult::Equal;
    if (ge) return DominanceResult::Dominates;
    if (le) return DominanceResult::DominatedBy;
    return DominanceResult::Incomparable;
}

std::string SymmetricPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [p, c] : coeffs_) {
        long long a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1) out += std::to_string(a) + "*";
        out += "s" + p.str();
        first = false;
    }
    return out;
}

SymmetricPolynomial SymmetricPolynomial::parse(const std::string& text, int n) {
    SymmetricPolynomial out(n);
    size_t i = 0;
    auto skip_ws = [&]() { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("SymmetricPolynomial: empty");
    if (text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return out;
    int sign = 1;
    while (i < text.size()) {
        skip_ws();
        if (text[i] == '+') { sign = 1; ++i; skip_ws(); }
        else if (text[i] == '-') { sign = -1; ++i; skip_ws(); }
        long long coeff = 1;
        if (i < text.size() && (isdigit(text[i]))) {
            size_t pos = 0;
            coeff = std::stoll(text.substr(i), &pos);
            i += pos;
            skip_ws();
            if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
        }
        Partition p;
        if (i < text.size() && text[i] == 's') {
            ++i;
            size_t close = text.find(')', i);
            if (i >= text.size() || text[i] != '(' || close == std::string::npos)
                throw std::invalid_argument("SymmetricPolynomial: expected s(...)");
            p = Partition::parse(text.substr(i, close - i + 1));
            i = close + 1;
        }
        out.add_term(p, sign * coeff);
        skip_ws();
        if (i < text.size() && text[i] != '+' && text[i] != '-')
            throw std::invalid_argument("SymmetricPolynomial: unexpected token at '" + text.substr(i) + "'");
        sign = 1;
    }
    return out;
}

}  // namespace pieri
