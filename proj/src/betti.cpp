#include "pieri/betti.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pieri {

Rational BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? Rational(0) : it->second;
}

void BettiTable::set(int i, int j, Rational v) {
    if (v.is_zero())
        entries.erase({i, j});
    else
        entries[{i, j}] = std::move(v);
}

int BettiTable::columns() const {
    int cols = 0;
    int last = -1;
    for (auto& [k, v] : entries)
        if (k.first != last) {
            ++cols;
            last = k.first;
        }
    return cols;
}

std::string BettiTable::str() const {
    if (entries.empty()) return "(empty table)\n";
    int max_i = 0, min_row = 1 << 30, max_row = -(1 << 30);
    for (auto& [k, v] : entries) {
        max_i = std::max(max_i, k.first);
        min_row = std::min(min_row, k.second - k.first);
        max_row = std::max(max_row, k.second - k.first);
    }
    std::ostringstream out;
    for (int r = min_row; r <= max_row; ++r) {
        out << r << ":";
        for (int i = 0; i <= max_i; ++i) {
            Rational v = at(i, i + r);
            out << "\t" << (v.is_zero() ? "." : v.str());
        }
        out << "\n";
    }
    return out.str();
}

const SymmetricPolynomial* EquivariantBettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? nullptr : &it->second;
}

void EquivariantBettiTable::add(int i, int j, const SymmetricPolynomial& f) {
    if (f.is_zero()) return;
    auto it = entries.find({i, j});
    if (it == entries.end()) {
        entries[{i, j}] = f;
    } else {
        it->second += f;
        if (it->second.is_zero()) entries.erase({i, j});
    }
}

BettiTable hk_pure_table(const DegreeSequence& d) {
    if (d.size() < 2) throw std::invalid_argument("hk_pure_table: need at least two degrees");
    for (size_t i = 0; i + 1 < d.size(); ++i)
        if (d[i] >= d[i + 1]) throw std::invalid_argument("hk_pure_table: degrees must strictly increase");
    std::vector<Rational> b(d.size());
    for (size_t i = 0; i < d.size(); ++i) {
        Rational prod(1);
        for (size_t j = 0; j < d.size(); ++j) {
            if (j == i) continue;
            long long diff = d[j] - d[i];
            prod *= Rational(1, diff < 0 ? -diff : diff);
        }
        b[i] = prod;
    }
    // scale to the minimal positive integral table
    BigInt lcm_den(1), gcd_num(0);
    for (auto& x : b) {
        BigInt g = BigInt::gcd(lcm_den, x.den());
        lcm_den = lcm_den * (x.den() / g);
    }
    for (auto& x : b) gcd_num = BigInt::gcd(gcd_num, x.num() * (lcm_den / x.den()));
    BettiTable out;
    for (size_t i = 0; i < d.size(); ++i)
        out.set((int)i, d[i], Rational(b[i].num() * (lcm_den / b[i].den()) / gcd_num, BigInt(1)));
    return out;
}

int impurity(const BettiTable& b) {
    if (b.entries.empty()) throw std::invalid_argument("impurity: empty table");
    return (int)b.entries.size() - b.columns();
}

DegreeSequence top_degree_sequence(const BettiTable& b) {
    if (b.entries.empty()) throw std::invalid_argument("top_degree_sequence: empty table");
    std::map<int, int> best;
    for (auto& [k, v] : b.entries) {
        auto it = best.find(k.first);
        if (it == best.end() || k.second < it->second) best[k.first] = k.second;
    }
    DegreeSequence d;
    for (auto& [i, j] : best) d.push_back(j);
    return d;
}

DegreeSequence bottom_degree_sequence(const BettiTable& b) {
    if (b.entries.empty()) throw std::invalid_argument("bottom_degree_sequence: empty table");
    std::map<int, int> best;
    for (auto& [k, v] : b.entries) {
        auto it = best.find(k.first);
        if (it == best.end() || k.second > it->second) best[k.first] = k.second;
    }
    DegreeSequence d;
    for (auto& [i, j] : best) d.push_back(j);
    return d;
}

Decomposition bs_decompose_numeric(const BettiTable& input, bool use_bottom) {
    Decomposition out;
    BettiTable b = input;
    for (int round = 0; round < 1000 && !b.is_zero(); ++round) {
        DegreeSequence d = use_bottom ? bottom_degree_sequence(b) : top_degree_sequence(b);
        bool valid = d.size() >= 2;
        for (size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i] >= d[i + 1]) valid = false;
        // every homological degree 0..columns-1 must still be present
        std::set<int> cols;
        for (auto& [k, v] : b.entries) cols.insert(k.first);
        for (int i = 0; i < (int)cols.size(); ++i)
            if (!cols.count(i)) valid = false;
        if (!valid) break;
        BettiTable diagram = hk_pure_table(d);
        std::optional<Rational> r;
        for (size_t i = 0; i < d.size(); ++i) {
            Rational denom = diagram.at((int)i, d[i]);
            Rational ratio = b.at((int)i, d[i]) / denom;
            if (!r || ratio < *r) r = ratio;
        }
        if (!r || r->is_zero() || r->signum() < 0) break;
        for (auto& [k, v] : diagram.entries) b.set(k.first, k.second, b.at(k.first, k.second) - *r * v);
        bool nonneg = true;
        for (auto& [k, v] : b.entries)
            if (v.signum() < 0) nonneg = false;
        if (!nonneg) {
            // undo and stop: the table is not in the cone along this chain
            for (auto& [k, v] : diagram.entries) b.set(k.first, k.second, b.at(k.first, k.second) + *r * v);
            break;
        }
        out.steps.push_back({*r, d, diagram});
    }
    out.residual = b;
    return out;
}

EquivariantBettiTable from_complex(const EquivariantComplex& c) {
    EquivariantBettiTable t;
    t.n = c.n;
    for (auto& [k, m] : c.terms)
        t.add(k.hom_degree, k.internal_degree, SymmetricPolynomial::schur(k.partition, c.n, m));
    return t;
}

BettiTable to_numeric(const EquivariantBettiTable& t) {
    BettiTable out;
    for (auto& [k, f] : t.entries) out.set(k.first, k.second, Rational(f.eval_at_ones()));
    return out;
}

EquivariantBettiTable equivariant_pure_table(const DegreeSequence& d, int n,
                                             EquivariantComplex* complex_out) {
    if ((int)d.size() != n + 1)
        throw std::invalid_argument("equivariant_pure_table: degree sequence must have n+1 entries");
    for (size_t i = 0; i + 1 < d.size(); ++i)
        if (d[i] >= d[i + 1])
            throw std::invalid_argument("equivariant_pure_table: degrees must strictly increase");
    std::vector<int> e(n + 1);
    for (int i = 1; i <= n; ++i) e[i] = d[i] - d[i - 1];
    std::vector<int> alpha(n, 0);
    for (int k = n; k >= 2; --k) alpha[k - 2] = alpha[k - 1] + e[k] - 1;
    std::vector<int> beta = alpha;
    beta[0] += e[1];
    EquivariantComplex c = pure_resolution(Partition(std::vector<int>(alpha.begin(), alpha.end())),
                                           Partition(std::vector<int>(beta.begin(), beta.end())), n);
    if (complex_out) *complex_out = c;
    EquivariantBettiTable t;
    t.n = n;
    for (auto& [k, m] : c.terms)
        t.add(k.hom_degree, k.internal_degree + d[0], SymmetricPolynomial::schur(k.partition, n, m));
    return t;
}

namespace {

// pivot: entry of the pure diagram's support minimizing the numeric ratio
std::optional<std::pair<int, int>> numeric_pivot(const std::map<std::pair<int, int>, SymmetricPolynomial>& r,
                                                 const EquivariantBettiTable& pure) {
    std::optional<std::pair<int, int>> arg;
    std::optional<Rational> best;
    for (auto& [k, f] : pure.entries) {
        auto it = r.find(k);
        long long num = it == r.end() ? 0 : it->second.eval_at_ones();
        Rational ratio(num, f.eval_at_ones());
        if (!best || ratio < *best) {
            best = ratio;
            arg = k;
        }
    }
    return arg;
}

}  // namespace

EquivariantDecomposition bs_decompose_equivariant(const EquivariantBettiTable& input, int effort,
                                                  bool use_bottom) {
    EquivariantDecomposition out;
    int n = input.n;
    // residual state: numerator table / denominator polynomial
    std::map<std::pair<int, int>, SymmetricPolynomial> R = input.entries;
    SymmetricPolynomial D = SymmetricPolynomial::one(n);

    for (int round = 0; round < 500 && !R.empty(); ++round) {
        BettiTable shadow;
        for (auto& [k, f] : R) shadow.set(k.first, k.second, Rational(f.eval_at_ones()));
        DegreeSequence d = use_bottom ? bottom_degree_sequence(shadow) : top_degree_sequence(shadow);
        bool valid = (int)d.size() == n + 1;
        for (size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i] >= d[i + 1]) valid = false;
        if (!valid) {
            out.failure = EquivariantFailure{-1, -1, SymmetricPolynomial(n), {}};
            return out;
        }
        EquivariantBettiTable pure = equivariant_pure_table(d, n);
        auto pivot = numeric_pivot(R, pure);
        if (!pivot) break;
        auto [pi, pj] = *pivot;
        const SymmetricPolynomial* rp = nullptr;
        {
            auto it = R.find({pi, pj});
            if (it == R.end()) break;  // ratio zero: nothing to subtract
            rp = &it->second;
        }
        SymmetricPolynomial pivot_num = *rp;
        SymmetricPolynomial pivot_den = *pure.at(pi, pj);

        // coefficient of this step: (R_pivot / D) / pure_pivot
        SchurFraction coeff(pivot_num, D * pivot_den);
        EquivariantStep step{coeff, d, pure, check_schur_positive(coeff, effort)};

        // residual update: R'_ij = R_ij * pure_pivot - R_pivot * pure_ij, D' = D * pure_pivot
        std::map<std::pair<int, int>, SymmetricPolynomial> next;
        std::set<std::pair<int, int>> keys;
        for (auto& [k, f] : R) keys.insert(k);
        for (auto& [k, f] : pure.entries) keys.insert(k);
        for (auto& k : keys) {
            SymmetricPolynomial a = R.count(k) ? R.at(k) : SymmetricPolynomial(n);
            const SymmetricPolynomial* b = pure.at(k.first, k.second);
            SymmetricPolynomial val = a * pivot_den;
            if (b) val -= pivot_num * (*b);
            if (!val.is_zero()) next[k] = std::move(val);
        }
        // certify every residual entry (denominator is Schur-positive by construction)
        for (auto& [k, f] : next) {
            auto verdict = check_schur_positive(SchurFraction(f), effort);
            if (is_not_positive(verdict)) {
                out.steps.push_back(step);
                out.failure =
                    EquivariantFailure{k.first, k.second, f, std::get<NotPositive>(verdict).certificate_weight};
                return out;
            }
        }
        out.steps.push_back(step);
        R = std::move(next);
        D = D * pivot_den;
    }
    if (!R.empty()) out.failure = EquivariantFailure{-1, -1, SymmetricPolynomial(n), {}};
    return out;
}

}  // namespace pieri
