#include "pieri/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "pieri/critical.hpp"
#include "pieri/tor.hpp"

namespace pieri {

void EquivariantComplex::add(int hom, int internal, const Partition& p, long long mult) {
    if (!mult) return;
    TermKey k{hom, internal, p};
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms[k] = mult;
    } else {
        it->second += mult;
        if (!it->second) terms.erase(it);
    }
}

int EquivariantComplex::length() const {
    int len = 0;
    for (auto& [k, m] : terms) len = std::max(len, k.hom_degree);
    return len;
}

long long EquivariantComplex::multiplicity(int hom, int internal, const Partition& p) const {
    auto it = terms.find(TermKey{hom, internal, p});
    return it == terms.end() ? 0 : it->second;
}

std::vector<std::pair<TermKey, long long>> EquivariantComplex::slice(int hom) const {
    std::vector<std::pair<TermKey, long long>> out;
    for (auto& [k, m] : terms)
        if (k.hom_degree == hom) out.emplace_back(k, m);
    return out;
}

Partition EquivariantComplex::generator() const {
    auto zero = slice(0);
    if (zero.size() != 1 || zero[0].second != 1 || zero[0].first.internal_degree != 0)
        throw std::logic_error("EquivariantComplex: degree 0 is not a single generator");
    return zero[0].first.partition;
}

std::vector<Partition> EquivariantComplex::relations() const {
    std::vector<Partition> rel;
    for (auto& [k, m] : slice(1))
        for (long long i = 0; i < m; ++i) rel.push_back(k.partition);
    std::sort(rel.begin(), rel.end(), [](const Partition& a, const Partition& b) { return lex_less(b, a); });
    return rel;
}

void CokernelSpec::validate() const {
    if (relations.empty()) throw std::invalid_argument("CokernelSpec: no relations");
    if (alpha.length() > n) throw std::invalid_argument("CokernelSpec: alpha exceeds width n");
    for (size_t i = 0; i < relations.size(); ++i) {
        const Partition& b = relations[i];
        if (b.length() > n) throw std::invalid_argument("CokernelSpec: relation exceeds width n");
        if (!is_vertical_strip(b, alpha) || b == alpha)
            throw std::invalid_argument("CokernelSpec: relation " + b.str() +
                                        " is not a nonempty vertical strip over " + alpha.str());
        for (size_t j = i + 1; j < relations.size(); ++j) {
            if (!lex_less(relations[j], relations[i]))
                throw std::invalid_argument("CokernelSpec: relations must strictly decrease in lex order");
            if (relations[i].contains(relations[j]) || relations[j].contains(relations[i]))
                throw std::invalid_argument("CokernelSpec: nested relations " + relations[i].str() +
                                            ", " + relations[j].str());
        }
    }
}

CokernelSpec CokernelSpec::make(Partition alpha, std::vector<Partition> betas, int n) {
    std::sort(betas.begin(), betas.end(),
              [](const Partition& a, const Partition& b) { return lex_less(b, a); });
    betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
    CokernelSpec spec{std::move(alpha), std::move(betas), n};
    spec.validate();
    return spec;
}

EquivariantComplex pure_resolution(const Partition& alpha, const Partition& beta, int n) {
    if (!is_vertical_strip(beta, alpha) || beta == alpha)
        throw std::invalid_argument("pure_resolution: beta/alpha must be a nonempty vertical strip");
    for (int j = 2; j <= beta.length(); ++j)
        if (beta.part(j) != alpha.part(j))
            throw std::invalid_argument("pure_resolution: beta/alpha must lie in column 1");
    if (alpha.length() > n || beta.length() > n)
        throw std::invalid_argument("pure_resolution: width exceeded");

    std::vector<int> e(n + 1, 0);
    e[1] = beta.part(1) - alpha.part(1);
    for (int i = 2; i <= n; ++i) e[i] = alpha.part(i - 1) - alpha.part(i) + 1;
    EquivariantComplex c;
    c.n = n;
    c.add(0, 0, alpha);
    std::vector<int> parts(n);
    for (int i = 1; i <= n; ++i) parts[i - 1] = alpha.part(i);
    int degree = 0;
    for (int i = 1; i <= n; ++i) {
        parts[i - 1] += e[i];
        degree += e[i];
        c.add(i, degree, Partition(std::vector<int>(parts.begin(), parts.end())));
    }
    return c;
}

std::vector<EquivariantComplex> pure_family(const std::vector<int>& e, int n) {
    if ((int)e.size() != n + 1 || e[0] != 0)
        throw std::invalid_argument("pure_family: expected jumps (0, e_1, ..., e_n)");
    for (int i = 1; i <= n; ++i)
        if (e[i] < 1) throw std::invalid_argument("pure_family: jumps must be at least 1");
    std::vector<EquivariantComplex> out;
    for (int i = 1; i <= e[1]; ++i) {
        // alpha determined by the jumps; i boxes in column 1, e_1 - i in column n
        std::vector<int> alpha(n, 0);
        alpha[n - 1] = 0;
        if (n >= 2) alpha[n - 2] = e[n] - 1 + (e[1] - i);
        for (int k = n - 1; k >= 2; --k) alpha[k - 2] = alpha[k - 1] + e[k] - 1;
        Partition a(std::vector<int>(alpha.begin(), alpha.end()));
        std::vector<int> beta = alpha;
        beta[0] += i;
        if (e[1] - i > 0) beta[n - 1] += e[1] - i;
        Partition b{std::vector<int>(beta.begin(), beta.end())};
        out.push_back(pieri_resolution_single(a, b, n));
    }
    return out;
}

EquivariantComplex pieri_resolution_single(const Partition& alpha, const Partition& beta, int n) {
    if (!is_vertical_strip(beta, alpha) || beta == alpha)
        throw std::invalid_argument("pieri_resolution_single: beta/alpha must be a nonempty vertical strip");
    if (beta.length() > n || alpha.length() > n)
        throw std::invalid_argument("pieri_resolution_single: width exceeded");
    EquivariantComplex c;
    c.n = n;
    c.add(0, 0, alpha);
    int base = alpha.size();
    for (int i = 1;; ++i) {
        auto sets = admissible_subsets(alpha, beta, n, i);
        if (sets.empty()) break;
        for (auto& J : sets) {
            Partition bJ = beta_of(alpha, beta, J.columns);
            c.add(i, bJ.size() - base, bJ);
        }
    }
    return c;
}

EquivariantComplex pieri_resolution_columns(const CokernelSpec& spec) {
    spec.validate();
    check_single_column_spec(spec.alpha, spec.relations, spec.n);
    EquivariantComplex c;
    c.n = spec.n;
    c.add(0, 0, spec.alpha);
    int base = spec.alpha.size();
    for (int i = 1;; ++i) {
        auto sets = multi_admissible(spec.alpha, spec.relations, spec.n, i);
        if (sets.empty()) break;
        for (auto& m : sets) c.add(i, m.beta_J.size() - base, m.beta_J);
    }
    return c;
}

namespace {

// relations of N' in the mapping-cone induction: inclusion-minimal members of
// {beta^1 u beta^i} u {beta^1(j) : {j} in Ad(alpha, beta^1)}
std::vector<Partition> cone_upper_relations(const Partition& alpha, const std::vector<Partition>& betas,
                                            int n) {
    std::vector<Partition> cand;
    for (size_t i = 1; i < betas.size(); ++i) cand.push_back(partition_union(betas[0], betas[i]));
    for (auto& J : admissible_subsets(alpha, betas[0], n, 2))
        cand.push_back(beta_of(alpha, betas[0], J.columns));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<Partition> minimal;
    for (auto& x : cand) {
        bool keep = true;
        for (auto& y : cand)
            if (!(x == y) && x.contains(y)) keep = false;
        if (keep) minimal.push_back(x);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const Partition& a, const Partition& b) { return lex_less(b, a); });
    return minimal;
}

EquivariantComplex cone_rec(const Partition& alpha, const std::vector<Partition>& betas, int n) {
    if (betas.size() == 1) return pieri_resolution_single(alpha, betas[0], n);
    // N: drop the lex-largest relation; N': resolve over beta^1
    std::vector<Partition> rest(betas.begin() + 1, betas.end());
    EquivariantComplex lower = cone_rec(alpha, rest, n);
    EquivariantComplex upper = cone_rec(betas[0], cone_upper_relations(alpha, betas, n), n);
    EquivariantComplex c;
    c.n = n;
    int shift = betas[0].size() - alpha.size();
    for (auto& [k, m] : lower.terms) c.add(k.hom_degree, k.internal_degree, k.partition, m);
    for (auto& [k, m] : upper.terms)
        c.add(k.hom_degree + 1, k.internal_degree + shift, k.partition, m);
    return c;
}

}  // namespace

EquivariantComplex mapping_cone_resolution(const CokernelSpec& spec) {
    spec.validate();
    EquivariantComplex c = cone_rec(spec.alpha, spec.relations, spec.n);
    c.provenance = spec.relations.size() > 1 ? Provenance::MappingConePossiblyNonminimal
                                             : Provenance::GuaranteedMinimal;
    return c;
}

EquivariantComplex resolve(const CokernelSpec& spec) {
    spec.validate();
    if (spec.relations.size() == 1) return pieri_resolution_single(spec.alpha, spec.relations[0], spec.n);
    bool single_columns = true;
    for (auto& b : spec.relations)
        if (strip_columns(spec.alpha, b).size() != 1) single_columns = false;
    if (single_columns) return pieri_resolution_columns(spec);
    return mapping_cone_resolution(spec);
}

std::vector<std::pair<Partition, int>> cokernel_character(const CokernelSpec& spec, int degree_bound) {
    spec.validate();
    if (degree_bound < 0) throw std::invalid_argument("cokernel_character: negative bound");
    std::vector<std::pair<Partition, int>> out;
    for (int d = 0; d <= degree_bound; ++d) {
        for (auto& lam : vertical_strip_extensions(spec.alpha, d, spec.n)) {
            bool excluded = false;
            for (auto& b : spec.relations)
                if (is_vertical_strip(lam, b)) {
                    excluded = true;
                    break;
                }
            if (!excluded) out.emplace_back(lam, d);
        }
    }
    return out;
}

EulerCheck verify_euler(const EquivariantComplex& c, int degree_bound) {
    int n = c.n;
    // numerator P_j = sum_i (-1)^i ch(terms at internal degree j)
    std::map<int, SymmetricPolynomial> numerator;
    int top = 0;
    for (auto& [k, m] : c.terms) {
        auto it = numerator.find(k.internal_degree);
        if (it == numerator.end())
            it = numerator.emplace(k.internal_degree, SymmetricPolynomial(n)).first;
        it->second.add_term(k.partition, (k.hom_degree % 2 ? -m : m));
        top = std::max(top, k.internal_degree);
    }
    // e_k = s_(1^k); prod_k (1 - x_k t) = sum (-1)^k e_k t^k
    std::vector<SymmetricPolynomial> elementary;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> ones(k, 1);
        elementary.push_back(SymmetricPolynomial::schur(Partition(ones), n));
    }
    int bound = degree_bound >= 0 ? std::max(degree_bound, top) : top + n;
    EulerCheck out;
    out.quotient.reserve(bound + 1);
    for (int d = 0; d <= bound; ++d) {
        SymmetricPolynomial h(n);
        auto it = numerator.find(d);
        if (it != numerator.end()) h += it->second;
        for (int k = 1; k <= std::min(n, d); ++k) {
            SymmetricPolynomial prev = out.quotient[d - k];
            if (prev.is_zero()) continue;
            SymmetricPolynomial term = prev * elementary[k];
            if (k % 2) h += term; else h -= term;
        }
        out.quotient.push_back(std::move(h));
    }
    // exact divisibility: quotient of a finite-length module vanishes past
    // top - n; in general the series just continues, so report termination
    out.finite_length = true;
    for (int d = std::max(0, top - n + 1); d <= bound; ++d)
        if (!out.quotient[d].is_zero()) out.finite_length = false;
    out.schur_positive = true;
    for (auto& q : out.quotient)
        if (!q.is_schur_positive()) out.schur_positive = false;
    out.divisible = out.schur_positive;  // characters certify the division
    return out;
}

EquivariantComplex minimize(const EquivariantComplex& c, int effort) {
    if (c.provenance == Provenance::GuaranteedMinimal) return c;
    EquivariantComplex out = c;
    out.candidates.clear();
    // candidates: equal (partition, internal degree) in adjacent homological degrees
    std::vector<CancellationCandidate> cands;
    for (auto& [k, m] : c.terms) {
        long long above = c.multiplicity(k.hom_degree + 1, k.internal_degree, k.partition);
        if (above > 0) cands.push_back({k.partition, k.internal_degree, k.hom_degree, m, above});
    }
    if (cands.empty()) {
        out.provenance = Provenance::GuaranteedMinimal;
        return out;
    }
    if (effort <= 0) {
        out.candidates = cands;
        return out;
    }
    CokernelSpec spec = CokernelSpec::make(c.generator(), c.relations(), c.n);
    bool all_resolved = true;
    for (auto& cand : cands) {
        std::optional<long long> low =
            tor_multiplicity(spec, cand.partition, cand.lower_hom_degree, cand.internal_degree, effort);
        std::optional<long long> high =
            tor_multiplicity(spec, cand.partition, cand.lower_hom_degree + 1, cand.internal_degree, effort);
        if (!low || !high) {
            all_resolved = false;
            out.candidates.push_back(cand);
            continue;
        }
        long long drop_low = cand.multiplicity_low - *low;
        long long drop_high = cand.multiplicity_high - *high;
        if (drop_low != drop_high || drop_low < 0)
            throw std::logic_error("minimize: inconsistent Koszul ranks for " + cand.partition.str());
        if (drop_low > 0) {
            out.add(cand.lower_hom_degree, cand.internal_degree, cand.partition, -drop_low);
            out.add(cand.lower_hom_degree + 1, cand.internal_degree, cand.partition, -drop_low);
        }
    }
    if (all_resolved) out.provenance = Provenance::GuaranteedMinimal;
    return out;
}

namespace {

std::string diagram_text(const Partition& p) {
    // paper convention: p_i boxes in the i-th column, rows are the dual parts
    Partition d = p.dual();
    std::string out;
    for (int r = 1; r <= d.length(); ++r) {
        for (int c = 0; c < d.part(r); ++c) out += "[]";
        out += "\n";
    }
    return out;
}

}  // namespace

std::string render_text(const EquivariantComplex& c, bool diagrams) {
    std::string out = "0";
    for (int i = c.length(); i >= 0; --i) {
        auto terms = c.slice(i);
        out += " -> ";
        std::string group;
        for (auto& [k, m] : terms) {
            if (!group.empty()) group += " (+) ";
            if (m != 1) group += std::to_string(m) + "*";
            group += k.partition.str() + "{" + std::to_string(k.internal_degree) + "}";
        }
        out += terms.size() > 1 ? "[" + group + "]" : group;
    }
    if (c.provenance == Provenance::MappingConePossiblyNonminimal) out += "   (mapping cone)";
    out += "\n";
    if (diagrams) {
        for (int i = 0; i <= c.length(); ++i)
            for (auto& [k, m] : c.slice(i)) {
                out += "degree " + std::to_string(i) + ", twist " + std::to_string(k.internal_degree) +
                       ", x" + std::to_string(m) + ":\n" + diagram_text(k.partition);
            }
    }
    return out;
}

}  // namespace pieri
