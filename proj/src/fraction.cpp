#include "pieri/fraction.hpp"

#include <stdexcept>

namespace pieri {

SchurFraction::SchurFraction(SymmetricPolynomial num, SymmetricPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("SchurFraction: zero denominator");
}

SchurFraction SchurFraction::operator+(const SchurFraction& o) const {
    return SchurFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

SchurFraction SchurFraction::operator-(const SchurFraction& o) const {
    return SchurFraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

SchurFraction SchurFraction::operator*(const SchurFraction& o) const {
    return SchurFraction(num_ * o.num_, den_ * o.den_);
}

SchurFraction SchurFraction::operator/(const SchurFraction& o) const {
    if (o.is_zero()) throw std::domain_error("SchurFraction: division by zero");
    return SchurFraction(num_ * o.den_, den_ * o.num_);
}

bool SchurFraction::operator==(const SchurFraction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string SchurFraction::str() const {
    if (den_ == SymmetricPolynomial::one(den_.vars())) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

bool is_positive(const PositivityVerdict& v) { return std::holds_alternative<Positive>(v); }
bool is_not_positive(const PositivityVerdict& v) { return std::holds_alternative<NotPositive>(v); }

std::string verdict_str(const PositivityVerdict& v) {
    if (auto* p = std::get_if<Positive>(&v)) return "Positive(witness " + p->witness.str() + ")";
    if (auto* np = std::get_if<NotPositive>(&v)) {
        std::string w = "(";
        for (size_t i = 0; i < np->certificate_weight.size(); ++i) {
            if (i) w += ",";
            w += std::to_string(np->certificate_weight[i]);
        }
        return "NotPositive(weight " + w + ")";
    }
    return "Unknown";
}

std::optional<std::vector<int>> negative_dominant_weight(const SymmetricPolynomial& f) {
    // the maximal-weight criterion is applied per homogeneous function only
    int deg = -1;
    for (auto& [p, c] : f.terms()) {
        if (deg == -1) deg = p.size();
        if (p.size() != deg) return std::nullopt;
    }
    MonomialExpansion mono = monomial_expansion(f);
    // dominant representatives of the weights present
    std::map<std::vector<int>, long long> dominant;
    for (auto& [w, c] : mono) {
        std::vector<int> d = w;
        std::sort(d.begin(), d.end(), std::greater<int>());
        if (d == w) dominant[d] = c;
    }
    for (auto& [w, c] : dominant) {
        if (c >= 0) continue;
        bool maximal = true;
        for (auto& [v, cv] : dominant) {
            if (v == w) continue;
            if (dominance_compare(v, w) == DominanceResult::Dominates) {
                maximal = false;
                break;
            }
        }
        if (maximal) return w;
    }
    return std::nullopt;
}

namespace {

// Candidate multipliers: powers of single rows and of staircases.
std::vector<SymmetricPolynomial> witness_family(int n, int effort) {
    std::vector<SymmetricPolynomial> out;
    for (int k = 1; k <= effort; ++k) {
        for (int m = 1; m <= effort; ++m) {
            SymmetricPolynomial row = SymmetricPolynomial::schur(Partition{m}, n);
            SymmetricPolynomial g = row;
            for (int t = 1; t < k; ++t) g = g * row;
            out.push_back(g);
            std::vector<int> stair;
            for (int v = m; v >= 1 && (int)stair.size() < n; --v) stair.push_back(v);
            SymmetricPolynomial st = SymmetricPolynomial::schur(Partition(stair), n);
            SymmetricPolynomial gs = st;
            for (int t = 1; t < k; ++t) gs = gs * st;
            out.push_back(gs);
        }
    }
    return out;
}

// Decides f (a polynomial) as a fraction f/1 given the ladder.
PositivityVerdict check_polynomial(const SymmetricPolynomial& f, int effort) {
    if (f.is_schur_positive()) return Positive{SymmetricPolynomial::one(f.vars())};
    if (auto w = negative_dominant_weight(f)) return NotPositive{*w};
    for (auto& g : witness_family(f.vars(), effort)) {
        if ((g * f).is_schur_positive()) return Positive{g};
    }
    return Unknown{};
}

}  // namespace

PositivityVerdict check_schur_positive(const SchurFraction& f, int effort) {
    if (f.is_zero()) return Positive{SymmetricPolynomial::one(f.vars())};
    SymmetricPolynomial num = f.num(), den = f.den();
    // orient the representative so the denominator evaluates positive
    long long dsign = den.eval_at_ones();
    if (dsign < 0) {
        num = -num;
        den = -den;
    } else if (dsign == 0) {
        return Unknown{};
    }
    if (num.is_schur_positive() && den.is_schur_positive()) return Positive{SymmetricPolynomial::one(f.vars())};
    if (den.is_schur_positive()) {
        // fraction positive iff numerator is a positive fraction
        return check_polynomial(num, effort);
    }
    // make the denominator positive first, then retry with the cleared numerator
    PositivityVerdict dv = check_polynomial(den, effort);
    if (auto* p = std::get_if<Positive>(&dv)) {
        return check_schur_positive(SchurFraction(num * p->witness, den * p->witness), effort);
    }
    return Unknown{};
}

}  // namespace pieri
