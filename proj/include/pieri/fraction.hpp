#pragma once

#include <optional>
#include <string>
#include <variant>

#include "pieri/schur.hpp"

namespace pieri {

// Element of the quotient field of symmetric polynomials in n variables.
// Not reduced to canonical form; equality is by cross-multiplication.
class SchurFraction {
public:
    SchurFraction() : num_(SymmetricPolynomial(0)), den_(SymmetricPolynomial(0)) {}
    SchurFraction(SymmetricPolynomial num, SymmetricPolynomial den);
    explicit SchurFraction(const SymmetricPolynomial& num)
        : SchurFraction(num, SymmetricPolynomial::one(num.vars())) {}

    const SymmetricPolynomial& num() const { return num_; }
    const SymmetricPolynomial& den() const { return den_; }
    int vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }

    SchurFraction operator+(const SchurFraction& o) const;
    SchurFraction operator-(const SchurFraction& o) const;
    SchurFraction operator*(const SchurFraction& o) const;
    SchurFraction operator/(const SchurFraction& o) const;
    bool operator==(const SchurFraction& o) const;  // cross-multiplied
    bool operator!=(const SchurFraction& o) const { return !(*this == o); }

    std::string str() const;

private:
    SymmetricPolynomial num_, den_;
};

struct Positive {
    SymmetricPolynomial witness;  // Schur-positive g with g*f Schur-positive
};
struct NotPositive {
    std::vector<int> certificate_weight;  // dominance-maximal weight with negative coefficient
};
struct Unknown {};

using PositivityVerdict = std::variant<Positive, NotPositive, Unknown>;

bool is_positive(const PositivityVerdict& v);
bool is_not_positive(const PositivityVerdict& v);
std::string verdict_str(const PositivityVerdict& v);

// Semi-decides membership in the Schur-positive fraction cone. The ladder:
// both halves Schur-positive; a dominance-maximal monomial weight with a
// negative coefficient refutes; otherwise search multipliers s_(m)^k and
// staircase powers up to the effort bound.
PositivityVerdict check_schur_positive(const SchurFraction& f, int effort = 6);

// The refutation step alone: a dominance-maximal weight of f's monomial
// expansion carrying a negative coefficient, if one exists.
std::optional<std::vector<int>> negative_dominant_weight(const SymmetricPolynomial& f);

}  // namespace pieri
