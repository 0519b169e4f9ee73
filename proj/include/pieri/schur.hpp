#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pieri/partition.hpp"

namespace pieri {

// Symmetric polynomial in n variables, stored in the Schur basis with integer
// coefficients. s_lambda with more than n parts is identically zero and never
// stored; neither are zero coefficients.
class SymmetricPolynomial {
public:
    SymmetricPolynomial() : n_(0) {}
    explicit SymmetricPolynomial(int n) : n_(n) {}

    static SymmetricPolynomial schur(const Partition& lambda, int n, long long coeff = 1);
    static SymmetricPolynomial one(int n) { return schur(Partition{}, n); }

    int vars() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Partition, long long>& terms() const { return coeffs_; }
    long long coeff(const Partition& p) const;
    bool is_schur_positive() const;
    // evaluation at x_1 = ... = x_n = 1 (sum of dimensions)
    long long eval_at_ones() const;

    SymmetricPolynomial operator+(const SymmetricPolynomial& o) const;
    SymmetricPolynomial operator-(const SymmetricPolynomial& o) const;
    SymmetricPolynomial operator-() const;
    SymmetricPolynomial operator*(const SymmetricPolynomial& o) const;  // Littlewood-Richardson
    SymmetricPolynomial& operator+=(const SymmetricPolynomial& o) { return *this = *this + o; }
    SymmetricPolynomial& operator-=(const SymmetricPolynomial& o) { return *this = *this - o; }
    bool operator==(const SymmetricPolynomial& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }
    bool operator!=(const SymmetricPolynomial& o) const { return !(*this == o); }

    void add_term(const Partition& p, long long c);

    std::string str() const;                                   // "s(5,3) - 2*s(4,4)"
    static SymmetricPolynomial parse(const std::string& text, int n);

private:
    int n_;
    std::map<Partition, long long> coeffs_;
};

// Monomial expansion: weight vector (length n) -> coefficient, symmetric under
// coordinate permutation.
using MonomialExpansion = std::map<std::vector<int>, long long>;

MonomialExpansion schur_in_monomials(const Partition& lambda, int n);
MonomialExpansion monomial_expansion(const SymmetricPolynomial& f);

// Pieri products: sum of s_beta over vertical strips (symmetric kind,
// multiplication by s_(b)) or horizontal strips (exterior kind, by e_b).
enum class PieriKind { Symmetric, Exterior };
SymmetricPolynomial pieri_multiply(const Partition& lambda, int b, PieriKind kind, int n);

// dim of the irreducible with highest weight lambda for GL_n (Weyl product).
long long dimension(const Partition& lambda, int n);

// Littlewood-Richardson coefficient c^nu_{lambda,mu}.
long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

// Skew Schur s_{lambda/alpha} expanded in the Schur basis (n variables).
SymmetricPolynomial skew_schur(const Partition& lambda, const Partition& alpha, int n);

// lambda dominates mu: equal sizes and all prefix sums of lambda >= those of mu.
enum class DominanceResult { Dominates, DominatedBy, Equal, Incomparable };
DominanceResult dominance_compare(const std::vector<int>& w1, const std::vector<int>& w2);

}  // namespace pieri
