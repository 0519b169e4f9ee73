// Test-only oracles, kept independent of the library's primary code paths.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "pieri/partition.hpp"
#include "pieri/schur.hpp"

namespace pieri::oracles {

using Poly = std::map<std::vector<int>, long long>;  // exponent vector -> coeff

inline void poly_add(Poly& p, const std::vector<int>& e, long long c) {
    if (!c) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p[e] = c;
    } else {
        it->second += c;
        if (!it->second) p.erase(it);
    }
}

// sum over permutations sigma of sgn(sigma) x^{sigma-permuted exponents}
inline Poly alternant(std::vector<int> expo) {
    int n = (int)expo.size();
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    Poly out;
    // iterate permutations with parity tracking
    std::vector<int> perm = idx;
    auto emit = [&](const std::vector<int>& pm, int sign) {
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[pm[i]] = expo[i];
        poly_add(out, e, sign);
    };
    // Heap's algorithm
    std::vector<int> c(n, 0);
    int sign = 1;
    emit(perm, sign);
    int i = 0;
    while (i < n) {
        if (c[i] < i) {
            std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
            sign = -sign;
            emit(perm, sign);
            ++c[i];
            i = 0;
        } else {
            c[i++] = 0;
        }
    }
    return out;
}

// Exact division of the bialternant by the Vandermonde determinant; the
// quotient is the Schur polynomial in the monomial basis.
inline Poly bialternant_schur(const Partition& lambda, int n) {
    if (lambda.length() > n) return {};
    std::vector<int> num_expo(n), den_expo(n);
    for (int i = 0; i < n; ++i) {
        num_expo[i] = lambda.part(i + 1) + n - 1 - i;
        den_expo[i] = n - 1 - i;
    }
    Poly num = alternant(num_expo), den = alternant(den_expo), q;
    // divide with lex leading terms; the Vandermonde leads with coefficient 1
    auto lex_lead = [](const Poly& p) { return std::prev(p.end()); };
    std::vector<int> delta = den_expo;
    while (!num.empty()) {
        auto lead = lex_lead(num);
        std::vector<int> e = lead->first;
        long long c = lead->second;
        std::vector<int> diff(e.size());
        for (size_t k = 0; k < e.size(); ++k) {
            diff[k] = e[k] - delta[k];
            if (diff[k] < 0) throw std::logic_error("bialternant division failed");
        }
        poly_add(q, diff, c);
        for (auto& [de, dc] : den) {
            std::vector<int> shifted(de.size());
            for (size_t k = 0; k < de.size(); ++k) shifted[k] = de[k] + diff[k];
            poly_add(num, shifted, -c * dc);
        }
    }
    return q;
}

// h_k expansion hook: iterated row Pieri starting from s_empty.
inline SymmetricPolynomial h_product(const std::vector<int>& ks, int n) {
    SymmetricPolynomial acc = SymmetricPolynomial::one(n);
    for (int k : ks) {
        if (k < 0) return SymmetricPolynomial(n);
        SymmetricPolynomial next(n);
        for (auto& [p, c] : acc.terms()) {
            auto layer = pieri_multiply(p, k, PieriKind::Symmetric, n);
            for (auto& [q, d] : layer.terms()) next.add_term(q, c * d);
        }
        acc = next;
    }
    return acc;
}

// The determinant identity s_lambda s_mu = det(h_{lambda_i + mu_{n+1-j} - i + j}).
inline SymmetricPolynomial jacobi_trudi_product(const Partition& lambda, const Partition& mu, int n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a[i - 1][j - 1] = lambda.part(i) + mu.part(n + 1 - j) - i + j;
    SymmetricPolynomial out(n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        std::vector<int> ks;
        bool zero = false;
        for (int i = 0; i < n; ++i) {
            int k = a[i][perm[i]];
            if (k < 0) zero = true;
            ks.push_back(k);
        }
        if (!zero) {
            auto term = h_product(ks, n);
            for (auto& [p, c] : term.terms()) out.add_term(p, sign * c);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace pieri::oracles
