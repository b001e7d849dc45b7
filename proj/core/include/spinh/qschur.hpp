#pragma once

// The algebra Gamma = Q[p1, p3, p5, ...] of supersymmetric functions in the
// power-sum basis (keys are odd partitions), Schur Q-functions via Pfaffians,
// and the characters zeta^lambda_mu / central characters f^lambda_mu of the
// Sergeev group.

#include <map>

#include "spinh/partition.hpp"
#include "spinh/rational.hpp"
#include "spinh/series.hpp"

namespace spinh {

// Sparse element of Gamma: finite map {odd partition mu -> coefficient of p_mu}.
class GammaElement {
public:
    GammaElement() = default;
    static GammaElement zero() { return {}; }
    static GammaElement one();
    // p_k as an element (k must be odd).
    static GammaElement power_sum(unsigned k);
    // c * p_mu (mu must be odd).
    static GammaElement monomial(const Partition& mu, const Rat& c);

    const std::map<Partition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const Partition& mu) const;
    void set_coefficient(const Partition& mu, const Rat& c);

    GammaElement& operator+=(const GammaElement& other);
    GammaElement& operator-=(const GammaElement& other);
    friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
    friend GammaElement operator-(GammaElement a, const GammaElement& b) { return a -= b; }
    friend GammaElement operator*(const GammaElement& a, const GammaElement& b);
    friend GammaElement operator*(const Rat& c, const GammaElement& a);
    friend GammaElement operator*(const GammaElement& a, const Rat& c) { return c * a; }
    GammaElement& operator*=(const GammaElement& other) { return *this = *this * other; }
    GammaElement& operator*=(const Rat& c) { return *this = c * *this; }
    friend bool operator==(const GammaElement&, const GammaElement&) = default;

    // The substitution p_k -> p_k/2 (scales the p_mu term by 2^{-l(mu)}).
    GammaElement half_substitution() const;

    std::string to_string() const;

private:
    std::map<Partition, Rat> terms_;  // no zero coefficients stored
};

template <>
inline GammaElement ring_one<GammaElement>() {
    return GammaElement::one();
}

// <p_mu, p_nu> = 2^{-l(mu)} z_mu delta_{mu,nu}, extended bilinearly.
Rat scalar_product(const GammaElement& a, const GammaElement& b);

// Memoized table of the two-row Q-functions Q_{n,m} (and one-row Q_n = Q_{n,0})
// up to a fixed total degree.
class QPairTable {
public:
    explicit QPairTable(unsigned max_degree);
    unsigned max_degree() const { return max_degree_; }
    // Q_{n,m}; requires n + m <= max_degree.
    const GammaElement& q_pair(unsigned n, unsigned m) const;

private:
    unsigned max_degree_;
    std::map<std::pair<unsigned, unsigned>, GammaElement> entries_;
};

// Q_{n,m}: coefficient of z^n w^m in the two-variable generating series
// (exp(2 sum_k p_{2k+1} (z^{2k+1}+w^{2k+1})/(2k+1)) - 1) (z-w)/(z+w),
// expanding (z-w)/(z+w) in powers of w/z.  Antisymmetric: Q_{n,m} = -Q_{m,n}.
GammaElement q_pair(unsigned n, unsigned m);

// Schur Q-function Q_lambda = Pf(Q_{lambda_j,lambda_k}) for strict lambda
// (zero-padded to even length), via recursive first-row Pfaffian expansion.
GammaElement schur_q(const Partition& lambda);

// Sergeev character zeta^lambda_mu = z_mu 2^{-floor(l(lambda)/2)} [p_mu] Q_lambda
// (lambda strict, mu odd, |lambda| = |mu|).  Computed by direct coefficient
// extraction through the Pfaffian expansion; always an integer (asserted).
Int character(const Partition& lambda, const Partition& mu);

// dim V^lambda = zeta^lambda_{(1^d)}; evaluated by the closed product formula
// 2^{d - floor(l/2)} (d!/prod lambda_i!) prod_{i<j} (l_i-l_j)/(l_i+l_j).
Int dim_v(const Partition& lambda);

// Central character f^lambda_mu.  For |mu| = |lambda|:
//   f^lambda_mu = zeta^lambda_mu 2^d d! / (2^{l(mu)} z_mu dim V^lambda).
// For |mu| < |lambda| (k = |lambda|-|mu|):
//   f^lambda_mu = binom(m_1(mu)+k, k) f^lambda_{mu + (1^k)}.
// For |mu| > |lambda|: 0.
Rat central_character(const Partition& lambda, const Partition& mu);

// The degree-(r+1) completed cut-and-join operator acting on Gamma, extracted
// from its generating series
//   W(z) = coth(z/2) sum_{n>=1} sum_{k_1+...+k_n=0, k_i odd}
//          (2^{n-2}/n!) : prod_i varsigma(k_i z) c_{k_i} :
// with c_k = (1/2) d/dp_k for k > 0 and c_k = p_{|k|}/k for k < 0, normal
// ordering placing derivatives to the right.  (The per-leg normalization of
// c_k is pinned down by the requirement below; rescaling-covariant variants
// of the same series appear in the literature with inconsistent leg factors.)
// W_{r+1} = r! [z^{r+1}] W(z); it is diagonal on Schur Q-functions with
// eigenvalue p_{r+1}(lambda)/(r+1), which the test suite checks directly.
GammaElement cutjoin_on_gamma(unsigned r, const GammaElement& f);

}  // namespace spinh
