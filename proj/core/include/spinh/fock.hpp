#pragma once

// Neutral-fermion Clifford engine.  States are finite rational combinations
// of monomials phi_{i1} ... phi_{ik} |0> with strictly decreasing indices
// i1 > ... > ik >= 0; the anticommutator is {phi_k, phi_l} = (-1)^k delta_{k+l}
// with phi_0^2 = 1/2, and negative-index fermions annihilate the vacuum.
//
// On top of the phi action sit the quadratic operators
//
//   F_{j,k}        = (-1)^j phi_j phi_k        (and its normal ordering F^),
//   alpha_m        = -sum_{k > -m/2} F_{k,-k-m}          (m odd),
//   FF_{r+1}       = sum_{k>0} k^{r+1} F_{k,-k}          (cut-and-join),
//   E_m(z)         = 1/2 sum_k e^{(k+m/2) z} F_{k,-k-m},
//   E^_0(z)        = 1/2 sum_k e^{k z} F^_{k,-k},
//
// each of which restricts to a finite sum on every state.  The regularized
// E_0(z) is E^_0(z) + (1/4) coth(z/2) id; the scalar part is the Laurent
// series qoppa/varsigma.  Truncated-in-z operators are exposed through their
// z^j coefficient actions.
//
// No state ever carries the sqrt(2)-normalizations of the orthonormal basis;
// every contract is stated in rational form (e.g. the expansion of
// prod_i alpha_{-mu_i} |0> carries zeta^lambda_mu / 2^{l(mu)} on the monomial
// of lambda).

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinh/partition.hpp"
#include "spinh/rational.hpp"
#include "spinh/series.hpp"

namespace spinh {

// phi_{i1} ... phi_{ik} |0> with i1 > ... > ik >= 0.
class CliffordMonomial {
public:
    CliffordMonomial() = default;  // the vacuum
    explicit CliffordMonomial(std::vector<int> indices);

    const std::vector<int>& indices() const { return indices_; }
    bool is_vacuum() const { return indices_.empty(); }
    int energy() const;  // sum of indices

    // The monomial carrying the strict partition lambda: indices lambda
    // followed by a trailing 0 when l(lambda) is odd (monomial lengths are
    // even on the charge-zero sector reached from the vacuum).
    static CliffordMonomial of_partition(const Partition& lambda);
    // Positive indices as a strict partition (drops a trailing 0).
    Partition positive_part() const;

    friend bool operator==(const CliffordMonomial&, const CliffordMonomial&) = default;
    friend std::strong_ordering operator<=>(const CliffordMonomial& a, const CliffordMonomial& b) {
        return a.indices_ <=> b.indices_;
    }

    std::string to_string() const;  // e.g. "[3,1,0]", "[]"

private:
    std::vector<int> indices_;
};

// Finite rational combination of monomials; no zero coefficients stored.
class CliffordState {
public:
    CliffordState() = default;  // the zero state
    static CliffordState vacuum();
    static CliffordState single(CliffordMonomial m, Rat c);

    const std::map<CliffordMonomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const CliffordMonomial& m) const;
    void add_term(const CliffordMonomial& m, const Rat& c);  // accumulates, drops zeros
    int max_energy() const;                                  // 0 for the zero state

    CliffordState& operator+=(const CliffordState& other);
    CliffordState& operator-=(const CliffordState& other);
    friend CliffordState operator+(CliffordState a, const CliffordState& b) { return a += b; }
    friend CliffordState operator-(CliffordState a, const CliffordState& b) { return a -= b; }
    friend CliffordState operator*(const Rat& c, const CliffordState& s);
    friend bool operator==(const CliffordState&, const CliffordState&) = default;

private:
    std::map<CliffordMonomial, Rat> terms_;
};

// Left multiplication by phi_k in canonical form.
CliffordState apply_phi(int k, const CliffordState& s);

// Coefficient of the empty monomial.
Rat vev(const CliffordState& s);

// F_{j,k} = (-1)^j phi_j phi_k and its normal ordering F^_{j,k} = F_{j,k} - <F_{j,k}>.
CliffordState apply_f(int j, int k, const CliffordState& s);
CliffordState apply_f_hat(int j, int k, const CliffordState& s);

// alpha_m = -sum_{k > -m/2} F_{k,-k-m}; m must be odd (even alpha vanish
// identically and a call signals misuse).
CliffordState apply_alpha(int m, const CliffordState& s);

// FF_{r+1} = sum_{k>0} k^{r+1} F_{k,-k}; r must be even.  Diagonal with
// eigenvalue p_{r+1}(lambda) on the monomial of lambda.
CliffordState apply_cutjoin(unsigned r, const CliffordState& s);

// e^{alpha_1} s; alpha_1 strictly lowers energy, so the sum terminates.
CliffordState apply_exp_alpha1(const CliffordState& s);

// [z^j] E_m(z) for m != 0 (zero state for j < 0), and [z^j] E^_0(z).
CliffordState apply_e_coeff(int m, int j, const CliffordState& s);
CliffordState apply_e0_hat_coeff(int j, const CliffordState& s);

// Scalar part of the regularized E_0(z): qoppa/varsigma = (1/4) coth(z/2),
// a Laurent series with leading term 1/(2z).
QSeries e0_scalar(int trusted);

// One of the operators above as a first-class value.
class QuadraticOperator {
public:
    static QuadraticOperator f(int j, int k);
    static QuadraticOperator f_hat(int j, int k);
    static QuadraticOperator alpha(int m);
    static QuadraticOperator cutjoin(unsigned r);
    // [z^j] of the z-truncated E_m(z); at m = 0 this is the regularized
    // operator E^_0 + (qoppa/varsigma) id, so j = -1 contributes (1/2) id.
    static QuadraticOperator e_coeff(int m, int j);
    static QuadraticOperator e0_hat_coeff(int j);

    CliffordState apply(const CliffordState& s) const;

private:
    enum class Kind { f, f_hat, alpha, cutjoin, e_coeff, e0_hat_coeff };
    QuadraticOperator(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}
    Kind kind_;
    int a_ = 0;
    int b_ = 0;
};

// prod_i alpha_{-mu_i} |0>; the coefficient of the monomial of lambda equals
// zeta^lambda_mu / 2^{l(mu)}.
CliffordState alpha_negative_product_expansion(const Partition& mu);

// Disconnected spin single Hurwitz numbers:
//   2^{1-g}/(b! prod mu_i (r+1)^b) <e^{alpha_1} FF_{r+1}^b prod_i alpha_{-mu_i}>,
// b = (2g-2+l(mu)+|mu|)/r.  A non-integer b means no covers exist at this
// datum; that is reported as nullopt, distinct from a vanishing count.
std::optional<Rat> vev_spin_single(unsigned g, const Partition& mu, unsigned r);

// Disconnected spin double Hurwitz numbers:
//   2^{1-g}/(b! prod mu_i prod nu_j)
//     <prod_i alpha_{mu_i} (FF_{r+1}/(r+1))^b prod_j alpha_{-nu_j}>,
// b = (2g-2+l(mu)+l(nu))/r; nullopt for non-integer b.  |mu| != |nu| throws.
std::optional<Rat> vev_spin_double(unsigned g, const Partition& mu, const Partition& nu,
                                   unsigned r);

// All basis monomials of energy <= max_energy (each strict partition with and
// without the trailing 0).
std::vector<CliffordMonomial> basis_monomials(int max_energy);

// Checks [E_m(z), E_n(w)] = (1/2) varsigma(mw-nz) E_{m+n}(z+w)
//                         + ((-1)^n/2) varsigma(mw+nz) E_{m+n}(z-w)
// coefficient-wise in z, w up to z_order, applied to every basis monomial of
// energy <= state_bound (E_0 regularized on the right-hand side).
bool commutator_check(int m, int n, int z_order, int state_bound);

}  // namespace spinh
