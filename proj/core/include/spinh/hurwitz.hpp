#pragma once

// Spin Hurwitz numbers with (r+1)-completed cycles, assembled from Sergeev
// characters.
//
// The disconnected numbers are lambda-sums over strict partitions of the
// degree (r a positive even integer, mu and nu odd partitions):
//
//   h*_{g;mu,nu} = 2^{1-g} / (b! prod mu_i prod nu_j)
//                  * sum_{lambda in SP(d)}
//                      zeta^lambda_mu zeta^lambda_nu
//                      / 2^{delta(lambda) + l(mu) + l(nu)}
//                      * (p_{r+1}(lambda)/(r+1))^b,
//     b = (2g - 2 + l(mu) + l(nu)) / r;
//
//   h*_{g;mu}    = same with the nu-factor replaced by
//                  dim V^lambda / 2^{delta(lambda) + d} / d!,
//     b = (2g - 2 + l(mu) + |mu|) / r,
//
// where delta(lambda) = l(lambda) mod 2.  Both are specializations of the
// general character formula for an arbitrary base surface (gunningham_general
// below).  Connected numbers are extracted by a formal logarithm of the
// generating series that collects the disconnected numbers with weight
// 2^{g-1} t^b p_mu / |Aut mu| — under disjoint union the Euler characteristic,
// the number of completed-cycle insertions, and the profile monomials are all
// additive/multiplicative in exactly this normalization.
//
// The polynomiality probes fit exact polynomials to computed values and
// verify the fits on held-out data; they are test harnesses, not formulas.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinh/partition.hpp"
#include "spinh/rational.hpp"

namespace spinh {

// Why a computed value is structurally zero (distinguished from a computed
// zero: tables tell "no covers exist" apart from "the count vanishes").
enum class ZeroReason {
    none,           // genuinely computed (the value may still be zero)
    non_integer_b,  // Riemann-Hurwitz gives a fractional number of insertions
    negative_b,     // Riemann-Hurwitz gives a negative number of insertions
};

struct HurwitzValue {
    Rat value{};
    ZeroReason reason = ZeroReason::none;

    bool no_covers() const { return reason != ZeroReason::none; }
};

// A single evaluation request.  |nu| set: double number; unset: single.
struct HurwitzQuery {
    unsigned g = 0;
    unsigned r = 2;
    Partition mu;
    std::optional<Partition> nu;
    bool connected = true;
};

// Character formula for an arbitrary base: Euler characteristic chi_b,
// spin-structure parity in {0,1}, ramification profiles (odd partitions of d):
//
//   H*(B,theta; mu^1,...,mu^k)
//     = 2^{(sum_j (l(mu^j)-d) - d chi_B)/2}
//       * sum_{lambda in SP(d)} (-1)^{parity * l(lambda)}
//           (dim V^lambda / (2^{delta(lambda)/2} d!))^{chi_B}
//           prod_j f^lambda_{mu^j}.
//
// All 2-exponents must be integral; a half-integral exponent (odd chi_B
// against an odd-length lambda, or an odd prefactor exponent) throws
// std::domain_error.  Closed orientable bases have even chi_B, so this never
// triggers for geometric input.
Rat gunningham_general(long chi_b, int parity, const std::vector<Partition>& profiles,
                       unsigned d);

// The lambda-sums at a prescribed number b of completed-cycle insertions.
// The genus is determined by Riemann-Hurwitz (2g = rb + 2 - l(mu) - l(nu),
// resp. 2g = rb + 2 - l(mu) - |mu|) and may be negative: such terms are
// exactly the disjoint-union contributions the generating series needs.
Rat spin_single_disconnected_at_b(unsigned b, const Partition& mu, unsigned r);
Rat spin_double_disconnected_at_b(unsigned b, const Partition& mu, const Partition& nu,
                                  unsigned r);

// Disconnected numbers at fixed genus.  Non-integer or negative b yields a
// typed zero (no covers).  Throws std::invalid_argument for a non-odd mu/nu,
// odd r, or (double) |mu| != |nu|.
HurwitzValue spin_single_disconnected(unsigned g, const Partition& mu, unsigned r);
HurwitzValue spin_double_disconnected(unsigned g, const Partition& mu, const Partition& nu,
                                      unsigned r);

// Truncated generating series sum c_{b,mu} t^b p_mu, the bookkeeping object
// for the disconnected-to-connected passage.  Only |mu| <= truncation degree
// is stored; log requires constant term 1 and exp constant term 0 (and no
// other degree-zero keys), which keeps both formal operations finite.
class GeneratingSeries {
  public:
    using Key = std::pair<unsigned, Partition>;  // (t-exponent b, odd partition)

    explicit GeneratingSeries(unsigned truncation_degree);

    unsigned truncation_degree() const { return degree_; }
    const std::map<Key, Rat>& coefficients() const { return coeff_; }

    // Throws std::invalid_argument if |mu| exceeds the truncation degree.
    Rat coefficient(unsigned b, const Partition& mu) const;
    void set_coefficient(unsigned b, const Partition& mu, const Rat& c);

    GeneratingSeries log() const;
    GeneratingSeries exp() const;

    friend GeneratingSeries operator*(const GeneratingSeries& a, const GeneratingSeries& b);

  private:
    void check_degree(const Partition& mu) const;

    unsigned degree_ = 0;
    std::map<Key, Rat> coeff_;
};

// Connected number for the query's (g, r, mu[, nu]): builds the generating
// series of disconnected numbers truncated at degree |mu|, takes the formal
// logarithm, and reads off |Aut mu| (|Aut nu|) 2^{1-g} times the coefficient
// of t^b p_mu (q_nu).  One-part profiles come out equal to the disconnected
// numbers, as they must.
HurwitzValue connected(const HurwitzQuery& query);

// Result of an exact polynomial fit: exponent vector -> coefficient.
struct PolynomialFit {
    std::map<std::vector<unsigned>, Rat> coefficients;
    unsigned degree_bound = 0;
    bool verified = false;  // fit consistent and reproduces the held-out values
    std::string note;

    Rat evaluate(const std::vector<unsigned>& point) const;
};

// Fits P in h_{g;mu} = prod_i (mu_i^{[mu_i]} / [mu_i]!) * P(mu_1,...,mu_n),
// [x] = (x - <x>)/r, on the residue class mu_i = residues[i] (mod r), with
// deg P <= 3g-3+n.  Training points are the first `sample_size` points of the
// principal lattice mu_i = residues[i] + r k_i (enumerated by shells of
// sum k_i); the next few lattice points are held out for verification.
// Throws std::invalid_argument if 2g-2+n <= 0, the residues are not odd
// representatives in [1, r), the residue class forces a fractional b, or
// sample_size is below the number of monomials of degree 3g-3+n.
PolynomialFit quasi_polynomiality_probe(unsigned g, unsigned n, unsigned r,
                                        const std::vector<unsigned>& residues,
                                        unsigned sample_size);

// Chamber structure of double numbers in the parts (mu, nu), |mu| = |nu|.
struct ChamberReport {
    unsigned b = 0;
    unsigned degree_bound = 0;          // 2g - 1 + b
    bool structurally_empty = false;    // no odd (mu, nu) configurations at all
    std::vector<std::string> chambers;  // human-readable descriptions
    bool per_chamber_fits_pass = false;
    bool straddling_fit_fails = false;  // a cross-wall fit is inconsistent
    // Representative fit for the first chamber; exponents in (mu_1[, mu_2,
    // nu_1]) with |nu| eliminated through the balance constraint.
    std::map<std::vector<unsigned>, Rat> chamber_fit;
    std::string note;
};

// Piecewise polynomiality probe for l(mu) = m, l(nu) = n, fitting per-chamber
// polynomials of total degree <= 2g-1+b restricted to the degrees
// 2g-1+b-2k (the only ones that occur).
//   (1,1): the diagonal cone mu_1 = nu_1 is a single chamber; the fit is also
//          checked against the one-part values.
//   (2,1): structurally empty (two odd parts sum even, one odd part is odd).
//   (2,2): chambers mu_1 > nu_1 / mu_1 < nu_1 split by the wall mu_1 = nu_1;
//          the probe fits the first chamber, transports it to the second by
//          the mu <-> nu symmetry, and demonstrates that a fit straddling the
//          wall is inconsistent whenever the chambers genuinely differ.
// Throws std::invalid_argument for other (m,n), for (g, m+n) = (0,2), or if
// b = (2g-2+m+n)/r is not a non-negative integer (unless structurally empty,
// which is reported rather than thrown).
ChamberReport piecewise_polynomiality_probe(unsigned g, unsigned m, unsigned n, unsigned r);

}  // namespace spinh
