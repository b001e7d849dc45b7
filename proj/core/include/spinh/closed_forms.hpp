#pragma once

// Closed-form and series formulas for one-part spin Hurwitz numbers: the
// multivariate coefficient-extraction formula for one-part double numbers,
// the finite-difference and Stirling-number routes for one-part single
// numbers, the genus-one closed form, and the genus-zero free energies
// F_{0,1} and F_{0,2} (Lambert-type exponential series).
//
// Everything is exact rational arithmetic; the three one-part-single routes
// are independent evaluations of the same number and are cross-checked in
// the test suite (the Stirling route additionally cross-asserts its C_a
// coefficients against direct polynomial powering internally).

#include <map>
#include <utility>

#include "spinh/partition.hpp"
#include "spinh/rational.hpp"
#include "spinh/series.hpp"

namespace spinh {

// Stirling number of the second kind S(n,k) via the triangular recurrence
// S(n,k) = k*S(n-1,k) + S(n-1,k-1).
Int stirling2(unsigned n, unsigned k);

// One-part double number h_{g;(d),mu} for an odd partition mu of d and even
// r = 2s:
//
//   h = ((r!)^b / b!) * (d^{b-1} / 2^{b+g-1}) * [z_1^r ... z_b^r]
//       prod_p S(z_p d) * sum_{k in {+-1}^b} (prod_i S(mu_i z_k) / S(z_k))
//                                            * z_k^n * K(z_k),
//
// with z_k = sum_p k_p z_p, n = l(mu), b = (2g-1+n)/r.  The simple pole of
// K(z) = qoppa(z)/z is absorbed analytically via z_k^n K(z_k) =
// z_k^{n-1} qoppa(z_k)  (n >= 1).  Throws std::domain_error when b is not a
// non-negative integer or when mu is not an odd partition of an odd d.
Rat one_part_double(unsigned g, unsigned d, const Partition& mu, unsigned r);

// One-part single number h_{g;(mu)} by iterated forward differences:
//
//   h = (1/(2^g mu^2 (mu-1)!)) * Delta^{mu-1} [ z(l)^b / b! ] at l = 1,
//   z(l) = (l^{r+1} - (l-mu)^{r+1}) / (r+1),   b = (2g-1+mu)/r.
//
// Returns 0 when r does not divide 2g-1+mu (the u-series supporting the
// extraction has terms only in powers of u^r).  mu must be odd and positive.
Rat one_part_single_fd(unsigned g, unsigned mu, unsigned r);

// The same number through Stirling numbers of the second kind:
//
//   h = (1/(2^g mu^2 b!)) * sum_{a=0}^{2g} C_a S(mu+2g-a, mu),
//
// where C_a = [l^{rb-a}] z(l)^b, evaluated both by direct polynomial
// powering and by the partition-sum expansion
//
//   C_a = (-1)^a sum_{lambda |- a} b!/((b-l(lambda))! prod_i m_i(lambda)!)
//         * prod_i binom(2s+1, lambda_i+1)/(2s+1) * mu^{a+b},
//
// (terms with l(lambda) > b or lambda_i > 2s vanish); the two evaluations
// are cross-asserted.  Throws std::domain_error when b is not an integer.
Rat one_part_single_stirling(unsigned g, unsigned mu, unsigned r);

// Genus-one closed form: h_{1;(mu)} = (s^2/12) (mu^{b-1}/(b-1)!) (mu + 1/s)
// with r = 2s, b = (mu+1)/r.  Throws std::domain_error when b is not a
// positive integer.
Rat one_part_g1_closed(unsigned mu, unsigned r);

// Truncation of (W(-t)/(-t))^alpha = sum_m alpha (m+alpha)^{m-1} t^m / m!
// where W is the principal Lambert function; the m = 0 term is 1.
QSeries lambert_power_series(const Rat& alpha, int order);

// Genus-zero one-point free energy F_{0,1} = sum_b (2sb+1)^{b-2}/b! *
// e^{(2sb+1)x}: coefficient of e^{mu x}, nonzero only for mu = 2sb+1.
Rat f01_coefficient(unsigned r, unsigned mu);

// Genus-zero two-point free energy coefficient of e^{mu1 x1 + mu2 x2}:
//
//   (2s/(mu1+mu2)) * (mu1^{floor(mu1/2s)} / floor(mu1/2s)!)
//                  * (mu2^{floor(mu2/2s)} / floor(mu2/2s)!)
//
// when 2s divides mu1+mu2, and 0 otherwise.  mu1, mu2 must be odd.
Rat f02_coefficient(unsigned r, unsigned mu1, unsigned mu2);

// All nonzero F_{0,1} coefficients with exponent mu <= max_mu, keyed by mu.
std::map<unsigned, Rat> f01_series(unsigned r, unsigned max_mu);

// All nonzero F_{0,2} coefficients with odd exponents mu1, mu2 <= max_mu,
// keyed by the ordered pair (mu1, mu2).
std::map<std::pair<unsigned, unsigned>, Rat> f02_series(unsigned r, unsigned max_mu);

}  // namespace spinh
