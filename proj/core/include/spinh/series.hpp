#pragma once

// Truncated Laurent series with explicit trust tracking, over an arbitrary
// commutative coefficient ring R (with Rat scalars), plus a dense multivariate
// polynomial type with per-variable degree caps.
//
// Every Series knows the largest exponent whose coefficient it can vouch for
// (`trusted`).  Arithmetic propagates trust pessimistically; reading a
// coefficient beyond the trusted order throws instead of silently returning a
// wrong value.  This is what makes fixed-order truncation safe to compose.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinh/rational.hpp"

namespace spinh {

// Multiplicative identity of the coefficient ring; specialize for rings whose
// unit is not expressible as R(1).
template <typename R>
R ring_one() {
    return R(1);
}

inline Rat inv(const Rat& x) {
    if (x == 0) throw std::domain_error("inv(0)");
    return Rat(1) / x;
}

template <typename R>
class Series {
public:
    // Identically-zero series, trusted through exponent `trusted`.
    static Series zero_to(int trusted) { return Series(trusted + 1, {}); }
    static Series constant(R value, int trusted) {
        if (trusted < 0) return zero_to(trusted);
        std::vector<R> c(static_cast<size_t>(trusted) + 1);
        c[0] = std::move(value);
        return Series(0, std::move(c));
    }
    static Series one_to(int trusted) { return constant(ring_one<R>(), trusted); }
    // c * z^k, trusted through `trusted` (>= k).
    static Series monomial(R c, int k, int trusted) {
        if (trusted < k) throw std::invalid_argument("Series::monomial: trusted < k");
        std::vector<R> v(static_cast<size_t>(trusted - k) + 1);
        v[0] = std::move(c);
        return Series(k, std::move(v));
    }

    Series() : offset_(0) {}  // zero, nothing trusted (trusted order -1)
    // coeffs[i] is the coefficient of z^{offset+i}; trusted order is
    // offset + coeffs.size() - 1.
    Series(int offset, std::vector<R> coeffs)
        : offset_(offset), coeffs_(std::move(coeffs)) {}

    int trusted() const { return offset_ + static_cast<int>(coeffs_.size()) - 1; }
    // Smallest exponent whose coefficient is known nonzero, or trusted()+1 if
    // the series is zero as far as it is trusted.
    int valuation_bound() const {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (!(coeffs_[i] == R{})) return offset_ + static_cast<int>(i);
        return trusted() + 1;
    }
    bool is_zero_to_trust() const { return valuation_bound() > trusted(); }

    const R& coeff(int j) const {
        if (j > trusted())
            throw std::out_of_range("Series: coefficient z^" + std::to_string(j) +
                                    " beyond trusted order " + std::to_string(trusted()));
        if (j < offset_) return zero_;
        return coeffs_[static_cast<size_t>(j - offset_)];
    }

    void set_coeff(int j, R value) {
        if (j > trusted() || j < offset_) throw std::out_of_range("Series::set_coeff");
        coeffs_[static_cast<size_t>(j - offset_)] = std::move(value);
    }

    // Lower the trusted order to `t` (dropping higher stored coefficients).
    Series truncated(int t) const {
        Series r = *this;
        if (t < r.trusted()) {
            if (t < r.offset_ - 1) {
                r.coeffs_.clear();
                r.offset_ = t + 1;
            } else {
                r.coeffs_.resize(static_cast<size_t>(t - r.offset_) + 1);
            }
        }
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        int t = std::min(a.trusted(), b.trusted());
        int off = std::min(a.offset_, b.offset_);
        if (t < off) return zero_to(t);
        std::vector<R> c(static_cast<size_t>(t - off) + 1);
        for (int j = off; j <= t; ++j) c[static_cast<size_t>(j - off)] = a.coeff_raw(j) + b.coeff_raw(j);
        return Series(off, std::move(c));
    }
    friend Series operator-(const Series& a, const Series& b) {
        int t = std::min(a.trusted(), b.trusted());
        int off = std::min(a.offset_, b.offset_);
        if (t < off) return zero_to(t);
        std::vector<R> c(static_cast<size_t>(t - off) + 1);
        for (int j = off; j <= t; ++j) c[static_cast<size_t>(j - off)] = a.coeff_raw(j) - b.coeff_raw(j);
        return Series(off, std::move(c));
    }
    Series operator-() const {
        Series r = *this;
        for (auto& c : r.coeffs_) c = R{} - c;
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        int va = a.valuation_bound(), vb = b.valuation_bound();
        int t = std::min(va + b.trusted(), vb + a.trusted());
        int off = va + vb;
        if (t < off) return zero_to(t);
        std::vector<R> c(static_cast<size_t>(t - off) + 1);
        for (int i = va; i <= a.trusted(); ++i) {
            if (a.coeff_raw(i) == R{}) continue;
            for (int j = vb; j <= b.trusted() && i + j <= t; ++j)
                c[static_cast<size_t>(i + j - off)] += a.coeff_raw(i) * b.coeff_raw(j);
        }
        return Series(off, std::move(c));
    }

    friend Series operator*(const Rat& s, const Series& a) {
        Series r = a;
        for (auto& c : r.coeffs_) c = c * s;
        return r;
    }
    friend Series operator*(const Series& a, const Rat& s) { return s * a; }

    // Multiply by z^m (shift exponents).
    Series shifted(int m) const {
        Series r = *this;
        r.offset_ += m;
        return r;
    }

    // Substitute z -> s*z.
    Series scaled_var(const Rat& s) const {
        Series r = *this;
        Rat p = pow_rat(s, r.offset_);
        for (auto& c : r.coeffs_) {
            c = c * p;
            p *= s;
        }
        return r;
    }

    Series derivative() const {
        Series r;
        r.offset_ = offset_ - 1;
        r.coeffs_.resize(coeffs_.size());
        for (size_t i = 0; i < coeffs_.size(); ++i)
            r.coeffs_[i] = coeffs_[i] * Rat(offset_ + static_cast<int>(i));
        return r;  // trusted drops by one, as it must
    }

    // Multiplicative inverse; requires an invertible leading coefficient
    // (the ring must provide inv(R)).
    Series inverse() const {
        int v = valuation_bound();
        if (v > trusted()) throw std::domain_error("Series::inverse of zero series");
        int n = trusted() - v;  // inverse trusted through -v + n
        R lead_inv = inv(coeff_raw(v));
        std::vector<R> c(static_cast<size_t>(n) + 1);
        c[0] = lead_inv;
        for (int j = 1; j <= n; ++j) {
            R acc{};
            for (int i = 1; i <= j; ++i) acc += coeff_raw(v + i) * c[static_cast<size_t>(j - i)];
            c[static_cast<size_t>(j)] = R{} - lead_inv * acc;
        }
        return Series(-v, std::move(c));
    }

    // exp(f) for valuation >= 1.
    Series exp() const {
        if (valuation_bound() < 1) throw std::domain_error("Series::exp needs valuation >= 1");
        int t = trusted();
        if (t < 0) return zero_to(t);
        std::vector<R> g(static_cast<size_t>(t) + 1);
        g[0] = ring_one<R>();
        for (int n = 1; n <= t; ++n) {
            R acc{};
            for (int k = 1; k <= n; ++k) acc += (coeff_raw(k) * Rat(k)) * g[static_cast<size_t>(n - k)];
            g[static_cast<size_t>(n)] = acc * Rat(1, n);
        }
        return Series(0, std::move(g));
    }

    // log(f) for f = 1 + (valuation >= 1); uses only scalar division.
    Series log() const {
        int t = trusted();
        if (t < 0 || !(coeff(0) == ring_one<R>()))
            throw std::domain_error("Series::log needs constant term 1");
        Series u = *this - one_to(t);
        if (u.valuation_bound() < 1) throw std::domain_error("Series::log needs constant term 1");
        Series acc = zero_to(t), p = one_to(t);
        for (int k = 1; k <= t; ++k) {
            p = (p * u).truncated(t);
            acc = acc + p * Rat((k % 2 == 1) ? 1 : -1, k);
        }
        return acc;
    }

    // f(g) for g of valuation >= 1 and f with no negative exponents.
    Series compose(const Series& g) const {
        int vg = g.valuation_bound();
        if (vg < 1) throw std::domain_error("Series::compose needs valuation(g) >= 1");
        if (offset_ < 0 && valuation_bound() < 0)
            throw std::domain_error("Series::compose: Laurent outer series unsupported");
        long long cap = static_cast<long long>(trusted() + 1) * vg - 1;
        int t = static_cast<int>(std::min<long long>(g.trusted(), cap));
        if (t < 0) return zero_to(t);
        Series acc = zero_to(t);
        for (int k = trusted(); k >= std::max(offset_, 0); --k) {
            acc = (acc * g).truncated(t);
            acc = acc + constant(coeff_raw(k), t);
        }
        return acc;
    }

    std::string to_string() const;  // defined for R = Rat below

private:
    const R& coeff_raw(int j) const {
        if (j < offset_ || j > trusted()) return zero_;
        return coeffs_[static_cast<size_t>(j - offset_)];
    }

    int offset_;
    std::vector<R> coeffs_;
    static inline const R zero_{};
};

using QSeries = Series<Rat>;

template <>
inline std::string Series<Rat>::to_string() const {
    std::string s;
    for (int j = offset_; j <= trusted(); ++j) {
        if (coeff_raw(j) == 0) continue;
        if (!s.empty()) s += " + ";
        s += to_pq_string(coeff_raw(j)) + "*z^" + std::to_string(j);
    }
    if (s.empty()) s = "0";
    return s + " + O(z^" + std::to_string(trusted() + 1) + ")";
}

// --- stock hyperbolic building blocks -------------------------------------
//
// varsigma(z) = 2 sinh(z/2) = z + z^3/24 + z^5/1920 + ...
// qoppa(z)    = cosh(z/2)/2 = 1/2 + z^2/16 + z^4/768 + ...
// ssh(z)      = sinh(z/2)/(z/2) = varsigma(z)/z
// ksh(z)      = qoppa(z)/z      (Laurent, simple pole)
// coth_half(z) = coth(z/2) = 4 qoppa(z) / varsigma(z)   (Laurent, simple pole)

QSeries varsigma_series(int trusted);
QSeries qoppa_series(int trusted);
QSeries ssh_series(int trusted);
QSeries ksh_series(int trusted);
QSeries coth_half_series(int trusted);

// --- dense multivariate polynomials with per-variable caps -----------------
//
// Exponents above cap[i] in variable i are discarded: arithmetic takes place
// in Q[z_1..z_n]/(z_1^{cap_1+1}, ..., z_n^{cap_n+1}).

class MultiSeries {
public:
    explicit MultiSeries(std::vector<unsigned> caps);
    static MultiSeries one(std::vector<unsigned> caps);

    size_t var_count() const { return caps_.size(); }
    const std::vector<unsigned>& caps() const { return caps_; }

    const Rat& coeff(const std::vector<unsigned>& expo) const;
    void add_coeff(const std::vector<unsigned>& expo, const Rat& c);

    MultiSeries& operator+=(const MultiSeries& other);
    MultiSeries& operator-=(const MultiSeries& other);
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator*(const Rat& s, MultiSeries a);

    bool is_zero() const;

    // f(sum_i a_i z_i) for a univariate f with valuation >= 0; f must be
    // trusted through the total degree sum(caps).
    static MultiSeries compose_linear(const QSeries& f, const std::vector<Int>& a,
                                      const std::vector<unsigned>& caps);

    // log for unit constant term.
    MultiSeries log() const;

private:
    size_t index_of(const std::vector<unsigned>& expo) const;

    std::vector<unsigned> caps_;
    std::vector<size_t> strides_;
    std::vector<Rat> c_;
};

}  // namespace spinh
