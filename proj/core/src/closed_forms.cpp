#include "spinh/closed_forms.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace spinh {

namespace {

void require_even_r(unsigned r) {
    if (r == 0 || r % 2 != 0) throw std::domain_error("closed_forms: r must be a positive even integer");
}

// z(l) = (l^{r+1} - (l-mu)^{r+1})/(r+1) evaluated at an integer l.
Rat z_poly_at(long l, unsigned mu, unsigned r) {
    Int top = pow_int(Int(l), r + 1) - pow_int(Int(l) - Int(mu), r + 1);
    return make_rat(std::move(top), r + 1);
}

// Coefficients of z(l) as a polynomial in l (degree r):
// [l^t] z(l) = (-1)^t binom(r+1, t) mu^{r+1-t} / (r+1).
std::vector<Rat> z_poly_coeffs(unsigned mu, unsigned r) {
    std::vector<Rat> c(r + 1);
    for (unsigned t = 0; t <= r; ++t) {
        Rat v = make_rat(binomial(r + 1, t) * pow_int(Int(mu), r + 1 - t), r + 1);
        c[t] = (t % 2 == 0) ? v : -v;
    }
    return c;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// C_a = [l^{rb-a}] z(l)^b by direct powering, for a = 0..amax.
std::vector<Rat> c_coeffs_by_powering(unsigned mu, unsigned r, unsigned b, unsigned amax) {
    std::vector<Rat> power{Rat(1)};
    const std::vector<Rat> base = z_poly_coeffs(mu, r);
    for (unsigned i = 0; i < b; ++i) power = poly_mul(power, base);
    std::vector<Rat> c(amax + 1);
    for (unsigned a = 0; a <= amax; ++a) {
        long deg = static_cast<long>(r) * b - static_cast<long>(a);
        c[a] = (deg >= 0 && deg < static_cast<long>(power.size())) ? power[deg] : Rat(0);
    }
    return c;
}

// The same coefficients by the partition-sum expansion.
std::vector<Rat> c_coeffs_by_partition_sum(unsigned mu, unsigned r, unsigned b, unsigned amax) {
    const unsigned two_s_plus_one = r + 1;
    std::vector<Rat> c(amax + 1);
    for (unsigned a = 0; a <= amax; ++a) {
        Rat total = 0;
        for (const Partition& lambda : enumerate_partitions(a, PartitionClass::all)) {
            const unsigned len = lambda.length();
            if (len > b) continue;
            // b!/((b-len)! prod_i mult_i!) ways to assign the drops lambda_i
            // to the b factors of z(l)^b.
            Rat assignments = make_rat(factorial(b), factorial(b - len));
            Rat leg = 1;
            bool zero = false;
            unsigned i = 0;
            while (i < len) {
                unsigned part = lambda.parts()[i];
                unsigned mult = lambda.multiplicity(part);
                assignments /= factorial(mult);
                i += mult;
                Int bin = binomial(two_s_plus_one, part + 1);
                if (bin == 0) {  // part > 2s contributes nothing
                    zero = true;
                    break;
                }
                leg *= pow_rat(make_rat(bin, two_s_plus_one), mult);
            }
            if (zero) continue;
            total += assignments * leg;
        }
        Rat value = total * pow_int(Int(mu), a + b);
        c[a] = (a % 2 == 0) ? value : -value;
    }
    return c;
}

}  // namespace

Int stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    // Row-by-row triangular recurrence.
    std::vector<Int> row(k + 1, 0);
    row[0] = 1;  // S(0,0)
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = Int(j) * row[j] + row[j - 1];
        row[0] = 0;  // S(i,0) = 0 for i >= 1
    }
    return row[k];
}

Rat one_part_double(unsigned g, unsigned d, const Partition& mu, unsigned r) {
    require_even_r(r);
    if (d == 0 || d % 2 == 0) throw std::domain_error("one_part_double: d must be odd and positive");
    if (!mu.is_odd() || mu.size() != d) throw std::domain_error("one_part_double: mu must be an odd partition of d");
    const unsigned n = mu.length();
    const long numerator = 2L * g - 1 + static_cast<long>(n);
    if (numerator % static_cast<long>(r) != 0)
        throw std::domain_error("one_part_double: b = (2g-1+l(mu))/r is not an integer");
    const unsigned b = static_cast<unsigned>(numerator / r);

    if (b == 0) {
        // g = 0 and mu = (d): empty extraction, the lone empty sign vector
        // contributes qoppa(0) = 1/2 and the prefactor is 2/d.
        return make_rat(1, d);
    }

    const int total_order = static_cast<int>(r) * static_cast<int>(b);

    // F(w) = prod_i S(mu_i w) * S(w)^{-1} * qoppa(w) * w^{n-1}; its
    // coefficient f_j feeds [z^e] F(z_k) = f_{|e|} (|e|!/prod e_p!) prod k_p^{e_p}.
    QSeries f = qoppa_series(total_order) * ssh_series(total_order).inverse();
    const QSeries ssh = ssh_series(total_order);
    for (unsigned part : mu.parts()) f = f * ssh.scaled_var(Rat(part));
    f = f.shifted(static_cast<int>(n) - 1);

    // Separable factor prod_p S(d z_p): coefficient at exponent e is
    // prod_p s_{r - e_p} with s_j = [z^j] S(d z).
    const QSeries ssh_d = ssh_series(static_cast<int>(r)).scaled_var(Rat(d));

    std::vector<Int> multinomial_fact(total_order + 1);
    for (int j = 0; j <= total_order; ++j) multinomial_fact[j] = factorial(j);

    Rat extraction = 0;
    std::vector<unsigned> e(b, 0);
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << b); ++signs) {
        // Odometer over exponent vectors e in {0,...,r}^b; S(d z) is even, so
        // only even r - e_p (hence even e_p) give a nonzero separable factor.
        std::fill(e.begin(), e.end(), 0u);
        while (true) {
            unsigned total = 0;
            for (unsigned p = 0; p < b; ++p) total += e[p];
            const Rat& fj = f.coeff(static_cast<int>(total));
            if (fj != 0) {
                Rat term = fj;
                // |e|! / prod_p e_p!
                Rat multi = Rat(multinomial_fact[total]);
                bool negative = false;
                for (unsigned p = 0; p < b; ++p) {
                    multi /= multinomial_fact[e[p]];
                    term *= ssh_d.coeff(static_cast<int>(r - e[p]));
                    if (((signs >> p) & 1u) && e[p] % 2 == 1) negative = !negative;
                }
                term *= multi;
                extraction += negative ? -term : term;
            }
            // advance the odometer by steps of 2 (odd e_p vanish anyway)
            unsigned p = 0;
            while (p < b) {
                e[p] += 2;
                if (e[p] <= r) break;
                e[p] = 0;
                ++p;
            }
            if (p == b) break;
        }
    }

    Rat prefactor = make_rat(pow_int(factorial(r), b), factorial(b));
    prefactor *= pow_int(Int(d), b - 1);
    prefactor *= pow2(1 - static_cast<std::int64_t>(b) - static_cast<std::int64_t>(g));
    return prefactor * extraction;
}

Rat one_part_single_fd(unsigned g, unsigned mu, unsigned r) {
    require_even_r(r);
    if (mu == 0 || mu % 2 == 0) throw std::domain_error("one_part_single_fd: mu must be odd and positive");
    const long numerator = 2L * g - 1 + static_cast<long>(mu);
    if (numerator % static_cast<long>(r) != 0) return 0;  // no u^{2g-1+mu} term in the u^r-series
    const unsigned b = static_cast<unsigned>(numerator / r);

    // Delta^{mu-1} [z(l)^b / b!] at l = 1 (mu odd, so (-Delta)^{mu-1} = Delta^{mu-1}).
    Rat diff = 0;
    for (unsigned j = 0; j < mu; ++j) {
        Rat term = pow_rat(z_poly_at(1 + static_cast<long>(j), mu, r), b) * binomial(mu - 1, j);
        diff += ((mu - 1 - j) % 2 == 0) ? term : -term;
    }
    return diff / (Rat(factorial(b)) * pow2(g) * Rat(Int(mu) * Int(mu)) * Rat(factorial(mu - 1)));
}

Rat one_part_single_stirling(unsigned g, unsigned mu, unsigned r) {
    require_even_r(r);
    if (mu == 0 || mu % 2 == 0) throw std::domain_error("one_part_single_stirling: mu must be odd and positive");
    const long numerator = 2L * g - 1 + static_cast<long>(mu);
    if (numerator % static_cast<long>(r) != 0)
        throw std::domain_error("one_part_single_stirling: b = (2g-1+mu)/r is not an integer");
    const unsigned b = static_cast<unsigned>(numerator / r);

    const std::vector<Rat> c_pow = c_coeffs_by_powering(mu, r, b, 2 * g);
    const std::vector<Rat> c_sum = c_coeffs_by_partition_sum(mu, r, b, 2 * g);
    for (unsigned a = 0; a <= 2 * g; ++a)
        if (c_pow[a] != c_sum[a])
            throw std::logic_error("one_part_single_stirling: C_a cross-check failed");

    Rat total = 0;
    for (unsigned a = 0; a <= 2 * g; ++a) total += c_pow[a] * stirling2(mu + 2 * g - a, mu);
    return total / (pow2(g) * Rat(Int(mu) * Int(mu)) * Rat(factorial(b)));
}

Rat one_part_g1_closed(unsigned mu, unsigned r) {
    require_even_r(r);
    if (mu == 0 || mu % 2 == 0) throw std::domain_error("one_part_g1_closed: mu must be odd and positive");
    if ((mu + 1) % r != 0) throw std::domain_error("one_part_g1_closed: b = (mu+1)/r is not an integer");
    const unsigned b = (mu + 1) / r;
    const unsigned s = r / 2;
    Rat out = make_rat(Int(s) * Int(s), 12);
    out *= make_rat(pow_int(Int(mu), b - 1), factorial(b - 1));
    out *= Rat(mu) + make_rat(1, s);
    return out;
}

QSeries lambert_power_series(const Rat& alpha, int order) {
    if (order < 0) throw std::domain_error("lambert_power_series: negative order");
    QSeries out = QSeries::one_to(order);
    for (int m = 1; m <= order; ++m)
        out.set_coeff(m, alpha * pow_rat(Rat(m) + alpha, m - 1) / factorial(m));
    return out;
}

Rat f01_coefficient(unsigned r, unsigned mu) {
    require_even_r(r);
    if (mu == 0 || mu % 2 == 0) return 0;
    if ((mu - 1) % r != 0) return 0;  // exponents are 2sb+1
    const unsigned b = (mu - 1) / r;
    return pow_rat(Rat(mu), static_cast<std::int64_t>(b) - 2) / factorial(b);
}

Rat f02_coefficient(unsigned r, unsigned mu1, unsigned mu2) {
    require_even_r(r);
    if (mu1 == 0 || mu1 % 2 == 0 || mu2 == 0 || mu2 % 2 == 0)
        throw std::domain_error("f02_coefficient: exponents must be odd and positive");
    if ((mu1 + mu2) % r != 0) return 0;
    const auto piece = [&](unsigned m) {
        unsigned fl = m / r;  // floor(m/2s)
        return make_rat(pow_int(Int(m), fl), factorial(fl));
    };
    return make_rat(r, mu1 + mu2) * piece(mu1) * piece(mu2);
}

std::map<unsigned, Rat> f01_series(unsigned r, unsigned max_mu) {
    std::map<unsigned, Rat> out;
    for (unsigned mu = 1; mu <= max_mu; mu += r) {
        Rat c = f01_coefficient(r, mu);
        if (c != 0) out.emplace(mu, std::move(c));
    }
    return out;
}

std::map<std::pair<unsigned, unsigned>, Rat> f02_series(unsigned r, unsigned max_mu) {
    std::map<std::pair<unsigned, unsigned>, Rat> out;
    for (unsigned mu1 = 1; mu1 <= max_mu; mu1 += 2)
        for (unsigned mu2 = 1; mu2 <= max_mu; mu2 += 2) {
            Rat c = f02_coefficient(r, mu1, mu2);
            if (c != 0) out.emplace(std::make_pair(mu1, mu2), std::move(c));
        }
    return out;
}

}  // namespace spinh
