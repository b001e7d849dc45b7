#include "spinh/closed_forms.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "spinh/series.hpp"
#include "test_util.hpp"

using namespace spinh;

namespace {

// Iterated forward difference Delta^nu f at 1 for f(l) = l^n.
Int delta_power_at_one(unsigned n, unsigned nu) {
    Int out = 0;
    for (unsigned j = 0; j <= nu; ++j) {
        Int term = binomial(nu, j) * pow_int(Int(1 + j), n);
        out += ((nu - j) % 2 == 0) ? term : -term;
    }
    return out;
}

QSeries series_pow(const QSeries& f, unsigned e, int trusted) {
    QSeries out = QSeries::one_to(trusted);
    for (unsigned i = 0; i < e; ++i) out = out * f;
    return out;
}

void check_same_series(const QSeries& a, const QSeries& b) {
    int t = std::min(a.trusted(), b.trusted());
    for (int j = std::min(a.valuation_bound(), b.valuation_bound()); j <= t; ++j)
        CHECK(a.coeff(j) == b.coeff(j));
}

}  // namespace

TEST_SUITE_BEGIN("closed_forms");

TEST_CASE("Stirling numbers of the second kind") {
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(stirling2(n, n) == 1);
        CHECK(stirling2(n, 0) == (n == 0 ? 1 : 0));
    }
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 2) == 15);
    CHECK(stirling2(6, 3) == 90);
    CHECK(stirling2(3, 7) == 0);

    // x^n = sum_k S(n,k) x(x-1)...(x-k+1) at x = 1..10.
    for (unsigned n = 0; n <= 8; ++n)
        for (long x = 1; x <= 10; ++x) {
            Int rhs = 0;
            for (unsigned k = 0; k <= n; ++k) {
                Int falling = 1;
                for (unsigned i = 0; i < k; ++i) falling *= Int(x) - Int(i);
                rhs += stirling2(n, k) * falling;
            }
            CHECK(rhs == pow_int(Int(x), n));
        }
}

TEST_CASE("forward-difference lemma: Delta^nu l^n at 1 equals nu! S(n+1, nu+1)") {
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned nu = 0; nu <= n; ++nu)
            CHECK(delta_power_at_one(n, nu) == factorial(nu) * stirling2(n + 1, nu + 1));
}

TEST_CASE("one-part single numbers, finite-difference route: pinned values") {
    CHECK(one_part_single_fd(0, 1, 2) == 1);
    CHECK(one_part_single_fd(1, 1, 2) == R("1/6"));
    CHECK(one_part_single_fd(1, 5, 2) == R("25/4"));
    CHECK(one_part_single_fd(2, 9, 2) == R("2556603/320"));
    CHECK(one_part_single_fd(1, 3, 4) == R("7/6"));
    CHECK(one_part_single_fd(2, 9, 6) == R("11109/4"));
    // r does not divide 2g-1+mu: the extracted coefficient is absent.
    CHECK(one_part_single_fd(0, 3, 4) == 0);
    CHECK(one_part_single_fd(1, 5, 4) == 0);
    CHECK_THROWS_AS(one_part_single_fd(0, 2, 2), std::domain_error);
    CHECK_THROWS_AS(one_part_single_fd(0, 1, 3), std::domain_error);
}

TEST_CASE("one-part single numbers: Stirling route agrees with finite differences") {
    for (unsigned r : {2u, 4u, 6u})
        for (unsigned g = 0; g <= 2; ++g)
            for (unsigned mu = 1; mu <= 19; mu += 2) {
                if ((2 * g + mu - 1) % r != 0) {
                    CHECK_THROWS_AS(one_part_single_stirling(g, mu, r), std::domain_error);
                    continue;
                }
                CHECK(one_part_single_stirling(g, mu, r) == one_part_single_fd(g, mu, r));
            }
}

TEST_CASE("one-part single numbers: genus-one closed form") {
    CHECK(one_part_g1_closed(1, 2) == R("1/6"));
    CHECK(one_part_g1_closed(5, 2) == R("25/4"));
    CHECK(one_part_g1_closed(3, 4) == R("7/6"));
    for (unsigned r : {2u, 4u, 6u})
        for (unsigned mu = 1; mu <= 19; mu += 2) {
            if ((mu + 1) % r != 0) {
                CHECK_THROWS_AS(one_part_g1_closed(mu, r), std::domain_error);
                continue;
            }
            CHECK(one_part_g1_closed(mu, r) == one_part_single_fd(1, mu, r));
        }
}

TEST_CASE("one-part double numbers: unramified-over-zero edge (b = 0)") {
    for (unsigned d : {1u, 3u, 5u, 7u, 9u})
        for (unsigned r : {2u, 4u}) CHECK(one_part_double(0, d, Partition{d}, r) == make_rat(1, d));
}

TEST_CASE("one-part double numbers: pinned value and domain errors") {
    CHECK(one_part_double(0, 3, Partition{1, 1, 1}, 2) == 2);
    CHECK_THROWS_AS(one_part_double(0, 3, Partition{1, 1, 1}, 4), std::domain_error);  // b = 1/2
    CHECK_THROWS_AS(one_part_double(0, 4, Partition{3, 1}, 2), std::domain_error);     // even degree
    CHECK_THROWS_AS(one_part_double(0, 3, Partition{2, 1}, 2), std::domain_error);     // even part
    CHECK_THROWS_AS(one_part_double(0, 5, Partition{3}, 2), std::domain_error);        // |mu| != d
}

TEST_CASE("one-part double numbers over (1^d) recover single numbers") {
    // h_{g;(d)} = h_{g;(d),(1^d)} / d!
    struct Case {
        unsigned g, d, r;
    };
    const std::vector<Case> cases = {
        {0, 3, 2}, {0, 5, 2}, {0, 7, 2}, {0, 9, 2}, {1, 1, 2}, {1, 3, 2}, {1, 5, 2},
        {2, 1, 2}, {2, 5, 2}, {2, 9, 2}, {0, 5, 4}, {0, 9, 4}, {1, 3, 4}, {1, 7, 4},
        {2, 1, 4}, {2, 5, 4}, {2, 9, 4},
    };
    for (const auto& c : cases) {
        Rat dbl = one_part_double(c.g, c.d, Partition::rectangle(1, c.d), c.r);
        CHECK(dbl == Rat(factorial(c.d)) * one_part_single_fd(c.g, c.d, c.r));
    }
}

TEST_CASE("one-part double numbers: b = 1 specialization matches the qoppa-ssh extraction") {
    // For b = 1 (so mu = r+1-2g):
    //   h_{g;(mu)} = r!/(2^{g-1} mu!) [z^{2g}] qoppa(z) S(z mu) S(z)^{mu-1}.
    for (unsigned r : {2u, 4u, 6u})
        for (unsigned mu = 1; mu <= r + 1; mu += 2) {
            unsigned g = (r + 1 - mu) / 2;
            int t = static_cast<int>(2 * g);
            QSeries integrand = qoppa_series(t) * ssh_series(t).scaled_var(Rat(mu)) *
                                series_pow(ssh_series(t), mu - 1, t);
            Rat rhs = make_rat(factorial(r), factorial(mu)) * pow2(1 - static_cast<long>(g)) *
                      integrand.coeff(t);
            CHECK(one_part_single_fd(g, mu, r) == rhs);
        }
}

TEST_CASE("Lambert power series") {
    QSeries l1 = lambert_power_series(1, 6);
    CHECK(l1.coeff(0) == 1);
    CHECK(l1.coeff(1) == 1);
    CHECK(l1.coeff(2) == R("3/2"));
    CHECK(l1.coeff(3) == R("8/3"));
    CHECK(l1.coeff(4) == R("125/24"));

    // m = 0 term is 1 for every exponent.
    CHECK(lambert_power_series(R("5/7"), 4).coeff(0) == 1);
    check_same_series(lambert_power_series(0, 4), QSeries::one_to(4));

    // Powers multiply: L^a * L^b = L^{a+b}.
    const int t = 8;
    QSeries a = lambert_power_series(R("1/2"), t);
    QSeries b = lambert_power_series(R("3/2"), t);
    check_same_series(a * b, lambert_power_series(2, t));
    check_same_series(a * a, lambert_power_series(1, t));

    // Defining equation: with L = W(-t)/(-t), W e^W = -t gives L e^{-tL} = 1.
    QSeries L = lambert_power_series(1, t);
    QSeries exponent = -L.shifted(1).truncated(t);  // -t L
    check_same_series(L * exponent.exp(), QSeries::one_to(t));
}

TEST_CASE("genus-zero one-point free energy") {
    CHECK(f01_coefficient(2, 1) == 1);
    CHECK(f01_coefficient(2, 3) == R("1/3"));
    CHECK(f01_coefficient(2, 5) == R("1/2"));
    CHECK(f01_coefficient(2, 7) == R("7/6"));
    CHECK(f01_coefficient(4, 9) == R("1/2"));
    CHECK(f01_coefficient(4, 3) == 0);  // 3 is not of the form 4b+1

    std::map<unsigned, Rat> s2 = f01_series(2, 9);
    CHECK(s2.size() == 5);
    CHECK(s2.at(9) == R("27/8"));

    // The coefficients are exactly the genus-zero one-part single numbers.
    for (unsigned r : {2u, 4u, 6u})
        for (unsigned mu = 1; mu <= 19; mu += 2)
            CHECK(f01_coefficient(r, mu) == one_part_single_fd(0, mu, r));
}

TEST_CASE("genus-zero two-point free energy") {
    CHECK(f02_coefficient(2, 1, 1) == 1);
    CHECK(f02_coefficient(2, 3, 1) == R("3/2"));
    CHECK(f02_coefficient(2, 3, 3) == 3);
    CHECK(f02_coefficient(2, 5, 1) == R("25/6"));
    CHECK(f02_coefficient(2, 5, 3) == R("75/8"));
    CHECK(f02_coefficient(2, 5, 5) == R("125/4"));
    CHECK(f02_coefficient(4, 3, 1) == 1);
    CHECK(f02_coefficient(4, 5, 3) == R("5/2"));
    CHECK(f02_coefficient(4, 7, 1) == R("7/2"));
    CHECK(f02_coefficient(4, 7, 5) == R("35/3"));
    CHECK(f02_coefficient(4, 9, 3) == R("27/2"));
    CHECK(f02_coefficient(4, 9, 7) == R("567/8"));
    CHECK(f02_coefficient(4, 1, 1) == 0);   // 2 not divisible by 4
    CHECK(f02_coefficient(4, 5, 5) == 0);   // 10 not divisible by 4
    CHECK_THROWS_AS(f02_coefficient(2, 2, 1), std::domain_error);

    for (unsigned r : {2u, 4u, 6u})
        for (unsigned m1 = 1; m1 <= 9; m1 += 2)
            for (unsigned m2 = 1; m2 <= 9; m2 += 2)
                CHECK(f02_coefficient(r, m1, m2) == f02_coefficient(r, m2, m1));

    std::map<std::pair<unsigned, unsigned>, Rat> s4 = f02_series(4, 9);
    CHECK(s4.count({5, 5}) == 0);
    CHECK(s4.at({3, 1}) == 1);
    CHECK(s4.at({1, 3}) == 1);
}

TEST_SUITE_END();
