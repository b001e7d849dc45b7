#include "spinh/fock.hpp"

#include <vector>

#include "doctest.h"
#include "spinh/closed_forms.hpp"
#include "spinh/qschur.hpp"
#include "test_util.hpp"

using namespace spinh;

namespace {

CliffordMonomial M(std::vector<int> idx) { return CliffordMonomial(std::move(idx)); }

}  // namespace

TEST_SUITE_BEGIN("fock");

TEST_CASE("monomials: construction and the partition correspondence") {
    CHECK(CliffordMonomial{}.is_vacuum());
    CHECK(M({3, 1, 0}).energy() == 4);
    CHECK_THROWS_AS(M({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(M({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(M({-1}), std::invalid_argument);

    CHECK(CliffordMonomial::of_partition(Partition{3, 1}) == M({3, 1}));
    CHECK(CliffordMonomial::of_partition(Partition{3}) == M({3, 0}));
    CHECK(CliffordMonomial::of_partition(Partition{}) == CliffordMonomial{});
    CHECK(M({3, 1, 0}).positive_part() == Partition{3, 1});
    CHECK_THROWS_AS(CliffordMonomial::of_partition(Partition{2, 2}), std::invalid_argument);
}

TEST_CASE("phi action: annihilation, phi_0 pairing, ordering signs") {
    const CliffordState vac = CliffordState::vacuum();

    CHECK(apply_phi(-1, vac).is_zero());
    CHECK(apply_phi(0, apply_phi(0, vac)) == make_rat(1, 2) * vac);

    // phi_3 phi_1 |0> is already canonical; phi_1 phi_3 |0> needs one swap.
    CliffordState s31 = apply_phi(3, apply_phi(1, vac));
    CHECK(s31 == CliffordState::single(M({3, 1}), 1));
    CHECK(apply_phi(1, apply_phi(3, vac)) == CliffordState::single(M({3, 1}), -1));

    // Repeated positive index annihilates.
    CHECK(apply_phi(3, s31).is_zero());
    // Insertion picks up one sign per larger index passed.
    CHECK(apply_phi(2, s31) == CliffordState::single(M({3, 2, 1}), -1));
    // phi_0 appends with the parity of the word length.
    CHECK(apply_phi(0, s31) == CliffordState::single(M({3, 1, 0}), 1));
    CHECK(apply_phi(0, CliffordState::single(M({3}), 1)) ==
          CliffordState::single(M({3, 0}), -1));
    // Contraction from the left: phi_{-k} picks up (-1)^{pos+k}.
    CHECK(apply_phi(-1, s31) == CliffordState::single(M({3}), 1));
    CHECK(apply_phi(-3, s31) == CliffordState::single(M({1}), -1));
}

TEST_CASE("vacuum expectation of a fermion pair") {
    const CliffordState vac = CliffordState::vacuum();
    for (int l = 1; l <= 4; ++l) {
        Rat expected = (l % 2 == 0) ? 1 : -1;  // (-1)^l
        CHECK(vev(apply_phi(-l, apply_phi(l, vac))) == expected);
        CHECK(vev(apply_phi(l, apply_phi(-l, vac))) == 0);
    }
    CHECK(vev(apply_phi(0, apply_phi(0, vac))) == R("1/2"));

    // Normal-ordered quadratic operators have vanishing VEV.
    for (int j : {-3, -1, 0, 1, 3})
        CHECK(vev(apply_f_hat(j, -j, vac)) == 0);
}

TEST_CASE("bosonic operators: basic actions") {
    const CliffordState vac = CliffordState::vacuum();
    CHECK(apply_alpha(1, vac).is_zero());
    CHECK(apply_alpha(-1, vac) == CliffordState::single(M({1, 0}), 1));
    CHECK_THROWS_AS(apply_alpha(2, vac), std::invalid_argument);
    CHECK_THROWS_AS(apply_alpha(0, vac), std::invalid_argument);

    // [alpha_1, alpha_{-1}] |0> = 1/2 |0>.
    CliffordState lhs = apply_alpha(1, apply_alpha(-1, vac)) -
                        apply_alpha(-1, apply_alpha(1, vac));
    CHECK(lhs == make_rat(1, 2) * vac);
}

TEST_CASE("Heisenberg relations on all monomials of energy <= 8") {
    const std::vector<CliffordMonomial> basis = basis_monomials(8);
    for (int m : {-7, -5, -3, -1, 1, 3, 5, 7})
        for (int n : {-7, -5, -3, -1, 1, 3, 5, 7}) {
            Rat central = (m + n == 0) ? make_rat(m, 2) : Rat(0);
            for (const CliffordMonomial& mono : basis) {
                CliffordState s = CliffordState::single(mono, 1);
                CliffordState comm =
                    apply_alpha(m, apply_alpha(n, s)) - apply_alpha(n, apply_alpha(m, s));
                CHECK(comm == central * s);
            }
        }
}

TEST_CASE("cut-and-join operator is diagonal with power-sum eigenvalues") {
    const CliffordState vac = CliffordState::vacuum();
    CHECK(apply_cutjoin(2, vac).is_zero());
    CHECK(apply_cutjoin(2, CliffordState::single(M({3, 1}), 1)) ==
          Rat(28) * CliffordState::single(M({3, 1}), 1));
    CHECK(apply_cutjoin(2, CliffordState::single(M({2, 1}), 1)) ==
          Rat(9) * CliffordState::single(M({2, 1}), 1));
    CHECK_THROWS_AS(apply_cutjoin(3, vac), std::invalid_argument);

    for (unsigned r : {2u, 4u})
        for (const CliffordMonomial& mono : basis_monomials(8)) {
            CliffordState s = CliffordState::single(mono, 1);
            Rat eigen = Rat(power_sum_eval(mono.positive_part(), r + 1));
            CHECK(apply_cutjoin(r, s) == eigen * s);
        }
}

TEST_CASE("alpha_{-mu} expansion carries the Sergeev characters") {
    for (unsigned d = 1; d <= 8; ++d)
        for (const Partition& mu : enumerate_partitions(d, PartitionClass::odd)) {
            CliffordState state = alpha_negative_product_expansion(mu);
            Rat denom = pow2(mu.length());
            std::size_t expected_terms = 0;
            for (const Partition& lambda : enumerate_partitions(d, PartitionClass::strict)) {
                Rat expect = Rat(character(lambda, mu)) / denom;
                CHECK(state.coefficient(CliffordMonomial::of_partition(lambda)) == expect);
                if (expect != 0) ++expected_terms;
            }
            // Nothing besides the monomials of strict partitions of d shows up.
            CHECK(state.terms().size() == expected_terms);
        }
}

TEST_CASE("operator values as first-class objects") {
    const CliffordState vac = CliffordState::vacuum();
    CHECK(QuadraticOperator::alpha(-1).apply(vac) == apply_alpha(-1, vac));
    CliffordState s = CliffordState::single(M({3, 1}), 1);
    CHECK(QuadraticOperator::cutjoin(2).apply(s) == apply_cutjoin(2, s));
    CHECK(QuadraticOperator::f(1, 0).apply(vac) == apply_f(1, 0, vac));
    CHECK(QuadraticOperator::f_hat(1, -1).apply(s) == apply_f_hat(1, -1, s));
    CHECK(QuadraticOperator::e0_hat_coeff(3).apply(s) == apply_e0_hat_coeff(3, s));
    // Regularized E_0 includes the scalar Laurent part: [z^{-1}] is id/2.
    CHECK(QuadraticOperator::e_coeff(0, -1).apply(s) == make_rat(1, 2) * s);
}

TEST_CASE("E-operator VEVs and parity") {
    const CliffordState vac = CliffordState::vacuum();

    // <E_0(z)> = (1/4) coth(z/2) = 1/(2z) + z/24 - z^3/1440 + ...
    QSeries scalar = e0_scalar(5);
    CHECK(scalar.coeff(-1) == R("1/2"));
    CHECK(scalar.coeff(1) == R("1/24"));
    CHECK(scalar.coeff(3) == R("-1/1440"));
    for (int j = -1; j <= 4; ++j)
        CHECK(vev(apply_e_coeff(0, j, vac)) == scalar.coeff(j));
    for (int m : {1, -1, 3})
        for (int j = 0; j <= 4; ++j) CHECK(vev(apply_e_coeff(m, j, vac)) == 0);

    // E_m(-z) = (-1)^{m+1} E_m(z): coefficients of the wrong parity vanish.
    for (int m = -3; m <= 3; ++m)
        for (int j = 0; j <= 5; ++j) {
            if ((j + m) % 2 != 0) continue;  // j == m+1 mod 2 is the surviving parity
            for (const CliffordMonomial& mono : basis_monomials(5)) {
                CliffordState s = CliffordState::single(mono, 1);
                CHECK(apply_e_coeff(m, j, s).is_zero());
            }
        }
}

TEST_CASE("E-operator commutation relations") {
    CHECK(commutator_check(1, -1, 4, 6));
    CHECK(commutator_check(0, 0, 4, 6));
    CHECK(commutator_check(3, -1, 3, 5));
    CHECK(commutator_check(1, -3, 3, 5));
    CHECK(commutator_check(1, 2, 3, 5));
    CHECK(commutator_check(0, 1, 3, 5));
}

TEST_CASE("spin single Hurwitz numbers from the vacuum expectation") {
    CHECK(vev_spin_single(0, Partition{1}, 2) == Rat(1));
    CHECK(vev_spin_single(1, Partition{3}, 2) == Rat(1));
    CHECK(vev_spin_single(0, Partition{5}, 4) == R("1/5"));
    CHECK(vev_spin_single(1, Partition{1}, 2) == R("1/6"));
    CHECK(vev_spin_single(0, Partition{3}, 2) == R("1/3"));
    CHECK(!vev_spin_single(0, Partition{3}, 4).has_value());
    CHECK_THROWS_AS(vev_spin_single(0, Partition{2, 1}, 2), std::invalid_argument);

    // One-part numbers agree with the closed finite-difference expression
    // (one-part covers are automatically connected).
    for (unsigned r : {2u, 4u})
        for (unsigned mu = 1; mu <= 7; mu += 2)
            for (unsigned g = 0; g <= 3; ++g) {
                if ((2 * g + mu - 1) % r != 0) continue;
                CHECK(vev_spin_single(g, Partition{mu}, r) == one_part_single_fd(g, mu, r));
            }
}

TEST_CASE("spin double Hurwitz numbers from the vacuum expectation") {
    CHECK(vev_spin_double(0, Partition{1}, Partition{1}, 2) == Rat(1));
    CHECK(vev_spin_double(0, Partition{3}, Partition{1, 1, 1}, 2) == Rat(2));
    CHECK(vev_spin_double(0, Partition{3, 1}, Partition{3, 1}, 2) == R("26/9"));
    CHECK(vev_spin_double(0, Partition{3}, Partition{3}, 2) == R("1/3"));
    CHECK(!vev_spin_double(0, Partition{3}, Partition{1, 1, 1}, 4).has_value());
    CHECK_THROWS_AS(vev_spin_double(0, Partition{3}, Partition{1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(vev_spin_double(0, Partition{2}, Partition{1, 1}, 2), std::invalid_argument);

    // h_single = h_double(nu = (1^d)) / d!.
    for (unsigned g = 0; g <= 2; ++g)
        for (unsigned d : {1u, 3u, 4u, 5u})
            for (const Partition& mu : enumerate_partitions(d, PartitionClass::odd)) {
                auto dbl = vev_spin_double(g, mu, Partition::rectangle(1, d), 2);
                auto sng = vev_spin_single(g, mu, 2);
                REQUIRE(dbl.has_value() == sng.has_value());
                if (dbl) CHECK(*dbl == Rat(factorial(d)) * *sng);
            }
}

TEST_CASE("completed-cycle insertions: cut-and-join versus E^_0 coefficient route") {
    // (FF_{r+1}/(r+1))^b insertions agree with the diagonal coefficient
    // extraction (r!)^b [z_1^{r+1}...z_b^{r+1}] prod_p E^_0(z_p).
    struct Cell {
        unsigned g;
        Partition mu, nu;
    };
    const unsigned r = 2;
    const std::vector<Cell> cells = {
        {1, Partition{3}, Partition{3}},
        {0, Partition{3, 1}, Partition{3, 1}},
        {1, Partition{3, 1}, Partition{3, 1}},
        {2, Partition{3}, Partition{3}},
        {1, Partition{5, 1}, Partition{3, 3}},
    };
    for (const auto& cell : cells) {
        const long num = 2L * cell.g - 2 + cell.mu.length() + cell.nu.length();
        REQUIRE(num % r == 0);
        const unsigned b = static_cast<unsigned>(num / r);
        REQUIRE(b <= 2);

        CliffordState state = alpha_negative_product_expansion(cell.nu);
        for (unsigned p = 0; p < b; ++p)
            state = Rat(factorial(r)) * apply_e0_hat_coeff(static_cast<int>(r) + 1, state);
        for (unsigned part : cell.mu.parts()) state = apply_alpha(static_cast<int>(part), state);
        Rat prefactor = pow2(1 - static_cast<long>(cell.g)) / Rat(factorial(b));
        for (unsigned part : cell.mu.parts()) prefactor /= part;
        for (unsigned part : cell.nu.parts()) prefactor /= part;
        CHECK(prefactor * vev(state) == vev_spin_double(cell.g, cell.mu, cell.nu, r));
    }
}

TEST_SUITE_END();
