#include "spinh/fock.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spinh {

namespace {

bool odd_parity(long x) { return (x & 1) != 0; }

}  // namespace

CliffordMonomial::CliffordMonomial(std::vector<int> indices) : indices_(std::move(indices)) {
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 0) throw std::invalid_argument("CliffordMonomial: negative index");
        if (i + 1 < indices_.size() && indices_[i] <= indices_[i + 1])
            throw std::invalid_argument("CliffordMonomial: indices must strictly decrease");
    }
}

int CliffordMonomial::energy() const {
    int e = 0;
    for (int i : indices_) e += i;
    return e;
}

CliffordMonomial CliffordMonomial::of_partition(const Partition& lambda) {
    if (!lambda.is_strict()) throw std::invalid_argument("of_partition: partition must be strict");
    std::vector<int> idx(lambda.parts().begin(), lambda.parts().end());
    if (lambda.length() % 2 == 1) idx.push_back(0);
    return CliffordMonomial(std::move(idx));
}

Partition CliffordMonomial::positive_part() const {
    std::vector<unsigned> parts;
    for (int i : indices_)
        if (i > 0) parts.push_back(static_cast<unsigned>(i));
    return Partition(std::move(parts));
}

std::string CliffordMonomial::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(indices_[i]);
    }
    return out + "]";
}

CliffordState CliffordState::vacuum() { return single(CliffordMonomial{}, 1); }

CliffordState CliffordState::single(CliffordMonomial m, Rat c) {
    CliffordState s;
    s.add_term(m, c);
    return s;
}

Rat CliffordState::coefficient(const CliffordMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void CliffordState::add_term(const CliffordMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int CliffordState::max_energy() const {
    int e = 0;
    for (const auto& [m, c] : terms_) e = std::max(e, m.energy());
    return e;
}

CliffordState& CliffordState::operator+=(const CliffordState& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

CliffordState& CliffordState::operator-=(const CliffordState& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

CliffordState operator*(const Rat& c, const CliffordState& s) {
    CliffordState out;
    if (c == 0) return out;
    for (const auto& [m, v] : s.terms_) out.terms_.emplace(m, c * v);
    return out;
}

CliffordState apply_phi(int k, const CliffordState& s) {
    CliffordState out;
    for (const auto& [mono, coeff] : s.terms()) {
        const std::vector<int>& idx = mono.indices();
        if (k < 0) {
            // phi_k anticommutes freely past every other index ({phi_k, phi_i}
            // vanishes unless i = -k) and annihilates the vacuum; it survives
            // only by contracting an index -k, picking up (-1)^{pos + k}.
            auto it = std::find(idx.begin(), idx.end(), -k);
            if (it == idx.end()) continue;
            long pos = it - idx.begin();
            std::vector<int> rest;
            rest.reserve(idx.size() - 1);
            for (auto jt = idx.begin(); jt != idx.end(); ++jt)
                if (jt != it) rest.push_back(*jt);
            Rat c = odd_parity(pos + k) ? -coeff : coeff;
            out.add_term(CliffordMonomial(std::move(rest)), c);
        } else if (k == 0) {
            if (!idx.empty() && idx.back() == 0) {
                // phi_0 moves past len-1 positive indices, then phi_0^2 = 1/2.
                std::vector<int> rest(idx.begin(), idx.end() - 1);
                Rat c = coeff * make_rat(1, 2);
                if (odd_parity(static_cast<long>(idx.size()) - 1)) c = -c;
                out.add_term(CliffordMonomial(std::move(rest)), c);
            } else {
                std::vector<int> ext(idx);
                ext.push_back(0);
                Rat c = odd_parity(static_cast<long>(idx.size())) ? -coeff : coeff;
                out.add_term(CliffordMonomial(std::move(ext)), c);
            }
        } else {
            // phi_k^2 = 0 for k > 0; otherwise insert in order with the
            // anticommutation sign for each larger index passed.
            if (std::find(idx.begin(), idx.end(), k) != idx.end()) continue;
            auto it = std::upper_bound(idx.begin(), idx.end(), k, std::greater<int>{});
            long pos = it - idx.begin();
            std::vector<int> ext;
            ext.reserve(idx.size() + 1);
            ext.insert(ext.end(), idx.begin(), it);
            ext.push_back(k);
            ext.insert(ext.end(), it, idx.end());
            out.add_term(CliffordMonomial(std::move(ext)), odd_parity(pos) ? -coeff : coeff);
        }
    }
    return out;
}

Rat vev(const CliffordState& s) { return s.coefficient(CliffordMonomial{}); }

CliffordState apply_f(int j, int k, const CliffordState& s) {
    CliffordState out = apply_phi(j, apply_phi(k, s));
    return odd_parity(j) ? Rat(-1) * out : out;
}

namespace {

Rat f_vev(int j, int k) {
    if (j + k != 0) return 0;
    if (k > 0) return 1;
    if (k == 0) return make_rat(1, 2);
    return 0;
}

}  // namespace

CliffordState apply_f_hat(int j, int k, const CliffordState& s) {
    CliffordState out = apply_f(j, k, s);
    Rat c = f_vev(j, k);
    if (c != 0) out -= c * s;
    return out;
}

CliffordState apply_alpha(int m, const CliffordState& s) {
    if (m % 2 == 0) throw std::invalid_argument("apply_alpha: m must be odd (even alpha vanish)");
    const int kmin = (1 - m) / 2;  // k > -m/2 for integers, m odd
    CliffordState out;
    for (const auto& [mono, coeff] : s.terms()) {
        CliffordState base = CliffordState::single(mono, coeff);
        std::set<int> candidates;
        // Creation range: -k-m >= 0.
        for (int k = kmin; k <= -m; ++k) candidates.insert(k);
        // Contraction terms: phi_{-k-m} removes an existing index k+m.
        for (int i : mono.indices())
            if (i - m >= kmin) candidates.insert(i - m);
        for (int k : candidates) out -= apply_f(k, -k - m, base);
    }
    return out;
}

CliffordState apply_cutjoin(unsigned r, const CliffordState& s) {
    if (r % 2 != 0) throw std::invalid_argument("apply_cutjoin: r must be even");
    CliffordState out;
    for (const auto& [mono, coeff] : s.terms()) {
        CliffordState base = CliffordState::single(mono, coeff);
        // F_{k,-k} needs the contraction phi_{-k} to hit an index k > 0.
        for (int k : mono.indices()) {
            if (k <= 0) continue;
            out += Rat(pow_int(Int(k), r + 1)) * apply_f(k, -k, base);
        }
    }
    return out;
}

CliffordState apply_exp_alpha1(const CliffordState& s) {
    CliffordState total = s;
    CliffordState term = s;
    for (unsigned j = 1; !term.is_zero(); ++j) {
        term = make_rat(1, j) * apply_alpha(1, term);
        total += term;
    }
    return total;
}

CliffordState apply_e_coeff(int m, int j, const CliffordState& s) {
    if (m == 0) {
        // Regularized E_0(z) = E^_0(z) + (qoppa/varsigma)(z) id.
        CliffordState out = apply_e0_hat_coeff(j, s);
        if (j >= -1) {
            Rat scalar = e0_scalar(std::max(j, 1)).coeff(j);
            if (scalar != 0) out += scalar * s;
        }
        return out;
    }
    CliffordState out;
    if (j < 0) return out;
    const Rat inv_jfact = Rat(1) / Rat(factorial(j));
    for (const auto& [mono, coeff] : s.terms()) {
        CliffordState base = CliffordState::single(mono, coeff);
        std::set<int> candidates;
        const int lo = std::min(0, -m), hi = std::max(0, -m);
        for (int k = lo; k <= hi; ++k) candidates.insert(k);
        for (int i : mono.indices()) {
            candidates.insert(i - m);  // contraction by phi_{-k-m}
            candidates.insert(-i);     // contraction by phi_k
        }
        for (int k : candidates) {
            Rat weight = make_rat(1, 2) * pow_rat(make_rat(2 * k + m, 2), j) * inv_jfact;
            out += weight * apply_f(k, -k - m, base);
        }
    }
    return out;
}

CliffordState apply_e0_hat_coeff(int j, const CliffordState& s) {
    CliffordState out;
    if (j < 0) return out;
    const Rat inv_jfact = Rat(1) / Rat(factorial(j));
    for (const auto& [mono, coeff] : s.terms()) {
        CliffordState base = CliffordState::single(mono, coeff);
        for (int i : mono.indices()) {
            if (i <= 0) continue;
            for (int k : {i, -i}) {
                Rat weight = make_rat(1, 2) * pow_rat(Rat(k), j) * inv_jfact;
                out += weight * apply_f_hat(k, -k, base);
            }
        }
    }
    return out;
}

QSeries e0_scalar(int trusted) { return make_rat(1, 4) * coth_half_series(trusted); }

QuadraticOperator QuadraticOperator::f(int j, int k) { return {Kind::f, j, k}; }
QuadraticOperator QuadraticOperator::f_hat(int j, int k) { return {Kind::f_hat, j, k}; }
QuadraticOperator QuadraticOperator::alpha(int m) { return {Kind::alpha, m, 0}; }
QuadraticOperator QuadraticOperator::cutjoin(unsigned r) {
    return {Kind::cutjoin, static_cast<int>(r), 0};
}
QuadraticOperator QuadraticOperator::e_coeff(int m, int j) { return {Kind::e_coeff, m, j}; }
QuadraticOperator QuadraticOperator::e0_hat_coeff(int j) { return {Kind::e0_hat_coeff, j, 0}; }

CliffordState QuadraticOperator::apply(const CliffordState& s) const {
    switch (kind_) {
        case Kind::f: return apply_f(a_, b_, s);
        case Kind::f_hat: return apply_f_hat(a_, b_, s);
        case Kind::alpha: return apply_alpha(a_, s);
        case Kind::cutjoin: return apply_cutjoin(static_cast<unsigned>(a_), s);
        case Kind::e_coeff: return apply_e_coeff(a_, b_, s);
        case Kind::e0_hat_coeff: return apply_e0_hat_coeff(a_, s);
    }
    throw std::logic_error("QuadraticOperator: unknown kind");
}

CliffordState alpha_negative_product_expansion(const Partition& mu) {
    CliffordState state = CliffordState::vacuum();
    for (unsigned part : mu.parts()) state = apply_alpha(-static_cast<int>(part), state);
    return state;
}

std::optional<Rat> vev_spin_single(unsigned g, const Partition& mu, unsigned r) {
    if (r == 0 || r % 2 != 0) throw std::invalid_argument("vev_spin_single: r must be even");
    if (!mu.is_odd()) throw std::invalid_argument("vev_spin_single: mu must be odd");
    const long numerator = 2L * g - 2 + mu.length() + mu.size();
    if (numerator < 0 || numerator % static_cast<long>(r) != 0) return std::nullopt;
    const unsigned b = static_cast<unsigned>(numerator / r);

    CliffordState state = alpha_negative_product_expansion(mu);
    for (unsigned i = 0; i < b; ++i) state = apply_cutjoin(r, state);
    state = apply_exp_alpha1(state);

    Rat prefactor = pow2(1 - static_cast<std::int64_t>(g)) / Rat(factorial(b));
    for (unsigned part : mu.parts()) prefactor /= part;
    prefactor /= pow_rat(Rat(r + 1), b);
    return prefactor * vev(state);
}

std::optional<Rat> vev_spin_double(unsigned g, const Partition& mu, const Partition& nu,
                                   unsigned r) {
    if (r == 0 || r % 2 != 0) throw std::invalid_argument("vev_spin_double: r must be even");
    if (!mu.is_odd() || !nu.is_odd())
        throw std::invalid_argument("vev_spin_double: profiles must be odd");
    if (mu.size() != nu.size()) throw std::invalid_argument("vev_spin_double: |mu| != |nu|");
    const long numerator = 2L * g - 2 + mu.length() + nu.length();
    if (numerator < 0 || numerator % static_cast<long>(r) != 0) return std::nullopt;
    const unsigned b = static_cast<unsigned>(numerator / r);

    CliffordState state = alpha_negative_product_expansion(nu);
    for (unsigned i = 0; i < b; ++i) state = apply_cutjoin(r, state);
    for (unsigned part : mu.parts()) state = apply_alpha(static_cast<int>(part), state);

    Rat prefactor = pow2(1 - static_cast<std::int64_t>(g)) / Rat(factorial(b));
    for (unsigned part : mu.parts()) prefactor /= part;
    for (unsigned part : nu.parts()) prefactor /= part;
    prefactor /= pow_rat(Rat(r + 1), b);
    return prefactor * vev(state);
}

std::vector<CliffordMonomial> basis_monomials(int max_energy) {
    std::vector<CliffordMonomial> out;
    for (int e = 0; e <= max_energy; ++e)
        for (const Partition& lambda : enumerate_partitions(static_cast<unsigned>(e),
                                                            PartitionClass::strict)) {
            std::vector<int> idx(lambda.parts().begin(), lambda.parts().end());
            out.emplace_back(idx);
            idx.push_back(0);
            out.emplace_back(std::move(idx));
        }
    return out;
}

bool commutator_check(int m, int n, int z_order, int state_bound) {
    if (z_order < 0 || state_bound < 0) throw std::invalid_argument("commutator_check: negative bound");
    const int series_order = 2 * z_order + 2;
    const QSeries vs = varsigma_series(series_order);

    // Scalar adjunct of the right side, present only when m + n = 0:
    // (1/2) varsigma(m x) S(x) at x = z+w and ((-1)^n/2) varsigma(n x) S(x)
    // at x = z-w, with S = qoppa/varsigma.
    QSeries t1 = QSeries::zero_to(series_order), t2 = t1;
    if (m + n == 0 && m != 0) {
        QSeries scalar = e0_scalar(series_order);
        t1 = make_rat(1, 2) * (vs.scaled_var(Rat(m)) * scalar);
        t2 = make_rat(1, 2) * (vs.scaled_var(Rat(n)) * scalar);
        if (odd_parity(n)) t2 = -t2;
    }

    for (const CliffordMonomial& mono : basis_monomials(state_bound)) {
        const CliffordState base = CliffordState::single(mono, 1);

        // Cache single-operator actions on the base monomial.
        std::map<int, CliffordState> em_base, en_base, esum_base;
        for (int j = 0; j <= z_order; ++j) {
            em_base[j] = apply_e_coeff(m, j, base);
            en_base[j] = apply_e_coeff(n, j, base);
        }
        for (int e = 0; e <= 2 * z_order; ++e)
            esum_base[e] = (m + n == 0) ? apply_e0_hat_coeff(e, base) : apply_e_coeff(m + n, e, base);

        for (int j = 0; j <= z_order; ++j)
            for (int i = 0; i <= z_order; ++i) {
                CliffordState lhs = apply_e_coeff(m, j, en_base[i]) - apply_e_coeff(n, i, em_base[j]);

                CliffordState rhs;
                for (int a = 0; a <= j; ++a)
                    for (int bb = 0; bb <= i; ++bb) {
                        const Rat& vc = vs.coeff(a + bb);
                        if (vc == 0) continue;
                        Int binom_ab = binomial(a + bb, bb);
                        int e = (j - a) + (i - bb);
                        Int binom_e = binomial(e, j - a);
                        // varsigma(mw - nz): z-power a from (-n z)^a, w-power bb from (m w)^bb.
                        Rat coeff1 = vc * Rat(binom_ab) * Rat(pow_int(Int(m), bb)) *
                                     Rat(pow_int(Int(-n), a)) * make_rat(1, 2) * Rat(binom_e);
                        if (coeff1 != 0) rhs += coeff1 * esum_base[e];
                        // varsigma(mw + nz) with (z - w)^e: extra (-1)^{i-bb}.
                        Rat coeff2 = vc * Rat(binom_ab) * Rat(pow_int(Int(m), bb)) *
                                     Rat(pow_int(Int(n), a)) * make_rat(1, 2) * Rat(binom_e);
                        if (odd_parity(n)) coeff2 = -coeff2;
                        if (odd_parity(i - bb)) coeff2 = -coeff2;
                        if (coeff2 != 0) rhs += coeff2 * esum_base[e];
                    }
                if (m + n == 0 && m != 0) {
                    // Scalar parts: [z^j w^i] T1(z+w) + T2(z-w).
                    Rat sc = Rat(binomial(j + i, j)) * t1.coeff(j + i);
                    Rat sc2 = Rat(binomial(j + i, j)) * t2.coeff(j + i);
                    if (odd_parity(i)) sc2 = -sc2;
                    rhs += (sc + sc2) * base;
                }
                if (!(lhs == rhs)) return false;
            }
    }
    return true;
}

}  // namespace spinh
