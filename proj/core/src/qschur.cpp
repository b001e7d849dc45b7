#include "spinh/qschur.hpp"

#include <cassert>
#include <tuple>

#include "spinh/series.hpp"

// Internal memo tables are function-local statics; this translation unit is
// not thread-safe (all public entry points are expected to run on one thread).

namespace spinh {

GammaElement GammaElement::one() {
    GammaElement g;
    g.terms_[Partition{}] = 1;
    return g;
}

GammaElement GammaElement::power_sum(unsigned k) {
    return monomial(Partition{k}, Rat(1));
}

GammaElement GammaElement::monomial(const Partition& mu, const Rat& c) {
    if (!mu.is_odd()) throw std::invalid_argument("GammaElement: p_mu needs odd mu");
    GammaElement g;
    if (c != 0) g.terms_[mu] = c;
    return g;
}

Rat GammaElement::coefficient(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rat(0) : it->second;
}

void GammaElement::set_coefficient(const Partition& mu, const Rat& c) {
    if (!mu.is_odd()) throw std::invalid_argument("GammaElement: p_mu needs odd mu");
    if (c == 0)
        terms_.erase(mu);
    else
        terms_[mu] = c;
}

GammaElement& GammaElement::operator+=(const GammaElement& other) {
    for (const auto& [mu, c] : other.terms_) {
        Rat& dst = terms_[mu];
        dst += c;
        if (dst == 0) terms_.erase(mu);
    }
    return *this;
}

GammaElement& GammaElement::operator-=(const GammaElement& other) {
    for (const auto& [mu, c] : other.terms_) {
        Rat& dst = terms_[mu];
        dst -= c;
        if (dst == 0) terms_.erase(mu);
    }
    return *this;
}

GammaElement operator*(const GammaElement& a, const GammaElement& b) {
    GammaElement r;
    for (const auto& [mu, cu] : a.terms_)
        for (const auto& [nu, cv] : b.terms_) {
            Partition merged = mu.merged_with(nu);
            Rat& dst = r.terms_[merged];
            dst += cu * cv;
            if (dst == 0) r.terms_.erase(merged);
        }
    return r;
}

GammaElement operator*(const Rat& c, const GammaElement& a) {
    GammaElement r;
    if (c == 0) return r;
    for (const auto& [mu, cu] : a.terms_) r.terms_[mu] = c * cu;
    return r;
}

GammaElement GammaElement::half_substitution() const {
    GammaElement r;
    for (const auto& [mu, c] : terms_) r.terms_[mu] = c / Rat(pow2(mu.length()));
    return r;
}

std::string GammaElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mu, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += to_pq_string(c);
        for (unsigned part : mu.parts()) s += "*p" + std::to_string(part);
    }
    return s;
}

Rat scalar_product(const GammaElement& a, const GammaElement& b) {
    // <p_mu, p_nu> = 2^{-l(mu)} z_mu delta_{mu,nu}
    Rat total = 0;
    for (const auto& [mu, ca] : a.terms()) {
        Rat cb = b.coefficient(mu);
        if (cb != 0) total += ca * cb * Rat(z_factor(mu)) / Rat(pow2(mu.length()));
    }
    return total;
}

// --- two-row Q-functions as Gamma elements ----------------------------------

namespace {

// Q_n = sum over odd partitions sigma of n of 2^{l(sigma)}/z_sigma p_sigma
// (the coefficient of z^n in exp(2 sum_k p_k z^k / k), k odd).  Q_0 = 1.
const GammaElement& q_row(unsigned n) {
    static std::map<unsigned, GammaElement> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    GammaElement g;
    if (n == 0) {
        g = GammaElement::one();
    } else {
        for (const Partition& sigma : enumerate_partitions(n, PartitionClass::odd))
            g.set_coefficient(sigma, Rat(pow2(sigma.length())) / Rat(z_factor(sigma)));
    }
    return memo.emplace(n, std::move(g)).first->second;
}

}  // namespace

GammaElement q_pair(unsigned n, unsigned m) {
    if (m == 0) return q_row(n);  // includes the padded-Pfaffian entry Q_{n,0} = Q_n
    if (n == m) return GammaElement::zero();
    if (n < m) return Rat(-1) * q_pair(m, n);
    static std::map<std::pair<unsigned, unsigned>, GammaElement> memo;
    auto key = std::make_pair(n, m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    GammaElement acc = q_row(n) * q_row(m);
    for (unsigned i = 1; i <= m; ++i) {
        Rat c(i % 2 == 1 ? -2 : 2);
        acc += c * (q_row(n + i) * q_row(m - i));
    }
    return memo.emplace(std::move(key), std::move(acc)).first->second;
}

QPairTable::QPairTable(unsigned max_degree) : max_degree_(max_degree) {
    for (unsigned n = 0; n <= max_degree; ++n)
        for (unsigned m = 0; n + m <= max_degree; ++m)
            entries_.emplace(std::make_pair(n, m), spinh::q_pair(n, m));
}

const GammaElement& QPairTable::q_pair(unsigned n, unsigned m) const {
    auto it = entries_.find({n, m});
    if (it == entries_.end()) throw std::out_of_range("QPairTable: degree beyond table");
    return it->second;
}

// --- Schur Q-functions via Pfaffian expansion --------------------------------

namespace {

// Pf(Q_{parts_j, parts_k}) by first-row expansion; parts strictly decreasing,
// even length, possibly ending in a padding 0.
const GammaElement& pfaffian_q(const std::vector<unsigned>& parts) {
    static std::map<std::vector<unsigned>, GammaElement> memo;
    auto it = memo.find(parts);
    if (it != memo.end()) return it->second;
    GammaElement acc;
    if (parts.empty()) {
        acc = GammaElement::one();
    } else {
        for (size_t j = 1; j < parts.size(); ++j) {
            std::vector<unsigned> rest;
            rest.reserve(parts.size() - 2);
            for (size_t i = 1; i < parts.size(); ++i)
                if (i != j) rest.push_back(parts[i]);
            GammaElement term = q_pair(parts[0], parts[j]) * pfaffian_q(rest);
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
    }
    return memo.emplace(parts, std::move(acc)).first->second;
}

std::vector<unsigned> padded_parts(const Partition& lambda) {
    std::vector<unsigned> parts = lambda.parts();
    if (parts.size() % 2 == 1) parts.push_back(0);
    return parts;
}

}  // namespace

GammaElement schur_q(const Partition& lambda) {
    if (!lambda.is_strict()) throw std::invalid_argument("schur_q: lambda must be strict");
    return pfaffian_q(padded_parts(lambda));
}

// --- character values by direct coefficient extraction -----------------------
//
// Same Pfaffian recursion, but carried out on single power-sum coefficients,
// distributing the target monomial over the factors as multiset splits.  This
// never materializes whole Gamma elements and stays fast through d ~ 27.

namespace {

// All ordered splits sigma = s1 ++ s2 (as multisets).
const std::vector<std::pair<Partition, Partition>>& splits_of(const Partition& sigma) {
    static std::map<Partition, std::vector<std::pair<Partition, Partition>>> memo;
    auto it = memo.find(sigma);
    if (it != memo.end()) return it->second;

    std::vector<std::pair<unsigned, unsigned>> groups;  // (part, count)
    for (unsigned p : sigma.parts()) {
        if (!groups.empty() && groups.back().first == p)
            ++groups.back().second;
        else
            groups.emplace_back(p, 1);
    }
    std::vector<std::pair<Partition, Partition>> out;
    std::vector<unsigned> s1, s2;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == groups.size()) {
            out.emplace_back(Partition(s1), Partition(s2));
            return;
        }
        auto [p, c] = groups[i];
        for (unsigned take = 0; take <= c; ++take) {
            s1.insert(s1.end(), take, p);
            s2.insert(s2.end(), c - take, p);
            self(self, i + 1);
            s1.resize(s1.size() - take);
            s2.resize(s2.size() - (c - take));
        }
    };
    rec(rec, 0);
    return memo.emplace(sigma, std::move(out)).first->second;
}

// [p_sigma] Q_n
Rat q1_coeff(unsigned n, const Partition& sigma) {
    if (sigma.size() != n) return 0;
    if (!sigma.is_odd()) return 0;
    return Rat(pow2(sigma.length())) / Rat(z_factor(sigma));
}

// [p_sigma] Q_{n,m} for n > m >= 0 (matrix-entry convention Q_{n,0} = Q_n)
Rat q2_coeff(unsigned n, unsigned m, const Partition& sigma) {
    if (m == 0) return q1_coeff(n, sigma);
    if (sigma.size() != n + m) return 0;
    static std::map<std::tuple<unsigned, unsigned, Partition>, Rat> memo;
    auto key = std::make_tuple(n, m, sigma);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rat total = 0;
    for (unsigned i = 0; i <= m; ++i) {
        Rat c = (i == 0) ? Rat(1) : Rat(i % 2 == 1 ? -2 : 2);
        unsigned a = n + i, b = m - i;
        for (const auto& [s1, s2] : splits_of(sigma)) {
            if (s1.size() != a) continue;
            Rat c1 = q1_coeff(a, s1);
            if (c1 == 0) continue;
            Rat c2 = q1_coeff(b, s2);
            if (c2 == 0) continue;
            total += c * c1 * c2;
        }
    }
    return memo.emplace(std::move(key), std::move(total)).first->second;
}

// [p_sigma] Pf(Q_{parts_j, parts_k})
Rat pf_coeff(const std::vector<unsigned>& parts, const Partition& sigma) {
    if (parts.empty()) return sigma.empty() ? 1 : 0;
    static std::map<std::pair<std::vector<unsigned>, Partition>, Rat> memo;
    auto key = std::make_pair(parts, sigma);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rat total = 0;
    for (size_t j = 1; j < parts.size(); ++j) {
        int sgn = (j % 2 == 1) ? 1 : -1;
        std::vector<unsigned> rest;
        rest.reserve(parts.size() - 2);
        for (size_t i = 1; i < parts.size(); ++i)
            if (i != j) rest.push_back(parts[i]);
        unsigned need = parts[0] + parts[j];
        for (const auto& [s1, s2] : splits_of(sigma)) {
            if (s1.size() != need) continue;
            Rat c1 = q2_coeff(parts[0], parts[j], s1);
            if (c1 == 0) continue;
            Rat c2 = pf_coeff(rest, s2);
            if (c2 == 0) continue;
            total += Rat(sgn) * c1 * c2;
        }
    }
    return memo.emplace(std::move(key), std::move(total)).first->second;
}

}  // namespace

Int character(const Partition& lambda, const Partition& mu) {
    if (!lambda.is_strict()) throw std::invalid_argument("character: lambda must be strict");
    if (lambda.size() != mu.size()) return 0;
    if (!mu.is_odd()) return 0;
    Rat val = pf_coeff(padded_parts(lambda), mu) * Rat(z_factor(mu)) /
              Rat(pow2(lambda.length() / 2));
    if (val.get_den() != 1)
        throw std::logic_error("character: non-integral value for lambda=" +
                               lambda.to_string() + ", mu=" + mu.to_string());
    return val.get_num();
}

Int dim_v(const Partition& lambda) {
    if (!lambda.is_strict()) throw std::invalid_argument("dim_v: lambda must be strict");
    unsigned d = lambda.size();
    const auto& l = lambda.parts();
    Rat val(factorial(d));
    for (unsigned x : l) val /= Rat(factorial(x));
    for (size_t i = 0; i < l.size(); ++i)
        for (size_t j = i + 1; j < l.size(); ++j)
            val *= make_rat(Int(l[i]) - Int(l[j]), Int(l[i]) + Int(l[j]));
    val *= Rat(pow2(d - lambda.length() / 2));
    if (val.get_den() != 1)
        throw std::logic_error("dim_v: non-integral value for " + lambda.to_string());
    return val.get_num();
}

Rat central_character(const Partition& lambda, const Partition& mu) {
    if (!lambda.is_strict())
        throw std::invalid_argument("central_character: lambda must be strict");
    if (mu.size() > lambda.size()) return 0;
    unsigned k = lambda.size() - mu.size();
    Partition full = mu.merged_with(Partition::rectangle(1, k));
    unsigned d = lambda.size();
    Int zeta = character(lambda, full);
    if (zeta == 0) return 0;
    Rat f = Rat(zeta) * Rat(pow2(d) * factorial(d)) /
            (Rat(pow2(full.length())) * Rat(z_factor(full)) * Rat(dim_v(lambda)));
    return Rat(binomial(mu.multiplicity(1) + k, k)) * f;
}

// --- completed cut-and-join on Gamma -----------------------------------------

namespace {

// r! [z^{r+1}] of coth(z/2) 2^{n-2} prod_i varsigma(k_i z), for the multiset
// of odd nonzero integers ks (summing to zero).
Rat cutjoin_weight(unsigned r, const std::vector<int>& ks) {
    static std::map<std::pair<unsigned, std::vector<int>>, Rat> memo;
    auto key = std::make_pair(r, ks);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int t = static_cast<int>(r) + 2;
    QSeries prod = coth_half_series(t);
    const QSeries vs = varsigma_series(t);
    for (int k : ks) prod = prod * vs.scaled_var(Rat(k));
    Rat w = Rat(pow2(static_cast<unsigned>(ks.size() - 2))) * Rat(factorial(r)) *
            prod.coeff(static_cast<int>(r) + 1);
    return memo.emplace(std::move(key), std::move(w)).first->second;
}

// Nondecreasing multisets of n odd nonzero integers in [-bound, bound]
// summing to zero.
void zero_sum_multisets(unsigned n, int bound, int min_val, int partial_sum,
                        std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (cur.size() == n) {
        if (partial_sum == 0) out.push_back(cur);
        return;
    }
    int remaining = static_cast<int>(n - cur.size());
    for (int k = min_val; k <= bound; ++k) {
        if (k == 0 || (k % 2) == 0) continue;
        // Even taking `bound` for every remaining slot cannot reach 0:
        if (partial_sum + k + (remaining - 1) * bound < 0) continue;
        if (partial_sum + k > 0 && k > 0) break;  // sums only grow from here
        cur.push_back(k);
        zero_sum_multisets(n, bound, k, partial_sum + k, cur, out);
        cur.pop_back();
    }
}

// :prod c_{k_i}: applied to the monomial p_mu, with c_k = (1/2) d/dp_k for
// k > 0 and c_k = p_{|k|}/k for k < 0 — derivatives act first, multiplications
// after.  Returns (nu, factor) or factor 0.
std::pair<Partition, Rat> apply_normal_ordered(const std::vector<int>& ks, const Partition& mu) {
    std::map<unsigned, unsigned> mult;  // current multiplicities of p_k in the monomial
    for (unsigned p : mu.parts()) ++mult[p];
    Rat factor = 1;
    for (int k : ks) {
        if (k <= 0) continue;  // c_k = (1/2) d/dp_k
        unsigned uk = static_cast<unsigned>(k);
        auto it = mult.find(uk);
        if (it == mult.end() || it->second == 0) return {Partition{}, Rat(0)};
        factor *= make_rat(Int(it->second), 2);
        if (--it->second == 0) mult.erase(it);
    }
    for (int k : ks) {
        if (k >= 0) continue;  // c_{-m} = -p_m/m
        unsigned m = static_cast<unsigned>(-k);
        ++mult[m];
        factor *= make_rat(-1, Int(m));
    }
    std::vector<unsigned> parts;
    for (const auto& [p, c] : mult) parts.insert(parts.end(), c, p);
    return {Partition(parts), factor};
}

}  // namespace

GammaElement cutjoin_on_gamma(unsigned r, const GammaElement& f) {
    GammaElement result;
    for (const auto& [mu, c] : f.terms()) {
        int d = static_cast<int>(mu.size());
        if (d == 0) continue;
        for (unsigned n = 2; n <= r + 2; n += 2) {
            std::vector<std::vector<int>> tuples;
            std::vector<int> cur;
            zero_sum_multisets(n, d, -d, 0, cur, tuples);
            for (const auto& ks : tuples) {
                auto [nu, factor] = apply_normal_ordered(ks, mu);
                if (factor == 0) continue;
                // ordered-tuple count / n! = 1 / prod (multiplicities!)
                Rat sym = 1;
                size_t i = 0;
                while (i < ks.size()) {
                    size_t j = i;
                    while (j < ks.size() && ks[j] == ks[i]) ++j;
                    sym /= Rat(factorial(static_cast<unsigned>(j - i)));
                    i = j;
                }
                Rat contrib = c * sym * cutjoin_weight(r, ks) * factor;
                if (contrib == 0) continue;
                GammaElement term = GammaElement::monomial(nu, contrib);
                result += term;
            }
        }
    }
    return result;
}

}  // namespace spinh
