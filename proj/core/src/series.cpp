#include "spinh/series.hpp"

#include <numeric>

namespace spinh {

QSeries varsigma_series(int trusted) {
    // 2 sinh(z/2): coefficient of z^j is 1/(2^{j-1} j!) for odd j.
    std::vector<Rat> c(trusted >= 0 ? static_cast<size_t>(trusted) + 1 : 0);
    for (int j = 1; j <= trusted; j += 2)
        c[static_cast<size_t>(j)] = Rat(1) / Rat(pow2(static_cast<unsigned>(j - 1)) *
                                                 factorial(static_cast<unsigned>(j)));
    return QSeries(0, std::move(c));
}

QSeries qoppa_series(int trusted) {
    // cosh(z/2)/2: coefficient of z^j is 1/(2^{j+1} j!) for even j.
    std::vector<Rat> c(trusted >= 0 ? static_cast<size_t>(trusted) + 1 : 0);
    for (int j = 0; j <= trusted; j += 2)
        c[static_cast<size_t>(j)] = Rat(1) / Rat(pow2(static_cast<unsigned>(j + 1)) *
                                                 factorial(static_cast<unsigned>(j)));
    return QSeries(0, std::move(c));
}

QSeries ssh_series(int trusted) { return varsigma_series(trusted + 1).shifted(-1); }

QSeries ksh_series(int trusted) { return qoppa_series(trusted + 1).shifted(-1); }

QSeries coth_half_series(int trusted) {
    return Rat(4) * (qoppa_series(trusted + 2) * varsigma_series(trusted + 2).inverse());
}

// --- MultiSeries ------------------------------------------------------------

namespace {

// Advance a mixed-radix exponent vector; returns false after the last one.
bool next_expo(std::vector<unsigned>& e, const std::vector<unsigned>& caps) {
    for (size_t i = e.size(); i-- > 0;) {
        if (e[i] < caps[i]) {
            ++e[i];
            std::fill(e.begin() + static_cast<long>(i) + 1, e.end(), 0u);
            return true;
        }
    }
    return false;
}

}  // namespace

MultiSeries::MultiSeries(std::vector<unsigned> caps) : caps_(std::move(caps)) {
    strides_.assign(caps_.size(), 1);
    size_t total = 1;
    for (size_t i = caps_.size(); i-- > 0;) {
        strides_[i] = total;
        total *= caps_[i] + 1;
    }
    c_.assign(total, Rat(0));
}

MultiSeries MultiSeries::one(std::vector<unsigned> caps) {
    MultiSeries r(std::move(caps));
    r.c_[0] = 1;
    return r;
}

size_t MultiSeries::index_of(const std::vector<unsigned>& expo) const {
    if (expo.size() != caps_.size()) throw std::invalid_argument("MultiSeries: arity mismatch");
    size_t idx = 0;
    for (size_t i = 0; i < expo.size(); ++i) {
        if (expo[i] > caps_[i])
            throw std::out_of_range("MultiSeries: exponent beyond cap (truncated away)");
        idx += expo[i] * strides_[i];
    }
    return idx;
}

const Rat& MultiSeries::coeff(const std::vector<unsigned>& expo) const {
    return c_[index_of(expo)];
}

void MultiSeries::add_coeff(const std::vector<unsigned>& expo, const Rat& c) {
    c_[index_of(expo)] += c;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& other) {
    if (caps_ != other.caps_) throw std::invalid_argument("MultiSeries: cap mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& other) {
    if (caps_ != other.caps_) throw std::invalid_argument("MultiSeries: cap mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
    return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    if (a.caps_ != b.caps_) throw std::invalid_argument("MultiSeries: cap mismatch");
    MultiSeries r(a.caps_);
    const size_t n = a.caps_.size();
    std::vector<unsigned> ea(n, 0);
    size_t ia = 0;
    do {
        if (a.c_[ia] != 0) {
            std::vector<unsigned> eb(n, 0);
            size_t ib = 0;
            do {
                if (b.c_[ib] != 0) {
                    bool fits = true;
                    size_t ir = 0;
                    for (size_t i = 0; i < n; ++i) {
                        unsigned e = ea[i] + eb[i];
                        if (e > a.caps_[i]) {
                            fits = false;
                            break;
                        }
                        ir += e * r.strides_[i];
                    }
                    if (fits) r.c_[ir] += a.c_[ia] * b.c_[ib];
                }
                ++ib;
            } while (next_expo(eb, b.caps_));
        }
        ++ia;
    } while (next_expo(ea, a.caps_));
    return r;
}

MultiSeries operator*(const Rat& s, MultiSeries a) {
    for (auto& c : a.c_) c *= s;
    return a;
}

bool MultiSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

MultiSeries MultiSeries::compose_linear(const QSeries& f, const std::vector<Int>& a,
                                        const std::vector<unsigned>& caps) {
    if (a.size() != caps.size()) throw std::invalid_argument("compose_linear: arity mismatch");
    if (f.valuation_bound() < 0)
        throw std::domain_error("compose_linear: outer series has negative valuation");
    unsigned total = std::accumulate(caps.begin(), caps.end(), 0u);
    MultiSeries lin(caps);
    for (size_t i = 0; i < a.size(); ++i) {
        if (caps[i] == 0) continue;
        std::vector<unsigned> e(caps.size(), 0);
        e[i] = 1;
        lin.add_coeff(e, Rat(a[i]));
    }
    MultiSeries acc(caps);
    for (int k = static_cast<int>(total); k >= 0; --k) {
        acc = acc * lin;
        acc.c_[0] += f.coeff(k);
    }
    return acc;
}

MultiSeries MultiSeries::log() const {
    if (c_[0] != 1) throw std::domain_error("MultiSeries::log needs constant term 1");
    MultiSeries u = *this;
    u.c_[0] = 0;
    unsigned total = std::accumulate(caps_.begin(), caps_.end(), 0u);
    MultiSeries acc(caps_), p = MultiSeries::one(caps_);
    for (unsigned k = 1; k <= total; ++k) {
        p = p * u;
        acc += Rat((k % 2 == 1) ? 1 : -1, k) * p;
    }
    return acc;
}

}  // namespace spinh
