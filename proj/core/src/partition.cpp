#include "spinh/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spinh {

namespace {

void validate_and_sort(std::vector<unsigned>& parts) {
    for (unsigned p : parts)
        if (p == 0) throw std::invalid_argument("Partition: parts must be >= 1");
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

}  // namespace

Partition::Partition(std::initializer_list<unsigned> parts) : parts_(parts) {
    validate_and_sort(parts_);
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    validate_and_sort(parts_);
}

Partition Partition::rectangle(unsigned part, unsigned count) {
    if (count > 0 && part == 0) throw std::invalid_argument("Partition: parts must be >= 1");
    Partition out;
    out.parts_.assign(count, part);
    return out;
}

unsigned Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

unsigned Partition::multiplicity(unsigned part) const {
    return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::is_odd() const {
    return std::all_of(parts_.begin(), parts_.end(), [](unsigned p) { return p % 2 == 1; });
}

bool Partition::is_strict() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::is_in(PartitionClass cls) const {
    switch (cls) {
        case PartitionClass::all: return true;
        case PartitionClass::odd: return is_odd();
        case PartitionClass::strict: return is_strict();
    }
    return false;
}

Partition Partition::merged_with(const Partition& other) const {
    std::vector<unsigned> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(parts));
}

bool Partition::is_submultiset_of(const Partition& other) const {
    return std::includes(other.parts_.begin(), other.parts_.end(),
                         parts_.begin(), parts_.end(), std::greater<>());
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    out += ")";
    return out;
}

std::vector<Partition> enumerate_partitions(unsigned d, PartitionClass cls) {
    std::vector<Partition> out;
    std::vector<unsigned> current;
    // Largest-first recursive descent emits reverse-lexicographic order.
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
        if (remaining == 0) {
            out.emplace_back(Partition{});
            out.back() = Partition(current);
            return;
        }
        for (unsigned k = std::min(remaining, max_part); k >= 1; --k) {
            if (cls == PartitionClass::odd && k % 2 == 0) continue;
            unsigned next_max = (cls == PartitionClass::strict) ? k - 1 : k;
            current.push_back(k);
            rec(remaining - k, next_max);
            current.pop_back();
            if (k == 1) break;
        }
    };
    rec(d, d == 0 ? 1 : d);
    return out;
}

std::vector<Partition> sub_multisets(const Partition& mu) {
    // Distinct part values with multiplicities.
    std::vector<std::pair<unsigned, unsigned>> groups;
    for (unsigned p : mu.parts()) {
        if (!groups.empty() && groups.back().first == p)
            ++groups.back().second;
        else
            groups.emplace_back(p, 1u);
    }
    std::vector<Partition> out;
    std::vector<unsigned> current;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == groups.size()) {
            out.push_back(Partition(current));
            return;
        }
        auto [part, count] = groups[i];
        for (unsigned take = 0; take <= count; ++take) {
            current.insert(current.end(), take, part);
            rec(i + 1);
            current.resize(current.size() - take);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

Int z_factor(const Partition& mu) {
    Int z = 1;
    const auto& parts = mu.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        unsigned m = static_cast<unsigned>(j - i);
        z *= factorial(m) * pow_int(Int(parts[i]), m);
        i = j;
    }
    return z;
}

Int aut_order(const Partition& mu) {
    Int a = 1;
    const auto& parts = mu.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        a *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return a;
}

int parity_delta(const Partition& lambda) {
    if (!lambda.is_strict())
        throw std::invalid_argument("parity_delta: partition must be strict");
    return static_cast<int>(lambda.length() % 2);
}

Int power_sum_eval(const Partition& lambda, unsigned k) {
    Int total = 0;
    for (unsigned p : lambda.parts()) total += pow_int(Int(p), k);
    return total;
}

}  // namespace spinh
