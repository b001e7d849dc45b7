#pragma once

// Partitions with the odd/strict refinements, their enumeration in
// reverse-lexicographic order, and the standard statistics (z_mu, |Aut|,
// parity, power sums).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "spinh/rational.hpp"

namespace spinh {

enum class PartitionClass { all, odd, strict };

// A partition: weakly decreasing positive parts.  The empty partition is a
// first-class value (the unique partition of 0).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<unsigned> parts);
    explicit Partition(std::vector<unsigned> parts);

    // (k, k, ..., k) with `count` copies; count = 0 gives the empty partition.
    static Partition rectangle(unsigned part, unsigned count);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned size() const;    // |mu|
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    unsigned multiplicity(unsigned part) const;

    bool is_odd() const;
    bool is_strict() const;
    bool is_in(PartitionClass cls) const;

    // Multiset union (concatenate and re-sort).
    Partition merged_with(const Partition& other) const;
    // True if this partition is a sub-multiset of `other`.
    bool is_submultiset_of(const Partition& other) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Reverse-lexicographic within a size; deterministic across sizes.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const;  // e.g. "(5,3,1)", "()" for empty

private:
    std::vector<unsigned> parts_;
};

// All partitions of d in the given class, each exactly once, largest parts
// first (reverse-lexicographic).  d = 0 yields the singleton {()}.
std::vector<Partition> enumerate_partitions(unsigned d, PartitionClass cls);

// All distinct sub-multisets of mu, ordered by (size, canonical form).
std::vector<Partition> sub_multisets(const Partition& mu);

// z_mu = prod_k m_k! k^{m_k}  (order of the centralizer of the class in S_d).
Int z_factor(const Partition& mu);

// |Aut(mu)| = prod_k m_k!.
Int aut_order(const Partition& mu);

// delta(lambda) = l(lambda) mod 2; defined for strict partitions only.
int parity_delta(const Partition& lambda);

// p_k(lambda) = sum_i lambda_i^k.
Int power_sum_eval(const Partition& lambda, unsigned k);

}  // namespace spinh
