#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tensobs/exact.hpp"

namespace tensobs {

/// Integer partition stored as (part, multiplicity) entries with parts
/// ascending and every multiplicity >= 1. The default-constructed value is
/// the unique partition of 0.
class Partition {
public:
    using Entry = std::pair<uint32_t, uint32_t>;

    Partition() = default;
    static Partition single(uint32_t part, uint32_t mult = 1);
    static Partition from_parts(const std::vector<uint32_t>& parts);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    uint64_t weight() const;
    uint32_t multiplicity(uint32_t part) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    Partition& operator+=(const Partition& other);   // multiplicity-wise sum
    friend Partition operator+(Partition a, const Partition& b) {
        a += b;
        return a;
    }

    std::string str() const;   // "3+1+1"; "0" for the empty partition

private:
    std::vector<Entry> entries_;
};

/// Every partition of n exactly once, part lists in descending-lexicographic
/// order: 4 -> 4, 3+1, 2+2, 2+1+1, 1+1+1+1. partitions_of(0) yields the
/// empty partition.
std::vector<Partition> partitions_of(uint32_t n);

/// Centralizer order of the conjugacy class labeled by mu:
/// prod_i i^{m_i} * m_i!. sym_factor of the empty partition is 1.
Int sym_factor(const Partition& mu);

} // namespace tensobs
