#include "tensobs/partition.hpp"

#include <algorithm>

namespace tensobs {

Partition Partition::single(uint32_t part, uint32_t mult) {
    Partition p;
    if (part > 0 && mult > 0)
        p.entries_.push_back({part, mult});
    return p;
}

Partition Partition::from_parts(const std::vector<uint32_t>& parts) {
    Partition p;
    for (uint32_t v : parts)
        p += single(v);
    return p;
}

uint64_t Partition::weight() const {
    uint64_t w = 0;
    for (auto [part, mult] : entries_)
        w += static_cast<uint64_t>(part) * mult;
    return w;
}

uint32_t Partition::multiplicity(uint32_t part) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), part,
                               [](const Entry& e, uint32_t v) { return e.first < v; });
    if (it != entries_.end() && it->first == part)
        return it->second;
    return 0;
}

Partition& Partition::operator+=(const Partition& other) {
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin(), b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            merged.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    entries_ = std::move(merged);
    return *this;
}

std::string Partition::str() const {
    if (entries_.empty())
        return "0";
    std::string s;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        for (uint32_t k = 0; k < it->second; ++k) {
            if (!s.empty())
                s += '+';
            s += std::to_string(it->first);
        }
    }
    return s;
}

std::vector<Partition> partitions_of(uint32_t n) {
    std::vector<Partition> out;
    std::vector<uint32_t> parts;
    auto rec = [&](auto&& self, uint32_t remaining, uint32_t max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition::from_parts(parts));
            return;
        }
        for (uint32_t p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1u : n);
    return out;
}

Int sym_factor(const Partition& mu) {
    Int r = 1;
    for (auto [part, mult] : mu.entries())
        r *= ipow(Int(part), mult) * factorial(mult);
    return r;
}

} // namespace tensobs
