#include "tensobs/colored.hpp"

#include <bit>

namespace tensobs {

namespace {

uint64_t color_bit(uint32_t c) {
    if (c < 1 || c > ColorType::max_colors)
        throw SpecError(Errc::color_out_of_range,
                        "color " + std::to_string(c) + " outside 1.." +
                            std::to_string(ColorType::max_colors));
    return uint64_t(1) << (c - 1);
}

} // namespace

ColorType::ColorType(std::initializer_list<uint32_t> colors) {
    for (uint32_t c : colors)
        mask_ |= color_bit(c);
}

ColorType ColorType::from_colors(const std::vector<uint32_t>& colors) {
    ColorType t;
    for (uint32_t c : colors)
        t.mask_ |= color_bit(c);
    return t;
}

bool ColorType::contains(uint32_t c) const {
    if (c < 1 || c > max_colors)
        return false;
    return mask_ & (uint64_t(1) << (c - 1));
}

uint32_t ColorType::valence() const {
    return static_cast<uint32_t>(std::popcount(mask_));
}

uint32_t ColorType::max_color() const {
    if (mask_ == 0)
        return 0;
    return static_cast<uint32_t>(64 - std::countl_zero(mask_));
}

std::vector<uint32_t> ColorType::colors() const {
    std::vector<uint32_t> out;
    out.reserve(valence());
    for (uint64_t m = mask_; m; m &= m - 1)
        out.push_back(static_cast<uint32_t>(std::countr_zero(m)) + 1);
    return out;
}

bool ColorType::operator<(const ColorType& other) const {
    uint32_t va = valence(), vb = other.valence();
    if (va != vb)
        return va < vb;
    // Equal popcounts: ascending color lists compare lexicographically the
    // same way the bit-reversed masks compare numerically; the lists are
    // short, so compare them directly.
    return colors() < other.colors();
}

std::string ColorType::str() const {
    std::string s = "{";
    bool first = true;
    for (uint32_t c : colors()) {
        if (!first)
            s += ',';
        first = false;
        s += std::to_string(c);
    }
    s += '}';
    return s;
}

ColorType full_type(uint32_t d) {
    std::vector<uint32_t> cs(d);
    for (uint32_t c = 1; c <= d; ++c)
        cs[c - 1] = c;
    return ColorType::from_colors(cs);
}

ColoredVertexSet::ColoredVertexSet(
    uint32_t d, std::initializer_list<std::pair<ColorType, uint64_t>> counts)
    : d_(d) {
    for (const auto& [type, count] : counts)
        set_count(type, count);
}

void ColoredVertexSet::set_count(const ColorType& type, uint64_t count) {
    if (type.empty())
        throw SpecError(Errc::invalid_spec, "empty color type");
    if (type.max_color() > d_)
        throw SpecError(Errc::color_out_of_range,
                        "type " + type.str() + " uses a color above " + std::to_string(d_));
    if (count == 0)
        card_.erase(type);
    else
        card_[type] = count;
}

uint64_t ColoredVertexSet::count(const ColorType& type) const {
    auto it = card_.find(type);
    return it == card_.end() ? 0 : it->second;
}

uint64_t ColoredVertexSet::total_vertices() const {
    uint64_t t = 0;
    for (const auto& [type, count] : card_)
        t += count;
    return t;
}

uint64_t ColoredVertexSet::color_multiplicity(uint32_t c) const {
    if (c < 1 || c > d_)
        throw SpecError(Errc::color_out_of_range,
                        "color " + std::to_string(c) + " outside 1.." + std::to_string(d_));
    uint64_t m = 0;
    for (const auto& [type, count] : card_)
        if (type.contains(c))
            m += count;
    return m;
}

ColoredVertexSet::ChromaticInfo ColoredVertexSet::chromatic_index() const {
    ChromaticInfo info;
    for (const auto& [type, count] : card_)
        info.index = std::max(info.index, type.max_color());
    info.all_used = true;
    for (uint32_t c = 1; c <= info.index; ++c) {
        bool used = false;
        for (const auto& [type, count] : card_)
            if (type.contains(c)) {
                used = true;
                break;
            }
        if (!used) {
            info.all_used = false;
            if (!info.first_unused)
                info.first_unused = c;
        }
    }
    return info;
}

std::string CompatibilityIssue::message() const {
    if (code == Errc::incompatible)
        return "color " + std::to_string(color) + " has multiplicity " +
               std::to_string(left) + " on the white side but " + std::to_string(right) +
               " on the black side";
    return "color " + std::to_string(color) + " is unused; the chromatic index condition fails";
}

std::optional<CompatibilityIssue> check_compatible(const ColoredVertexSet& lambda,
                                                   const ColoredVertexSet& gamma,
                                                   uint32_t d) {
    for (uint32_t c = 1; c <= d; ++c) {
        uint64_t ml = 0, mr = 0;
        for (const auto& [type, count] : lambda.cardinality())
            if (type.contains(c))
                ml += count;
        for (const auto& [type, count] : gamma.cardinality())
            if (type.contains(c))
                mr += count;
        if (ml != mr)
            return CompatibilityIssue{Errc::incompatible, c, ml, mr};
        if (ml == 0)
            return CompatibilityIssue{Errc::chromatic_gap, c, 0, 0};
    }
    return std::nullopt;
}

std::optional<CompatibilityIssue> check_compatible(const ContractionSpec& spec) {
    // Scan past the declared bound too, so types constructed with a larger
    // bound on one side cannot slip through unchecked.
    uint32_t d = std::max({spec.d, spec.lambda.chromatic_index().index,
                           spec.gamma.chromatic_index().index});
    return check_compatible(spec.lambda, spec.gamma, d);
}

void require_compatible(const ContractionSpec& spec) {
    if (spec.lambda.total_vertices() == 0 || spec.gamma.total_vertices() == 0)
        throw SpecError(Errc::invalid_spec, "both sides need at least one vertex");
    uint32_t used = std::max(spec.lambda.chromatic_index().index,
                             spec.gamma.chromatic_index().index);
    if (used > spec.d)
        throw SpecError(Errc::color_out_of_range,
                        "a vertex type uses color " + std::to_string(used) +
                            " above the declared index " + std::to_string(spec.d));
    if (auto issue = check_compatible(spec))
        throw SpecError(issue->code, issue->message());
}

} // namespace tensobs
