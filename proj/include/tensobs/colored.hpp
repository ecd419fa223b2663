#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tensobs/errors.hpp"

namespace tensobs {

/// Nonempty subset of {1..d}: the colors carried by a vertex. Its size is
/// the vertex valence. Supports up to 64 colors.
class ColorType {
public:
    static constexpr uint32_t max_colors = 64;

    ColorType() = default;   // empty; not a valid vertex type by itself
    ColorType(std::initializer_list<uint32_t> colors);
    static ColorType from_colors(const std::vector<uint32_t>& colors);

    bool empty() const { return mask_ == 0; }
    bool contains(uint32_t c) const;
    uint32_t valence() const;
    uint32_t max_color() const;                 // 0 when empty
    std::vector<uint32_t> colors() const;       // ascending

    friend bool operator==(const ColorType&, const ColorType&) = default;

    // Canonical order: valence first, then lexicographic ascending color
    // list. Fixes iteration order everywhere a set of types is traversed.
    bool operator<(const ColorType& other) const;

    std::string str() const;   // "{1,3}"

private:
    uint64_t mask_ = 0;
};

/// {1..d}
ColorType full_type(uint32_t d);

/// A colored set of vertices reduced to its cardinality function:
/// color type -> number of vertices of that type. Zero counts are absent.
class ColoredVertexSet {
public:
    ColoredVertexSet() = default;
    explicit ColoredVertexSet(uint32_t d) : d_(d) {}
    ColoredVertexSet(uint32_t d,
                     std::initializer_list<std::pair<ColorType, uint64_t>> counts);

    uint32_t color_bound() const { return d_; }

    // Throws E_COLOR when the type uses a color outside 1..d.
    void set_count(const ColorType& type, uint64_t count);
    uint64_t count(const ColorType& type) const;
    const std::map<ColorType, uint64_t>& cardinality() const { return card_; }
    uint64_t total_vertices() const;

    /// |{v : c in type(v)}|. Throws E_COLOR unless 1 <= c <= d.
    uint64_t color_multiplicity(uint32_t c) const;

    struct ChromaticInfo {
        uint32_t index = 0;                   // maximum color in any used type
        bool all_used = false;                // every color 1..index has positive multiplicity
        std::optional<uint32_t> first_unused;
    };
    ChromaticInfo chromatic_index() const;

private:
    uint32_t d_ = 0;
    std::map<ColorType, uint64_t> card_;
};

/// The input unit for all counting: a chromatic index d together with a
/// compatible pair of colored vertex sets. lambda is the white side
/// (tensors T), gamma the black side (tensors entering conjugated).
struct ContractionSpec {
    uint32_t d = 0;
    ColoredVertexSet lambda;
    ColoredVertexSet gamma;
};

struct CompatibilityIssue {
    Errc code = Errc::incompatible;   // incompatible or chromatic_gap
    uint32_t color = 0;
    uint64_t left = 0;
    uint64_t right = 0;
    std::string message() const;
};

/// Empty result iff every color 1..d has equal positive multiplicity on both
/// sides. Reports the first offending color otherwise.
std::optional<CompatibilityIssue> check_compatible(const ColoredVertexSet& lambda,
                                                   const ColoredVertexSet& gamma,
                                                   uint32_t d);
std::optional<CompatibilityIssue> check_compatible(const ContractionSpec& spec);

/// Throws SpecError (E_INCOMPATIBLE / E_CHROMATIC) instead of reporting.
void require_compatible(const ContractionSpec& spec);

} // namespace tensobs
