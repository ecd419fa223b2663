#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tensobs/colored.hpp"

namespace tensobs {

/// One bijection per color between the canonically ordered colored sections:
/// perms[c-1][i] is the position in W|c of the black vertex matched to the
/// i-th white vertex of V|c.
struct SigmaTuple {
    std::vector<std::vector<uint32_t>> perms;

    friend bool operator==(const SigmaTuple&, const SigmaTuple&) = default;
    bool operator<(const SigmaTuple& other) const { return perms < other.perms; }
    std::string str() const;
};

struct ColoredEdge {
    uint32_t color;   // 1-based
    uint32_t white;   // white vertex id
    uint32_t black;   // black vertex id
    friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
    friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

struct GraphIssue {
    Errc code;
    std::string message;
};

/// A materialized edge-colored bipartite graph. Vertex ids are 0-based per
/// side, assigned consecutively with vertices grouped by type in canonical
/// type order (valence, then lexicographic colors). The sigma tuple starts
/// out as the identity.
class ColoredGraph {
public:
    static ColoredGraph materialize(const ContractionSpec& spec);

    const ContractionSpec& spec() const { return spec_; }
    uint32_t color_count() const { return spec_.d; }
    const std::vector<ColorType>& white_types() const { return white_; }
    const std::vector<ColorType>& black_types() const { return black_; }

    /// Ascending vertex ids of V|c (resp. W|c); 1 <= c <= d.
    const std::vector<uint32_t>& white_section(uint32_t c) const;
    const std::vector<uint32_t>& black_section(uint32_t c) const;

    /// Position of vertex id within its section, or npos when absent.
    static constexpr uint32_t npos = UINT32_MAX;
    uint32_t white_section_pos(uint32_t c, uint32_t id) const;
    uint32_t black_section_pos(uint32_t c, uint32_t id) const;

    const SigmaTuple& sigma() const { return sigma_; }
    SigmaTuple identity_sigma() const;

    /// Shape- and range-checked (throws E_BADSIGMA); bijectivity is left to
    /// validate() so corrupted tuples can be inspected.
    void set_sigma(SigmaTuple s);

    /// One edge per (c, v in V|c), sorted by (color, white id).
    std::vector<ColoredEdge> edges() const;

    /// Checks that every sigma_c is a bijection, that no vertex meets two
    /// edges of one color and that each vertex's incident colors equal its
    /// type.
    std::optional<GraphIssue> validate() const;

    /// Labels white ids 0..nw-1 then black ids nw..nw+nb-1; returns the
    /// number of connected components.
    uint32_t connected_components(std::vector<uint32_t>* labels = nullptr) const;

    std::string to_dot() const;

private:
    ContractionSpec spec_;
    std::vector<ColorType> white_, black_;
    std::vector<std::vector<uint32_t>> wsec_, bsec_;   // index c-1
    SigmaTuple sigma_;
};

/// Edge palette: 1=red, 2=green, 3=blue, 4=orange, 5=purple, 6=brown,
/// 7=cyan, 8=magenta, 9=gold; "c<N>" past that.
std::string color_name(uint32_t c);

} // namespace tensobs
