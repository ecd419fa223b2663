#pragma once

#include <cstdint>
#include <vector>

#include "tensobs/exact.hpp"
#include "tensobs/graph.hpp"

namespace tensobs {

inline constexpr uint64_t default_sigma_limit = 1'000'000;
inline constexpr uint64_t default_group_limit = 1'000'000;
inline constexpr uint64_t default_burnside_work_limit = 2'000'000'000;

/// Vertex permutation of one side that maps each type class to itself.
struct GroupElement {
    std::vector<uint32_t> perm;   // vertex id -> vertex id
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// prod over type classes of n(A)!.
Int symmetry_group_order(const ColoredVertexSet& side);

/// All elements of the direct product of the per-class symmetric groups,
/// ordered lexicographically by permutation array. vertex_types must be the
/// materialized (canonically grouped) type list of one side. Throws
/// E_TOOLARGE past the limit.
std::vector<GroupElement> enumerate_symmetry_group(const std::vector<ColorType>& vertex_types,
                                                   uint64_t limit = default_group_limit);

/// eta . sigma . pi: per color, apply pi's section restriction, then
/// sigma_c, then eta's. pi permutes the white side of g, eta the black side.
SigmaTuple act(const GroupElement& pi, const GroupElement& eta, const SigmaTuple& sigma,
               const ColoredGraph& g);

/// |S| = prod_c m_c!.
Int sigma_space_size(const ContractionSpec& spec);

struct OrbitCatalog {
    Int orbit_count = 0;
    std::vector<SigmaTuple> representatives;   // lexicographic minimum per orbit, ascending
    std::vector<uint64_t> orbit_sizes;         // aligned with representatives
    uint64_t sigma_space = 0;
    uint64_t group_order = 0;                  // |H(Lambda)| * |H(Gamma)|
};

/// Partitions the whole sigma-space into orbits with union-find over the
/// action graph of the per-class transposition generators. Throws
/// E_TOOLARGE when |S| exceeds sigma_limit.
OrbitCatalog count_orbits_bruteforce(const ContractionSpec& spec,
                                     uint64_t sigma_limit = default_sigma_limit);

/// Average number of fixed sigma-tuples over all group element pairs; the
/// division must come out exact. Fixed points are counted by scanning each
/// color's section bijections directly, independently of count_multi.
Int count_orbits_burnside(const ContractionSpec& spec,
                          uint64_t sigma_limit = default_sigma_limit,
                          uint64_t group_limit = default_group_limit,
                          uint64_t work_limit = default_burnside_work_limit);

struct AnnotatedGraph {
    ColoredGraph graph;
    uint32_t components = 0;
    // No connected component mixes a valence-d vertex with a lower-valence
    // one (vacuously true when one of the kinds is absent).
    bool full_order_sector_detached = false;
    // Every valence-1 vertex is adjacent to a valence-d vertex (vacuously
    // true without leaves).
    bool leaves_on_full_order = false;
};

/// One validated graph per representative, annotated with its component
/// decomposition.
std::vector<AnnotatedGraph> catalog_to_graphs(const OrbitCatalog& catalog,
                                              const ContractionSpec& spec);

} // namespace tensobs
