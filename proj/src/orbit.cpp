#include "tensobs/orbit.hpp"

#include <algorithm>
#include <numeric>

namespace tensobs {

namespace {

// Contiguous id ranges of equal type on a materialized side.
std::vector<std::pair<uint32_t, uint32_t>> type_classes(const std::vector<ColorType>& types) {
    std::vector<std::pair<uint32_t, uint32_t>> classes;   // [begin, end)
    uint32_t begin = 0;
    for (uint32_t i = 1; i <= types.size(); ++i) {
        if (i == types.size() || !(types[i] == types[begin])) {
            classes.push_back({begin, i});
            begin = i;
        }
    }
    return classes;
}

// Section-position permutations induced by a side permutation, one per color.
std::vector<std::vector<uint32_t>> section_action(const GroupElement& g,
                                                  const ColoredGraph& graph,
                                                  bool white_side) {
    const uint32_t d = graph.color_count();
    std::vector<std::vector<uint32_t>> out(d);
    for (uint32_t c = 1; c <= d; ++c) {
        const auto& sec = white_side ? graph.white_section(c) : graph.black_section(c);
        out[c - 1].resize(sec.size());
        for (uint32_t i = 0; i < sec.size(); ++i) {
            uint32_t image = g.perm[sec[i]];
            uint32_t pos = white_side ? graph.white_section_pos(c, image)
                                      : graph.black_section_pos(c, image);
            if (pos == ColoredGraph::npos)
                throw SpecError(Errc::bad_sigma, "group element leaves a section");
            out[c - 1][i] = pos;
        }
    }
    return out;
}

struct SigmaIndexer {
    std::vector<uint32_t> m;         // section sizes
    std::vector<uint64_t> fact;      // m_c!
    std::vector<uint64_t> stride;    // prod of fact over later colors
    uint64_t total = 1;

    explicit SigmaIndexer(const ColoredGraph& g) {
        const uint32_t d = g.color_count();
        m.resize(d);
        fact.resize(d);
        stride.resize(d);
        for (uint32_t c = 1; c <= d; ++c) {
            m[c - 1] = static_cast<uint32_t>(g.white_section(c).size());
            uint64_t f = 1;
            for (uint32_t k = 2; k <= m[c - 1]; ++k)
                f *= k;
            fact[c - 1] = f;
        }
        for (int c = static_cast<int>(d) - 1; c >= 0; --c) {
            stride[c] = total;
            total *= fact[c];
        }
    }

    // Lehmer rank; lexicographic in one-line notation.
    static uint64_t rank_perm(const std::vector<uint32_t>& p) {
        const size_t n = p.size();
        uint64_t r = 0;
        for (size_t i = 0; i < n; ++i) {
            uint32_t smaller = 0;
            for (size_t j = i + 1; j < n; ++j)
                if (p[j] < p[i])
                    ++smaller;
            r = r * (n - i) + smaller;
        }
        return r;
    }

    static std::vector<uint32_t> unrank_perm(uint64_t r, uint32_t n) {
        std::vector<uint64_t> digits(n, 0);
        for (uint32_t i = 0; i < n; ++i) {
            digits[n - 1 - i] = r % (i + 1);
            r /= (i + 1);
        }
        std::vector<uint32_t> pool(n);
        std::iota(pool.begin(), pool.end(), 0u);
        std::vector<uint32_t> p(n);
        for (uint32_t i = 0; i < n; ++i) {
            p[i] = pool[digits[i]];
            pool.erase(pool.begin() + static_cast<long>(digits[i]));
        }
        return p;
    }

    uint64_t rank(const SigmaTuple& s) const {
        uint64_t idx = 0;
        for (size_t c = 0; c < m.size(); ++c)
            idx += rank_perm(s.perms[c]) * stride[c];
        return idx;
    }

    SigmaTuple unrank(uint64_t idx) const {
        SigmaTuple s;
        s.perms.resize(m.size());
        for (size_t c = 0; c < m.size(); ++c) {
            uint64_t digit = (idx / stride[c]) % fact[c];
            s.perms[c] = unrank_perm(digit, m[c]);
        }
        return s;
    }
};

// All permutations of each section size, in lexicographic order.
std::vector<std::vector<uint32_t>> all_perms(uint32_t n) {
    std::vector<uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<std::vector<uint32_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

Int symmetry_group_order(const ColoredVertexSet& side) {
    Int order = 1;
    for (const auto& [type, count] : side.cardinality())
        order *= factorial(count);
    return order;
}

std::vector<GroupElement> enumerate_symmetry_group(const std::vector<ColorType>& vertex_types,
                                                   uint64_t limit) {
    auto classes = type_classes(vertex_types);
    Int order = 1;
    for (auto [b, e] : classes)
        order *= factorial(e - b);
    if (order > limit)
        throw SpecError(Errc::too_large,
                        "symmetry group has " + order.str() + " elements (limit " +
                            std::to_string(limit) + ")");

    const uint32_t n = static_cast<uint32_t>(vertex_types.size());
    std::vector<GroupElement> out;
    GroupElement id;
    id.perm.resize(n);
    std::iota(id.perm.begin(), id.perm.end(), 0u);
    out.push_back(id);

    // Extend class by class; lexicographic order is preserved because the
    // classes are contiguous and visited left to right.
    for (auto [b, e] : classes) {
        std::vector<uint32_t> block(e - b);
        std::iota(block.begin(), block.end(), b);
        std::vector<std::vector<uint32_t>> blocks;
        do {
            blocks.push_back(block);
        } while (std::next_permutation(block.begin(), block.end()));

        std::vector<GroupElement> extended;
        extended.reserve(out.size() * blocks.size());
        for (const auto& base : out)
            for (const auto& blk : blocks) {
                GroupElement g = base;
                for (uint32_t i = b; i < e; ++i)
                    g.perm[i] = blk[i - b];
                extended.push_back(std::move(g));
            }
        out = std::move(extended);
    }
    return out;
}

SigmaTuple act(const GroupElement& pi, const GroupElement& eta, const SigmaTuple& sigma,
               const ColoredGraph& g) {
    auto pi_c = section_action(pi, g, true);
    auto eta_c = section_action(eta, g, false);
    SigmaTuple out;
    out.perms.resize(sigma.perms.size());
    for (size_t c = 0; c < sigma.perms.size(); ++c) {
        const auto& s = sigma.perms[c];
        out.perms[c].resize(s.size());
        for (uint32_t i = 0; i < s.size(); ++i)
            out.perms[c][i] = eta_c[c][s[pi_c[c][i]]];
    }
    return out;
}

Int sigma_space_size(const ContractionSpec& spec) {
    require_compatible(spec);
    Int total = 1;
    for (uint32_t c = 1; c <= spec.d; ++c)
        total *= factorial(spec.lambda.color_multiplicity(c));
    return total;
}

OrbitCatalog count_orbits_bruteforce(const ContractionSpec& spec, uint64_t sigma_limit) {
    ColoredGraph g = ColoredGraph::materialize(spec);
    Int space = sigma_space_size(spec);
    if (space > sigma_limit)
        throw SpecError(Errc::too_large,
                        "sigma-space has " + space.str() + " tuples (limit " +
                            std::to_string(sigma_limit) + ")");
    SigmaIndexer indexer(g);
    const uint64_t total = indexer.total;

    std::vector<std::vector<std::vector<uint32_t>>> perms_by_color(indexer.m.size());
    for (size_t c = 0; c < indexer.m.size(); ++c)
        perms_by_color[c] = all_perms(indexer.m[c]);

    // Generators: adjacent transpositions inside each type class, both
    // sides, tabulated per color as a permutation of section-perm ranks.
    struct ColorTables {
        std::vector<std::vector<uint64_t>> per_color;   // rank_c -> new rank_c
    };
    std::vector<ColorTables> gens;
    auto add_generators = [&](const std::vector<ColorType>& types, bool white_side) {
        const uint32_t n = static_cast<uint32_t>(types.size());
        for (auto [b, e] : type_classes(types)) {
            for (uint32_t i = b; i + 1 < e; ++i) {
                GroupElement t;
                t.perm.resize(n);
                std::iota(t.perm.begin(), t.perm.end(), 0u);
                std::swap(t.perm[i], t.perm[i + 1]);
                auto action = section_action(t, g, white_side);

                ColorTables tables;
                tables.per_color.resize(indexer.m.size());
                for (size_t c = 0; c < indexer.m.size(); ++c) {
                    const auto& ac = action[c];
                    const auto& perms = perms_by_color[c];
                    auto& table = tables.per_color[c];
                    table.resize(perms.size());
                    std::vector<uint32_t> moved(indexer.m[c]);
                    for (uint64_t r = 0; r < perms.size(); ++r) {
                        const auto& p = perms[r];
                        for (uint32_t k = 0; k < p.size(); ++k)
                            moved[k] = white_side ? p[ac[k]] : ac[p[k]];
                        table[r] = SigmaIndexer::rank_perm(moved);
                    }
                }
                gens.push_back(std::move(tables));
            }
        }
    };
    add_generators(g.white_types(), true);
    add_generators(g.black_types(), false);

    // Union-find over sigma indices.
    std::vector<uint32_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    const size_t d = indexer.m.size();
    std::vector<uint64_t> digits(d);
    for (uint64_t idx = 0; idx < total; ++idx) {
        for (size_t c = 0; c < d; ++c)
            digits[c] = (idx / indexer.stride[c]) % indexer.fact[c];
        for (const auto& gen : gens) {
            uint64_t image = 0;
            for (size_t c = 0; c < d; ++c)
                image += gen.per_color[c][digits[c]] * indexer.stride[c];
            uint32_t a = find(static_cast<uint32_t>(idx));
            uint32_t b = find(static_cast<uint32_t>(image));
            if (a != b)
                parent[a] = b;
        }
    }

    // Lexicographically smallest index per orbit; index order is sigma
    // lexicographic order by construction of the indexer.
    std::vector<uint64_t> min_index(total, UINT64_MAX);
    std::vector<uint64_t> size(total, 0);
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint32_t r = find(static_cast<uint32_t>(idx));
        min_index[r] = std::min(min_index[r], idx);
        ++size[r];
    }
    std::vector<std::pair<uint64_t, uint64_t>> orbits;   // (rep index, size)
    for (uint64_t idx = 0; idx < total; ++idx)
        if (size[idx] > 0)
            orbits.push_back({min_index[idx], size[idx]});
    std::sort(orbits.begin(), orbits.end());

    OrbitCatalog catalog;
    catalog.sigma_space = total;
    Int order = symmetry_group_order(spec.lambda) * symmetry_group_order(spec.gamma);
    catalog.group_order = order <= UINT64_MAX ? order.convert_to<uint64_t>() : UINT64_MAX;
    catalog.orbit_count = Int(orbits.size());
    for (const auto& [rep, sz] : orbits) {
        catalog.representatives.push_back(indexer.unrank(rep));
        catalog.orbit_sizes.push_back(sz);
    }
    return catalog;
}

Int count_orbits_burnside(const ContractionSpec& spec, uint64_t sigma_limit,
                          uint64_t group_limit, uint64_t work_limit) {
    ColoredGraph g = ColoredGraph::materialize(spec);
    Int space = sigma_space_size(spec);
    if (space > sigma_limit)
        throw SpecError(Errc::too_large,
                        "sigma-space has " + space.str() + " tuples (limit " +
                            std::to_string(sigma_limit) + ")");

    auto white_group = enumerate_symmetry_group(g.white_types(), group_limit);
    auto black_group = enumerate_symmetry_group(g.black_types(), group_limit);

    const uint32_t d = g.color_count();
    std::vector<std::vector<std::vector<uint32_t>>> perms_by_color(d);
    uint64_t per_pair_work = 0;
    for (uint32_t c = 1; c <= d; ++c) {
        perms_by_color[c - 1] = all_perms(static_cast<uint32_t>(g.white_section(c).size()));
        per_pair_work += perms_by_color[c - 1].size();
    }
    Int work = Int(white_group.size()) * Int(black_group.size()) * per_pair_work;
    if (work > work_limit)
        throw SpecError(Errc::too_large,
                        "fixed-point scan needs " + work.str() + " checks (limit " +
                            std::to_string(work_limit) + ")");

    std::vector<std::vector<std::vector<uint32_t>>> pi_actions, eta_actions;
    pi_actions.reserve(white_group.size());
    for (const auto& pi : white_group)
        pi_actions.push_back(section_action(pi, g, true));
    eta_actions.reserve(black_group.size());
    for (const auto& eta : black_group)
        eta_actions.push_back(section_action(eta, g, false));

    Int fixed_total = 0;
    for (const auto& pi_c : pi_actions) {
        for (const auto& eta_c : eta_actions) {
            Int product = 1;
            for (uint32_t c = 0; c < d && product != 0; ++c) {
                uint64_t fixed_c = 0;
                for (const auto& s : perms_by_color[c]) {
                    bool fixed = true;
                    for (uint32_t i = 0; i < s.size(); ++i)
                        if (eta_c[c][s[pi_c[c][i]]] != s[i]) {
                            fixed = false;
                            break;
                        }
                    if (fixed)
                        ++fixed_c;
                }
                product *= fixed_c;
            }
            fixed_total += product;
        }
    }

    Rational orbits(fixed_total, Int(white_group.size()) * Int(black_group.size()));
    if (denominator(orbits) != 1)
        throw SpecError(Errc::invalid_spec,
                        "Burnside average is not integral: " + orbits.str());
    return numerator(orbits);
}

std::vector<AnnotatedGraph> catalog_to_graphs(const OrbitCatalog& catalog,
                                              const ContractionSpec& spec) {
    std::vector<AnnotatedGraph> out;
    out.reserve(catalog.representatives.size());
    for (const auto& rep : catalog.representatives) {
        AnnotatedGraph ag{ColoredGraph::materialize(spec)};
        ag.graph.set_sigma(rep);
        if (auto issue = ag.graph.validate())
            throw SpecError(issue->code, "catalog representative invalid: " + issue->message);

        std::vector<uint32_t> labels;
        ag.components = ag.graph.connected_components(&labels);

        const auto& wt = ag.graph.white_types();
        const auto& bt = ag.graph.black_types();
        const uint32_t nw = static_cast<uint32_t>(wt.size());
        const uint32_t dd = ag.graph.color_count();

        std::vector<bool> has_full(ag.components, false), has_low(ag.components, false);
        for (uint32_t v = 0; v < nw; ++v)
            (wt[v].valence() == dd ? has_full : has_low)[labels[v]] = true;
        for (uint32_t w = 0; w < bt.size(); ++w)
            (bt[w].valence() == dd ? has_full : has_low)[labels[nw + w]] = true;
        ag.full_order_sector_detached = true;
        for (uint32_t k = 0; k < ag.components; ++k)
            if (has_full[k] && has_low[k])
                ag.full_order_sector_detached = false;

        ag.leaves_on_full_order = true;
        for (const auto& e : ag.graph.edges()) {
            if (wt[e.white].valence() == 1 && bt[e.black].valence() != dd)
                ag.leaves_on_full_order = false;
            if (bt[e.black].valence() == 1 && wt[e.white].valence() != dd)
                ag.leaves_on_full_order = false;
        }
        out.push_back(std::move(ag));
    }
    return out;
}

} // namespace tensobs
