#include "tensobs/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace tensobs {

std::string SigmaTuple::str() const {
    std::string s = "(";
    for (size_t c = 0; c < perms.size(); ++c) {
        if (c)
            s += "; ";
        for (size_t i = 0; i < perms[c].size(); ++i) {
            if (i)
                s += ' ';
            s += std::to_string(perms[c][i]);
        }
    }
    s += ')';
    return s;
}

namespace {

std::vector<ColorType> expand_side(const ColoredVertexSet& side) {
    std::vector<ColorType> out;
    out.reserve(side.total_vertices());
    for (const auto& [type, count] : side.cardinality())
        for (uint64_t k = 0; k < count; ++k)
            out.push_back(type);
    return out;
}

std::vector<std::vector<uint32_t>> build_sections(const std::vector<ColorType>& types,
                                                  uint32_t d) {
    std::vector<std::vector<uint32_t>> sec(d);
    for (uint32_t id = 0; id < types.size(); ++id)
        for (uint32_t c : types[id].colors())
            sec[c - 1].push_back(id);
    return sec;
}

} // namespace

ColoredGraph ColoredGraph::materialize(const ContractionSpec& spec) {
    require_compatible(spec);
    ColoredGraph g;
    g.spec_ = spec;
    g.white_ = expand_side(spec.lambda);
    g.black_ = expand_side(spec.gamma);
    g.wsec_ = build_sections(g.white_, spec.d);
    g.bsec_ = build_sections(g.black_, spec.d);
    g.sigma_ = g.identity_sigma();
    return g;
}

const std::vector<uint32_t>& ColoredGraph::white_section(uint32_t c) const {
    if (c < 1 || c > spec_.d)
        throw SpecError(Errc::color_out_of_range, "color " + std::to_string(c));
    return wsec_[c - 1];
}

const std::vector<uint32_t>& ColoredGraph::black_section(uint32_t c) const {
    if (c < 1 || c > spec_.d)
        throw SpecError(Errc::color_out_of_range, "color " + std::to_string(c));
    return bsec_[c - 1];
}

uint32_t ColoredGraph::white_section_pos(uint32_t c, uint32_t id) const {
    const auto& sec = white_section(c);
    auto it = std::lower_bound(sec.begin(), sec.end(), id);
    if (it == sec.end() || *it != id)
        return npos;
    return static_cast<uint32_t>(it - sec.begin());
}

uint32_t ColoredGraph::black_section_pos(uint32_t c, uint32_t id) const {
    const auto& sec = black_section(c);
    auto it = std::lower_bound(sec.begin(), sec.end(), id);
    if (it == sec.end() || *it != id)
        return npos;
    return static_cast<uint32_t>(it - sec.begin());
}

SigmaTuple ColoredGraph::identity_sigma() const {
    SigmaTuple s;
    s.perms.resize(spec_.d);
    for (uint32_t c = 1; c <= spec_.d; ++c) {
        s.perms[c - 1].resize(wsec_[c - 1].size());
        std::iota(s.perms[c - 1].begin(), s.perms[c - 1].end(), 0u);
    }
    return s;
}

void ColoredGraph::set_sigma(SigmaTuple s) {
    if (s.perms.size() != spec_.d)
        throw SpecError(Errc::bad_sigma, "expected one bijection per color");
    for (uint32_t c = 1; c <= spec_.d; ++c) {
        const auto& p = s.perms[c - 1];
        if (p.size() != wsec_[c - 1].size())
            throw SpecError(Errc::bad_sigma,
                            "color " + std::to_string(c) + " needs length " +
                                std::to_string(wsec_[c - 1].size()));
        for (uint32_t v : p)
            if (v >= bsec_[c - 1].size())
                throw SpecError(Errc::bad_sigma,
                                "color " + std::to_string(c) + " maps outside its section");
    }
    sigma_ = std::move(s);
}

std::vector<ColoredEdge> ColoredGraph::edges() const {
    std::vector<ColoredEdge> out;
    for (uint32_t c = 1; c <= spec_.d; ++c) {
        const auto& vs = wsec_[c - 1];
        const auto& ws = bsec_[c - 1];
        const auto& p = sigma_.perms[c - 1];
        for (uint32_t i = 0; i < vs.size(); ++i)
            out.push_back({c, vs[i], ws[p[i]]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<GraphIssue> ColoredGraph::validate() const {
    for (uint32_t c = 1; c <= spec_.d; ++c) {
        const auto& p = sigma_.perms[c - 1];
        std::vector<bool> hit(bsec_[c - 1].size(), false);
        for (uint32_t v : p) {
            if (v >= hit.size() || hit[v])
                return GraphIssue{Errc::bad_sigma,
                                  "sigma_" + std::to_string(c) +
                                      " is not a bijection onto its section"};
            hit[v] = true;
        }
    }

    // Incident colors per vertex, white then black.
    std::vector<std::vector<uint32_t>> winc(white_.size()), binc(black_.size());
    for (const auto& e : edges()) {
        winc[e.white].push_back(e.color);
        binc[e.black].push_back(e.color);
    }
    auto check_side = [](const std::vector<std::vector<uint32_t>>& inc,
                         const std::vector<ColorType>& types,
                         const char* side) -> std::optional<GraphIssue> {
        for (uint32_t v = 0; v < types.size(); ++v) {
            auto cs = inc[v];
            std::sort(cs.begin(), cs.end());
            if (std::adjacent_find(cs.begin(), cs.end()) != cs.end())
                return GraphIssue{Errc::bad_sigma,
                                  std::string(side) + " vertex " + std::to_string(v) +
                                      " meets two edges of one color"};
            if (cs != types[v].colors())
                return GraphIssue{Errc::bad_sigma,
                                  std::string(side) + " vertex " + std::to_string(v) +
                                      " has incident colors that differ from its type " +
                                      types[v].str()};
        }
        return std::nullopt;
    };
    if (auto issue = check_side(winc, white_, "white"))
        return issue;
    if (auto issue = check_side(binc, black_, "black"))
        return issue;
    return std::nullopt;
}

uint32_t ColoredGraph::connected_components(std::vector<uint32_t>* labels) const {
    const uint32_t nw = static_cast<uint32_t>(white_.size());
    const uint32_t n = nw + static_cast<uint32_t>(black_.size());
    std::vector<uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : edges()) {
        uint32_t a = find(e.white), b = find(nw + e.black);
        if (a != b)
            parent[a] = b;
    }
    std::vector<uint32_t> remap(n, npos);
    uint32_t count = 0;
    std::vector<uint32_t> out(n);
    for (uint32_t v = 0; v < n; ++v) {
        uint32_t r = find(v);
        if (remap[r] == npos)
            remap[r] = count++;
        out[v] = remap[r];
    }
    if (labels)
        *labels = std::move(out);
    return count;
}

std::string color_name(uint32_t c) {
    static const std::array<const char*, 9> palette = {
        "red", "green", "blue", "orange", "purple", "brown", "cyan", "magenta", "gold"};
    if (c >= 1 && c <= palette.size())
        return palette[c - 1];
    return "c" + std::to_string(c);
}

std::string ColoredGraph::to_dot() const {
    std::ostringstream os;
    os << "graph contraction {\n";
    os << "  node [shape=circle];\n";
    for (uint32_t v = 0; v < white_.size(); ++v)
        os << "  w" << v << " [style=solid, label=\"w" << v << "\", tooltip=\""
           << white_[v].str() << "\"];\n";
    for (uint32_t w = 0; w < black_.size(); ++w)
        os << "  b" << w << " [style=filled, fillcolor=black, fontcolor=white, label=\"b"
           << w << "\", tooltip=\"" << black_[w].str() << "\"];\n";
    for (const auto& e : edges())
        os << "  w" << e.white << " -- b" << e.black << " [color=" << color_name(e.color)
           << ", label=\"" << e.color << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace tensobs
