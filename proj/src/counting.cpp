#include "tensobs/counting.hpp"

#include <cassert>

#include "tensobs/partition.hpp"

namespace tensobs {

namespace {

Int rational_to_int(const Rational& r, const char* what) {
    if (denominator(r) != 1)
        throw SpecError(Errc::invalid_spec,
                        std::string(what) + ": accumulator is not integral (" +
                            r.str() + ")");
    return numerator(r);
}

} // namespace

Int count_fixed(uint32_t d, uint32_t n) {
    if (d < 1 || n < 1)
        throw SpecError(Errc::invalid_spec, "count_fixed needs d >= 1 and n >= 1");
    Rational acc = 0;
    for (const auto& p : partitions_of(n))
        acc += rpow(sym_factor(p), static_cast<int64_t>(d) - 2);
    return rational_to_int(acc, "count_fixed");
}

Int count_multi(const ContractionSpec& spec) {
    require_compatible(spec);
    const uint32_t d = spec.d;

    struct Side {
        std::vector<ColorType> types;
        std::vector<std::vector<Partition>> parts;   // partitions of each type's count
    };
    auto load = [](const ColoredVertexSet& s) {
        Side side;
        for (const auto& [type, count] : s.cardinality()) {
            side.types.push_back(type);
            side.parts.push_back(partitions_of(static_cast<uint32_t>(count)));
        }
        return side;
    };
    Side lhs = load(spec.lambda);
    Side rhs = load(spec.gamma);

    // For pruning: the last rhs type index touching each color, so the
    // delta condition for a color fires as soon as its sum is complete.
    std::vector<int> last_rhs(d, -1);
    for (size_t j = 0; j < rhs.types.size(); ++j)
        for (uint32_t c : rhs.types[j].colors())
            last_rhs[c - 1] = static_cast<int>(j);
    std::vector<std::vector<uint32_t>> finish_at(rhs.types.size());
    for (uint32_t c = 1; c <= d; ++c)
        finish_at[last_rhs[c - 1]].push_back(c);

    Rational total = 0;
    std::vector<size_t> mu_pick(lhs.types.size(), 0);

    // Odometer over white-side partition assignments.
    for (;;) {
        std::vector<Partition> mu_color(d);
        Int denom_mu = 1;
        for (size_t i = 0; i < lhs.types.size(); ++i) {
            const Partition& mu = lhs.parts[i][mu_pick[i]];
            denom_mu *= sym_factor(mu);
            for (uint32_t c : lhs.types[i].colors())
                mu_color[c - 1] += mu;
        }
        Int numer = 1;
        for (uint32_t c = 1; c <= d; ++c)
            numer *= sym_factor(mu_color[c - 1]);

        // Recurse over black-side assignments with per-color early cutoff.
        std::vector<Partition> nu_color(d);
        auto rec = [&](auto&& self, size_t j, const Int& denom) -> void {
            if (j == rhs.types.size()) {
                total += Rational(numer, denom);
                return;
            }
            auto colors = rhs.types[j].colors();
            for (const Partition& nu : rhs.parts[j]) {
                std::vector<Partition> saved;
                saved.reserve(colors.size());
                for (uint32_t c : colors) {
                    saved.push_back(nu_color[c - 1]);
                    nu_color[c - 1] += nu;
                }
                bool ok = true;
                for (uint32_t c : finish_at[j])
                    if (nu_color[c - 1] != mu_color[c - 1]) {
                        ok = false;
                        break;
                    }
                if (ok)
                    self(self, j + 1, denom * sym_factor(nu));
                for (size_t k = 0; k < colors.size(); ++k)
                    nu_color[colors[k] - 1] = std::move(saved[k]);
            }
        };
        rec(rec, 0, denom_mu);

        // Advance the odometer.
        size_t i = 0;
        while (i < mu_pick.size()) {
            if (++mu_pick[i] < lhs.parts[i].size())
                break;
            mu_pick[i] = 0;
            ++i;
        }
        if (i == mu_pick.size())
            break;
    }
    return rational_to_int(total, "count_multi");
}

std::vector<std::vector<Int>> fixed_count_table(uint32_t d_lo, uint32_t d_hi,
                                                uint32_t n_lo, uint32_t n_hi) {
    if (d_lo > d_hi || n_lo > n_hi)
        throw SpecError(Errc::invalid_spec, "empty table range");
    std::vector<std::vector<Int>> grid;
    for (uint32_t n = n_lo; n <= n_hi; ++n) {
        std::vector<Int> row;
        for (uint32_t d = d_lo; d <= d_hi; ++d)
            row.push_back(count_fixed(d, n));
        grid.push_back(std::move(row));
    }
    return grid;
}

SpecFamily tensor_matrix_vector_family(uint32_t d) {
    if (d < 3 || d > 9)
        throw SpecError(Errc::invalid_spec,
                        "tensor_matrix_vector_family supports 3 <= d <= 9");
    // Fixed complement types per order; each color appears exactly once in
    // the complement so both sides keep multiplicity s.
    std::vector<std::vector<uint32_t>> complement;
    switch (d) {
    case 3: complement = {{1, 2}, {3}}; break;
    case 4: complement = {{1, 2}, {3}, {4}}; break;
    case 5: complement = {{1, 2}, {3, 4}, {5}}; break;
    case 6: complement = {{1, 2}, {3, 4}, {5}, {6}}; break;
    case 7: complement = {{1, 2}, {3, 6}, {5, 7}, {4}}; break;
    case 8: complement = {{1, 2}, {3, 6}, {5, 7}, {4, 8}}; break;
    case 9: complement = {{1, 2}, {3, 6}, {5, 7}, {4, 8}, {9}}; break;
    default: break;
    }
    return [d, complement](uint32_t s) {
        if (s < 1)
            throw SpecError(Errc::invalid_spec, "family parameter s must be >= 1");
        ContractionSpec spec;
        spec.d = d;
        spec.lambda = ColoredVertexSet(d);
        spec.gamma = ColoredVertexSet(d);
        spec.lambda.set_count(full_type(d), s);
        spec.gamma.set_count(full_type(d), s - 1);
        for (const auto& cs : complement)
            spec.gamma.set_count(ColorType::from_colors(cs), 1);
        return spec;
    };
}

std::vector<Int> count_sequence_multi(const SpecFamily& family, uint32_t s_lo,
                                      uint32_t s_hi) {
    if (s_lo > s_hi)
        throw SpecError(Errc::invalid_spec, "empty sequence range");
    std::vector<Int> out;
    for (uint32_t s = s_lo; s <= s_hi; ++s) {
        ContractionSpec spec = family(s);
        if (auto issue = check_compatible(spec))
            throw SpecError(issue->code,
                            "family member s=" + std::to_string(s) + ": " + issue->message());
        out.push_back(count_multi(spec));
    }
    return out;
}

ContractionSpec full_type_spec(uint32_t d, uint64_t n) {
    ContractionSpec spec;
    spec.d = d;
    spec.lambda = ColoredVertexSet(d);
    spec.gamma = ColoredVertexSet(d);
    spec.lambda.set_count(full_type(d), n);
    spec.gamma.set_count(full_type(d), n);
    return spec;
}

} // namespace tensobs
