#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tensobs/colored.hpp"
#include "tensobs/exact.hpp"

namespace tensobs {

/// Number of inequivalent contractions of n white and n black order-d
/// tensors: sum over partitions p of n of sym_factor(p)^(d-2), accumulated
/// as exact rationals (d = 1 needs 1/Sym) and asserted integral.
Int count_fixed(uint32_t d, uint32_t n);

/// Number of orbits of the section-wise group action on the sigma-space of
/// a compatible spec. Sums, over one partition assignment per used type on
/// each side, prod_c Sym(color-sum of white partitions) divided by the
/// per-type Sym factors, keeping only assignments whose per-color partition
/// sums agree between the two sides. Exact; throws on incompatible specs.
Int count_multi(const ContractionSpec& spec);

/// Grid of count_fixed values; rows follow n_lo..n_hi, columns d_lo..d_hi.
std::vector<std::vector<Int>> fixed_count_table(uint32_t d_lo, uint32_t d_hi,
                                                uint32_t n_lo, uint32_t n_hi);

using SpecFamily = std::function<ContractionSpec(uint32_t s)>;

/// Family of order-d specs (3 <= d <= 9): s full tensors on the white side
/// against s-1 full tensors plus a fixed set of matrices and vectors chosen
/// so every color keeps multiplicity s on both sides.
SpecFamily tensor_matrix_vector_family(uint32_t d);

/// count_multi over family(s) for s in s_lo..s_hi.
std::vector<Int> count_sequence_multi(const SpecFamily& family, uint32_t s_lo,
                                      uint32_t s_hi);

/// Both sides a single type {1..d} with n vertices.
ContractionSpec full_type_spec(uint32_t d, uint64_t n);

} // namespace tensobs
