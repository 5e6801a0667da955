#pragma once

// Brute-force reference implementations used only by the tests. None of
// these share code paths with the library routines they check.

#include <cstddef>
#include <optional>
#include <vector>

#include <staircase/partition.hpp>

namespace staircase::oracle
{

// All partitions of n, by plain recursion on the largest part.
std::vector<Partition> all_partitions(Part n, std::optional<std::size_t> max_parts = std::nullopt);

// All partitions with weight <= max_weight.
std::vector<Partition> all_partitions_up_to(Part max_weight);

// Partition of {a in N^2 : l a in lI(lambda) for some 1 <= l <= bound}, where
// lI is the l-fold sumset I + ... + I. Plain "l a in I" would admit (1,0) for
// I = I((5)) and is not the integral closure.
Partition closure_oracle(const Partition &lambda, Part bound);

// lambda_j < 1 + lambda_i (k-j)/(k-i) + lambda_k (j-i)/(k-i) in exact rationals,
// for all 1 <= i < j < k <= k_max.
bool is_concave_interpolated(const Partition &lambda, std::size_t k_max);

// Homogeneous triple inequality for all 1 <= i < j < k <= k_max.
bool is_concave_homogeneous(const Partition &lambda, std::size_t k_max);

// Conjugate read off the Ferrers diagram column by column.
Partition conjugate_by_columns(const Partition &lambda);

// |{k : mu_k = i}| weakly decreasing in i, mu the conjugate.
bool conjugate_multiplicities_decreasing(const Partition &lambda);

// Number of partitions of n into parts from {T_1, ..., T_r} (all if r empty),
// by explicit enumeration.
std::size_t count_triangular_partitions(Part n, std::optional<std::size_t> r = std::nullopt);

} // namespace staircase::oracle
