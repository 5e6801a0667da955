#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <staircase/bigint.hpp>
#include <staircase/partition.hpp>

namespace staircase
{

// Partitions of n in reverse-lexicographic order, optionally with at most
// `max_parts` parts and parts no larger than `max_part`.
//
//     PartitionStream s(4, 2);
//     while (auto p = s.next()) { ... }   // (4), (3,1), (2,2)
class PartitionStream
{
public:
    explicit PartitionStream(Part n, std::optional<std::size_t> max_parts = std::nullopt,
                             std::optional<Part> max_part = std::nullopt);

    // Moves to the next partition; false once exhausted. The first call
    // positions the stream on the first partition.
    bool advance();
    // Valid after advance() returned true.
    std::span<const Part> current() const noexcept
    {
        return m_parts;
    }

    std::optional<Partition> next();

private:
    bool fill(Part remaining, Part cap);

    Part m_n;
    std::size_t m_max_parts;
    Part m_max_part;
    std::vector<Part> m_parts;
    bool m_started = false;
    bool m_done = false;
};

PartitionStream enumerate_partitions(Part n, std::optional<std::size_t> r = std::nullopt);

// p(n) for n = 0..max_n by Euler's pentagonal recurrence, or p(n, r) by
// p(n, r) = p(n - r, r) + p(n, r - 1) when r is given.
std::vector<BigInt> partition_counts(std::size_t max_n, std::optional<std::size_t> r = std::nullopt);

BigInt count_all(std::size_t n, std::optional<std::size_t> r = std::nullopt);

enum class CountMethod {
    pruned, // depth-first extension, abandons prefixes with a decided failing triple
    filter  // every partition from PartitionStream through is_concave
};

// p_c(n, r) for n = 0..max_n.
std::vector<BigInt> concave_counts(std::size_t max_n, std::optional<std::size_t> r = std::nullopt,
                                   CountMethod method = CountMethod::pruned);

BigInt count_concave(std::size_t n, std::optional<std::size_t> r = std::nullopt,
                     CountMethod method = CountMethod::pruned);

// Visits every concave partition of weight <= max_weight with at most r parts,
// in depth-first order.
void for_each_concave(std::size_t max_weight, std::optional<std::size_t> r,
                      const std::function<void(const Partition &)> &visit);

// Worker cap from STAIRCASE_THREADS; 0 or unset means hardware concurrency.
unsigned worker_count();

} // namespace staircase
