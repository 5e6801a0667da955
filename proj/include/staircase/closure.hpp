#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <staircase/partition.hpp>

namespace staircase
{

// Minimal generators of a monoid ideal I in N^2, an antichain sorted by
// increasing b (equivalently decreasing a).
class StaircaseIdeal
{
public:
    StaircaseIdeal() = default;
    // Throws std::invalid_argument unless the points form a sorted antichain.
    explicit StaircaseIdeal(std::vector<LatticePoint> generators);

    // `a,b;a,b;...` sorted by increasing b.
    static StaircaseIdeal parse(std::string_view text);
    std::string to_string() const;

    const std::vector<LatticePoint> &generators() const noexcept
    {
        return m_generators;
    }
    // Finite complement: generators on both axes.
    bool is_artinian() const noexcept;
    bool contains(const LatticePoint &p) const noexcept;

    friend bool operator==(const StaircaseIdeal &, const StaircaseIdeal &) = default;

private:
    std::vector<LatticePoint> m_generators;
};

StaircaseIdeal staircase_of(const Partition &lambda);

// Inverse of staircase_of; throws std::invalid_argument for non-artinian input.
Partition partition_of(const StaircaseIdeal &ideal);

// Vertices of the lower-left convex hull of the generators, by increasing b.
// Collinear boundary points are dropped.
std::vector<LatticePoint> hull_vertices(const StaircaseIdeal &ideal);

// The partition whose ideal is conv(I(lambda)) ∩ N^2. Exact integer arithmetic.
Partition integral_closure(const Partition &lambda);

// lambda_i (j-k) + lambda_j (k-i) + lambda_k (i-j) < k-i for all
// 1 <= i < j < k <= num_parts + 1. Larger k never binds: once lambda_k = 0
// the left side minus k-i has slope lambda_j - lambda_i - 1 < 0 in k.
bool is_concave(const Partition &lambda);

// The first triple (i, j, k) violating the concavity inequality, if any.
struct Triple {
    std::size_t i = 0, j = 0, k = 0;
    friend bool operator==(const Triple &, const Triple &) = default;
};
bool first_concavity_violation(const Partition &lambda, Triple &out);

} // namespace staircase
