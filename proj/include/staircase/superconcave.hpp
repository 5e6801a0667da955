#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <staircase/bigint.hpp>
#include <staircase/partition.hpp>

namespace staircase
{

constexpr Part triangular(Part i) noexcept
{
    return i * (i + 1) / 2;
}

// Non-negative second differences.
bool is_superconcave(const Partition &lambda);

// Linear functional on partition space, coefficient of e_i at index i (1-based).
// Trailing zero coefficients are never stored.
class LinearForm
{
public:
    LinearForm() = default;
    explicit LinearForm(std::vector<Part> coefficients);

    static LinearForm unit(std::size_t i);
    // -e_l + 2 e_{l+1} - e_{l+2}
    static LinearForm second_difference(std::size_t l);

    Part coefficient(std::size_t i) const noexcept
    {
        return (i >= 1 && i <= m_coefficients.size()) ? m_coefficients[i - 1] : 0;
    }
    std::size_t support() const noexcept
    {
        return m_coefficients.size();
    }
    Part apply(const Partition &lambda) const noexcept;

    LinearForm &operator+=(const LinearForm &other);
    friend LinearForm operator+(LinearForm lhs, const LinearForm &rhs)
    {
        return lhs += rhs;
    }
    friend LinearForm operator*(Part scalar, const LinearForm &form);
    friend bool operator==(const LinearForm &, const LinearForm &) = default;

private:
    void trim();

    std::vector<Part> m_coefficients;
};

// The coefficient on e_k in the triple functional. Only (i-j) is
// consistent with f_l = t_{l,l+1,l+2}; (j-i) is kept for comparison.
enum class TripleSign { corrected, reversed };

// (j-k) e_i + (k-i) e_j + (i-j) e_k, or with (j-i) on e_k for TripleSign::reversed.
LinearForm triple_form(std::size_t i, std::size_t j, std::size_t k, TripleSign sign = TripleSign::corrected);

// t_{i,j,k} . lambda <= 0 for every 1 <= i < j < k <= num_parts + 2.
bool satisfies_triple_inequalities(const Partition &lambda, TripleSign sign = TripleSign::corrected);

// Two readings of the coefficient of f_l for j-1 <= l <= k-2 in the
// expansion of t_{1,j,k} as a positive combination of second differences.
enum class PoslincombReading {
    scaled,   // l (j-1)(k-l-1)
    corrected // (j-1)(k-l-1)
};

// Right-hand side sum_{l=1}^{j-2} l(k-j) f_l + sum_{l=j-1}^{k-2} coef(l) f_l.
LinearForm poslincomb_expansion(std::size_t j, std::size_t k, PoslincombReading reading);

struct PoslincombReport {
    std::size_t j = 0;
    std::size_t k = 0;
    bool scaled = false;
    bool corrected = false;

    bool holds() const noexcept
    {
        return scaled || corrected;
    }
    std::vector<PoslincombReading> validating() const;
};

// Checks the expansion identity exactly for both readings. Requires 1 < j < k.
PoslincombReport check_poslincomb(std::size_t j, std::size_t k);

// Multiplicities c_1, c_2, ... of the staircases delta_i = (i, i-1, ..., 1).
class TriangularDecomposition
{
public:
    TriangularDecomposition() = default;
    explicit TriangularDecomposition(std::vector<Part> multiplicities);

    // `c1,c2,...,cr`; empty string is the zero decomposition.
    static TriangularDecomposition parse(std::string_view text);
    std::string to_string() const;

    Part multiplicity(std::size_t i) const noexcept
    {
        return (i >= 1 && i <= m_multiplicities.size()) ? m_multiplicities[i - 1] : 0;
    }
    const std::vector<Part> &multiplicities() const noexcept
    {
        return m_multiplicities;
    }
    // sum c_i T_i
    Part weight() const noexcept;
    // The same multiset read as a partition into triangular numbers.
    Partition triangular_parts() const;

    friend bool operator==(const TriangularDecomposition &, const TriangularDecomposition &) = default;

private:
    std::vector<Part> m_multiplicities;
};

// c_l = lambda_l - 2 lambda_{l+1} + lambda_{l+2}; throws std::invalid_argument
// if lambda is not super-concave.
TriangularDecomposition decompose(const Partition &lambda);

Partition recompose(const TriangularDecomposition &c);

// p_sc(n, r) for n = 0..max_n by coin change over T_1..T_r (all T_i if r is empty).
std::vector<BigInt> superconcave_counts(std::size_t max_n, std::optional<std::size_t> r = std::nullopt);

BigInt count_superconcave(std::size_t n, std::optional<std::size_t> r = std::nullopt);

} // namespace staircase
