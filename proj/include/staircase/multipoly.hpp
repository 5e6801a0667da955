#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <staircase/bigint.hpp>

namespace staircase
{

using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents &e) noexcept;

// Ascending total degree; within a degree, lexicographically descending
// (higher powers of x1 first).
struct GradedOrder {
    bool operator()(const Exponents &lhs, const Exponents &rhs) const noexcept;
};

// Sparse polynomial in x1..x_arity with big-integer coefficients. Zero
// coefficients are never stored.
class MultiPoly
{
public:
    using TermMap = std::map<Exponents, BigInt, GradedOrder>;

    explicit MultiPoly(std::size_t arity = 0);

    static MultiPoly constant(std::size_t arity, const BigInt &value);
    static MultiPoly monomial(const Exponents &exponents, const BigInt &coefficient = 1);

    std::size_t arity() const noexcept
    {
        return m_arity;
    }
    const TermMap &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    BigInt coefficient(const Exponents &exponents) const;

    void add_term(const Exponents &exponents, const BigInt &coefficient);

    // -1 for the zero polynomial.
    long total_degree() const noexcept;
    BigInt value_at_ones() const;
    bool exponents_weakly_decreasing() const;

    // Terms of total degree < bound.
    MultiPoly truncated_below(std::uint64_t bound) const;
    // Substitutes x_arity = 0 and drops the last variable.
    MultiPoly drop_last_variable() const;
    // Substitutes x_i = t for every i.
    std::vector<BigInt> diagonal() const;

    friend MultiPoly operator+(const MultiPoly &lhs, const MultiPoly &rhs);
    friend MultiPoly operator-(const MultiPoly &lhs, const MultiPoly &rhs);
    friend MultiPoly operator*(const MultiPoly &lhs, const MultiPoly &rhs);
    friend bool operator==(const MultiPoly &, const MultiPoly &) = default;

    // `1 + x1*x2 - x1^2*x2` in GradedOrder; `0` for the zero polynomial.
    std::string to_string() const;

private:
    void check_arity(const MultiPoly &other) const;

    std::size_t m_arity;
    TermMap m_terms;
};

// Product with every term of total degree > max_degree discarded.
MultiPoly multiply_truncated(const MultiPoly &lhs, const MultiPoly &rhs, std::optional<std::uint64_t> max_degree);

} // namespace staircase
