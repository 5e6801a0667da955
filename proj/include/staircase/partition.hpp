#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace staircase
{

using Part = std::int64_t;

// A point of the lattice N^2. `a` is the x exponent (column), `b` the y
// exponent (row).
struct LatticePoint {
    Part a = 0;
    Part b = 0;

    friend auto operator<=>(const LatticePoint &, const LatticePoint &) = default;
};

// Componentwise order on N^2.
inline bool dominated_by(const LatticePoint &p, const LatticePoint &q)
{
    return p.a <= q.a && p.b <= q.b;
}

// Thrown by the text parsers; `position` is the byte offset of the offending token.
class ParseError : public std::invalid_argument
{
public:
    ParseError(const std::string &what, std::size_t position);

    std::size_t position() const noexcept
    {
        return m_position;
    }

private:
    std::size_t m_position;
};

// Weakly decreasing finite sequence of positive integers. Parts are read
// 1-based; reads past the last part yield 0.
class Partition
{
public:
    Partition() = default;
    explicit Partition(std::vector<Part> parts);
    Partition(std::initializer_list<Part> parts);

    // Parses `4,4,2,2`; the empty string and `0` denote the empty partition.
    // Trailing zero parts are accepted and dropped.
    static Partition parse(std::string_view text);

    Part part(std::size_t k) const noexcept
    {
        return (k >= 1 && k <= m_parts.size()) ? m_parts[k - 1] : 0;
    }
    std::span<const Part> parts() const noexcept
    {
        return m_parts;
    }
    std::size_t num_parts() const noexcept
    {
        return m_parts.size();
    }
    bool empty() const noexcept
    {
        return m_parts.empty();
    }
    Part largest() const noexcept
    {
        return part(1);
    }
    Part weight() const noexcept;

    std::string to_string() const;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<Part> m_parts;
};

// Componentwise sum; the monoid operation on partitions.
Partition operator+(const Partition &lhs, const Partition &rhs);

// Ferrers diagram {(i, j) : 0 <= i < lambda_{j+1}}, stored sorted.
struct FerrersDiagram {
    std::vector<LatticePoint> points;

    bool contains(const LatticePoint &p) const;
    // Every point below a member is a member.
    bool is_order_ideal() const;
};

Partition conjugate(const Partition &lambda);

FerrersDiagram ferrers(const Partition &lambda);

// (lambda_1 - lambda_2, lambda_2 - lambda_3, ...) padded to num_parts + 2 entries.
std::vector<Part> diff(const Partition &lambda);

// Entry l is lambda_l - 2 lambda_{l+1} + lambda_{l+2}; padded to num_parts + 2 entries.
std::vector<Part> diff2(const Partition &lambda);

} // namespace staircase
