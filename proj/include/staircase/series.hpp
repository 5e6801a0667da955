#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <staircase/bigint.hpp>

namespace staircase
{

// Power series in t with exact integer coefficients c_0..c_N, known modulo t^{N+1}.
class UniSeries
{
public:
    explicit UniSeries(std::size_t order = 0);
    // Coefficients past `order` are dropped, missing ones are zero.
    UniSeries(std::vector<BigInt> coefficients, std::size_t order);

    static UniSeries one(std::size_t order);
    // 1 - t^m
    static UniSeries one_minus_power(std::size_t m, std::size_t order);

    std::size_t order() const noexcept
    {
        return m_coefficients.size() - 1;
    }
    const BigInt &coefficient(std::size_t k) const;
    const std::vector<BigInt> &coefficients() const noexcept
    {
        return m_coefficients;
    }

    // Highest index with a nonzero coefficient, -1 for the zero series.
    long degree() const;
    // Sum of the coefficients; the value at t = 1 when the series is a polynomial.
    BigInt value_at_one() const;
    // Keeps indices < bound.
    UniSeries truncated_below(std::size_t bound) const;

    // The order of a result is the smaller of the operand orders.
    friend UniSeries operator+(const UniSeries &lhs, const UniSeries &rhs);
    friend UniSeries operator-(const UniSeries &lhs, const UniSeries &rhs);
    friend UniSeries operator*(const UniSeries &lhs, const UniSeries &rhs);
    // Exact division; the divisor's constant term must be +1 or -1.
    friend UniSeries operator/(const UniSeries &lhs, const UniSeries &rhs);

    friend bool operator==(const UniSeries &, const UniSeries &) = default;

    // `1 + t^2 - 2*t^6`; `0` for the zero series. The truncation order is not printed.
    std::string to_string(const std::string &variable = "t") const;

private:
    std::vector<BigInt> m_coefficients;
};

} // namespace staircase
