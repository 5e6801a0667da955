#include <staircase/series.hpp>

#include <algorithm>
#include <utility>

namespace staircase
{

UniSeries::UniSeries(std::size_t order) : m_coefficients(order + 1)
{
}

UniSeries::UniSeries(std::vector<BigInt> coefficients, std::size_t order) : m_coefficients(std::move(coefficients))
{
    m_coefficients.resize(order + 1);
}

UniSeries UniSeries::one(std::size_t order)
{
    UniSeries s(order);
    s.m_coefficients[0] = 1;
    return s;
}

UniSeries UniSeries::one_minus_power(std::size_t m, std::size_t order)
{
    auto s = one(order);
    if (m <= order) {
        s.m_coefficients[m] -= 1;
    }
    return s;
}

const BigInt &UniSeries::coefficient(std::size_t k) const
{
    if (k > order()) {
        throw std::out_of_range("coefficient index beyond truncation order");
    }
    return m_coefficients[k];
}

long UniSeries::degree() const
{
    for (std::size_t k = m_coefficients.size(); k-- > 0;) {
        if (!m_coefficients[k].is_zero()) {
            return static_cast<long>(k);
        }
    }
    return -1;
}

BigInt UniSeries::value_at_one() const
{
    BigInt sum = 0;
    for (const auto &c : m_coefficients) {
        sum += c;
    }
    return sum;
}

UniSeries UniSeries::truncated_below(std::size_t bound) const
{
    auto out = *this;
    for (std::size_t k = bound; k < out.m_coefficients.size(); ++k) {
        out.m_coefficients[k] = 0;
    }
    return out;
}

UniSeries operator+(const UniSeries &lhs, const UniSeries &rhs)
{
    UniSeries out(std::min(lhs.order(), rhs.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) {
        out.m_coefficients[k] = lhs.m_coefficients[k] + rhs.m_coefficients[k];
    }
    return out;
}

UniSeries operator-(const UniSeries &lhs, const UniSeries &rhs)
{
    UniSeries out(std::min(lhs.order(), rhs.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) {
        out.m_coefficients[k] = lhs.m_coefficients[k] - rhs.m_coefficients[k];
    }
    return out;
}

namespace
{

std::vector<std::size_t> support(const std::vector<BigInt> &c, std::size_t order)
{
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k <= order; ++k) {
        if (!c[k].is_zero()) {
            idx.push_back(k);
        }
    }
    return idx;
}

} // namespace

UniSeries operator*(const UniSeries &lhs, const UniSeries &rhs)
{
    const auto order = std::min(lhs.order(), rhs.order());
    UniSeries out(order);
    // Most factors here are sparse binomials; walk only the nonzero terms of rhs.
    const auto nz = support(rhs.m_coefficients, order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (lhs.m_coefficients[i].is_zero()) {
            continue;
        }
        for (const auto j : nz) {
            if (i + j > order) {
                break;
            }
            out.m_coefficients[i + j] += lhs.m_coefficients[i] * rhs.m_coefficients[j];
        }
    }
    return out;
}

UniSeries operator/(const UniSeries &lhs, const UniSeries &rhs)
{
    const auto &c0 = rhs.m_coefficients[0];
    if (c0 != 1 && c0 != -1) {
        throw std::domain_error("series division needs a divisor with constant term +1 or -1");
    }
    const auto order = std::min(lhs.order(), rhs.order());
    const auto nz = support(rhs.m_coefficients, order);
    UniSeries q(order);
    for (std::size_t n = 0; n <= order; ++n) {
        BigInt acc = lhs.m_coefficients[n];
        for (const auto j : nz) {
            if (j == 0) {
                continue;
            }
            if (j > n) {
                break;
            }
            acc -= rhs.m_coefficients[j] * q.m_coefficients[n - j];
        }
        q.m_coefficients[n] = c0 == 1 ? acc : BigInt(-acc);
    }
    return q;
}

std::string UniSeries::to_string(const std::string &variable) const
{
    std::string out;
    for (std::size_t k = 0; k < m_coefficients.size(); ++k) {
        const auto &c = m_coefficients[k];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string monomial;
        if (k == 1) {
            monomial = variable;
        } else if (k > 1) {
            monomial = variable + "^" + std::to_string(k);
        }
        if (monomial.empty()) {
            out += magnitude.str();
        } else if (magnitude == 1) {
            out += monomial;
        } else {
            out += magnitude.str() + "*" + monomial;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace staircase
