#include <staircase/multipoly.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace staircase
{

std::uint64_t total_degree(const Exponents &e) noexcept
{
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GradedOrder::operator()(const Exponents &lhs, const Exponents &rhs) const noexcept
{
    const auto dl = total_degree(lhs);
    const auto dr = total_degree(rhs);
    if (dl != dr) {
        return dl < dr;
    }
    return std::lexicographical_compare(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

MultiPoly::MultiPoly(std::size_t arity) : m_arity(arity)
{
}

MultiPoly MultiPoly::constant(std::size_t arity, const BigInt &value)
{
    MultiPoly p(arity);
    p.add_term(Exponents(arity, 0), value);
    return p;
}

MultiPoly MultiPoly::monomial(const Exponents &exponents, const BigInt &coefficient)
{
    MultiPoly p(exponents.size());
    p.add_term(exponents, coefficient);
    return p;
}

BigInt MultiPoly::coefficient(const Exponents &exponents) const
{
    const auto it = m_terms.find(exponents);
    return it == m_terms.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Exponents &exponents, const BigInt &coefficient)
{
    if (exponents.size() != m_arity) {
        throw std::invalid_argument("exponent vector arity mismatch");
    }
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

long MultiPoly::total_degree() const noexcept
{
    // GradedOrder puts the highest degree last.
    return m_terms.empty() ? -1 : static_cast<long>(staircase::total_degree(m_terms.rbegin()->first));
}

BigInt MultiPoly::value_at_ones() const
{
    BigInt sum = 0;
    for (const auto &[e, c] : m_terms) {
        sum += c;
    }
    return sum;
}

bool MultiPoly::exponents_weakly_decreasing() const
{
    return std::all_of(m_terms.begin(), m_terms.end(), [](const auto &term) {
        return std::is_sorted(term.first.rbegin(), term.first.rend());
    });
}

MultiPoly MultiPoly::truncated_below(std::uint64_t bound) const
{
    MultiPoly out(m_arity);
    for (const auto &[e, c] : m_terms) {
        if (staircase::total_degree(e) < bound) {
            out.m_terms.emplace_hint(out.m_terms.end(), e, c);
        }
    }
    return out;
}

MultiPoly MultiPoly::drop_last_variable() const
{
    if (m_arity == 0) {
        throw std::logic_error("no variable to drop");
    }
    MultiPoly out(m_arity - 1);
    for (const auto &[e, c] : m_terms) {
        if (e.back() == 0) {
            out.add_term(Exponents(e.begin(), e.end() - 1), c);
        }
    }
    return out;
}

std::vector<BigInt> MultiPoly::diagonal() const
{
    std::vector<BigInt> out(static_cast<std::size_t>(std::max(0L, total_degree() + 1)));
    for (const auto &[e, c] : m_terms) {
        out[staircase::total_degree(e)] += c;
    }
    return out;
}

void MultiPoly::check_arity(const MultiPoly &other) const
{
    if (m_arity != other.m_arity) {
        throw std::invalid_argument("polynomial arity mismatch");
    }
}

MultiPoly operator+(const MultiPoly &lhs, const MultiPoly &rhs)
{
    lhs.check_arity(rhs);
    auto out = lhs;
    for (const auto &[e, c] : rhs.m_terms) {
        out.add_term(e, c);
    }
    return out;
}

MultiPoly operator-(const MultiPoly &lhs, const MultiPoly &rhs)
{
    lhs.check_arity(rhs);
    auto out = lhs;
    for (const auto &[e, c] : rhs.m_terms) {
        out.add_term(e, -c);
    }
    return out;
}

MultiPoly operator*(const MultiPoly &lhs, const MultiPoly &rhs)
{
    return multiply_truncated(lhs, rhs, std::nullopt);
}

MultiPoly multiply_truncated(const MultiPoly &lhs, const MultiPoly &rhs, std::optional<std::uint64_t> max_degree)
{
    if (lhs.arity() != rhs.arity()) {
        throw std::invalid_argument("polynomial arity mismatch");
    }
    MultiPoly out(lhs.arity());
    Exponents e(lhs.arity());
    for (const auto &[el, cl] : lhs.terms()) {
        const auto dl = total_degree(el);
        for (const auto &[er, cr] : rhs.terms()) {
            // rhs is sorted by degree, so the rest is too heavy once one term is.
            if (max_degree && dl + total_degree(er) > *max_degree) {
                break;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = el[i] + er[i];
            }
            out.add_term(e, cl * cr);
        }
    }
    return out;
}

std::string MultiPoly::to_string() const
{
    std::string out;
    for (const auto &[e, c] : m_terms) {
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!monomial.empty()) {
                monomial += '*';
            }
            monomial += "x" + std::to_string(i + 1);
            if (e[i] > 1) {
                monomial += "^" + std::to_string(e[i]);
            }
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
