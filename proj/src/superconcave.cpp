#include <staircase/superconcave.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace staircase
{

bool is_superconcave(const Partition &lambda)
{
    const auto d2 = diff2(lambda);
    return std::all_of(d2.begin(), d2.end(), [](Part x) { return x >= 0; });
}

LinearForm::LinearForm(std::vector<Part> coefficients) : m_coefficients(std::move(coefficients))
{
    trim();
}

void LinearForm::trim()
{
    while (!m_coefficients.empty() && m_coefficients.back() == 0) {
        m_coefficients.pop_back();
    }
}

LinearForm LinearForm::unit(std::size_t i)
{
    if (i < 1) {
        throw std::invalid_argument("coordinates are 1-based");
    }
    std::vector<Part> c(i, 0);
    c[i - 1] = 1;
    return LinearForm(std::move(c));
}

LinearForm LinearForm::second_difference(std::size_t l)
{
    return Part{-1} * unit(l) + Part{2} * unit(l + 1) + Part{-1} * unit(l + 2);
}

Part LinearForm::apply(const Partition &lambda) const noexcept
{
    Part acc = 0;
    for (std::size_t i = 1; i <= m_coefficients.size(); ++i) {
        acc += m_coefficients[i - 1] * lambda.part(i);
    }
    return acc;
}

LinearForm &LinearForm::operator+=(const LinearForm &other)
{
    if (other.m_coefficients.size() > m_coefficients.size()) {
        m_coefficients.resize(other.m_coefficients.size(), 0);
    }
    for (std::size_t i = 0; i < other.m_coefficients.size(); ++i) {
        m_coefficients[i] += other.m_coefficients[i];
    }
    trim();
    return *this;
}

LinearForm operator*(Part scalar, const LinearForm &form)
{
    auto c = form.m_coefficients;
    for (auto &x : c) {
        x *= scalar;
    }
    return LinearForm(std::move(c));
}

LinearForm triple_form(std::size_t i, std::size_t j, std::size_t k, TripleSign sign)
{
    if (!(1 <= i && i < j && j < k)) {
        throw std::invalid_argument("triple_form requires 1 <= i < j < k");
    }
    const auto si = static_cast<Part>(i);
    const auto sj = static_cast<Part>(j);
    const auto sk = static_cast<Part>(k);
    const Part last = sign == TripleSign::corrected ? si - sj : sj - si;
    return (sj - sk) * LinearForm::unit(i) + (sk - si) * LinearForm::unit(j) + last * LinearForm::unit(k);
}

bool satisfies_triple_inequalities(const Partition &lambda, TripleSign sign)
{
    const auto bound = lambda.num_parts() + 2;
    for (std::size_t k = 3; k <= bound; ++k) {
        for (std::size_t j = 2; j < k; ++j) {
            for (std::size_t i = 1; i < j; ++i) {
                if (triple_form(i, j, k, sign).apply(lambda) > 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

LinearForm poslincomb_expansion(std::size_t j, std::size_t k, PoslincombReading reading)
{
    if (!(1 < j && j < k)) {
        throw std::invalid_argument("poslincomb requires 1 < j < k");
    }
    const auto sj = static_cast<Part>(j);
    const auto sk = static_cast<Part>(k);
    LinearForm sum;
    for (std::size_t l = 1; l + 2 <= j; ++l) {
        const auto sl = static_cast<Part>(l);
        sum += (sl * (sk - sj)) * LinearForm::second_difference(l);
    }
    for (std::size_t l = j - 1; l + 2 <= k; ++l) {
        const auto sl = static_cast<Part>(l);
        Part coef = (sj - 1) * (sk - sl - 1);
        if (reading == PoslincombReading::scaled) {
            coef *= sl;
        }
        sum += coef * LinearForm::second_difference(l);
    }
    return sum;
}

std::vector<PoslincombReading> PoslincombReport::validating() const
{
    std::vector<PoslincombReading> out;
    if (scaled) {
        out.push_back(PoslincombReading::scaled);
    }
    if (corrected) {
        out.push_back(PoslincombReading::corrected);
    }
    return out;
}

PoslincombReport check_poslincomb(std::size_t j, std::size_t k)
{
    const auto target = triple_form(1, j, k);
    PoslincombReport report;
    report.j = j;
    report.k = k;
    report.scaled = poslincomb_expansion(j, k, PoslincombReading::scaled) == target;
    report.corrected = poslincomb_expansion(j, k, PoslincombReading::corrected) == target;
    return report;
}

TriangularDecomposition::TriangularDecomposition(std::vector<Part> multiplicities)
    : m_multiplicities(std::move(multiplicities))
{
    if (std::any_of(m_multiplicities.begin(), m_multiplicities.end(), [](Part c) { return c < 0; })) {
        throw std::invalid_argument("multiplicities must be non-negative");
    }
    while (!m_multiplicities.empty() && m_multiplicities.back() == 0) {
        m_multiplicities.pop_back();
    }
}

TriangularDecomposition TriangularDecomposition::parse(std::string_view text)
{
    std::vector<Part> c;
    if (text.empty()) {
        return {};
    }
    std::size_t pos = 0;
    while (true) {
        Part value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || ptr == text.data() + pos || value < 0) {
            throw ParseError("expected a non-negative multiplicity", pos);
        }
        c.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != ',') {
            throw ParseError("expected ','", pos);
        }
        ++pos;
    }
    return TriangularDecomposition(std::move(c));
}

std::string TriangularDecomposition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < m_multiplicities.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(m_multiplicities[i]);
    }
    return out;
}

Part TriangularDecomposition::weight() const noexcept
{
    Part w = 0;
    for (std::size_t i = 1; i <= m_multiplicities.size(); ++i) {
        w += m_multiplicities[i - 1] * triangular(static_cast<Part>(i));
    }
    return w;
}

Partition TriangularDecomposition::triangular_parts() const
{
    std::vector<Part> parts;
    for (std::size_t i = m_multiplicities.size(); i >= 1; --i) {
        parts.insert(parts.end(), static_cast<std::size_t>(m_multiplicities[i - 1]),
                     triangular(static_cast<Part>(i)));
    }
    return Partition(std::move(parts));
}

TriangularDecomposition decompose(const Partition &lambda)
{
    auto c = diff2(lambda);
    if (std::any_of(c.begin(), c.end(), [](Part x) { return x < 0; })) {
        throw std::invalid_argument("partition " + lambda.to_string() + " is not super-concave");
    }
    return TriangularDecomposition(std::move(c));
}

Partition recompose(const TriangularDecomposition &c)
{
    // lambda_m = sum_{i >= m} c_i (i - m + 1), accumulated from the top.
    const auto &mult = c.multiplicities();
    std::vector<Part> parts(mult.size());
    Part count = 0;
    Part value = 0;
    for (std::size_t m = mult.size(); m >= 1; --m) {
        count += mult[m - 1];
        value += count;
        parts[m - 1] = value;
    }
    return Partition(std::move(parts));
}

std::vector<BigInt> superconcave_counts(std::size_t max_n, std::optional<std::size_t> r)
{
    std::vector<BigInt> ways(max_n + 1);
    ways[0] = 1;
    for (std::size_t i = 1; !r || i <= *r; ++i) {
        const auto coin = static_cast<std::size_t>(triangular(static_cast<Part>(i)));
        if (coin > max_n) {
            break;
        }
        for (std::size_t n = coin; n <= max_n; ++n) {
            ways[n] += ways[n - coin];
        }
    }
    return ways;
}

BigInt count_superconcave(std::size_t n, std::optional<std::size_t> r)
{
    return superconcave_counts(n, r).back();
}

} // namespace staircase
