#include <staircase/closure.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace staircase
{

StaircaseIdeal::StaircaseIdeal(std::vector<LatticePoint> generators) : m_generators(std::move(generators))
{
    for (const auto &g : m_generators) {
        if (g.a < 0 || g.b < 0) {
            throw std::invalid_argument("generators must lie in N^2");
        }
    }
    for (std::size_t i = 1; i < m_generators.size(); ++i) {
        const auto &p = m_generators[i - 1];
        const auto &q = m_generators[i];
        if (!(p.b < q.b && p.a > q.a)) {
            throw std::invalid_argument("generators must be an antichain sorted by increasing b");
        }
    }
}

StaircaseIdeal StaircaseIdeal::parse(std::string_view text)
{
    std::vector<LatticePoint> points;
    std::size_t pos = 0;
    auto read = [&](char terminator, bool allow_end) {
        const auto start = pos;
        Part value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || ptr == text.data() + pos || value < 0) {
            throw ParseError("expected a non-negative coordinate", start);
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos == text.size()) {
            if (!allow_end) {
                throw ParseError("unexpected end of input", pos);
            }
        } else if (text[pos] != terminator) {
            throw ParseError(std::string("expected '") + terminator + "'", pos);
        } else {
            ++pos;
        }
        return value;
    };
    while (pos < text.size()) {
        const auto start = pos;
        const Part a = read(',', false);
        const Part b = read(';', true);
        if (!points.empty() && !(points.back().b < b && points.back().a > a)) {
            throw ParseError("generators must be an antichain sorted by increasing b", start);
        }
        points.push_back({a, b});
    }
    return StaircaseIdeal(std::move(points));
}

std::string StaircaseIdeal::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < m_generators.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += std::to_string(m_generators[i].a) + ',' + std::to_string(m_generators[i].b);
    }
    return out;
}

bool StaircaseIdeal::is_artinian() const noexcept
{
    return !m_generators.empty() && m_generators.front().b == 0 && m_generators.back().a == 0;
}

bool StaircaseIdeal::contains(const LatticePoint &p) const noexcept
{
    return std::any_of(m_generators.begin(), m_generators.end(),
                       [&p](const LatticePoint &g) { return dominated_by(g, p); });
}

StaircaseIdeal staircase_of(const Partition &lambda)
{
    std::vector<LatticePoint> gens;
    for (std::size_t j = 0; j <= lambda.num_parts(); ++j) {
        // (lambda_{j+1}, j) is a corner when the row is shorter than the one below it.
        if (j == 0 || lambda.part(j + 1) < lambda.part(j)) {
            gens.push_back({lambda.part(j + 1), static_cast<Part>(j)});
        }
    }
    return StaircaseIdeal(std::move(gens));
}

Partition partition_of(const StaircaseIdeal &ideal)
{
    if (!ideal.is_artinian()) {
        throw std::invalid_argument("ideal is not artinian: needs generators on both axes");
    }
    const auto &gens = ideal.generators();
    std::vector<Part> parts;
    // Sorted by increasing b, so the row minimum is the a of the last generator at or below it.
    std::size_t g = 0;
    for (Part row = 0; row < gens.back().b; ++row) {
        while (g + 1 < gens.size() && gens[g + 1].b <= row) {
            ++g;
        }
        parts.push_back(gens[g].a);
    }
    return Partition(std::move(parts));
}

std::vector<LatticePoint> hull_vertices(const StaircaseIdeal &ideal)
{
    std::vector<LatticePoint> hull;
    for (const auto &r : ideal.generators()) {
        while (hull.size() >= 2) {
            const auto &p = hull[hull.size() - 2];
            const auto &q = hull.back();
            // q survives only if its a lies strictly left of the chord p-r at height q.b.
            const Part chord = p.a * (r.b - q.b) + r.a * (q.b - p.b);
            if (q.a * (r.b - p.b) < chord) {
                break;
            }
            hull.pop_back();
        }
        hull.push_back(r);
    }
    return hull;
}

namespace
{

// Ceiling of num/den for den > 0.
Part ceil_div(Part num, Part den)
{
    const Part q = num / den;
    return (num % den != 0 && num > 0) ? q + 1 : q;
}

} // namespace

Partition integral_closure(const Partition &lambda)
{
    const auto hull = hull_vertices(staircase_of(lambda));
    std::vector<Part> parts;
    for (std::size_t v = 0; v + 1 < hull.size(); ++v) {
        const auto &lo = hull[v];
        const auto &hi = hull[v + 1];
        const Part span = hi.b - lo.b;
        for (Part row = lo.b; row < hi.b; ++row) {
            parts.push_back(ceil_div(lo.a * (hi.b - row) + hi.a * (row - lo.b), span));
        }
    }
    return Partition(std::move(parts));
}

bool first_concavity_violation(const Partition &lambda, Triple &out)
{
    const auto r = lambda.num_parts();
    for (std::size_t k = 3; k <= r + 1; ++k) {
        const auto lk = lambda.part(k);
        const auto ik = static_cast<Part>(k);
        for (std::size_t j = 2; j < k; ++j) {
            const auto lj = lambda.part(j);
            const auto ij = static_cast<Part>(j);
            for (std::size_t i = 1; i < j; ++i) {
                const auto ii = static_cast<Part>(i);
                if (lambda.part(i) * (ij - ik) + lj * (ik - ii) + lk * (ii - ij) >= ik - ii) {
                    out = {i, j, k};
                    return true;
                }
            }
        }
    }
    return false;
}

bool is_concave(const Partition &lambda)
{
    Triple unused;
    return !first_concavity_violation(lambda, unused);
}

} // namespace staircase
