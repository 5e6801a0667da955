#include <staircase/partition.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

namespace staircase
{

ParseError::ParseError(const std::string &what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), m_position(position)
{
}

namespace
{

void validate(const std::vector<Part> &parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

} // namespace

Partition::Partition(std::vector<Part> parts) : m_parts(std::move(parts))
{
    validate(m_parts);
}

Partition::Partition(std::initializer_list<Part> parts) : m_parts(parts)
{
    validate(m_parts);
}

Partition Partition::parse(std::string_view text)
{
    if (text.empty() || text == "0") {
        return {};
    }
    std::vector<Part> parts;
    std::size_t pos = 0;
    bool seen_zero = false;
    while (true) {
        const auto start = pos;
        Part value = 0;
        const auto *first = text.data() + pos;
        const auto *last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) {
            throw ParseError("expected a non-negative integer part", start);
        }
        if (value < 0) {
            throw ParseError("negative part", start);
        }
        if (value > 0 && seen_zero) {
            throw ParseError("positive part after a zero part", start);
        }
        if (!parts.empty() && value > parts.back()) {
            throw ParseError("parts are not weakly decreasing", start);
        }
        if (value == 0) {
            seen_zero = true;
        } else {
            parts.push_back(value);
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != ',') {
            throw ParseError("expected ','", pos);
        }
        ++pos;
    }
    return Partition(std::move(parts));
}

Part Partition::weight() const noexcept
{
    return std::accumulate(m_parts.begin(), m_parts.end(), Part{0});
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < m_parts.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(m_parts[i]);
    }
    return out;
}

Partition operator+(const Partition &lhs, const Partition &rhs)
{
    const auto len = std::max(lhs.num_parts(), rhs.num_parts());
    std::vector<Part> parts(len);
    for (std::size_t k = 1; k <= len; ++k) {
        parts[k - 1] = lhs.part(k) + rhs.part(k);
    }
    return Partition(std::move(parts));
}

bool FerrersDiagram::contains(const LatticePoint &p) const
{
    return std::binary_search(points.begin(), points.end(), p);
}

bool FerrersDiagram::is_order_ideal() const
{
    // Closed under the two unit steps towards the origin suffices.
    return std::all_of(points.begin(), points.end(), [this](const LatticePoint &p) {
        return (p.a == 0 || contains({p.a - 1, p.b})) && (p.b == 0 || contains({p.a, p.b - 1}));
    });
}

Partition conjugate(const Partition &lambda)
{
    std::vector<Part> mu(static_cast<std::size_t>(lambda.largest()), 0);
    for (const auto p : lambda.parts()) {
        for (Part i = 0; i < p; ++i) {
            ++mu[static_cast<std::size_t>(i)];
        }
    }
    return Partition(std::move(mu));
}

FerrersDiagram ferrers(const Partition &lambda)
{
    FerrersDiagram diagram;
    diagram.points.reserve(static_cast<std::size_t>(lambda.weight()));
    for (std::size_t j = 0; j < lambda.num_parts(); ++j) {
        for (Part i = 0; i < lambda.part(j + 1); ++i) {
            diagram.points.push_back({i, static_cast<Part>(j)});
        }
    }
    std::sort(diagram.points.begin(), diagram.points.end());
    return diagram;
}

std::vector<Part> diff(const Partition &lambda)
{
    std::vector<Part> out(lambda.num_parts() + 2);
    for (std::size_t l = 1; l <= out.size(); ++l) {
        out[l - 1] = lambda.part(l) - lambda.part(l + 1);
    }
    return out;
}

std::vector<Part> diff2(const Partition &lambda)
{
    std::vector<Part> out(lambda.num_parts() + 2);
    for (std::size_t l = 1; l <= out.size(); ++l) {
        out[l - 1] = lambda.part(l) - 2 * lambda.part(l + 1) + lambda.part(l + 2);
    }
    return out;
}

} // namespace staircase
