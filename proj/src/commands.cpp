#include <staircase/commands.hpp>

#include <algorithm>
#include <charconv>

#include <staircase/closure.hpp>
#include <staircase/enumerate.hpp>
#include <staircase/genfun.hpp>
#include <staircase/render.hpp>
#include <staircase/superconcave.hpp>

namespace staircase
{

namespace
{

std::size_t parse_size(std::string_view text, std::size_t offset)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("expected a non-negative integer", offset);
    }
    return value;
}

std::size_t require_r(std::string_view name, std::optional<std::size_t> r)
{
    if (!r) {
        throw UsageError(std::string(name) + " needs --r");
    }
    return *r;
}

} // namespace

CountRange CountRange::parse(std::string_view text)
{
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto n = parse_size(text, 0);
        return {n, n};
    }
    CountRange range{parse_size(text.substr(0, dots), 0), parse_size(text.substr(dots + 2), dots + 2)};
    if (range.first > range.last) {
        throw ParseError("empty range", dots);
    }
    return range;
}

PredicateRecord cmd_check(std::string_view partition_text)
{
    const auto lambda = Partition::parse(partition_text);
    return {lambda, is_concave(lambda), is_superconcave(lambda), integral_closure(lambda)};
}

std::vector<CountRecord> cmd_count(std::string_view kind, CountRange range, std::optional<std::size_t> r)
{
    std::vector<BigInt> values;
    if (kind == "all") {
        values = partition_counts(range.last, r);
    } else if (kind == "concave") {
        values = concave_counts(range.last, r);
    } else if (kind == "superconcave") {
        values = superconcave_counts(range.last, r);
    } else {
        throw UsageError("unknown count kind '" + std::string(kind) + "' (all, concave, superconcave)");
    }
    std::vector<CountRecord> rows;
    for (auto n = range.first; n <= range.last; ++n) {
        rows.push_back({std::string(kind), n, r, values[n]});
    }
    return rows;
}

OutputRecord cmd_series(std::string_view name, std::optional<std::size_t> r, std::size_t trunc, bool expensive)
{
    const std::string label(name);
    auto dump = [&](const UniSeries &s, std::optional<std::size_t> rr) {
        return SeriesRecord{label, rr, s.order(), s.coefficients()};
    };
    if (name == "PS") {
        return dump(ps_series(std::nullopt, trunc), std::nullopt);
    }
    if (name == "PSr") {
        return dump(ps_series(require_r(name, r), trunc), r);
    }
    if (name == "PC") {
        return dump(pc_series(std::nullopt, trunc), std::nullopt);
    }
    if (name == "PCr") {
        return dump(pc_series(require_r(name, r), trunc), r);
    }
    if (name == "Qr") {
        return dump(extract_qr(require_r(name, r)), r);
    }
    if (name == "Qr-multi") {
        const auto rr = require_r(name, r);
        return PolynomialRecord{label, rr, extract_qr_multivariate(rr, expensive)};
    }
    throw UsageError("unknown series '" + label + "' (PS, PSr, PC, PCr, Qr, Qr-multi)");
}

std::string cmd_render(std::string_view partition_text, std::string_view style, bool with_closure)
{
    const auto lambda = Partition::parse(partition_text);
    if (style == "ascii") {
        return render_ascii(lambda, with_closure);
    }
    if (style == "svg") {
        return render_svg(lambda, with_closure);
    }
    throw UsageError("unknown style '" + std::string(style) + "' (ascii, svg)");
}

std::vector<AsymptoticRecord> cmd_asymptotic(const std::vector<std::size_t> &ns)
{
    if (ns.empty()) {
        return {};
    }
    if (std::find(ns.begin(), ns.end(), 0) != ns.end()) {
        throw UsageError("asymptotic rows need n >= 1");
    }
    const auto exact = superconcave_counts(*std::max_element(ns.begin(), ns.end()));
    std::vector<AsymptoticRecord> rows;
    for (const auto n : ns) {
        const double estimate = asymptotic_estimate(n);
        rows.push_back({n, exact[n], estimate, exact[n].convert_to<double>() / estimate});
    }
    return rows;
}

} // namespace staircase
