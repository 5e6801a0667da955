#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <staircase/records.hpp>

namespace staircase
{

// Bad command-line input: exit code 1.
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct CountRange {
    std::size_t first = 0;
    std::size_t last = 0;

    // `A..B` or a single `N`.
    static CountRange parse(std::string_view text);
};

PredicateRecord cmd_check(std::string_view partition_text);

// kind is one of all, concave, superconcave.
std::vector<CountRecord> cmd_count(std::string_view kind, CountRange range, std::optional<std::size_t> r);

// name is one of PS, PSr, PC, PCr, Qr, Qr-multi. `trunc` is the truncation
// order of the series names and ignored by the numerators.
OutputRecord cmd_series(std::string_view name, std::optional<std::size_t> r, std::size_t trunc, bool expensive);

// style is ascii or svg.
std::string cmd_render(std::string_view partition_text, std::string_view style, bool with_closure);

std::vector<AsymptoticRecord> cmd_asymptotic(const std::vector<std::size_t> &ns);

} // namespace staircase
