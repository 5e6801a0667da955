#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <staircase/bigint.hpp>
#include <staircase/multipoly.hpp>
#include <staircase/partition.hpp>

namespace staircase
{

struct PredicateRecord {
    Partition partition;
    bool concave = false;
    bool superconcave = false;
    Partition closure;

    friend bool operator==(const PredicateRecord &, const PredicateRecord &) = default;
};

struct CountRecord {
    std::string kind; // all, concave, superconcave
    std::size_t n = 0;
    std::optional<std::size_t> r;
    BigInt value;

    friend bool operator==(const CountRecord &, const CountRecord &) = default;
};

struct SeriesRecord {
    std::string name;
    std::optional<std::size_t> r;
    std::size_t trunc = 0;
    std::vector<BigInt> coefficients;

    friend bool operator==(const SeriesRecord &, const SeriesRecord &) = default;
};

struct PolynomialRecord {
    std::string name;
    std::size_t r = 0;
    MultiPoly polynomial;

    friend bool operator==(const PolynomialRecord &, const PolynomialRecord &) = default;
};

struct AsymptoticRecord {
    std::size_t n = 0;
    BigInt exact;
    double estimate = 0;
    double ratio = 0;

    friend bool operator==(const AsymptoticRecord &, const AsymptoticRecord &) = default;
};

using OutputRecord = std::variant<PredicateRecord, CountRecord, SeriesRecord, PolynomialRecord, AsymptoticRecord>;

enum class Format { plain, json, csv, bfile };

Format parse_format(std::string_view name);

// A record that has no representation in the requested format.
class FormatError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Shortest round-trip digits in fixed notation, never scientific.
std::string format_real(double value);
double parse_real(std::string_view text);

// One JSON object, no trailing newline. Keys, in order:
//   predicate:   type, partition, concave, superconcave, closure
//   count:       type, kind, n, r, value
//   series:      type, name, r, trunc, coefficients
//   polynomial:  type, name, r, terms[{exponents, coefficient}]
//   asymptotic:  type, n, exact, estimate, ratio
// Big integers and reals are JSON strings; an absent r is null.
std::string to_json_line(const OutputRecord &record);
OutputRecord parse_json_line(std::string_view line);

// Writes records in one format. CSV emits a header before the first record
// of each kind.
class RecordWriter
{
public:
    RecordWriter(std::ostream &out, Format format);

    void write(const OutputRecord &record);

private:
    std::ostream &m_out;
    Format m_format;
    std::optional<std::size_t> m_csv_kind;
};

} // namespace staircase
