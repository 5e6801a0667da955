#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace staircase
{

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt &value)
{
    return value.str();
}

// Throws std::invalid_argument on anything but an optionally signed decimal integer.
BigInt parse_decimal(const std::string &text);

} // namespace staircase
