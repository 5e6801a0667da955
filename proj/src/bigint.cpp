#include <staircase/bigint.hpp>

#include <algorithm>
#include <stdexcept>

namespace staircase
{

BigInt parse_decimal(const std::string &text)
{
    const bool signed_text = !text.empty() && (text.front() == '-' || text.front() == '+');
    const auto digits = signed_text ? text.substr(1) : text;
    if (digits.empty()
        || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    }
    BigInt value(digits);
    return text.front() == '-' ? BigInt(-value) : value;
}

} // namespace staircase
