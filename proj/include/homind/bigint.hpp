#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace homind {

using BigInt = boost::multiprecision::cpp_int;

/// Number of bits needed to write x (0 for x == 0).
inline std::size_t bit_length(const BigInt & x)
{
    return x == 0 ? 0 : boost::multiprecision::msb(x) + 1;
}

/// ceil(log2 x) for x >= 1.
inline std::size_t ceil_log2(const BigInt & x)
{
    if (x <= 1)
        return 0;
    const std::size_t top = boost::multiprecision::msb(x);
    return (x == (BigInt(1) << top)) ? top : top + 1;
}

inline std::string to_hex(const BigInt & x)
{
    if (x == 0)
        return "0x0";
    std::string out;
    BigInt v = x;
    while (v > 0) {
        const unsigned digit = static_cast<unsigned>(v & 15);
        out.insert(out.begin(), "0123456789abcdef"[digit]);
        v >>= 4;
    }
    return "0x" + out;
}

/// Accepts decimal or 0x-prefixed hexadecimal; throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

} // namespace homind
