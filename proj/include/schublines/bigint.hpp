#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace schublines {

using BigInt = boost::multiprecision::cpp_int;
using u128 = unsigned __int128;

inline BigInt to_bigint(u128 v) {
  BigInt r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal string. Throws std::invalid_argument
/// on anything else.
BigInt parse_decimal(std::string_view text);

}  // namespace schublines
