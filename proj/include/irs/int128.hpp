#pragma once

#include <cstdint>
#include <string>

#include "irs/errors.hpp"

namespace irs {

using i128 = __int128;
using u128 = unsigned __int128;

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what = "norm") {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(what) + " overflows 64 bits");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what = "value") {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(what) + " overflows 64 bits");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what = "value") {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string(what) + " overflows 64 bits");
  return r;
}

inline i128 checked_mul(i128 a, i128 b, const char* what = "sum") {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(what) + " overflows 128 bits");
  return r;
}

inline i128 checked_add(i128 a, i128 b, const char* what = "sum") {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string(what) + " overflows 128 bits");
  return r;
}

/// Narrows a 128-bit value, throwing instead of truncating.
inline std::int64_t narrow64(i128 v, const char* what = "value") {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError(std::string(what) + " overflows 64 bits");
  return static_cast<std::int64_t>(v);
}

/// Exact decimal rendering; iostreams have no overload for __int128.
inline std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  u128 u = neg ? u128(0) - static_cast<u128>(v) : static_cast<u128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

inline i128 i128_abs(i128 v) { return v < 0 ? -v : v; }

}  // namespace irs
