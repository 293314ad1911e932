#ifndef WRZETA_U128_HPP
#define WRZETA_U128_HPP

#include <cstdint>
#include <limits>
#include <string>

#include "wrzeta/errors.hpp"

namespace wrzeta {

using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u128 U128_MAX = ~u128{0};

// a*b with overflow detection; returns false on overflow.
inline bool checked_mul(u128 a, u128 b, u128 &out) {
  if (a != 0 && b > U128_MAX / a)
    return false;
  out = a * b;
  return true;
}

inline u128 checked_pow(u128 base, unsigned exp) {
  u128 r = 1;
  for (unsigned i = 0; i < exp; ++i)
    if (!checked_mul(r, base, r))
      throw MultiplicityOverflow("128-bit overflow in power computation");
  return r;
}

inline std::string u128_to_string(u128 v) {
  if (v == 0)
    return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

// Accepts plain decimal digits, or scientific shorthand like "1e12".
inline u128 parse_u128(const std::string &text) {
  if (text.empty())
    throw BadInput("empty integer literal");
  auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string mant = text.substr(0, epos);
    std::string expo = text.substr(epos + 1);
    if (mant.empty())
      mant = "1";
    auto dot = mant.find('.');
    std::string digits = mant;
    long frac = 0;
    if (dot != std::string::npos) {
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
      frac = long(mant.size() - dot - 1);
    }
    long e = std::stol(expo) - frac;
    if (e < 0)
      throw BadInput("non-integer literal: " + text);
    u128 v = parse_u128(digits);
    for (long i = 0; i < e; ++i)
      if (!checked_mul(v, 10, v))
        throw BadInput("integer literal out of range: " + text);
    return v;
  }
  u128 v = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw BadInput("bad digit in integer literal: " + text);
    if (!checked_mul(v, 10, v))
      throw BadInput("integer literal out of range: " + text);
    u128 d = u128(c - '0');
    if (v > U128_MAX - d)
      throw BadInput("integer literal out of range: " + text);
    v += d;
  }
  return v;
}

inline double u128_to_double(u128 v) {
  return double(std::uint64_t(v >> 64)) * 18446744073709551616.0 +
         double(std::uint64_t(v));
}

} // namespace wrzeta

#endif
