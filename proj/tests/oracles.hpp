#pragma once

// Independent brute-force references used only by the tests. Nothing here
// calls into the library's square-root, Pell or curve code.

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>

namespace oracle {

using i128 = __int128;

// Exact floor(sqrt(n)) for 0 <= n < 2^126 by float guess plus correction.
inline i128 floor_sqrt(i128 n) {
  if (n < 0) return -1;
  i128 s = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

inline std::optional<i128> square_root(i128 n) {
  if (n < 0) return std::nullopt;
  const i128 s = floor_sqrt(n);
  if (s * s != n) return std::nullopt;
  return s;
}

// Smallest y in [1, cap] with D*y^2 + 1 a square, or nullopt if none.
inline std::optional<std::pair<i128, i128>> smallest_pell(long d, long cap) {
  for (i128 y = 1; y <= cap; ++y) {
    if (auto x = square_root(d * y * y + 1)) return std::make_pair(*x, y);
  }
  return std::nullopt;
}

// n != 0 with a*b + n, a*c + n, b*c + n all squares in Z and
// 0 <= a*b + n <= bound^2, by direct enumeration of n.
inline std::set<long> direct_spectrum(long a, long b, long c, long bound) {
  std::set<long> out;
  const long ab = a * b, ac = a * c, bc = b * c;
  for (long n = -ab; n <= bound * bound - ab; ++n) {
    if (n == 0) continue;
    if (square_root(ab + n) && square_root(ac + n) && square_root(bc + n)) out.insert(n);
  }
  return out;
}

// Gaussian square root by exhaustive search over |re|, |im| <= limit.
inline std::optional<std::pair<long, long>> gaussian_root_search(long re, long im, long limit) {
  for (long x = 0; x <= limit; ++x) {
    for (long y = -limit; y <= limit; ++y) {
      if (x * x - y * y == re && 2 * x * y == im) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

// d | z in Z[i] by searching q with d*q = z over a box.
inline bool gaussian_divides_search(long dr, long di, long zr, long zi, long limit) {
  for (long qr = -limit; qr <= limit; ++qr) {
    for (long qi = -limit; qi <= limit; ++qi) {
      if (dr * qr - di * qi == zr && dr * qi + di * qr == zi) return true;
    }
  }
  return false;
}

}  // namespace oracle
