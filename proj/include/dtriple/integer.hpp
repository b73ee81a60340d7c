#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dtriple {

// Arbitrary-precision signed integer. Immutable in practice: every operation
// returns a fresh value, so instances may be shared freely across threads.
class Int {
 public:
  Int() = default;
  Int(int v) : v_(static_cast<long>(v)) {}
  Int(long v) : v_(v) {}
  Int(long long v);
  explicit Int(mpz_class v) : v_(std::move(v)) {}

  // Decimal with optional leading '-' (ASCII or U+2212). Throws
  // std::invalid_argument on anything else.
  static Int parse(std::string_view text);
  std::string str() const { return v_.get_str(); }

  const mpz_class& mpz() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }
  bool is_odd() const { return !is_even(); }
  std::size_t bit_length() const;
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const { return v_.get_si(); }
  // Nonnegative residue modulo m (m > 0).
  unsigned long mod_ui(unsigned long m) const;

  Int operator-() const { return Int(mpz_class(-v_)); }
  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }

  friend bool operator==(const Int& a, const Int& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

 private:
  mpz_class v_;
};

Int abs(const Int& v);
Int gcd(const Int& a, const Int& b);
Int pow(const Int& base, unsigned long exp);

// Quotient rounded toward negative infinity; throws std::domain_error on d = 0.
Int floor_div(const Int& n, const Int& d);
// Remainder matching floor_div: sign of d.
Int floor_mod(const Int& n, const Int& d);
// n / d when d | n; throws std::domain_error otherwise.
Int div_exact(const Int& n, const Int& d);
bool divides(const Int& d, const Int& n);

// Largest s with s*s <= n. Throws std::domain_error for n < 0.
Int isqrt(const Int& n);

// Nonnegative s with s*s == n, if any. Negative n has no root over Z.
std::optional<Int> as_square(const Int& n);

}  // namespace dtriple
