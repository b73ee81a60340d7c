#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "dtriple/integer.hpp"

namespace dtriple {

// Exact rational, always stored reduced with a positive denominator, so two
// equal values have identical num/den.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(int v) : num_(v), den_(1) {}
  Rat(long v) : num_(v), den_(1) {}
  Rat(Int v) : num_(std::move(v)), den_(1) {}
  // Throws std::domain_error when den is zero.
  Rat(Int num, Int den);

  // "p" or "p/q".
  static Rat parse(std::string_view text);
  // Always "num/den".
  std::string str() const { return num_.str() + "/" + den_.str(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Int(1); }

  Rat operator-() const { return Rat(-num_, den_, Canonical{}); }
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  // Throws std::domain_error on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.str(); }

 private:
  struct Canonical {};
  Rat(Int num, Int den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  Int num_;
  Int den_;
};

// Canonical nonnegative root when q is the square of a rational.
std::optional<Rat> rat_as_square(const Rat& q);

}  // namespace dtriple
