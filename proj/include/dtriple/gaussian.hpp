#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "dtriple/integer.hpp"
#include "dtriple/rational.hpp"

namespace dtriple {

// Element re + im*i of Z[i].
struct GInt {
  Int re;
  Int im;

  GInt() : re(0), im(0) {}
  GInt(int v) : re(v), im(0) {}
  GInt(long v) : re(v), im(0) {}
  GInt(Int r) : re(std::move(r)), im(0) {}
  GInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

  static GInt i() { return GInt(Int(0), Int(1)); }

  // Accepts sums of integer and imaginary terms in any order: "8-4i",
  // "-4i+8", "i", "-2i", "5". Throws std::invalid_argument.
  static GInt parse(std::string_view text);
  // "a", "bi", "a+bi" or "a-bi", with unit imaginary coefficients elided.
  std::string str() const;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GInt operator-() const { return {-re, -im}; }
  GInt& operator+=(const GInt& o) { re += o.re; im += o.im; return *this; }
  GInt& operator-=(const GInt& o) { re -= o.re; im -= o.im; return *this; }
  GInt& operator*=(const GInt& o);

  friend GInt operator+(GInt a, const GInt& b) { return a += b; }
  friend GInt operator-(GInt a, const GInt& b) { return a -= b; }
  friend GInt operator*(GInt a, const GInt& b) { return a *= b; }

  friend bool operator==(const GInt&, const GInt&) = default;
  // Lexicographic on (re, im); used only for deterministic ordering.
  friend auto operator<=>(const GInt& a, const GInt& b) {
    if (auto c = a.re <=> b.re; c != 0) return c;
    return a.im <=> b.im;
  }

  friend std::ostream& operator<<(std::ostream& os, const GInt& v) { return os << v.str(); }
};

GInt conj(const GInt& z);
Int norm(const GInt& z);

// True iff z / d lies in Z[i]. Throws std::invalid_argument for d = 0.
bool divides(const GInt& d, const GInt& z);
// z / d, which must be exact. Throws std::domain_error otherwise.
GInt div_exact(const GInt& z, const GInt& d);

// Square root in Z[i] on the canonical branch: re > 0, or re = 0 and im >= 0.
std::optional<GInt> gint_as_square(const GInt& z);

// Element of Q(i) with canonical rational components.
struct GRat {
  Rat re;
  Rat im;

  GRat() = default;
  GRat(int v) : re(v) {}
  GRat(long v) : re(v) {}
  GRat(Rat r) : re(std::move(r)) {}
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GRat(const GInt& z) : re(z.re), im(z.im) {}

  std::string str() const;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  // The Gaussian integer this equals, if any.
  std::optional<GInt> as_gint() const;

  GRat operator-() const { return {-re, -im}; }
  GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
  GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }
  GRat& operator*=(const GRat& o);
  // Throws std::domain_error on division by zero.
  GRat& operator/=(const GRat& o);

  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
  friend GRat operator/(GRat a, const GRat& b) { return a /= b; }

  friend bool operator==(const GRat&, const GRat&) = default;

  friend std::ostream& operator<<(std::ostream& os, const GRat& v) { return os << v.str(); }
};

GRat conj(const GRat& q);
Rat norm(const GRat& q);

// Square root in Q(i), same branch convention as gint_as_square.
std::optional<GRat> grat_as_square(const GRat& q);

}  // namespace dtriple
