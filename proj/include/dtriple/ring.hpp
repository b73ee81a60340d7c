#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtriple/gaussian.hpp"
#include "dtriple/integer.hpp"
#include "dtriple/rational.hpp"

namespace dtriple {

enum class RingTag { integers, gaussian };

// "z" or "zi".
std::string_view ring_name(RingTag tag);
// Throws std::invalid_argument for anything but "z" / "zi".
RingTag parse_ring(std::string_view text);

// Square roots in the fraction fields, used by the curve code.
inline std::optional<Rat> field_sqrt(const Rat& q) { return rat_as_square(q); }
inline std::optional<GRat> field_sqrt(const GRat& q) { return grat_as_square(q); }

// Z together with its fraction field Q.
struct IntegerRing {
  using Elem = Int;
  using Field = Rat;
  static constexpr RingTag tag = RingTag::integers;

  static std::optional<Int> sqrt(const Int& v) { return as_square(v); }
  static Rat to_field(const Int& v) { return Rat(v); }
  static std::optional<Int> from_field(const Rat& q) {
    if (!q.is_integer()) return std::nullopt;
    return q.num();
  }
  static bool is_even(const Int& v) { return v.is_even(); }
  static std::optional<Int> quotient(const Int& n, const Int& d) {
    if (d.is_zero() || !divides(d, n)) return std::nullopt;
    return div_exact(n, d);
  }
  static std::vector<Int> units() { return {Int(1), Int(-1)}; }
  static Int parse(std::string_view text) { return Int::parse(text); }
  static std::string str(const Int& v) { return v.str(); }
  static Int norm(const Int& v) { return v * v; }
};

// Z[i] together with its fraction field Q(i).
struct GaussianRing {
  using Elem = GInt;
  using Field = GRat;
  static constexpr RingTag tag = RingTag::gaussian;

  static std::optional<GInt> sqrt(const GInt& v) { return gint_as_square(v); }
  static GRat to_field(const GInt& v) { return GRat(v); }
  static std::optional<GInt> from_field(const GRat& q) { return q.as_gint(); }
  // Divisibility by 2, not by 1+i.
  static bool is_even(const GInt& v) { return v.re.is_even() && v.im.is_even(); }
  static std::optional<GInt> quotient(const GInt& n, const GInt& d) {
    if (d.is_zero() || !divides(d, n)) return std::nullopt;
    return div_exact(n, d);
  }
  static std::vector<GInt> units() { return {GInt(1), GInt(-1), GInt::i(), -GInt::i()}; }
  static GInt parse(std::string_view text) { return GInt::parse(text); }
  static std::string str(const GInt& v) { return v.str(); }
  static Int norm(const GInt& v) { return dtriple::norm(v); }
};

}  // namespace dtriple
