#pragma once

#include <stdexcept>
#include <string>

#include "dtriple/ring.hpp"

namespace dtriple {

// Affine point or the point at infinity.
template <class F>
struct CurvePoint {
  F x;
  F y;
  bool infinite = false;

  static CurvePoint at_infinity() { return {F(), F(), true}; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.x == b.x && a.y == b.y;
  }
};

// y^2 = (x + p)(x + q)(x + r) over the field F (Rat or GRat), with p, q, r
// pairwise distinct. Expanded form y^2 = x^3 + A x^2 + B x + C.
template <class F>
class TripleCurve {
 public:
  using Point = CurvePoint<F>;

  TripleCurve(F p, F q, F r) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
    if (p_ == q_ || p_ == r_ || q_ == r_) {
      throw std::invalid_argument("degenerate cubic: repeated root " + p_.str() + ", " +
                                  q_.str() + ", " + r_.str());
    }
    a_ = p_ + q_ + r_;
    b_ = p_ * q_ + p_ * r_ + q_ * r_;
    c_ = p_ * q_ * r_;
  }

  // The curve induced by {a, b, c}: p, q, r = ab, ac, bc.
  static TripleCurve from_triple(const F& a, const F& b, const F& c) {
    return TripleCurve(a * b, a * c, b * c);
  }

  const F& p() const { return p_; }
  const F& q() const { return q_; }
  const F& r() const { return r_; }
  const F& coeff_a() const { return a_; }
  const F& coeff_b() const { return b_; }
  const F& coeff_c() const { return c_; }

  F rhs(const F& x) const { return (x + p_) * (x + q_) * (x + r_); }

  bool on_curve(const Point& pt) const {
    if (pt.infinite) return true;
    return pt.y * pt.y == rhs(pt.x);
  }

  Point negate(const Point& pt) const {
    if (pt.infinite) return pt;
    return {pt.x, -pt.y, false};
  }

  Point double_point(const Point& pt) const {
    require_on_curve(pt);
    if (pt.infinite || pt.y.is_zero()) return Point::at_infinity();
    const F lambda = (F(3) * pt.x * pt.x + F(2) * a_ * pt.x + b_) / (F(2) * pt.y);
    return third_point(lambda, pt.x, pt.x, pt.y);
  }

  Point add(const Point& lhs, const Point& rhs_pt) const {
    require_on_curve(lhs);
    require_on_curve(rhs_pt);
    if (lhs.infinite) return rhs_pt;
    if (rhs_pt.infinite) return lhs;
    if (lhs.x == rhs_pt.x) {
      if (lhs.y == -rhs_pt.y) return Point::at_infinity();
      return double_point(lhs);
    }
    const F lambda = (rhs_pt.y - lhs.y) / (rhs_pt.x - lhs.x);
    return third_point(lambda, lhs.x, rhs_pt.x, lhs.y);
  }

  Point multiply(long k, const Point& pt) const {
    Point base = k < 0 ? negate(pt) : pt;
    unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Point acc = Point::at_infinity();
    while (n != 0) {
      if (n & 1ul) acc = add(acc, base);
      n >>= 1;
      if (n != 0) base = double_point(base);
    }
    return acc;
  }

  // A point is in 2E(F) iff x + p, x + q and x + r are all squares in F.
  bool is_twice_point(const Point& pt) const {
    if (pt.infinite) throw std::invalid_argument("is_twice_point needs a finite point");
    require_on_curve(pt);
    return field_sqrt(pt.x + p_) && field_sqrt(pt.x + q_) && field_sqrt(pt.x + r_);
  }

 private:
  void require_on_curve(const Point& pt) const {
    if (!on_curve(pt)) {
      throw std::invalid_argument("point (" + pt.x.str() + ", " + pt.y.str() + ") is not on the curve");
    }
  }

  Point third_point(const F& lambda, const F& x1, const F& x2, const F& y1) const {
    F x3 = lambda * lambda - a_ - x1 - x2;
    F y3 = lambda * (x1 - x3) - y1;
    return {std::move(x3), std::move(y3), false};
  }

  F p_, q_, r_;
  F a_, b_, c_;
};

// x(2P) for P = (0, abc): (a+b+c)^2/4 - ab - ac - bc, evaluated without
// going through the doubling routine so it stays defined when abc = 0.
template <class F>
F x_2P(const F& a, const F& b, const F& c) {
  const F s = a + b + c;
  return s * s / F(4) - a * b - a * c - b * c;
}

// Closed form of x(S + 2P) for S = (-1, sign*rst) on the curve of a D(-1)
// triple, with r, s, t the canonical roots of ab-1, ac-1, bc-1 and the
// symmetric denominator 4((a+b+c)^2 - 4ab - 4ac - 4bc + 4)^2.
// Throws std::invalid_argument if the triple is not D(-1) and
// std::domain_error if the denominator vanishes.
template <class Ring>
typename Ring::Field x_S_plus_2P(const typename Ring::Elem& a, const typename Ring::Elem& b,
                                 const typename Ring::Elem& c, int sign) {
  using E = typename Ring::Elem;
  using F = typename Ring::Field;
  const E one(1);
  auto root = [](const E& v, const char* label) {
    auto w = Ring::sqrt(v);
    if (!w) throw std::invalid_argument(std::string(label) + " = " + Ring::str(v) + " is not a square");
    return *w;
  };
  const E r = root(a * b - one, "ab-1");
  const E s = root(a * c - one, "ac-1");
  const E t = root(b * c - one, "bc-1");

  const E f1 = a + b + c;
  const E ab = a * b, ac = a * c, bc = b * c;
  const E four(4);
  const E rst8 = E(8) * r * s * t;
  const E tail = E(8) * a * b * c + (f1 * f1 - four * ab - four * bc - four * ac) * f1;
  const E num = sign >= 0 ? tail + rst8 : tail - rst8;
  const E den_base = f1 * f1 - four * ab - four * ac - four * bc + four;
  if (den_base == E(0)) throw std::domain_error("x(S+2P) denominator vanishes");

  const F fnum = Ring::to_field(num * num);
  const F fden = Ring::to_field(four * den_base * den_base);
  return F(-1) / F(4) * Ring::to_field(f1 * f1) + F(1) + fnum / fden;
}

template <class E>
struct EFactors {
  E e1;
  E e2;
  E e3;
};

// The three factors whose product vanishes iff x(S+2P) = 2 - a - b - c.
// e3 is evaluated both expanded and through f1 = a+b+c, f2 = ab+ac+bc,
// f3 = abc; a disagreement throws std::logic_error.
template <class E>
EFactors<E> e_factors(const E& a, const E& b, const E& c) {
  const E two(2), four(4), eight(8);
  const E quad = a * a - two * a * b + b * b - two * a * c - two * b * c + c * c;
  const E lin = four * a + four * b + four * c;

  E e1 = quad + four;
  E e2 = eight * a * b * c + quad - lin + eight;

  const E a2 = a * a, b2 = b * b, c2 = c * c;
  E e3 = a2 * a2 - two * a2 * b2 + b2 * b2 - two * a2 * c2 - two * b2 * c2 + c2 * c2 -
         two * a2 * a + two * a2 * b + two * a * b2 - two * b2 * b + two * a2 * c +
         four * a * b * c + two * b2 * c + two * a * c2 + two * b * c2 - two * c2 * c + quad -
         lin + eight;

  const E f1 = a + b + c;
  const E f2 = a * b + a * c + b * c;
  const E f3 = a * b * c;
  const E f1m = f1 - E(1);
  const E e3_sym = (f1 * f1 - four * f2) * f1m * f1m + (eight * f3 - four) * f1m + four;
  if (!(e3 == e3_sym)) {
    throw std::logic_error("e3 expanded and symmetric forms disagree");
  }
  return {std::move(e1), std::move(e2), std::move(e3)};
}

}  // namespace dtriple
