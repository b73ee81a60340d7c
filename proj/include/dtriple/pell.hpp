#pragma once

#include <cstddef>
#include <vector>

#include "dtriple/integer.hpp"

namespace dtriple {

// Element z + y*sqrt(D) of Z[sqrt(D)], written as a (z, y) pair.
struct PellPair {
  Int z;
  Int y;

  friend bool operator==(const PellPair&, const PellPair&) = default;
};

// Fundamental solution of x^2 - D*y^2 = 1.
struct PellUnit {
  Int x1;
  Int y1;
  Int d;

  PellPair pair() const { return {x1, y1}; }
};

// Minimal positive solution of x^2 - D*y^2 = 1 from the continued fraction
// of sqrt(D). Throws std::invalid_argument when D <= 1 or D is a square.
PellUnit fundamental_unit(const Int& d);

// (z + y*sqrt(D)) * (p + q*sqrt(D)).
PellPair compose(const PellPair& s, const PellPair& u, const Int& d);

// z^2 - D*y^2.
Int pell_norm(const PellPair& s, const Int& d);

// One solution class of z^2 - D*y^2 = N: the orbit of `base` under
// multiplication by unit^step.
class PellContext {
 public:
  // Throws std::invalid_argument if D is not a positive nonsquare, the base
  // does not satisfy the equation, or step is not 1 or 2.
  PellContext(Int d, Int n, PellPair base, int step);

  const Int& d() const { return d_; }
  const Int& n() const { return n_; }
  const PellPair& base() const { return base_; }
  const PellUnit& unit() const { return unit_; }
  int step() const { return step_; }
  // unit^step, the multiplier applied between consecutive solutions.
  const PellPair& multiplier() const { return multiplier_; }

  // False when x1 is even or y1 is odd. Squaring the unit still gives an odd
  // first component, so step 2 stays usable for odd-z classes either way.
  bool unit_parity_as_assumed() const { return unit_.x1.is_odd() && unit_.y1.is_even(); }

 private:
  Int d_;
  Int n_;
  PellPair base_;
  PellUnit unit_;
  int step_;
  PellPair multiplier_;
};

// Lazy stream base * unit^(step*t) for t = 1, 2, ... Each stream owns its
// own cursor, so several may walk the same context independently.
class PellSolutions {
 public:
  explicit PellSolutions(const PellContext& ctx) : ctx_(&ctx), current_(ctx.base()) {}

  // Next solution; throws std::logic_error if the norm drifts.
  PellPair next();
  std::size_t index() const { return index_; }

 private:
  const PellContext* ctx_;
  PellPair current_;
  std::size_t index_ = 0;
};

// First `count` solutions of the stream.
std::vector<PellPair> solutions(const PellContext& ctx, std::size_t count);

}  // namespace dtriple
