#include "dtriple/pell.hpp"

#include <stdexcept>

namespace dtriple {

PellUnit fundamental_unit(const Int& d) {
  if (d <= Int(1)) throw std::invalid_argument("Pell discriminant must exceed 1, got " + d.str());
  if (as_square(d)) throw std::invalid_argument("Pell discriminant " + d.str() + " is a square");

  // sqrt(D) = [a0; a1, a2, ...] via (P + sqrt(D)) / Q with P_0 = 0, Q_0 = 1.
  // Convergent h_k / k_k has norm (-1)^(k+1) * Q_{k+1}; the period ends
  // whenever Q returns to 1, so norm +1 appears at the end of the first
  // period (even length) or of the second (odd length).
  const Int a0 = isqrt(d);
  Int p(0);
  Int q(1);
  Int a = a0;
  Int h_prev(1), h = a0;
  Int k_prev(0), k(1);
  for (;;) {
    p = a * q - p;
    q = div_exact(d - p * p, q);
    if (q == Int(1) && h * h - d * k * k == Int(1)) return {h, k, d};
    a = floor_div(a0 + p, q);
    Int h_next = a * h + h_prev;
    Int k_next = a * k + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
  }
}

PellPair compose(const PellPair& s, const PellPair& u, const Int& d) {
  return {s.z * u.z + d * s.y * u.y, s.z * u.y + s.y * u.z};
}

Int pell_norm(const PellPair& s, const Int& d) { return s.z * s.z - d * s.y * s.y; }

PellContext::PellContext(Int d, Int n, PellPair base, int step)
    : d_(std::move(d)),
      n_(std::move(n)),
      base_(std::move(base)),
      unit_(fundamental_unit(d_)),
      step_(step) {
  if (step_ != 1 && step_ != 2) throw std::invalid_argument("Pell step must be 1 or 2");
  if (pell_norm(base_, d_) != n_) {
    throw std::invalid_argument("base (" + base_.z.str() + ", " + base_.y.str() +
                                ") does not solve z^2 - " + d_.str() + "y^2 = " + n_.str());
  }
  multiplier_ = unit_.pair();
  if (step_ == 2) multiplier_ = compose(multiplier_, multiplier_, d_);
}

PellPair PellSolutions::next() {
  current_ = compose(current_, ctx_->multiplier(), ctx_->d());
  ++index_;
  if (pell_norm(current_, ctx_->d()) != ctx_->n()) {
    throw std::logic_error("Pell stream left its norm class at t = " + std::to_string(index_));
  }
  return current_;
}

std::vector<PellPair> solutions(const PellContext& ctx, std::size_t count) {
  std::vector<PellPair> out;
  out.reserve(count);
  PellSolutions stream(ctx);
  for (std::size_t t = 0; t < count; ++t) out.push_back(stream.next());
  return out;
}

}  // namespace dtriple
