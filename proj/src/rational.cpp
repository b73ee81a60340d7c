#include "dtriple/rational.hpp"

#include <stdexcept>

namespace dtriple {

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  reduce();
}

void Rat::reduce() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd(num_, den_);
  if (g != Int(1)) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(Int::parse(text));
  return Rat(Int::parse(text.substr(0, slash)), Int::parse(text.substr(slash + 1)));
}

Rat& Rat::operator+=(const Rat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  // Cross-cancel first so intermediates stay small.
  const Int g1 = gcd(num_, o.den_);
  const Int g2 = gcd(o.num_, den_);
  num_ = div_exact(num_, g1) * div_exact(o.num_, g2);
  den_ = div_exact(den_, g2) * div_exact(o.den_, g1);
  if (num_.is_zero()) den_ = Int(1);
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  return *this *= Rat(o.den_, o.num_);
}

std::optional<Rat> rat_as_square(const Rat& q) {
  if (q.sign() < 0) return std::nullopt;
  auto n = as_square(q.num());
  if (!n) return std::nullopt;
  auto d = as_square(q.den());
  if (!d) return std::nullopt;
  return Rat(std::move(*n), std::move(*d));
}

}  // namespace dtriple
