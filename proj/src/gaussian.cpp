#include "dtriple/gaussian.hpp"

#include <stdexcept>

namespace dtriple {

namespace {

std::string normalize_literal(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text.substr(k).starts_with("\xE2\x88\x92")) {
      out.push_back('-');
      k += 2;
    } else if (text[k] != ' ') {
      out.push_back(text[k]);
    }
  }
  return out;
}

std::string imag_term(const Int& im) {
  if (im == Int(1)) return "i";
  if (im == Int(-1)) return "-i";
  return im.str() + "i";
}

}  // namespace

GInt GInt::parse(std::string_view text) {
  const std::string s = normalize_literal(text);
  if (s.empty()) throw std::invalid_argument("empty Gaussian integer literal");
  GInt out;
  std::size_t k = 0;
  while (k < s.size()) {
    bool negative = false;
    if (s[k] == '+' || s[k] == '-') {
      negative = s[k] == '-';
      ++k;
    } else if (k != 0) {
      throw std::invalid_argument("malformed Gaussian integer literal '" + s + "'");
    }
    const std::size_t start = k;
    while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
    std::string digits = s.substr(start, k - start);
    bool imaginary = false;
    if (k < s.size() && s[k] == 'i') {
      imaginary = true;
      ++k;
      if (digits.empty()) digits = "1";
    }
    if (digits.empty()) {
      throw std::invalid_argument("malformed Gaussian integer literal '" + s + "'");
    }
    Int v = Int::parse(digits);
    if (negative) v = -v;
    (imaginary ? out.im : out.re) += v;
  }
  return out;
}

std::string GInt::str() const {
  if (im.is_zero()) return re.str();
  if (re.is_zero()) return imag_term(im);
  const std::string tail = imag_term(im);
  return re.str() + (im.sign() > 0 ? "+" : "") + tail;
}

GInt& GInt::operator*=(const GInt& o) {
  Int r = re * o.re - im * o.im;
  Int i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GInt conj(const GInt& z) { return {z.re, -z.im}; }

Int norm(const GInt& z) { return z.re * z.re + z.im * z.im; }

bool divides(const GInt& d, const GInt& z) {
  if (d.is_zero()) throw std::invalid_argument("divisibility test by zero");
  const Int n = norm(d);
  const GInt t = conj(d) * z;
  return divides(n, t.re) && divides(n, t.im);
}

GInt div_exact(const GInt& z, const GInt& d) {
  if (d.is_zero()) throw std::domain_error("Gaussian division by zero");
  const Int n = norm(d);
  const GInt t = conj(d) * z;
  if (!divides(n, t.re) || !divides(n, t.im)) {
    throw std::domain_error(z.str() + " is not divisible by " + d.str());
  }
  return {div_exact(t.re, n), div_exact(t.im, n)};
}

std::optional<GInt> gint_as_square(const GInt& z) {
  if (z.im.is_zero()) {
    // Fast path: real squares are s or s*i.
    if (z.re.sign() >= 0) {
      if (auto s = as_square(z.re)) return GInt(*s);
      return std::nullopt;
    }
    if (auto s = as_square(-z.re)) return GInt(Int(0), *s);
    return std::nullopt;
  }
  auto m = as_square(norm(z));
  if (!m) return std::nullopt;
  const Int twice_re_sq = *m + z.re;
  if (twice_re_sq.is_odd()) return std::nullopt;
  auto x = as_square(div_exact(twice_re_sq, Int(2)));
  if (!x) return std::nullopt;
  auto y = as_square(div_exact(*m - z.re, Int(2)));
  if (!y) return std::nullopt;
  Int im = z.im.sign() < 0 ? -*y : *y;
  if (Int(2) * *x * im != z.im) return std::nullopt;
  return GInt(std::move(*x), std::move(im));
}

std::string GRat::str() const {
  if (im.is_zero()) return re.is_integer() ? re.num().str() : re.str();
  auto part = [](const Rat& r) { return r.is_integer() ? r.num().str() : r.str(); };
  std::string tail;
  if (im == Rat(1)) {
    tail = "i";
  } else if (im == Rat(-1)) {
    tail = "-i";
  } else {
    tail = part(im) + "i";
  }
  if (re.is_zero()) return tail;
  return part(re) + (im.sign() > 0 ? "+" : "") + tail;
}

std::optional<GInt> GRat::as_gint() const {
  if (!re.is_integer() || !im.is_integer()) return std::nullopt;
  return GInt(re.num(), im.num());
}

GRat& GRat::operator*=(const GRat& o) {
  Rat r = re * o.re - im * o.im;
  Rat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GRat& GRat::operator/=(const GRat& o) {
  if (o.is_zero()) throw std::domain_error("Gaussian rational division by zero");
  const Rat n = norm(o);
  *this *= conj(o);
  re /= n;
  im /= n;
  return *this;
}

GRat conj(const GRat& q) { return {q.re, -q.im}; }

Rat norm(const GRat& q) { return q.re * q.re + q.im * q.im; }

std::optional<GRat> grat_as_square(const GRat& q) {
  // q = Z / L with Z integral; then sqrt(q) = sqrt(Z * L) / L.
  const Int g = gcd(q.re.den(), q.im.den());
  const Int l = div_exact(q.re.den() * q.im.den(), g);
  const GInt scaled(div_exact(q.re.num() * l, q.re.den()) * l,
                    div_exact(q.im.num() * l, q.im.den()) * l);
  auto w = gint_as_square(scaled);
  if (!w) return std::nullopt;
  return GRat(Rat(w->re, l), Rat(w->im, l));
}

}  // namespace dtriple
