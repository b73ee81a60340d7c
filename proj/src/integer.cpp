#include "dtriple/integer.hpp"

#include <array>
#include <climits>
#include <stdexcept>

namespace dtriple {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

template <unsigned long M>
constexpr std::array<bool, M> square_residues() {
  std::array<bool, M> table{};
  for (unsigned long r = 0; r < M; ++r) table[(r * r) % M] = true;
  return table;
}

constexpr auto kSq64 = square_residues<64>();
constexpr auto kSq63 = square_residues<63>();
constexpr auto kSq65 = square_residues<65>();
constexpr auto kSq11 = square_residues<11>();

}  // namespace

Int::Int(long long v) {
  if (v >= LONG_MIN && v <= LONG_MAX) {
    v_ = static_cast<long>(v);
  } else {
    v_ = std::to_string(v);
  }
}

Int Int::parse(std::string_view text) {
  bool negative = false;
  if (text.starts_with('-')) {
    negative = true;
    text.remove_prefix(1);
  } else if (text.starts_with(kUnicodeMinus)) {
    negative = true;
    text.remove_prefix(kUnicodeMinus.size());
  } else if (text.starts_with('+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
    }
  }
  mpz_class v(std::string(text), 10);
  if (negative) v = -v;
  return Int(std::move(v));
}

std::size_t Int::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

unsigned long Int::mod_ui(unsigned long m) const {
  return mpz_fdiv_ui(v_.get_mpz_t(), m);
}

Int abs(const Int& v) { return v.sign() < 0 ? -v : v; }

Int gcd(const Int& a, const Int& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Int(std::move(g));
}

Int pow(const Int& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exp);
  return Int(std::move(r));
}

Int floor_div(const Int& n, const Int& d) {
  if (d.is_zero()) throw std::domain_error("division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.mpz().get_mpz_t(), d.mpz().get_mpz_t());
  return Int(std::move(q));
}

Int floor_mod(const Int& n, const Int& d) {
  if (d.is_zero()) throw std::domain_error("division by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), n.mpz().get_mpz_t(), d.mpz().get_mpz_t());
  return Int(std::move(r));
}

bool divides(const Int& d, const Int& n) {
  if (d.is_zero()) return n.is_zero();
  return mpz_divisible_p(n.mpz().get_mpz_t(), d.mpz().get_mpz_t()) != 0;
}

Int div_exact(const Int& n, const Int& d) {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (!divides(d, n)) throw std::domain_error(n.str() + " is not divisible by " + d.str());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), n.mpz().get_mpz_t(), d.mpz().get_mpz_t());
  return Int(std::move(q));
}

Int isqrt(const Int& n) {
  if (n.sign() < 0) throw std::domain_error("isqrt of negative integer " + n.str());
  if (n.is_zero()) return Int(0);

  // 2^ceil(bits/2) >= sqrt(n); Newton then decreases monotonically to floor(sqrt(n)).
  const std::size_t bits = n.bit_length();
  mpz_class x;
  mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
  const mpz_class& v = n.mpz();
  mpz_class y;
  for (;;) {
    mpz_fdiv_q(y.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t());
    y += x;
    y >>= 1;
    if (y >= x) break;
    x.swap(y);
  }
  return Int(std::move(x));
}

std::optional<Int> as_square(const Int& n) {
  if (n.sign() < 0) return std::nullopt;
  if (!kSq64[n.mod_ui(64)]) return std::nullopt;
  // 63 * 65 * 11 fits comfortably in an unsigned long.
  const unsigned long r = n.mod_ui(63ul * 65ul * 11ul);
  if (!kSq63[r % 63] || !kSq65[r % 65] || !kSq11[r % 11]) return std::nullopt;
  Int s = isqrt(n);
  if (s * s != n) return std::nullopt;
  return s;
}

}  // namespace dtriple
