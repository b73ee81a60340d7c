#include "dtriple/tuples.hpp"

#include <algorithm>
#include <future>
#include <utility>

namespace dtriple {

namespace {

template <class Ring>
using ElemOf = typename Ring::Elem;

template <class Ring>
std::string list_str(const std::vector<ElemOf<Ring>>& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += Ring::str(v[k]);
  }
  return out + "}";
}

template <class Ring>
void require_triple(const DTuple<Ring>& t, const char* op) {
  if (t.size() != 3) throw std::invalid_argument(std::string(op) + " needs a triple");
}

// The branch Ring::sqrt returns: nonnegative, or re > 0 / (re = 0, im >= 0).
bool canonical_root(const Int& v) { return v.sign() >= 0; }
bool canonical_root(const GInt& v) { return v.re.sign() > 0 || (v.re.is_zero() && v.im.sign() >= 0); }

template <class Ring>
typename Ring::Field field_of(const ElemOf<Ring>& v) {
  return Ring::to_field(v);
}

// Visits every ring element x with norm(x) <= limit, in a fixed order.
template <class Fn>
void for_each_grid_point(IntegerRing, const Int& limit, Fn&& fn) {
  const long r = isqrt(limit).to_long();
  for (long x = -r; x <= r; ++x) fn(Int(x));
}

template <class Fn>
void for_each_grid_point(GaussianRing, const Int& limit, Fn&& fn) {
  const long r = isqrt(limit).to_long();
  const long lim = limit.to_long();
  for (long re = -r; re <= r; ++re) {
    const long span = isqrt(Int(lim - re * re)).to_long();
    for (long im = -span; im <= span; ++im) fn(GInt(Int(re), Int(im)));
  }
}

}  // namespace

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::theorem1: return "theorem1";
    case Provenance::corollary1: return "corollary1";
    case Provenance::gaussian_example: return "gaussian-example";
    case Provenance::manual: return "manual";
  }
  return "manual";
}

template <class Ring>
DTuple<Ring>::DTuple(std::vector<Elem> elems) : elems_(std::move(elems)) {
  if (elems_.size() < 2) throw std::invalid_argument("a tuple needs at least two elements");
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    if (elems_[k] == Elem(0)) throw std::invalid_argument("tuple elements must be nonzero");
    for (std::size_t j = 0; j < k; ++j) {
      if (elems_[j] == elems_[k]) {
        throw std::invalid_argument("tuple elements must be distinct; " + Ring::str(elems_[k]) +
                                    " repeats");
      }
    }
  }
}

template <class Ring>
std::optional<DnCertificate<Ring>> verify_dn(const DTuple<Ring>& t, const ElemOf<Ring>& n) {
  DnCertificate<Ring> cert{n, {}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      auto root = Ring::sqrt(t[i] * t[j] + n);
      if (!root) return std::nullopt;
      cert.roots.push_back({i, j, std::move(*root)});
    }
  }
  return cert;
}

template <class Ring>
bool check_certificate(const DTuple<Ring>& t, const DnCertificate<Ring>& cert) {
  const std::size_t m = t.size();
  if (cert.roots.size() != m * (m - 1) / 2) return false;
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j, ++k) {
      const auto& pr = cert.roots[k];
      if (pr.i != i || pr.j != j || !canonical_root(pr.root)) return false;
      if (!(pr.root * pr.root == t[i] * t[j] + cert.n)) return false;
    }
  }
  return true;
}

template <class Ring>
bool check_record(const FamilyRecord<Ring>& rec) {
  for (std::size_t k = 0; k < rec.certificates.size(); ++k) {
    if (!check_certificate(rec.triple, rec.certificates[k])) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (rec.certificates[j].n == rec.certificates[k].n) return false;
    }
  }
  return true;
}

template <class Ring>
std::optional<DnCertificate<Ring>> second_property(const DTuple<Ring>& t, const ElemOf<Ring>& n) {
  using E = ElemOf<Ring>;
  require_triple(t, "second_property");
  const auto base = verify_dn(t, n);
  if (!base) {
    throw std::invalid_argument(list_str<Ring>(t.elements()) + " is not a D(" + Ring::str(n) + ") triple");
  }
  const E& a = t[0];
  const E& b = t[1];
  const E& c = t[2];
  if (!Ring::is_even(a + b + c)) return std::nullopt;
  const E two_r = E(2) * base->roots[0].root;
  if (c == a + b + two_r || c == a + b - two_r) return std::nullopt;

  auto n2 = Ring::from_field(x_2P(field_of<Ring>(a), field_of<Ring>(b), field_of<Ring>(c)));
  if (!n2) return std::nullopt;
  if (*n2 == n) {
    throw std::logic_error("x(2P) coincides with n although c avoids a + b +- 2 sqrt(ab + n)");
  }
  auto cert = verify_dn(t, *n2);
  if (!cert) {
    throw ClaimFailure("x(2P) of a D(n) triple failed to certify", "D(" + Ring::str(*n2) + ")",
                       "no certificate");
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Integer family from the Pell class of {1, x^2 - n}.

PellContext Theorem1Family::make_context(const Int& n, const Int& x) {
  const Int d = x * x - n;
  if (d <= Int(1)) throw std::invalid_argument("x^2 - n must exceed 1, got " + d.str());
  if (d.is_even()) throw std::invalid_argument("x^2 - n must be odd, got " + d.str());
  if (as_square(d)) throw std::invalid_argument("x^2 - n must not be a square, got " + d.str());
  PellPair base{x * x + x - n, x + Int(1)};
  return PellContext(d, n * (Int(1) - x * x + n), std::move(base), n.is_even() ? 1 : 2);
}

Theorem1Family::Theorem1Family(Int n, Int x)
    : n_(n), d_(x * x - n), ctx_(make_context(n, x)), stream_(ctx_) {}

Theorem1Step Theorem1Family::next() {
  // Only finitely many t are rejected; the cap guards against a bad context.
  constexpr std::size_t kMaxSkips = 1000;
  for (std::size_t skipped = 0; skipped < kMaxSkips; ++skipped) {
    PellPair sol = stream_.next();
    Int c = sol.y * sol.y - n_;
    if (c.is_zero() || c.is_odd() || c == Int(1) || c == d_) continue;
    DTuple<IntegerRing> triple({Int(1), d_, c});
    auto first = verify_dn(triple, n_);
    if (!first) {
      throw ClaimFailure("Pell solution did not give a D(n) triple", "D(" + n_.str() + ")",
                         "{1, " + d_.str() + ", " + c.str() + "}");
    }
    auto second = second_property(triple, n_);
    if (!second) continue;
    FamilyRecord<IntegerRing> rec{std::move(triple), {std::move(*first), std::move(*second)},
                                  Provenance::theorem1};
    return {std::move(sol), stream_.index(), std::move(rec)};
  }
  throw std::runtime_error("no admissible c in " + std::to_string(kMaxSkips) + " Pell iterates");
}

std::vector<FamilyRecord<IntegerRing>> theorem1_family(const Int& n, const Int& x, std::size_t count) {
  Theorem1Family family(n, x);
  std::vector<FamilyRecord<IntegerRing>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(family.next().record);
  return out;
}

// ---------------------------------------------------------------------------
// Gaussian constructions.

RegularExtension regular_extend(const GInt& a, const GInt& b, const GInt& c) {
  auto root = [](const GInt& v, const char* label) {
    auto w = gint_as_square(v);
    if (!w) throw std::invalid_argument(std::string(label) + " = " + v.str() + " is not a square in Z[i]");
    return *w;
  };
  const GInt r = root(a * b - GInt(1), "ab-1");
  const GInt s = root(a * c - GInt(1), "ac-1");
  const GInt t = root(b * c - GInt(1), "bc-1");
  const GInt base = a + b + c - GInt(2) * a * b * c;
  const GInt twice_rst = GInt(2) * r * s * t;
  return {base + twice_rst, base - twice_rst};
}

namespace {

GInt horner(const std::vector<long>& coeffs_high_first, const GInt& m) {
  GInt acc(0);
  for (long c : coeffs_high_first) acc = acc * m + GInt(c);
  return acc;
}

void expect_equal(const GInt& expected, const GInt& computed, const std::string& what) {
  if (!(expected == computed)) throw ClaimFailure(what, expected.str(), computed.str());
}

// Certificates for -1, 2-a-b-c and x(2P), in that order.
FamilyRecord<GaussianRing> certify_three(DTuple<GaussianRing> triple, Provenance prov, const GInt& m) {
  const GInt& a = triple[0];
  const GInt& b = triple[1];
  const GInt& c = triple[2];
  const GInt n2 = GInt(2) - a - b - c;
  auto n3 = x_2P(GRat(a), GRat(b), GRat(c)).as_gint();
  if (!n3) {
    throw ClaimFailure("x(2P) is not a Gaussian integer at m = " + m.str(), "element of Z[i]",
                       x_2P(GRat(a), GRat(b), GRat(c)).str());
  }
  const std::vector<GInt> ns{GInt(-1), n2, *n3};
  for (std::size_t k = 0; k < ns.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (ns[j] == ns[k]) {
        throw std::invalid_argument("n values coincide at m = " + m.str() + " (" + ns[k].str() + ")");
      }
    }
  }
  FamilyRecord<GaussianRing> rec{std::move(triple), {}, prov};
  for (const GInt& n : ns) {
    auto cert = verify_dn(rec.triple, n);
    if (!cert) {
      throw ClaimFailure("triple at m = " + m.str() + " is not D(" + n.str() + ")",
                         "D(" + n.str() + ")", "no certificate");
    }
    rec.certificates.push_back(std::move(*cert));
  }
  return rec;
}

}  // namespace

FamilyRecord<GaussianRing> corollary_family(const GInt& m) {
  if (m == GInt(-1)) throw std::invalid_argument("corollary family is undefined at m = -1");
  const GInt a = horner({2, 2, 1}, m);
  const GInt b = horner({2, 6, 5}, m);
  const GInt c = horner({-32, -128, -184, -112, -24}, m);

  const RegularExtension ext = regular_extend(GInt(2), a, b);
  if (!(ext.plus == c) && !(ext.minus == c)) {
    throw ClaimFailure("c(m) is not a regular extension of {2, a, b}", c.str(),
                       ext.plus.str() + " or " + ext.minus.str());
  }

  FamilyRecord<GaussianRing> rec = certify_three(DTuple<GaussianRing>({a, b, c}), Provenance::corollary1, m);
  expect_equal(horner({32, 128, 180, 104, 20}, m), rec.certificates[1].n,
               "n2 polynomial disagrees with 2-a-b-c");
  expect_equal(horner({256, 2048, 7104, 13952, 16992, 13184, 6396, 1784, 220}, m), rec.certificates[2].n,
               "n3 polynomial disagrees with x(2P)");
  return rec;
}

FamilyRecord<GaussianRing> gaussian_example_family(const GInt& m) {
  const GInt i = GInt::i();
  for (const GInt& bad : {GInt(0), -i, GInt(-1), GInt(-1) - i}) {
    if (m == bad) throw std::invalid_argument("Gaussian example family is undefined at m = " + m.str());
  }
  const GInt one(1);
  const GInt a = GInt(2) * m * (m + i);
  const GInt b = GInt(2) * (m + one) * (m + one + i);
  // -32m^4 + (-64i-64)m^3 + (-96i+8)m^2 + (-24i+40)m + 4i+8
  GInt c = GInt(-32);
  for (const GInt& coeff : {GInt(Int(-64), Int(-64)), GInt(Int(8), Int(-96)), GInt(Int(40), Int(-24)),
                            GInt(Int(8), Int(4))}) {
    c = c * m + coeff;
  }
  return certify_three(DTuple<GaussianRing>({a, b, c}), Provenance::gaussian_example, m);
}

// ---------------------------------------------------------------------------

template <class Ring>
FamilyRecord<Ring> four_n_extend(const FamilyRecord<Ring>& rec, const ExtendOptions& opts) {
  using E = ElemOf<Ring>;
  using F = typename Ring::Field;
  using Curve = TripleCurve<F>;
  using Point = typename Curve::Point;
  require_triple(rec.triple, "four_n_extend");

  FamilyRecord<Ring> out = rec;
  const E& a = rec.triple[0];
  const E& b = rec.triple[1];
  const E& c = rec.triple[2];
  const E ab = a * b, ac = a * c, bc = b * c;
  if (ab == ac || ab == bc || ac == bc) return out;

  auto consider = [&](const F& x) {
    auto n = Ring::from_field(x);
    if (!n || out.certifies(*n)) return;
    if (auto cert = verify_dn(out.triple, *n)) out.certificates.push_back(std::move(*cert));
  };

  const Curve curve(field_of<Ring>(ab), field_of<Ring>(ac), field_of<Ring>(bc));
  const Point p{F(0), field_of<Ring>(a * b * c), false};
  const Point p2 = curve.double_point(p);
  consider(p2.x);

  const std::vector<DnCertificate<Ring>> seeds = rec.certificates;
  for (const auto& seed : seeds) {
    const E rst = seed.roots[0].root * seed.roots[1].root * seed.roots[2].root;
    for (int sign : {1, -1}) {
      const Point s{field_of<Ring>(seed.n), field_of<Ring>(sign > 0 ? rst : -rst), false};
      const Point sum = curve.add(s, p2);
      if (sum.infinite) continue;
      if (seed.n == E(-1)) {
        try {
          const F closed = x_S_plus_2P<Ring>(a, b, c, sign);
          if (!(closed == sum.x)) {
            throw ClaimFailure("closed-form x(S+2P) disagrees with chord addition", closed.str(), sum.x.str());
          }
        } catch (const std::domain_error&) {
          // Vanishing closed-form denominator: only the chord route applies.
        }
      }
      consider(sum.x);
    }
  }

  for_each_grid_point(Ring{}, opts.grid_norm, [&](const E& x) {
    const E f = ((x + ab) * (x + ac)) * (x + bc);
    auto y = Ring::sqrt(f);
    if (!y || *y == E(0)) return;
    const Point dbl = curve.double_point(Point{field_of<Ring>(x), field_of<Ring>(*y), false});
    if (!dbl.infinite) consider(dbl.x);
  });
  return out;
}

template <class Ring>
std::vector<DnCertificate<Ring>> n_spectrum(const DTuple<Ring>& t, const Int& bound, unsigned workers) {
  using E = ElemOf<Ring>;
  require_triple(t, "n_spectrum");
  if (bound.sign() <= 0) throw std::invalid_argument("spectrum bound must be positive");
  const E ab = t[0] * t[1];
  const E ac = t[0] * t[2];
  const E bc = t[1] * t[2];

  auto try_root = [&](const E& rho, std::vector<DnCertificate<Ring>>& found) {
    const E n = rho * rho - ab;
    if (n == E(0)) return;
    auto s = Ring::sqrt(ac + n);
    if (!s) return;
    auto u = Ring::sqrt(bc + n);
    if (!u) return;
    found.push_back({n, {{0, 1, rho}, {0, 2, std::move(*s)}, {1, 2, std::move(*u)}}});
  };

  // Canonical roots: rho >= 0 over Z; re > 0 or (re = 0, im >= 0) over Z[i].
  // The outer coordinate runs 0..outer and is split across workers.
  long outer = 0;
  if constexpr (Ring::tag == RingTag::integers) {
    if (!bound.fits_long()) throw std::invalid_argument("spectrum bound too large");
    outer = bound.to_long();
  } else {
    outer = isqrt(bound).to_long();
  }
  auto scan = [&](long lo, long hi) {
    std::vector<DnCertificate<Ring>> found;
    for (long v = lo; v < hi; ++v) {
      if constexpr (Ring::tag == RingTag::integers) {
        try_root(Int(v), found);
      } else {
        const long span = isqrt(bound - Int(v) * Int(v)).to_long();
        for (long im = (v == 0 ? 0 : -span); im <= span; ++im) try_root(GInt(Int(v), Int(im)), found);
      }
    }
    return found;
  };

  const unsigned nthreads = std::max(1u, workers);
  std::vector<DnCertificate<Ring>> all;
  if (nthreads == 1) {
    all = scan(0, outer + 1);
  } else {
    std::vector<std::future<std::vector<DnCertificate<Ring>>>> parts;
    const long total = outer + 1;
    for (unsigned w = 0; w < nthreads; ++w) {
      const long lo = total * w / nthreads;
      const long hi = total * (w + 1) / nthreads;
      parts.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    for (auto& part : parts) {
      auto v = part.get();
      std::move(v.begin(), v.end(), std::back_inserter(all));
    }
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.n < y.n; });
  all.erase(std::unique(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.n == y.n; }),
            all.end());
  return all;
}

template <class Ring>
std::optional<ElemOf<Ring>> is_equivalent(const DTuple<Ring>& a, const ElemOf<Ring>& na, const DTuple<Ring>& b,
                                          const ElemOf<Ring>& nb) {
  using E = ElemOf<Ring>;
  if (a.size() != b.size()) return std::nullopt;

  std::vector<E> candidates = Ring::units();
  for (const E& x : a.elements()) {
    for (const E& y : b.elements()) {
      if (auto u = Ring::quotient(x, y)) {
        if (std::find(candidates.begin(), candidates.end(), *u) == candidates.end()) candidates.push_back(*u);
      }
    }
  }

  std::vector<E> target = a.elements();
  std::sort(target.begin(), target.end());
  for (const E& u : candidates) {
    if (!(na == u * u * nb)) continue;
    std::vector<E> scaled;
    scaled.reserve(b.size());
    for (const E& y : b.elements()) scaled.push_back(u * y);
    std::sort(scaled.begin(), scaled.end());
    if (scaled == target) return u;
  }
  return std::nullopt;
}

bool not_equivalent_to_D1(const DTuple<GaussianRing>& t) {
  if (!verify_dn(t, GInt(-1))) throw std::invalid_argument("triple is not D(-1) in Z[i]");
  // T = u*B with -1 = u^2 * 1 forces u = +-i, i.e. B = -+i*T.
  for (const GInt& u : {GInt::i(), -GInt::i()}) {
    std::vector<Int> real;
    for (const GInt& x : t.elements()) {
      const GInt y = u * x;
      if (!y.is_real()) break;
      real.push_back(y.re);
    }
    if (real.size() != t.size()) continue;
    if (verify_dn(DTuple<IntegerRing>(std::move(real)), Int(1))) return false;
  }
  return true;
}

#define DTRIPLE_INSTANTIATE(R)                                                                               \
  template class DTuple<R>;                                                                                  \
  template std::optional<DnCertificate<R>> verify_dn(const DTuple<R>&, const R::Elem&);                      \
  template bool check_certificate(const DTuple<R>&, const DnCertificate<R>&);                                \
  template bool check_record(const FamilyRecord<R>&);                                                        \
  template std::optional<DnCertificate<R>> second_property(const DTuple<R>&, const R::Elem&);                \
  template FamilyRecord<R> four_n_extend(const FamilyRecord<R>&, const ExtendOptions&);                      \
  template std::vector<DnCertificate<R>> n_spectrum(const DTuple<R>&, const Int&, unsigned);                 \
  template std::optional<R::Elem> is_equivalent(const DTuple<R>&, const R::Elem&, const DTuple<R>&,          \
                                                const R::Elem&);

DTRIPLE_INSTANTIATE(IntegerRing)
DTRIPLE_INSTANTIATE(GaussianRing)

#undef DTRIPLE_INSTANTIATE

}  // namespace dtriple
