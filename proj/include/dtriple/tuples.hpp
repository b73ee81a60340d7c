#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtriple/curve.hpp"
#include "dtriple/pell.hpp"
#include "dtriple/ring.hpp"

namespace dtriple {

// A claimed identity or certificate did not hold. Carries both sides so the
// CLI can print a diff.
class ClaimFailure : public std::runtime_error {
 public:
  ClaimFailure(const std::string& what, std::string expected, std::string computed)
      : std::runtime_error(what), expected_(std::move(expected)), computed_(std::move(computed)) {}

  const std::string& expected() const { return expected_; }
  const std::string& computed() const { return computed_; }

 private:
  std::string expected_;
  std::string computed_;
};

// Distinct nonzero elements of Z or Z[i]. Negative and non-real elements are
// allowed.
template <class Ring>
class DTuple {
 public:
  using Elem = typename Ring::Elem;

  // Throws std::invalid_argument on fewer than two elements, a zero
  // element or a repeated element.
  explicit DTuple(std::vector<Elem> elems);

  const std::vector<Elem>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const Elem& operator[](std::size_t k) const { return elems_[k]; }

  friend bool operator==(const DTuple&, const DTuple&) = default;

 private:
  std::vector<Elem> elems_;
};

template <class Ring>
struct PairRoot {
  std::size_t i;
  std::size_t j;
  typename Ring::Elem root;  // root^2 = a_i * a_j + n, canonical branch
};

// Proof object for "T has the property D(n)".
template <class Ring>
struct DnCertificate {
  typename Ring::Elem n;
  std::vector<PairRoot<Ring>> roots;  // pairs (i, j), i < j, lexicographic
};

enum class Provenance { theorem1, corollary1, gaussian_example, manual };

std::string_view provenance_name(Provenance p);

template <class Ring>
struct FamilyRecord {
  DTuple<Ring> triple;
  std::vector<DnCertificate<Ring>> certificates;
  Provenance provenance = Provenance::manual;

  bool certifies(const typename Ring::Elem& n) const {
    for (const auto& c : certificates) {
      if (c.n == n) return true;
    }
    return false;
  }
};

// Certificate that every a_i*a_j + n is a square in the ring, or nothing.
template <class Ring>
std::optional<DnCertificate<Ring>> verify_dn(const DTuple<Ring>& t, const typename Ring::Elem& n);

// Checks a certificate from scratch against the tuple: every pair present
// once and every root squaring to a_i*a_j + n.
template <class Ring>
bool check_certificate(const DTuple<Ring>& t, const DnCertificate<Ring>& cert);

// Re-verifies every certificate and the distinctness of the n values.
template <class Ring>
bool check_record(const FamilyRecord<Ring>& rec);

// Second property of a D(n) triple: with a+b+c divisible by 2 and
// c != a + b +- 2*sqrt(ab + n), the triple is also D(x(2P)) and
// x(2P) != n. Returns the certificate for x(2P), or nothing when the
// hypotheses fail or x(2P) is not a ring element. Throws
// std::invalid_argument when the triple is not D(n).
template <class Ring>
std::optional<DnCertificate<Ring>> second_property(const DTuple<Ring>& t, const typename Ring::Elem& n);

// One emitted member of the {1, x^2 - n, c} family together with the Pell
// solution (z, y) it came from (c = y^2 - n).
struct Theorem1Step {
  PellPair solution;
  std::size_t pell_index;
  FamilyRecord<IntegerRing> record;
};

// Infinite family of triples {1, x^2 - n, c} that are D(n) and D(x(2P)),
// driven by the Pell class z^2 - (x^2 - n) y^2 = n(1 - x^2 + n) through
// (x^2 + x - n, x + 1).
class Theorem1Family {
 public:
  // Throws std::invalid_argument unless x^2 - n is > 1, odd and nonsquare.
  Theorem1Family(Int n, Int x);

  Theorem1Step next();

  const PellContext& context() const { return ctx_; }

 private:
  static PellContext make_context(const Int& n, const Int& x);

  Int n_;
  Int d_;
  PellContext ctx_;
  PellSolutions stream_;
};

std::vector<FamilyRecord<IntegerRing>> theorem1_family(const Int& n, const Int& x, std::size_t count);

// Both candidates d = a + b + c - 2abc +- 2rst for a regular fourth element.
struct RegularExtension {
  GInt plus;
  GInt minus;
};

// Throws std::invalid_argument when {a, b, c} is not D(-1) in Z[i].
RegularExtension regular_extend(const GInt& a, const GInt& b, const GInt& c);

// {a, b, c} with a = 2m^2+2m+1, b = 2m^2+6m+5 and c the regular extension of
// {2, a, b}; certified for -1, 2-a-b-c and x(2P). Throws
// std::invalid_argument for m = -1 (or any m giving a degenerate triple) and
// ClaimFailure if the closed-form polynomials disagree with the computation.
FamilyRecord<GaussianRing> corollary_family(const GInt& m);

// {2m(m+i), 2(m+1)(m+1+i), c(m)} certified for -1, 2-a-b-c and x(2P).
// Throws std::invalid_argument for m in {0, -i, -1, -1-i}.
FamilyRecord<GaussianRing> gaussian_example_family(const GInt& m);

struct ExtendOptions {
  // Auxiliary points are tried at every ring element x with norm(x) <= grid_norm.
  Int grid_norm = Int(1000000);
};

// Adds every new n reachable from the record's curve: x(2P), x(S + 2P) for
// S = (n0, +-rst) over each certified n0, and x(2X) for on-curve points X
// whose x-coordinate lies on the grid. Only ring-element values that verify
// are kept. Idempotent.
template <class Ring>
FamilyRecord<Ring> four_n_extend(const FamilyRecord<Ring>& rec, const ExtendOptions& opts = {});

// All n != 0 for which the triple is D(n) and the root of a*b + n has
// absolute value (Z) or norm (Z[i]) at most `bound`. Sorted by n.
template <class Ring>
std::vector<DnCertificate<Ring>> n_spectrum(const DTuple<Ring>& t, const Int& bound, unsigned workers = 1);

// u with A = u*B (as sets) and nA = u^2 * nB, if one exists.
template <class Ring>
std::optional<typename Ring::Elem> is_equivalent(const DTuple<Ring>& a, const typename Ring::Elem& na,
                                                 const DTuple<Ring>& b, const typename Ring::Elem& nb);

// For a D(-1) triple in Z[i]: true iff it is not i or -i times a Diophantine
// triple of rational integers. Throws std::invalid_argument if T is not D(-1).
bool not_equivalent_to_D1(const DTuple<GaussianRing>& t);

}  // namespace dtriple
