#pragma once

// Exact classification of real polynomials by the multiplicity pattern of
// their real roots, plus the sign analysis of {P <= 0}.

#include <string>
#include <vector>

#include "tangency/composition.hpp"
#include "tangency/polynomial.hpp"

namespace tangency {

struct SquarefreeFactor {
  RationalPolynomial factor;  // monic, square-free
  int multiplicity = 0;
};

/// Yun's algorithm. Factors are monic, pairwise coprime, multiplicities ascending.
std::vector<SquarefreeFactor> squarefree_decomposition(const RationalPolynomial& p);

/// One real root, either known exactly (lo == hi == root) or isolated in (lo, hi].
struct IsolatedRoot {
  Rational lo;
  Rational hi;
  bool exact = false;
  int multiplicity = 1;
};

class SturmSequence {
 public:
  explicit SturmSequence(const RationalPolynomial& q);
  int sign_changes(const Rational& x) const;
  int sign_changes_at_minus_infinity() const;
  int sign_changes_at_plus_infinity() const;
  /// Distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return sign_changes(a) - sign_changes(b); }
  int count_all() const { return sign_changes_at_minus_infinity() - sign_changes_at_plus_infinity(); }
  const RationalPolynomial& base() const { return chain_.front(); }

 private:
  std::vector<RationalPolynomial> chain_;
};

/// Strict bound: every real root lies in (-B, B).
Rational cauchy_bound(const RationalPolynomial& q);

/// Roots of a square-free q in ascending order, all with multiplicity 1.
std::vector<IsolatedRoot> isolate_real_roots(const RationalPolynomial& q);

/// Distinct real roots of p with multiplicities, ascending.
std::vector<IsolatedRoot> real_roots(const RationalPolynomial& p);
Composition classify(const RationalPolynomial& p);

struct NegativityComponent {
  Rational lo;  // lower isolating bound of the first root (exact when lo_exact)
  Rational hi;  // upper isolating bound of the last root
  bool point = false;   // a single root touching zero
  Composition type;
  int marker_root_index = 0;  // 1-based in the global root order
  int first_root = 0;
  int last_root = 0;
};

std::vector<NegativityComponent> negativity_components(const RationalPolynomial& p);

struct RealRootSpec {
  Rational root;
  int multiplicity = 1;
};
struct ConjugatePairSpec {
  Rational re;
  Rational im;  // > 0
  int multiplicity = 1;
};

/// Monic product of (u - r)^m and ((u - re)^2 + im^2)^m.
RationalPolynomial expand_from_divisor(const std::vector<RealRootSpec>& real,
                                       const std::vector<ConjugatePairSpec>& pairs);

/// P(u, t) as a list of u-coefficients, each a polynomial in t.
struct ParametricPolynomial {
  std::vector<RationalPolynomial> u_coeffs;
  RationalPolynomial at(const Rational& t) const;
};

ParametricPolynomial operator*(const ParametricPolynomial& a, const ParametricPolynomial& b);

/// Text form: u-coefficients separated by ';', each a comma list of
/// ascending t-coefficients. "0,-1;0;1" is u^2 - t.
ParametricPolynomial parse_family(std::string_view text);

struct FamilyTransition {
  int from_index = 0;  // positions in the sample list
  int to_index = 0;
  Composition from;
  Composition to;
  bool geq_ok = false;
  bool reduced_norm_ok = false;
  bool ok() const { return geq_ok && reduced_norm_ok; }
};

struct FamilyReport {
  std::vector<Rational> samples;
  std::vector<Composition> types;
  std::vector<FamilyTransition> transitions;  // only where the type changes
  bool consistent() const;
};

/// Samples are taken in the given order, ending at the degenerate value.
FamilyReport classify_family(const ParametricPolynomial& family, const std::vector<Rational>& samples);

}  // namespace tangency
