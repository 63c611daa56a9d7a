#include "tangency/classifier.hpp"

#include <algorithm>
#include <cstdlib>

#include "tangency/error.hpp"
#include "tangency/poset.hpp"

namespace tangency {

namespace {

void require_nonzero(const RationalPolynomial& p, const char* what) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPoly, std::string(what) + " of the zero polynomial");
}

RationalPolynomial exact_quotient(const RationalPolynomial& a, const RationalPolynomial& b) {
  return divmod(a, b).first;
}

int sign_changes_of(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const RationalPolynomial& p) {
  require_nonzero(p, "square-free decomposition");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  const RationalPolynomial f = p.monic();
  const RationalPolynomial df = f.derivative();
  const RationalPolynomial a0 = gcd(f, df);
  RationalPolynomial b = exact_quotient(f, a0);
  RationalPolynomial c = exact_quotient(df, a0);
  RationalPolynomial d = c - b.derivative();
  for (int m = 1; b.degree() > 0; ++m) {
    RationalPolynomial a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, m});
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
  }
  return out;
}

SturmSequence::SturmSequence(const RationalPolynomial& q) {
  require_nonzero(q, "Sturm sequence");
  chain_.push_back(q);
  RationalPolynomial next = q.derivative();
  while (!next.is_zero()) {
    chain_.push_back(next);
    const auto& prev = chain_[chain_.size() - 2];
    next = Rational(-1) * divmod(prev, chain_.back()).second;
  }
}

int SturmSequence::sign_changes(const Rational& x) const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(p.sign_at(x));
  return sign_changes_of(signs);
}

int SturmSequence::sign_changes_at_plus_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.leading()));
  return sign_changes_of(signs);
}

int SturmSequence::sign_changes_at_minus_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(p.degree() % 2 == 0 ? sgn(p.leading()) : -sgn(p.leading()));
  return sign_changes_of(signs);
}

Rational cauchy_bound(const RationalPolynomial& q) {
  require_nonzero(q, "root bound");
  Rational worst = 0;
  for (int i = 0; i < q.degree(); ++i) {
    Rational r = abs(q.coeffs()[static_cast<std::size_t>(i)] / q.leading());
    if (r > worst) worst = r;
  }
  return worst + 1;
}

namespace {

class Isolator {
 public:
  explicit Isolator(const RationalPolynomial& q) : q_(q), sturm_(q) {}

  std::vector<IsolatedRoot> run() {
    const Rational bound = cauchy_bound(q_);
    split(-bound, bound);
    return std::move(roots_);
  }

 private:
  void split(const Rational& a, const Rational& b) {
    const int n = sturm_.count(a, b);
    if (n == 0) return;
    if (n == 1) {
      if (q_.sign_at(b) == 0) {
        roots_.push_back({b, b, true, 1});
      } else {
        roots_.push_back({a, b, false, 1});
      }
      return;
    }
    const Rational mid = (a + b) / 2;
    split(a, mid);
    split(mid, b);
  }

  const RationalPolynomial& q_;
  SturmSequence sturm_;
  std::vector<IsolatedRoot> roots_;
};

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const RationalPolynomial& q) {
  require_nonzero(q, "root isolation");
  if (q.degree() == 0) return {};
  if (gcd(q, q.derivative()).degree() > 0) {
    throw Error(ErrorCode::NotSquarefree, "(" + to_string(q) + ") has a repeated factor");
  }
  return Isolator(q).run();
}

std::vector<IsolatedRoot> real_roots(const RationalPolynomial& p) {
  const auto factors = squarefree_decomposition(p);
  RationalPolynomial q = RationalPolynomial::constant(1);
  for (const auto& f : factors) q = q * f.factor;
  auto roots = isolate_real_roots(q);

  std::vector<SturmSequence> sturms;
  for (const auto& f : factors) sturms.emplace_back(f.factor);
  for (auto& r : roots) {
    r.multiplicity = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const bool hit = r.exact ? factors[k].factor.sign_at(r.hi) == 0 : sturms[k].count(r.lo, r.hi) > 0;
      if (hit) {
        r.multiplicity = factors[k].multiplicity;
        break;
      }
    }
  }
  return roots;
}

Composition classify(const RationalPolynomial& p) {
  require_nonzero(p, "classify");
  std::vector<int> mults;
  for (const auto& r : real_roots(p)) mults.push_back(r.multiplicity);
  return Composition(std::move(mults));
}

namespace {

// Shrinks a non-exact isolating interval by one bisection step.
void refine(IsolatedRoot& r, const RationalPolynomial& q, const SturmSequence& sturm) {
  if (r.exact) return;
  const Rational mid = (r.lo + r.hi) / 2;
  if (q.sign_at(mid) == 0) {
    r.lo = r.hi = mid;
    r.exact = true;
  } else if (sturm.count(r.lo, mid) == 1) {
    r.hi = mid;
  } else {
    r.lo = mid;
  }
}

// A rational strictly between two consecutive roots.
Rational point_between(IsolatedRoot a, IsolatedRoot b, const RationalPolynomial& q, const SturmSequence& sturm) {
  while (true) {
    if (a.hi < b.lo) return (a.hi + b.lo) / 2;
    if (!a.exact && !b.exact) return a.hi;  // root(a) < a.hi <= b.lo < root(b)
    if (a.exact) {
      refine(b, q, sturm);
    } else {
      refine(a, q, sturm);
    }
  }
}

}  // namespace

std::vector<NegativityComponent> negativity_components(const RationalPolynomial& p) {
  require_nonzero(p, "negativity analysis");
  if (p.degree() % 2 != 0 || sgn(p.leading()) < 0) {
    throw Error(ErrorCode::UnboundedNegative, "(" + to_string(p) + ") is negative near an infinite end");
  }
  const auto roots = real_roots(p);
  if (roots.empty()) return {};

  RationalPolynomial q = RationalPolynomial::constant(1);
  for (const auto& f : squarefree_decomposition(p)) q = q * f.factor;
  const SturmSequence sturm(q);

  // gap_negative[i] tells whether P < 0 between root i and root i+1 (1-based).
  const int n = static_cast<int>(roots.size());
  std::vector<bool> gap_negative(static_cast<std::size_t>(n + 1), false);
  for (int i = 1; i < n; ++i) {
    const Rational s = point_between(roots[static_cast<std::size_t>(i - 1)], roots[static_cast<std::size_t>(i)], q, sturm);
    gap_negative[static_cast<std::size_t>(i)] = p.sign_at(s) < 0;
  }

  std::vector<NegativityComponent> out;
  for (int i = 1; i <= n;) {
    int j = i;
    while (j < n && gap_negative[static_cast<std::size_t>(j)]) ++j;
    std::vector<int> mults;
    for (int k = i; k <= j; ++k) mults.push_back(roots[static_cast<std::size_t>(k - 1)].multiplicity);
    NegativityComponent c;
    c.lo = roots[static_cast<std::size_t>(i - 1)].lo;
    c.hi = roots[static_cast<std::size_t>(j - 1)].hi;
    c.point = i == j;
    c.type = Composition(std::move(mults));
    c.marker_root_index = i;
    c.first_root = i;
    c.last_root = j;
    out.push_back(std::move(c));
    i = j + 1;
  }
  return out;
}

RationalPolynomial expand_from_divisor(const std::vector<RealRootSpec>& real,
                                       const std::vector<ConjugatePairSpec>& pairs) {
  RationalPolynomial out = RationalPolynomial::constant(1);
  for (std::size_t i = 0; i < real.size(); ++i) {
    if (real[i].multiplicity < 1) throw Error(ErrorCode::Domain, "root multiplicity must be positive");
    if (i > 0 && !(real[i - 1].root < real[i].root)) {
      throw Error(ErrorCode::Order, "real roots must be strictly ascending");
    }
    out = out * RationalPolynomial::linear(real[i].root).pow(real[i].multiplicity);
  }
  for (const auto& pr : pairs) {
    if (pr.multiplicity < 1) throw Error(ErrorCode::Domain, "pair multiplicity must be positive");
    if (sgn(pr.im) <= 0) throw Error(ErrorCode::Domain, "imaginary part must be positive");
    const RationalPolynomial quad({pr.re * pr.re + pr.im * pr.im, Rational(-2) * pr.re, Rational(1)});
    out = out * quad.pow(pr.multiplicity);
  }
  return out;
}

RationalPolynomial ParametricPolynomial::at(const Rational& t) const {
  std::vector<Rational> coeffs;
  for (const auto& c : u_coeffs) coeffs.push_back(c.eval(t));
  return RationalPolynomial(std::move(coeffs));
}

ParametricPolynomial operator*(const ParametricPolynomial& a, const ParametricPolynomial& b) {
  if (a.u_coeffs.empty() || b.u_coeffs.empty()) return {};
  ParametricPolynomial out;
  out.u_coeffs.resize(a.u_coeffs.size() + b.u_coeffs.size() - 1);
  for (std::size_t i = 0; i < a.u_coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.u_coeffs.size(); ++j) out.u_coeffs[i + j] = out.u_coeffs[i + j] + a.u_coeffs[i] * b.u_coeffs[j];
  }
  return out;
}

ParametricPolynomial parse_family(std::string_view text) {
  ParametricPolynomial out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    if (semi == std::string_view::npos) semi = text.size();
    out.u_coeffs.push_back(parse_polynomial(text.substr(pos, semi - pos)));
    pos = semi + 1;
  }
  return out;
}

bool FamilyReport::consistent() const {
  return std::all_of(transitions.begin(), transitions.end(), [](const FamilyTransition& t) { return t.ok(); });
}

FamilyReport classify_family(const ParametricPolynomial& family, const std::vector<Rational>& samples) {
  if (samples.empty()) throw Error(ErrorCode::Domain, "classify_family needs at least one sample");
  FamilyReport report;
  report.samples = samples;
  for (const auto& t : samples) report.types.push_back(classify(family.at(t)));
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const auto& from = report.types[i - 1];
    const auto& to = report.types[i];
    if (from == to) continue;
    FamilyTransition tr;
    tr.from_index = static_cast<int>(i - 1);
    tr.to_index = static_cast<int>(i);
    tr.from = from;
    tr.to = to;
    tr.geq_ok = geq(from, to);
    tr.reduced_norm_ok = to.reduced_norm() > from.reduced_norm();
    report.transitions.push_back(std::move(tr));
  }
  return report;
}

}  // namespace tangency
