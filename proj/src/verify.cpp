#include "tangency/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "tangency/error.hpp"

namespace tangency {

namespace {

constexpr std::size_t kKeptFailures = 20;

std::string paren(const Composition& w) { return "(" + (w.empty() ? std::string() : to_string(w)) + ")"; }

int pick(int requested, int fallback) { return requested >= 0 ? requested : fallback; }

// ---------------------------------------------------------------- order sweeps

SuiteResult suite_mor_reach(const VerifyOptions& opts) {
  SuiteResult r{"mor-reach"};
  const int d = pick(opts.max_d, 6);
  std::vector<Composition> elems = generate_omega(d, GenMode::UpTo);
  if (d >= 1) {
    auto odd = generate_omega(d - 1, GenMode::UpTo);
    elems.insert(elems.end(), odd.begin(), odd.end());
  }
  long related = 0;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      const bool fast = mor_exists(a, b);
      related += fast;
      r.expect(fast == reachable_bfs(a, b), "mor_exists" + paren(a) + paren(b) + " disagrees with BFS");
    }
  }
  r.details = Json{{"max_d", d}, {"elements", elems.size()}, {"related_pairs", related}};
  return r;
}

SuiteResult suite_bullet_mor(const VerifyOptions& opts) {
  SuiteResult r{"bullet-mor"};
  const int n = pick(opts.max_n, 4);
  const auto elems = generate_bullet(n);
  long related = 0;
  Json gaps = Json::array();
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      const bool fast = bullet_mor_exists(a, b);
      const bool oracle = bullet_geq_oracle(a, b);
      related += oracle;
      if (fast == oracle) {
        r.expect(true, "");
        continue;
      }
      // The restriction argument (oracle => morphism) must never fail; the
      // converse breaks when no resolution has room for the skipped odd ends.
      r.expect(fast && !oracle, "bullet order" + paren(a) + paren(b) + " holds without a Mor-bullet map");
      r.deviation("Mor-bullet" + paren(a) + paren(b) + " is nonempty but no resolution of " + paren(b) + " contains " + paren(a));
      gaps.push_back({to_json(a), to_json(b)});
    }
  }
  r.details = Json{{"max_n", n}, {"elements", elems.size()}, {"related_pairs", related}, {"morphism_without_order", gaps}};
  return r;
}

SuiteResult suite_star_counts(const VerifyOptions& opts) {
  SuiteResult r{"star-counts"};
  const int d = pick(opts.max_d, 8);
  const auto universe = generate_omega(d, GenMode::UpTo);
  for (const auto& wt : universe) {
    r.expect(star_multiplicity(wt) == static_cast<int>(predecessors_one_step(wt).size()),
             "star multiplicity of " + paren(wt));
  }
  // Star cell counts per dimension against a BFS-ordered count.
  for (const auto& w : universe) {
    const auto star = normal_star(w, d);
    std::map<int, int> by_dim, oracle;
    for (const auto& c : star.cells) ++by_dim[c.dim];
    for (const auto& cand : universe) {
      if (reachable_bfs(cand, w)) ++oracle[w.reduced_norm() - cand.reduced_norm()];
    }
    r.expect(by_dim == oracle, "star cell counts around " + paren(w));
    for (const auto& [k, count] : oracle) {
      r.expect(static_cast<int>(pred_at_distance(w, k, universe).size()) == count,
               "pred_at_distance(" + paren(w) + ", " + std::to_string(k) + ")");
    }
  }
  r.details = Json{{"max_d", d}, {"elements", universe.size()}};
  return r;
}

// ---------------------------------------------------------------- cells

SuiteResult suite_euler(const VerifyOptions& opts) {
  SuiteResult r{"euler"};
  const int top = pick(opts.max_d, 8);
  Json rows = Json::array();
  for (int d = 2; d <= top; ++d) {
    const auto sphere = f_vector(d, Ambient::Sphere);
    const auto bsphere = f_vector(d, Ambient::BalancedSphere);
    const long long want_sphere = 1 + (d % 2 == 0 ? -1 : 1);
    const long long want_bsphere = 1 + (d % 2 == 0 ? 1 : -1);
    r.expect(euler_characteristic(sphere) == want_sphere, "sphere chi at d=" + std::to_string(d));
    r.expect(euler_characteristic(bsphere) == want_bsphere, "balanced sphere chi at d=" + std::to_string(d));
    rows.push_back(Json{{"d", d},
                        {"sphere", sphere.counts},
                        {"sphere_chi", euler_characteristic(sphere)},
                        {"balanced_sphere", bsphere.counts},
                        {"balanced_sphere_chi", euler_characteristic(bsphere)}});
  }
  r.details = Json{{"rows", rows}};
  return r;
}

SuiteResult suite_cells_d4(const VerifyOptions&) {
  SuiteResult r{"cells-d4"};
  const auto f = f_vector(4, Ambient::Balanced);
  r.expect(f.counts == std::vector<long long>{1, 3, 4, 3}, "balanced f-vector for d=4");
  r.details = to_json(f);
  return r;
}

// ---------------------------------------------------------------- bullets and the T-model

SuiteResult suite_bounds(const VerifyOptions& opts) {
  SuiteResult r{"bounds"};
  const int n = pick(opts.max_n, 5);
  const int model_n = std::min(n, 4);
  const auto elems = generate_bullet(n);
  long labels = 0, strata = 0;
  for (const auto& w : elems) {
    const int rn = w.reduced_norm();
    r.expect(w.norm() <= 2 * rn + 2, "norm bound for " + paren(w));
    r.expect(w.size() <= rn + 2, "support bound for " + paren(w));
    if (w.empty()) continue;
    for (const auto& [label, count] : fiber_report(w)) {
      ++labels;
      r.expect(2 * count <= w.norm(), "fiber count of " + to_string(label) + " over " + paren(w));
    }
    if (rn > model_n) continue;
    for (const auto& cell : build_t_model(w).cells) {
      ++strata;
      r.expect(cell.stratum.size() <= rn + 2 && cell.stratum.norm() <= 2 * rn + 2,
               "stratum " + paren(cell.stratum) + " in the model of " + paren(w));
    }
  }
  r.details = Json{{"max_n", n}, {"bases", elems.size()}, {"labels", labels}, {"strata_checked", strata}};
  return r;
}

SuiteResult suite_tmodel_d4(const VerifyOptions&) {
  SuiteResult r{"tmodel-d4"};
  const auto f = t_f_vector(Composition{4});
  r.expect(f == std::vector<long long>{1, 4, 6, 3}, "f-vector of the model over (4)");
  r.details = Json{{"f_vector", f}};
  return r;
}

SuiteResult suite_tmodel_boundary(const VerifyOptions&) {
  SuiteResult r{"tmodel-boundary"};
  const Composition base{4};
  const auto tc = build_t_model(base);
  const int top = tc.index_of(make_label({Composition{1, 1, 1, 1}}, base), 3);
  r.expect(top >= 0, "cell ([(1,1,1,1)], 3) exists");
  std::set<std::pair<std::string, int>> got;
  for (auto [a, b] : tc.covers) {
    if (a == top) got.insert({to_string(tc.cells[static_cast<std::size_t>(b)].label), tc.cells[static_cast<std::size_t>(b)].marker});
  }
  const std::set<std::pair<std::string, int>> want{{"(2,1,1)", 2}, {"(1,2,1)", 1}, {"(1,1,2)", 3}};
  r.expect(got == want, "boundary of ([(1,1,1,1)], 3)");
  Json faces = Json::array();
  for (const auto& [label, marker] : got) faces.push_back(Json{{"label", label}, {"marker", marker}});
  r.details = Json{{"faces", faces}};
  return r;
}

SuiteResult suite_bullet_count(const VerifyOptions&) {
  SuiteResult r{"bullet-count"};
  const auto elems = generate_bullet(3);
  r.expect(elems.size() == 11, "eleven trajectory types of reduced norm <= 3");
  Json list = Json::array();
  for (const auto& w : elems) list.push_back(to_json(w));
  r.details = Json{{"count", elems.size()}, {"elements", list}};
  return r;
}

SuiteResult suite_order_examples(const VerifyOptions&) {
  SuiteResult r{"order-examples"};
  r.expect(bullet_mor_exists(Composition{3, 1}, Composition{1, 4, 1}), "(3,1) >=bullet (1,4,1)");
  r.expect(mor_enumerate(Composition{1, 1}, Composition{1, 2, 1}).size() == 1, "#Mor((1,1),(1,2,1)) == 1");
  r.expect(!mor_exists(Composition{1, 2, 1}, Composition{1, 1}), "Mor((1,2,1),(1,1)) is empty");
  return r;
}

// ---------------------------------------------------------------- markers

SuiteResult suite_markers(const VerifyOptions& opts) {
  SuiteResult r{"markers"};
  const int d = pick(opts.max_d, 6);
  std::vector<Composition> universe;
  for (auto& w : generate_omega(d, GenMode::UpTo)) {
    if (w.norm() % 2 == 0) universe.push_back(std::move(w));
  }
  long marked = 0, transports = 0, ambiguous = 0;
  for (const auto& w : universe) {
    // Marker blocks and the string/atom decomposition must agree.
    const auto bs = blocks(w);
    const auto dec = decompose(w);
    bool same = bs.blocks.size() == dec.blocks.size();
    for (std::size_t i = 0; same && i < bs.blocks.size(); ++i) {
      same = bs.blocks[i].members.front() == dec.blocks[i].start && bs.blocks[i].members.back() == dec.blocks[i].end;
    }
    r.expect(same, "marker blocks of " + paren(w) + " match decompose");

    for (int k : marker_set(w)) {
      ++marked;
      const MarkedComposition m{w, k};
      for (int j = 1; j < w.size(); ++j) {
        const auto out = marked_merge(m, j);
        r.expect(is_marker(out.omega, out.marker), "merge " + std::to_string(j) + " of " + paren(w) + "@" + std::to_string(k));
      }
      for (int j = 0; j <= w.size(); ++j) {
        const auto out = marked_insert(m, j);
        r.expect(is_marker(out.omega, out.marker), "insert " + std::to_string(j) + " of " + paren(w) + "@" + std::to_string(k));
      }
      for (const auto& target : universe) {
        if (!geq(w, target)) continue;
        ++transports;
        const auto landing = transport_all(m, target);
        const auto morphisms = mor_enumerate(w, target);
        if (landing.size() != 1) {
          ++ambiguous;
          r.deviation("transport " + paren(w) + "@" + std::to_string(k) + " -> " + paren(target) + " lands on " +
                      std::to_string(landing.size()) + " markers");
          r.expect(morphisms.size() > 1, "ambiguity with a single morphism " + paren(w) + " -> " + paren(target));
        }
        // Fixing the morphism must pin the marker down.
        std::set<int> along;
        for (const auto& alpha : morphisms) {
          try {
            along.insert(transport_along(m, alpha));
            r.expect(true, "");
          } catch (const Error& e) {
            r.expect(false, e.what());
          }
        }
        r.expect(along == std::set<int>(landing.begin(), landing.end()),
                 "per-morphism markers of " + paren(w) + "@" + std::to_string(k) + " -> " + paren(target));
      }
    }
  }
  r.details = Json{{"max_d", d}, {"marked_elements", marked}, {"transports", transports}, {"ambiguous", ambiguous}};
  return r;
}

// ---------------------------------------------------------------- classifier

struct RandomDivisor {
  std::vector<RealRootSpec> real;
  std::vector<ConjugatePairSpec> pairs;
  Composition expected;
};

class DivisorSampler {
 public:
  explicit DivisorSampler(unsigned seed) : rng_(seed) {}

  // Total degree exactly `degree`; real multiplicities fill what the pairs leave.
  RandomDivisor draw(int degree) {
    RandomDivisor d;
    int left = degree;
    while (left >= 2 && coin(0.3)) {
      const int m = uniform(1, std::min(2, left / 2));
      d.pairs.push_back({rational(), positive_rational(), m});
      left -= 2 * m;
    }
    std::map<Rational, int> roots;
    while (left > 0) {
      const Rational x = rational();
      if (roots.count(x)) continue;
      const int m = uniform(1, std::min(3, left));
      roots[x] = m;
      left -= m;
    }
    std::vector<int> mults;
    for (const auto& [x, m] : roots) {
      d.real.push_back({x, m});
      mults.push_back(m);
    }
    d.expected = Composition(std::move(mults));
    return d;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  Rational rational() {
    Rational q(uniform(-24, 24), uniform(1, 6));
    q.canonicalize();
    return q;
  }
  Rational positive_rational() {
    Rational q(uniform(1, 12), uniform(1, 4));
    q.canonicalize();
    return q;
  }

  std::mt19937 rng_;
};

SuiteResult suite_classifier(const VerifyOptions& opts) {
  SuiteResult r{"classifier"};
  DivisorSampler sampler(opts.seed);
  for (int i = 0; i < 200; ++i) {
    const auto d = sampler.draw(sampler.uniform(0, 10));
    const auto p = expand_from_divisor(d.real, d.pairs);
    const auto got = classify(p);
    r.expect(got == d.expected, "round trip " + to_string(p) + " gave " + paren(got) + ", expected " + paren(d.expected));
    if (p.degree() > 0) {
      RationalPolynomial q = RationalPolynomial::constant(1);
      for (const auto& f : squarefree_decomposition(p)) q = q * f.factor;
      r.expect(SturmSequence(q).count_all() == got.size(), "Sturm total for " + to_string(p));
    }
  }
  for (int i = 0; i < 100; ++i) {
    const auto d = sampler.draw(2 * sampler.uniform(1, 5));
    const auto p = expand_from_divisor(d.real, d.pairs);
    const auto comps = negativity_components(p);
    const auto blocks = decompose(classify(p)).blocks;
    bool same = comps.size() == blocks.size();
    for (std::size_t k = 0; same && k < comps.size(); ++k) {
      same = comps[k].first_root == blocks[k].start && comps[k].last_root == blocks[k].end &&
             comps[k].type == blocks[k].element && comps[k].marker_root_index == blocks[k].start &&
             comps[k].point == (blocks[k].kind == BlockKind::Atom);
    }
    r.expect(same, "negativity components of " + to_string(p) + " differ from decompose");
  }
  r.details = Json{{"seed", opts.seed}, {"round_trips", 200}, {"negativity_cases", 100}};
  return r;
}

// ---------------------------------------------------------------- degenerating families

ParametricPolynomial poly_in_u(const std::vector<std::vector<int>>& coeffs) {
  ParametricPolynomial out;
  for (const auto& tc : coeffs) {
    std::vector<Rational> c(tc.begin(), tc.end());
    out.u_coeffs.push_back(RationalPolynomial(std::move(c)));
  }
  return out;
}

// u - (a + b t)
ParametricPolynomial lin(int a, int b) { return poly_in_u({{-a, -b}, {1}}); }

SuiteResult suite_degenerations(const VerifyOptions&) {
  SuiteResult r{"degenerations"};
  Json rows = Json::array();
  for (const auto& fam : designed_families()) {
    const auto report = classify_family(fam.family, fam.samples);
    r.expect(!report.transitions.empty(), fam.name + " never changes type");
    for (const auto& t : report.transitions) {
      r.expect(t.geq_ok, fam.name + ": " + paren(t.from) + " is not >= " + paren(t.to));
      r.expect(t.reduced_norm_ok, fam.name + ": reduced norm does not increase " + paren(t.from) + " -> " + paren(t.to));
    }
    rows.push_back(Json{{"family", fam.name}, {"generic", to_json(report.types.front())}, {"degenerate", to_json(report.types.back())}});
  }
  r.details = Json{{"families", rows}};
  return r;
}

using SuiteFn = std::function<SuiteResult(const VerifyOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"mor-reach", suite_mor_reach}, {"bullet-mor", suite_bullet_mor},     {"star-counts", suite_star_counts},
      {"euler", suite_euler},      {"bounds", suite_bounds},        {"markers", suite_markers},
      {"classifier", suite_classifier}, {"degenerations", suite_degenerations}, {"cells-d4", suite_cells_d4},
      {"tmodel-d4", suite_tmodel_d4},        {"tmodel-boundary", suite_tmodel_boundary},            {"bullet-count", suite_bullet_count},
      {"order-examples", suite_order_examples},
  };
  return suites;
}

}  // namespace

void SuiteResult::deviation(const std::string& what) {
  ++deviation_count;
  if (deviations.size() < kKeptFailures) deviations.push_back(what);
}

std::string SuiteResult::status() const {
  if (!passed()) return "FAIL";
  return deviation_count > 0 ? "DEVIATES" : "PASS";
}

void SuiteResult::expect(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failure_count;
  if (failures.size() < kKeptFailures) failures.push_back(what);
}

std::vector<DesignedFamily> designed_families() {
  const std::vector<Rational> samples{Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(0)};
  const auto u2_plus = [](int c) { return poly_in_u({{0, c}, {}, {1}}); };  // u^2 + c t
  const auto u2_plus_t2 = poly_in_u({{0, 0, 1}, {}, {1}});                  // u^2 + t^2
  std::vector<std::pair<std::string, ParametricPolynomial>> fams{
      {"(u-t)(u+t)", lin(0, 1) * lin(0, -1)},
      {"u^2+t", u2_plus(1)},
      {"u^2-t", u2_plus(-1)},
      {"(u-t)(u+t)(u-2)", lin(0, 1) * lin(0, -1) * lin(2, 0)},
      {"(u-t)(u-2t)(u-3)", lin(0, 1) * lin(0, 2) * lin(3, 0)},
      {"(u-t)(u+t)(u-3-t)(u-3+t)", lin(0, 1) * lin(0, -1) * lin(3, 1) * lin(3, -1)},
      {"(u^2+t)(u-1)^2", u2_plus(1) * lin(1, 0) * lin(1, 0)},
      {"u(u^2-t)", lin(0, 0) * u2_plus(-1)},
      {"(u-t)(u+t)u(u-5)", lin(0, 1) * lin(0, -1) * lin(0, 0) * lin(5, 0)},
      {"(u^2+t^2)(u-1)", u2_plus_t2 * lin(1, 0)},
      {"u^4+t", poly_in_u({{0, 1}, {}, {}, {}, {1}})},
      {"u^4-t", poly_in_u({{0, -1}, {}, {}, {}, {1}})},
      {"(u^2-t)(u^2-4t)", u2_plus(-1) * u2_plus(-4)},
      {"(u^2+t)(u^2+4t)", u2_plus(1) * u2_plus(4)},
      {"(u-t)(u-2t)(u-3t)(u+1)", lin(0, 1) * lin(0, 2) * lin(0, 3) * lin(-1, 0)},
      {"u^2(u^2-t)", lin(0, 0) * lin(0, 0) * u2_plus(-1)},
      {"(u-t)^2(u+t)^2", lin(0, 1) * lin(0, 1) * lin(0, -1) * lin(0, -1)},
      {"(u-t)(u+t)(u^2+t^2)", lin(0, 1) * lin(0, -1) * u2_plus_t2},
      {"(u^2+t)(u-2)(u+2)", u2_plus(1) * lin(2, 0) * lin(-2, 0)},
      {"(u-t)(u+t)(u-1)^2(u-3)", lin(0, 1) * lin(0, -1) * lin(1, 0) * lin(1, 0) * lin(3, 0)},
  };
  std::vector<DesignedFamily> out;
  for (auto& [name, fam] : fams) out.push_back({name, std::move(fam), samples});
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "all") {
    SuiteResult total{"all"};
    Json parts = Json::array();
    for (const auto& [sub, fn] : registry()) {
      auto part = fn(opts);
      total.checks += part.checks;
      total.failure_count += part.failure_count;
      total.deviation_count += part.deviation_count;
      for (const auto& dv : part.deviations) {
        if (total.deviations.size() < kKeptFailures) total.deviations.push_back(sub + ": " + dv);
      }
      for (const auto& f : part.failures) {
        if (total.failures.size() < kKeptFailures) total.failures.push_back(sub + ": " + f);
      }
      parts.push_back(to_json(part));
    }
    total.details = Json{{"suites", parts}};
    return total;
  }
  for (const auto& [sub, fn] : registry()) {
    if (sub == name) return fn(opts);
  }
  throw std::invalid_argument("unknown verification suite '" + name + "'");
}

Json to_json(const SuiteResult& r) {
  return Json{{"suite", r.name},
              {"status", r.status()},
              {"checks", r.checks},
              {"failures", r.failure_count},
              {"counterexamples", r.failures},
              {"deviations", r.deviation_count},
              {"deviation_examples", r.deviations},
              {"details", r.details}};
}

}  // namespace tangency
