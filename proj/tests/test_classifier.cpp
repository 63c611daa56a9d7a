#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "tangency/classifier.hpp"
#include "tangency/poset.hpp"

using namespace tangency;
using testsupport::uniform;

namespace {

RationalPolynomial poly(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return RationalPolynomial(v);
}

}  // namespace

TEST_SUITE("real_root_classifier") {
  TEST_CASE("polynomial arithmetic") {
    const auto p = poly({-2, 5, -4, 1});
    CHECK(p.degree() == 3);
    CHECK(p.eval(1) == 0);
    CHECK(p.eval(3) == 4);
    const auto [q, r] = divmod(p, poly({-1, 1}));
    CHECK(q == poly({2, -3, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(p, p.derivative()) == poly({-1, 1}));
    CHECK(parse_polynomial("-2,5,-4,1") == p);
    CHECK(parse_polynomial("1/2,0,1").coeffs()[0] == Rational(1, 2));
    CHECK_THROWS_AS(parse_polynomial("1,,2"), Error);
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  }

  TEST_CASE("square-free decomposition") {
    const auto f = squarefree_decomposition(poly({0, 0, -1, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0].factor == poly({-1, 1}));
    CHECK(f[0].multiplicity == 1);
    CHECK(f[1].factor == poly({0, 1}));
    CHECK(f[1].multiplicity == 2);
    CHECK(squarefree_decomposition(poly({1, 0, 1})).size() == 1);
    CHECK(squarefree_decomposition(poly({5})).empty());
    CHECK_THROWS_AS(squarefree_decomposition(RationalPolynomial{}), Error);
  }

  TEST_CASE("root isolation") {
    const auto r = isolate_real_roots(poly({-2, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].hi <= r[1].lo);
    for (const auto& root : r) CHECK(poly({-2, 0, 1}).sign_at(root.lo) * poly({-2, 0, 1}).sign_at(root.hi) <= 0);
    CHECK(isolate_real_roots(poly({1, 0, 1})).empty());
    const auto three = isolate_real_roots(poly({0, -1, 0, 1}));
    REQUIRE(three.size() == 3);
    const int expected[] = {-1, 0, 1};
    for (int i = 0; i < 3; ++i) {
      const auto& r = three[static_cast<std::size_t>(i)];
      if (r.exact) {
        CHECK(r.lo == expected[i]);
        CHECK(r.hi == expected[i]);
      } else {
        CHECK(r.lo < expected[i]);
        CHECK(expected[i] <= r.hi);
      }
    }
    CHECK_THROWS_AS(isolate_real_roots(poly({1, -2, 1})), Error);
  }

  TEST_CASE("classification") {
    CHECK(classify(poly({-2, 5, -4, 1})) == Composition{2, 1});
    CHECK(classify(poly({1, 0, 1})).empty());
    CHECK(classify(expand_from_divisor({{1, 1}, {2, 1}, {3, 1}, {4, 1}}, {})) == Composition{1, 1, 1, 1});
  }

  TEST_CASE("expansion") {
    CHECK(expand_from_divisor({{1, 2}, {2, 1}}, {}) == poly({-2, 5, -4, 1}));
    CHECK(expand_from_divisor({}, {{0, 1, 1}}) == poly({1, 0, 1}));
    CHECK(expand_from_divisor({{0, 2}}, {}) == poly({0, 0, 1}));
    CHECK_THROWS_AS(expand_from_divisor({{2, 1}, {1, 1}}, {}), Error);
    CHECK_THROWS_AS(expand_from_divisor({}, {{0, 0, 1}}), Error);
  }

  TEST_CASE("random round trips with Sturm counts") {
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<RealRootSpec> real;
      std::vector<int> mults;
      int degree = 0;
      Rational x(uniform(-20, 0), uniform(1, 4));
      x.canonicalize();
      while (degree < 10 && uniform(0, 3) > 0) {
        const int m = uniform(1, std::min(3, 10 - degree));
        real.push_back({x, m});
        mults.push_back(m);
        degree += m;
        Rational step(uniform(1, 9), uniform(1, 5));
        step.canonicalize();
        x += step;
      }
      std::vector<ConjugatePairSpec> pairs;
      while (degree + 2 <= 10 && uniform(0, 2) == 0) {
        Rational re(uniform(-9, 9), 2), im(uniform(1, 7), 3);
        re.canonicalize();
        im.canonicalize();
        pairs.push_back({re, im, 1});
        degree += 2;
      }
      const auto p = expand_from_divisor(real, pairs);
      CHECK(classify(p) == Composition(mults));
      RationalPolynomial sf = RationalPolynomial::constant(1);
      for (const auto& f : squarefree_decomposition(p)) sf = sf * f.factor;
      CHECK(SturmSequence(sf).count_all() == static_cast<int>(real.size()));
      const auto roots = real_roots(p);
      REQUIRE(roots.size() == real.size());
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].exact) {
          CHECK(roots[i].hi == real[i].root);
        } else {
          CHECK(roots[i].lo < real[i].root);
          CHECK(real[i].root <= roots[i].hi);
        }
      }
    }
  }

  TEST_CASE("negativity components") {
    const auto p = expand_from_divisor({{1, 1}, {2, 1}, {3, 2}, {4, 1}, {5, 1}}, {});
    const auto c = negativity_components(p);
    REQUIRE(c.size() == 3);
    CHECK(c[0].type == Composition{1, 1});
    CHECK(c[0].marker_root_index == 1);
    CHECK(c[1].type == Composition{2});
    CHECK(c[1].point);
    CHECK(c[1].marker_root_index == 3);
    CHECK(c[2].type == Composition{1, 1});
    CHECK(c[2].marker_root_index == 4);
    CHECK(negativity_components(poly({1, 0, 1})).empty());
    const auto sq = negativity_components(poly({1, -2, 1}));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].type == Composition{2});
    CHECK_THROWS_AS(negativity_components(poly({-2, 5, -4, 1})), Error);
  }

  TEST_CASE("negativity agrees with the block decomposition") {
    for (int trial = 0; trial < 60; ++trial) {
      const auto w = testsupport::random_composition(5, 3);
      if (w.norm() % 2) continue;
      std::vector<RealRootSpec> real;
      for (int i = 1; i <= w.size(); ++i) {
        Rational r(i * uniform(1, 3) + 10 * i, 7);
        r.canonicalize();
        real.push_back({r, w.at(i)});
      }
      const auto comps = negativity_components(expand_from_divisor(real, {}));
      const auto d = decompose(w);
      REQUIRE(comps.size() == d.blocks.size());
      for (std::size_t i = 0; i < comps.size(); ++i) {
        CHECK(comps[i].type == d.blocks[i].element);
        CHECK(comps[i].first_root == d.blocks[i].start);
      }
    }
  }

  TEST_CASE("families") {
    const auto pm = parse_family("0,0,-1;0;1");  // u^2 - t^2
    const auto r = classify_family(pm, {Rational(1), Rational(1, 2), Rational(0)});
    CHECK(r.types == std::vector<Composition>{{1, 1}, {1, 1}, {2}});
    REQUIRE(r.transitions.size() == 1);
    CHECK(r.transitions[0].ok());
    const auto lift = classify_family(parse_family("0,1;0;1"), {Rational(1), Rational(0)});
    CHECK(lift.types == std::vector<Composition>{{}, {2}});
    CHECK(lift.consistent());
    const auto flat = classify_family(parse_family("1;0;1"), {Rational(1), Rational(0)});
    CHECK(flat.transitions.empty());
    CHECK_THROWS_AS(classify_family(pm, {}), Error);
  }
}
