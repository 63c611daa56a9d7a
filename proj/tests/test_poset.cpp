#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "support.hpp"
#include "tangency/poset.hpp"

using namespace tangency;

namespace {

// All weakly monotone maps [p] -> [q] filtered by the defining conditions.
std::vector<std::vector<int>> brute_morphisms(const Composition& a, const Composition& b, bool parity) {
  std::vector<std::vector<int>> out;
  std::vector<int> map(static_cast<std::size_t>(a.size()));
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i == a.size()) {
      std::vector<int> sums(static_cast<std::size_t>(b.size() + 1), 0);
      std::vector<bool> hit(static_cast<std::size_t>(b.size() + 1), false);
      for (int s = 0; s < a.size(); ++s) {
        sums[static_cast<std::size_t>(map[static_cast<std::size_t>(s)])] += a.at(s + 1);
        hit[static_cast<std::size_t>(map[static_cast<std::size_t>(s)])] = true;
      }
      for (int t = 1; t <= b.size(); ++t) {
        const auto ti = static_cast<std::size_t>(t);
        if (sums[ti] > b.at(t)) return;
        if (parity && (b.at(t) - sums[ti]) % 2) return;
      }
      out.push_back(map);
      return;
    }
    for (int t = lo; t <= b.size(); ++t) {
      map[static_cast<std::size_t>(i)] = t;
      rec(i + 1, t);
    }
  };
  if (a.size() == 0) {
    // the empty map: every target entry is missed
    bool ok = true;
    for (int t = 1; t <= b.size(); ++t) ok = ok && (!parity || b.at(t) % 2 == 0);
    if (ok) out.push_back({});
    return out;
  }
  rec(0, 1);
  return out;
}

std::vector<Composition> omega_upto(int d) {
  std::vector<Composition> out;
  for (const auto& w : testsupport::compositions_upto(d)) {
    if (w.norm() % 2 == d % 2) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("poset_order") {
  TEST_CASE("morphism examples") {
    CHECK_FALSE(mor_exists({1, 2, 1}, {1, 1}));
    CHECK(mor_exists({1, 1}, {1, 2, 1}));
    const auto m = mor_enumerate({1, 1}, {1, 2, 1});
    REQUIRE(m.size() == 1);
    CHECK(m[0].map == std::vector<int>{1, 3});
    const auto m2 = mor_enumerate({1, 1}, {2});
    REQUIRE(m2.size() == 1);
    CHECK(m2[0].map == std::vector<int>{1, 1});
    CHECK(mor_enumerate({2}, {1, 1}).empty());
  }

  TEST_CASE("order examples") {
    CHECK(geq({1, 1, 3, 1}, {1, 4, 1}));
    CHECK(geq({1, 1}, {2, 2}));
    CHECK_FALSE(geq({2}, {1, 1}));
    CHECK(geq({}, {2}));
  }

  TEST_CASE("mor_enumerate matches exhaustive monotone maps") {
    const auto univ = testsupport::compositions_upto(5);
    for (const auto& a : univ) {
      for (const auto& b : univ) {
        if (b.norm() < a.norm()) continue;
        std::set<std::vector<int>> fast, slow;
        for (const auto& m : mor_enumerate(a, b)) fast.insert(m.map);
        for (auto& m : brute_morphisms(a, b, true)) slow.insert(m);
        CHECK_MESSAGE(fast == slow, to_string(a) << " -> " << to_string(b));
        CHECK(mor_exists(a, b) == !slow.empty());
        if (!is_bullet(a) || !is_bullet(b)) continue;
        std::set<std::vector<int>> fb, sb;
        for (const auto& m : bullet_mor_enumerate(a, b)) fb.insert(m.map);
        for (auto& m : brute_morphisms(a, b, false)) sb.insert(m);
        CHECK(fb == sb);
      }
    }
  }

  TEST_CASE("morphism existence equals reachability on small universes") {
    const auto univ = omega_upto(5);
    for (const auto& a : univ)
      for (const auto& b : univ) CHECK(mor_exists(a, b) == reachable_bfs(a, b));
  }

  TEST_CASE("generated sets") {
    CHECK(generate_omega(4, GenMode::UpTo).size() == 11);
    CHECK(generate_bullet(0) == std::vector<Composition>{{1, 1}});
    auto b1 = generate_bullet(1);
    std::sort(b1.begin(), b1.end());
    CHECK(b1 == std::vector<Composition>{{2}, {1, 1}, {1, 2, 1}});
    CHECK(generate_bullet(3).size() == 11);
    CHECK_THROWS_AS(generate_bullet(-1), Error);
    for (int n = 0; n <= 4; ++n) {
      // filter every composition of norm <= 2n+4: a generous superset of the bound
      std::set<Composition> slow;
      for (const auto& w : testsupport::compositions_upto(2 * n + 4)) {
        if (is_bullet(w) && w.reduced_norm() <= n) slow.insert(w);
      }
      const auto fast = generate_bullet(n);
      CHECK(std::set<Composition>(fast.begin(), fast.end()) == slow);
    }
  }

  TEST_CASE("Omega Hasse covers are single elementary operations") {
    for (int d = 3; d <= 6; ++d) {
      const auto p = hasse(generate_omega(d, GenMode::UpTo), OrderKind::Omega);
      std::set<std::pair<Composition, Composition>> got, want;
      for (auto [a, b] : p.covers) got.insert({p.elements[static_cast<std::size_t>(a)], p.elements[static_cast<std::size_t>(b)]});
      for (const auto& w : p.elements)
        for (const auto& s : successors(w, d)) want.insert({w, s});
      CHECK(got == want);
    }
    const auto p4 = hasse(generate_omega(4, GenMode::UpTo), OrderKind::Omega);
    const int top = p4.index_of({1, 1, 1, 1});
    std::set<Composition> below;
    for (auto [a, b] : p4.covers)
      if (a == top) below.insert(p4.elements[static_cast<std::size_t>(b)]);
    CHECK(below == std::set<Composition>{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
    CHECK(hasse({{1, 1}}, OrderKind::Omega).covers.empty());
  }

  TEST_CASE("bullet order is a graded partial order with unit covers") {
    const auto els = generate_bullet(4);
    const auto rel = order_matrix(els, OrderKind::Bullet);
    const std::size_t n = els.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(rel[i][i]);
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && rel[i][j]) {
          CHECK_FALSE(rel[j][i]);
          CHECK(els[i].reduced_norm() < els[j].reduced_norm());
        }
        for (std::size_t k = 0; k < n; ++k)
          if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
      }
    }
    const auto p = hasse(els, OrderKind::Bullet);
    for (auto [a, b] : p.covers)
      CHECK(els[static_cast<std::size_t>(b)].reduced_norm() == els[static_cast<std::size_t>(a)].reduced_norm() + 1);
    // (1,1) covers exactly (2) and (1,2,1)
    const auto p3 = hasse(generate_bullet(3), OrderKind::Bullet);
    std::set<Composition> below;
    for (auto [a, b] : p3.covers)
      if (a == p3.index_of({1, 1})) below.insert(p3.elements[static_cast<std::size_t>(b)]);
    CHECK(below == std::set<Composition>{{2}, {1, 2, 1}});
    CHECK(bullet_geq({3, 1}, {1, 4, 1}));
  }

  TEST_CASE("every bullet relation has a bullet morphism") {
    const auto els = generate_bullet(4);
    for (const auto& a : els)
      for (const auto& b : els)
        if (bullet_geq_oracle(a, b)) CHECK(bullet_mor_exists(a, b));
  }

  TEST_CASE("truncations stabilize") {
    for (int d = 2; d <= 5; ++d) {
      const auto big = hasse(generate_bullet(d), OrderKind::Bullet);
      const auto small = hasse(generate_bullet(d - 1), OrderKind::Bullet);
      std::set<std::pair<Composition, Composition>> restricted, direct;
      for (auto [a, b] : big.covers) {
        const auto& x = big.elements[static_cast<std::size_t>(a)];
        const auto& y = big.elements[static_cast<std::size_t>(b)];
        if (y.reduced_norm() <= d - 1) restricted.insert({x, y});
      }
      for (auto [a, b] : small.covers)
        direct.insert({small.elements[static_cast<std::size_t>(a)], small.elements[static_cast<std::size_t>(b)]});
      CHECK(restricted == direct);
    }
  }

  TEST_CASE("predecessors at a distance") {
    const auto u4 = generate_omega(4, GenMode::UpTo);
    // the universe also holds lower-degree types, all reaching (4) by inserts
    auto far = pred_at_distance({4}, 3, u4);
    std::sort(far.begin(), far.end());
    CHECK(far == std::vector<Composition>{{}, {1, 1}, {1, 1, 1, 1}});
    std::vector<Composition> same_degree;
    for (const auto& w : far)
      if (w.norm() == 4) same_degree.push_back(w);
    CHECK(same_degree == std::vector<Composition>{{1, 1, 1, 1}});
    auto p = pred_at_distance({2}, 1, u4);
    std::sort(p.begin(), p.end());
    CHECK(p == std::vector<Composition>{{}, {1, 1}});
    CHECK(pred_at_distance({1, 2, 1}, 0, u4) == std::vector<Composition>{{1, 2, 1}});
  }
}
