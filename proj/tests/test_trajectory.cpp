#include <doctest.h>

#include <set>

#include "tangency/poset.hpp"
#include "tangency/trajectory.hpp"

using namespace tangency;

namespace {

// Cover relation re-derived pairwise: one component changes by one
// elementary operation and the marked operation on kappa lands on the
// smaller cell's marker.
bool covers_by_pairs(const TrajectoryCell& big, const TrajectoryCell& small) {
  if (big.dim != small.dim + 1) return false;
  const auto& a = big.label.components;
  const auto& b = small.label.components;
  int changed = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (changed >= 0) return false;
    changed = static_cast<int>(i);
  }
  if (changed < 0) return false;
  int offset = 0;
  for (int i = 0; i < changed; ++i) offset += a[static_cast<std::size_t>(i)].size();
  const auto& comp = a[static_cast<std::size_t>(changed)];
  const MarkedComposition m{kappa(big.label), big.marker};
  const Composition target = kappa(small.label);
  for (int j = 1; j < comp.size(); ++j) {
    if (merge(comp, j) != b[static_cast<std::size_t>(changed)]) continue;
    const auto r = marked_merge(m, offset + j);
    if (r.omega == target && r.marker == small.marker) return true;
  }
  for (int j = 0; j <= comp.size(); ++j) {
    if (insert(comp, j) != b[static_cast<std::size_t>(changed)]) continue;
    if (m.omega.empty()) continue;
    const auto r = marked_insert(m, offset + j);
    if (r.omega == target && r.marker == small.marker) return true;
  }
  return false;
}

std::vector<Composition> small_bases() {
  std::vector<Composition> out;
  for (const auto& w : generate_bullet(3)) out.push_back(w);
  return out;
}

}  // namespace

TEST_SUITE("trajectory_model") {
  TEST_CASE("kappa and labels") {
    CHECK(kappa(make_label({{1, 1}, {2}}, {2, 2})) == Composition{1, 1, 2});
    CHECK(kappa(make_label({{}, {1, 1}}, {2, 2})) == Composition{1, 1});
    CHECK(kappa(make_label({{}, {}}, {2, 2})).empty());
    CHECK(enumerate_labels({2}).size() == 3);
    CHECK(enumerate_labels({1, 1}).size() == 1);
    CHECK(enumerate_labels({4}).size() == 11);
    CHECK_THROWS_AS(make_label({{1, 1, 1}}, {2}), Error);
  }

  TEST_CASE("model examples") {
    CHECK(t_f_vector({4}) == std::vector<long long>{1, 4, 6, 3});
    CHECK(t_f_vector({1, 1}) == std::vector<long long>{1});
    const auto fold = build_t_model({2});
    REQUIRE(fold.cells.size() == 2);
    CHECK(fold.covers.size() == 1);
    const auto t121 = t_f_vector({1, 2, 1});
    CHECK(t121.size() == 2);
    CHECK(t121[1] >= 1);
  }

  TEST_CASE("boundary of the marked top cell") {
    const auto t = build_t_model({4});
    const int top = t.index_of(make_label({{1, 1, 1, 1}}, {4}), 3);
    REQUIRE(top >= 0);
    std::set<std::pair<Composition, int>> below;
    for (auto [a, b] : t.covers)
      if (a == top) below.insert({t.cells[static_cast<std::size_t>(b)].label.components[0], t.cells[static_cast<std::size_t>(b)].marker});
    CHECK(below == std::set<std::pair<Composition, int>>{{{2, 1, 1}, 2}, {{1, 2, 1}, 1}, {{1, 1, 2}, 3}});
  }

  TEST_CASE("covers agree with a pairwise scan") {
    for (const auto& w : small_bases()) {
      const auto t = build_t_model(w);
      std::set<std::pair<int, int>> listed(t.covers.begin(), t.covers.end());
      std::set<std::pair<int, int>> scanned;
      for (std::size_t i = 0; i < t.cells.size(); ++i)
        for (std::size_t j = 0; j < t.cells.size(); ++j)
          if (covers_by_pairs(t.cells[i], t.cells[j])) scanned.insert({static_cast<int>(i), static_cast<int>(j)});
      CHECK_MESSAGE(listed == scanned, to_string(w));
    }
  }

  TEST_CASE("the model is a cone over its link") {
    CHECK(link_complex({4}).f_vector() == std::vector<long long>{4, 6, 3});
    CHECK(link_complex({2}).f_vector() == std::vector<long long>{1});
    CHECK(link_complex({1, 1}).cells.empty());
    for (const auto& w : small_bases()) {
      const auto whole = t_f_vector(w);
      const auto link = link_complex(w).f_vector();
      std::vector<long long> cone{1};
      cone.insert(cone.end(), link.begin(), link.end());
      CHECK_MESSAGE(whole == cone, to_string(w));
    }
  }

  TEST_CASE("strata along covers") {
    CHECK(stratum_label(make_label({{1, 1, 2}}, {4}), 3) == Composition{2});
    CHECK(stratum_label(make_label({{1, 1, 1, 1}}, {4}), 1) == Composition{1, 1});
    CHECK(stratum_label(make_label({{4}}, {4}), 1) == Composition{4});
    for (const auto& w : small_bases()) {
      const auto t = build_t_model(w);
      for (auto [a, b] : t.covers) {
        const auto& big = t.cells[static_cast<std::size_t>(a)];
        const auto& small = t.cells[static_cast<std::size_t>(b)];
        CHECK(bullet_geq(big.stratum, small.stratum));
        if (big.stratum != small.stratum) CHECK(big.stratum.reduced_norm() < small.stratum.reduced_norm());
      }
    }
  }

  TEST_CASE("fiber counts") {
    for (const auto& [label, n] : fiber_report({4})) {
      if (label.components[0] == Composition{1, 1, 1, 1}) CHECK(n == 2);
      if (label.components[0] == Composition{2}) CHECK(n == 1);
    }
    const auto one = fiber_report({1, 1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].second == 1);
    for (const auto& w : generate_bullet(4))
      for (const auto& [label, n] : fiber_report(w)) CHECK(2 * n <= w.norm());
  }

  TEST_CASE("bases outside the bullet set are rejected") {
    CHECK_THROWS_AS(build_t_model({1, 2}), Error);
    CHECK_THROWS_AS(build_t_model({}), Error);
  }
}
