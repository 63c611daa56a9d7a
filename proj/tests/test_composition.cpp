#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "tangency/composition.hpp"

using namespace tangency;
using testsupport::compositions_upto;

namespace {

// Block decomposition from odd-entry labelling: odd entries alternate +,-,
// each (+,-) pair spans a string, leftover even entries are atoms.
BlockDecomposition numeral_decompose(const Composition& w) {
  BlockDecomposition out;
  int open = 0;
  bool plus_next = true;
  for (int i = 1; i <= w.size(); ++i) {
    const bool odd = w.at(i) % 2 == 1;
    if (odd && plus_next) {
      open = i;
      plus_next = false;
    } else if (odd) {
      out.blocks.push_back({open, i, BlockKind::String, w.slice(open, i)});
      open = 0;
      plus_next = true;
    } else if (open == 0) {
      out.blocks.push_back({i, i, BlockKind::Atom, w.slice(i, i)});
    }
  }
  return out;
}

int witness_sign(const Composition& w, int gap) {
  int s = 1;
  for (int k = 1; k <= w.size(); ++k) {
    if (k > gap && w.at(k) % 2) s = -s;
  }
  return s;
}

}  // namespace

TEST_SUITE("composition_core") {
  TEST_CASE("construction and norms") {
    CHECK(make_composition({1, 4, 1}) == Composition{1, 4, 1});
    CHECK(make_composition({}).empty());
    CHECK_THROWS_AS(make_composition({1, 0, 2}), Error);
    CHECK(Composition{1, 4, 1}.norm() == 6);
    CHECK(Composition{}.norm() == 0);
    CHECK(Composition{1, 2, 2, 2, 1}.norm() == 8);
    CHECK(Composition{1, 2, 1}.reduced_norm() == 1);
    CHECK(Composition{4}.reduced_norm() == 3);
    CHECK(Composition{}.reduced_norm() == 0);
    CHECK(Composition{2}.virtual_multiplicity() == 1);
    CHECK(Composition{1, 4, 1}.virtual_multiplicity() == 2);
    CHECK(Composition{3, 3}.virtual_multiplicity() == 2);
  }

  TEST_CASE("text form") {
    CHECK(parse_composition("e").empty());
    CHECK(parse_composition("1,4,1") == Composition{1, 4, 1});
    CHECK(to_string(Composition{}) == "e");
    CHECK_THROWS_AS(parse_composition("1,x"), Error);
  }

  TEST_CASE("merge and insert") {
    CHECK(merge({1, 1, 3, 1}, 2) == Composition{1, 4, 1});
    CHECK(merge({1, 1}, 1) == Composition{2});
    CHECK_THROWS_AS(merge({2, 3}, 2), Error);
    CHECK_THROWS_AS(merge({2}, 1), Error);
    CHECK(insert({1, 1}, 1) == Composition{1, 2, 1});
    CHECK(insert({}, 0) == Composition{2});
    CHECK(insert({1, 1}, 0) == Composition{2, 1, 1});
    CHECK_THROWS_AS(insert({1, 1}, 3), Error);
    CHECK_THROWS_AS(insert({1, 1}, -1), Error);
  }

  TEST_CASE("elementary operations shift the reduced norm by one") {
    for (const auto& w : compositions_upto(8)) {
      for (int j = 1; j < w.size(); ++j) {
        const auto m = merge(w, j);
        CHECK(m.norm() == w.norm());
        CHECK(m.reduced_norm() == w.reduced_norm() + 1);
      }
      for (int j = 0; j <= w.size(); ++j) {
        const auto i = insert(w, j);
        CHECK(i.norm() == w.norm() + 2);
        CHECK(i.reduced_norm() == w.reduced_norm() + 1);
      }
    }
  }

  TEST_CASE("successors") {
    CHECK(successors({1, 1}, 4) == std::vector<Composition>{{2}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    CHECK(successors({2}, 2).empty());
    CHECK(successors({}, 2) == std::vector<Composition>{{2}});
  }

  TEST_CASE("one-step predecessors invert the operations") {
    CHECK(predecessors_one_step({2}) == std::vector<Composition>{{}, {1, 1}});
    CHECK(predecessors_one_step({3}) == std::vector<Composition>{{1, 2}, {2, 1}});
    CHECK(predecessors_one_step({1, 1}).empty());
    for (const auto& w : compositions_upto(9)) {
      const auto preds = predecessors_one_step(w);
      CHECK(static_cast<int>(preds.size()) == w.reduced_norm() + w.count_of(2));
      // each predecessor reaches w in one step
      for (const auto& p : preds) {
        const auto next = successors(p, w.norm());
        CHECK(std::find(next.begin(), next.end(), w) != next.end());
      }
    }
  }

  TEST_CASE("is_bullet") {
    CHECK(is_bullet({1, 2, 2, 1}));
    CHECK(is_bullet({4}));
    CHECK_FALSE(is_bullet({1, 2, 1, 2, 1}));
    CHECK_FALSE(is_bullet({}));
    CHECK_FALSE(is_bullet({3}));
    CHECK(is_bullet({3, 1}));
  }

  TEST_CASE("gap signs") {
    CHECK(gap_sign({1, 1, 1, 1}, 1) == -1);
    CHECK(gap_sign({1, 1, 1, 1}, 0) == 1);
    CHECK(gap_sign({2}, 0) == 1);
    CHECK_THROWS_AS(gap_sign({2}, 2), Error);
    for (const auto& w : compositions_upto(7)) {
      CHECK(gap_sign(w, w.size()) == 1);
      CHECK((gap_sign(w, 0) == 1) == (w.norm() % 2 == 0));
      for (int g = 0; g <= w.size(); ++g) CHECK(gap_sign(w, g) == witness_sign(w, g));
    }
  }

  TEST_CASE("decompose examples") {
    const auto d1 = decompose({1, 1, 3, 1});
    REQUIRE(d1.blocks.size() == 2);
    CHECK(d1.blocks[0] == Block{1, 2, BlockKind::String, {1, 1}});
    CHECK(d1.blocks[1] == Block{3, 4, BlockKind::String, {3, 1}});
    const auto d2 = decompose({1, 1, 2, 3, 1, 2});
    REQUIRE(d2.blocks.size() == 4);
    CHECK(d2.blocks[1] == Block{3, 3, BlockKind::Atom, {2}});
    CHECK(d2.blocks[2] == Block{4, 5, BlockKind::String, {3, 1}});
    CHECK(d2.blocks[3] == Block{6, 6, BlockKind::Atom, {2}});
    CHECK(decompose({2}).blocks == std::vector<Block>{{1, 1, BlockKind::Atom, {2}}});
    CHECK_THROWS_AS(decompose({1, 2}), Error);
  }

  TEST_CASE("decompose agrees with the numeral construction up to norm 12") {
    for (const auto& w : compositions_upto(12, true)) {
      const auto d = decompose(w);
      CHECK_MESSAGE(d == numeral_decompose(w), to_string(w));
      int next = 1;
      for (const auto& b : d.blocks) {
        CHECK(b.start == next);
        CHECK(is_bullet(b.element));
        next = b.end + 1;
      }
      CHECK(next == w.size() + 1);
    }
  }

  TEST_CASE("decompose commutes with reversal") {
    for (const auto& w : compositions_upto(10, true)) {
      const auto d = decompose(w);
      const auto r = decompose(w.reversed());
      REQUIRE(d.blocks.size() == r.blocks.size());
      const int q = w.size();
      for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const auto& a = d.blocks[i];
        const auto& b = r.blocks[r.blocks.size() - 1 - i];
        CHECK(b.start == q + 1 - a.end);
        CHECK(b.element == a.element.reversed());
      }
    }
  }
}
