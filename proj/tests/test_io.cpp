#include <doctest.h>

#include "tangency/io.hpp"

using namespace tangency;

TEST_SUITE("io") {
  TEST_CASE("composition JSON") {
    CHECK(to_json(Composition{1, 4, 1}).dump() == "[1,4,1]");
    CHECK(to_json(Composition{}).dump() == "[]");
    CHECK(composition_from_json(Json::parse("[2,2]")) == Composition{2, 2});
    CHECK_THROWS_AS(composition_from_json(Json::parse("[0]")), Error);
    CHECK_THROWS_AS(composition_from_json(Json::parse("{\"a\":1}")), Error);
  }

  TEST_CASE("poset round trip") {
    const auto p = hasse(generate_bullet(3), OrderKind::Bullet);
    const auto back = poset_from_json(to_json(p));
    CHECK(back.kind == p.kind);
    CHECK(back.elements == p.elements);
    CHECK(back.covers == p.covers);
  }

  TEST_CASE("marked and polynomial round trips") {
    const MarkedComposition m{{1, 1, 2}, 3};
    CHECK(marked_from_json(to_json(m)) == m);
    const auto p = parse_polynomial("1/3,-2,0,7/5");
    CHECK(polynomial_from_json(to_json(p)) == p);
    CHECK_THROWS_AS(marked_from_json(Json::parse("{\"omega\":[1,1]}")), Error);
  }

  TEST_CASE("f-vector and model JSON") {
    const auto f = to_json(f_vector(4, Ambient::BalancedSphere));
    CHECK(f["ambient"] == "balanced_sphere");
    CHECK(f["d"] == 4);
    CHECK(f["counts"] == Json::parse("[3,4,3]"));
    const auto t = to_json(build_t_model({4}));
    CHECK(t["f_vector"] == Json::parse("[1,4,6,3]"));
  }

  TEST_CASE("DOT output") {
    const auto dot = to_dot(hasse(generate_omega(2, GenMode::UpTo), OrderKind::Omega));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    const auto cdot = to_dot(link_complex({4}), "link");
    CHECK(cdot.find("link") != std::string::npos);
  }
}
