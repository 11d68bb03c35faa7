#include <doctest.h>

#include <stdexcept>

#include "catgraph/labels.hpp"

using namespace catgraph;

TEST_CASE("pair labels round trip, including nested ones") {
  CHECK(pair_label("a", "b") == "(a,b)");
  auto [x, y] = split_pair_label("(a,b)");
  CHECK(x == "a");
  CHECK(y == "b");

  auto nested = pair_label(pair_label("a", "b"), "c");
  auto [l, r] = split_pair_label(nested);
  CHECK(l == "(a,b)");
  CHECK(r == "c");

  CHECK_THROWS_AS(split_pair_label("a,b"), std::invalid_argument);
  CHECK_THROWS_AS(split_pair_label("(a,b,c)"), std::invalid_argument);
  CHECK_THROWS_AS(split_pair_label("()"), std::invalid_argument);
}

TEST_CASE("set labels sort their members") {
  CHECK(set_label({"b", "a"}) == "{a,b}");
  CHECK(set_label({}) == "{}");
  CHECK(split_set_label("{}").empty());
  CHECK(split_set_label("{a,b}") == std::vector<std::string>{"a", "b"});

  // plain byte order puts brackets after letters
  auto nested = set_label({set_label({"u", "v"}), "w"});
  auto parts = split_set_label(nested);
  CHECK(parts.size() == 2);
  CHECK(parts[0] == "w");
  CHECK(parts[1] == "{u,v}");

  CHECK_THROWS_AS(split_set_label("a,b"), std::invalid_argument);
}

TEST_CASE("tag labels mark coproduct sides") {
  CHECK(tag_label(0, "v") == "0:v");
  CHECK(tag_label(1, "v") == "1:v");
}

TEST_CASE("well formed labels balance brackets and hide commas") {
  CHECK(well_formed_label("a"));
  CHECK(well_formed_label("(a,b)"));
  CHECK(well_formed_label("{a,(b,c)}"));
  CHECK_FALSE(well_formed_label(""));
  CHECK_FALSE(well_formed_label("a,b"));
  CHECK_FALSE(well_formed_label("(a"));
  CHECK_FALSE(well_formed_label("a)"));
  CHECK_FALSE(well_formed_label("(a}"));
}
