#include <doctest.h>

#include "catgraph/comma.hpp"
#include "catgraph/coreflectors.hpp"
#include "catgraph/errors.hpp"
#include "catgraph/graphs.hpp"

using namespace catgraph;

TEST_CASE("quiver cosimplification drops exactly the isolated vertices") {
  FinSet v{{"a", "b", "c"}};
  FinSet e{{"e"}};
  Quiver q{v, e, FinMap{e, v, {{"e", "a"}}}, FinMap{e, v, {{"e", "b"}}}};
  auto c = cosimplify_quiver(q);
  auto out = quiver_from_comma(c.result);
  CHECK(out.vertices.labels() == std::vector<std::string>{"a", "b"});
  CHECK(out.edges == q.edges);
  CHECK(validate(c.counit).pass);

  auto again = cosimplify(c.result);
  CHECK(again.result == c.result);
}

TEST_CASE("a vertex kept by a loop counts as touched") {
  FinSet v{{"a", "b"}};
  FinSet e{{"e"}};
  Quiver q{v, e, FinMap{e, v, {{"e", "a"}}}, FinMap{e, v, {{"e", "a"}}}};
  auto out = quiver_from_comma(cosimplify_quiver(q).result);
  CHECK(out.vertices.labels() == std::vector<std::string>{"a"});
}

TEST_CASE("incidence cosimplification drops loose vertices and edges") {
  FinSet v{{"a", "b"}};
  FinSet e{{"e", "f"}};
  FinSet i{{"i"}};
  IncHypergraph g{v, e, i, FinMap{i, v, {{"i", "a"}}}, FinMap{i, e, {{"i", "e"}}}};
  auto c = cosimplify_inc(g);
  auto out = incidence_from_comma(c.result);
  CHECK(out.vertices.labels() == std::vector<std::string>{"a"});
  CHECK(out.edges.labels() == std::vector<std::string>{"e"});
  CHECK(out.incidences == g.incidences);
  CHECK(validate(c.counit).pass);
}

TEST_CASE("antihomomorphism cosimplification merges duplicate edges") {
  auto h = make_hypergraph(FinSet{{"a", "b"}},
                           {{"e", {"a"}}, {"f", {"a"}}, {"g", {"a", "b"}}});
  auto c = cosimplify_p(h);
  CHECK(is_cosimple(c.result));
  auto out = hypergraph_from_comma_anti(c.result);
  CHECK(out.edges.size() == 2);
  CHECK(out.vertices == h.vertices);
  CHECK(validate(c.counit).pass);

  auto again = cosimplify(c.result);
  CHECK(again.result == c.result);
  CHECK(again.counit == identity_morphism(c.result));
}

TEST_CASE("hypergraph covariant cosimplification is rejected") {
  auto h = make_hypergraph(FinSet{{"a"}}, {{"e", {"a"}}});
  CHECK_THROWS_AS(cosimplify(to_comma(h)), KindError);
}

TEST_CASE("morphisms from cosimple sources lift through the counit") {
  // loaded single-vertex quiver is cosimple
  FinSet v{{"z"}};
  FinSet e{{"l"}};
  Quiver loaded{v, e, FinMap{e, v, {{"l", "z"}}}, FinMap{e, v, {{"l", "z"}}}};
  REQUIRE(is_loaded(loaded));

  FinSet w{{"a", "b"}};
  FinSet f{{"e"}};
  Quiver target{w, f, FinMap{f, w, {{"e", "a"}}}, FinMap{f, w, {{"e", "a"}}}};
  QuiverHom m{loaded, target, FinMap::constant(v, w, "a"),
              FinMap::constant(e, f, "e")};
  REQUIRE(is_valid(m));

  auto cm = to_comma(m);
  auto lift = factor_through_cosimplification(cm);
  CHECK(validate(lift).pass);
  auto c = cosimplify(to_comma(target));
  CHECK(compose(c.counit, lift) == cm);
}

TEST_CASE("cosimplification acts on morphisms by restriction") {
  FinSet v{{"a", "b", "c"}};
  FinSet e{{"e"}};
  Quiver q{v, e, FinMap{e, v, {{"e", "a"}}}, FinMap{e, v, {{"e", "b"}}}};
  auto id = identity_morphism(to_comma(q));
  auto t = cosimplify_morphism(id);
  CHECK(validate(t).pass);
  CHECK(t.dom == cosimplify(to_comma(q)).result);
}

TEST_CASE("fullness predicates recognize their objects") {
  FinSet v{{"a"}};
  FinSet e{{"l"}};
  Quiver loaded{v, e, FinMap{e, v, {{"l", "a"}}}, FinMap{e, v, {{"l", "a"}}}};
  CHECK(is_loaded(loaded));
  FinSet v2{{"a", "b"}};
  Quiver sparse{v2, e, FinMap{e, v2, {{"l", "a"}}}, FinMap{e, v2, {{"l", "b"}}}};
  CHECK_FALSE(is_loaded(sparse));

  FinSet i{{"i1"}};
  IncHypergraph full{v, e, i, FinMap::constant(i, v, "a"), FinMap::constant(i, e, "l")};
  CHECK(is_full_incidence(full));
  IncHypergraph missing{v2, e, i, FinMap::constant(i, v2, "a"),
                        FinMap::constant(i, e, "l")};
  CHECK_FALSE(is_full_incidence(missing));
}

TEST_CASE("pairing units are injective into the ordered square") {
  FinSet two{{"a", "b"}};
  auto u = pairing_unit_q1(two);
  CHECK(classify_map(u).injective);
  CHECK_FALSE(classify_map(u).surjective);
  CHECK(u.cod().size() == 16);  // (two tagged copies) squared
  auto r = pairing_unit_r1(two);
  CHECK(classify_map(r).injective);
  CHECK_FALSE(classify_map(r).surjective);
  CHECK(r.cod().size() == 4);
}
