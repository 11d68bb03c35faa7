#include <doctest.h>

#include "catgraph/labels.hpp"
#include "catgraph/comma.hpp"
#include "catgraph/graphs.hpp"

using namespace catgraph;

namespace {

Quiver parallel_pair() {
  FinSet v{{"a", "b"}};
  FinSet e{{"e1", "e2"}};
  return Quiver{v, e, FinMap{e, v, {{"e1", "a"}, {"e2", "a"}}},
                FinMap{e, v, {{"e1", "b"}, {"e2", "b"}}}};
}

Quiver one_edge() {
  FinSet v{{"a", "b"}};
  FinSet e{{"e"}};
  return Quiver{v, e, FinMap{e, v, {{"e", "a"}}}, FinMap{e, v, {{"e", "b"}}}};
}

}  // namespace

TEST_CASE("quivers embed into the comma presentation and back") {
  auto q = parallel_pair();
  auto x = to_comma(q);
  CHECK(x.pres == Presentation::Q1);
  CHECK(x.a_part.labels() == q.edges.labels());
  CHECK(x.b_parts.size() == 1);
  CHECK(x.f("e1") == pair_label("a", "b"));
  CHECK(quiver_from_comma(x) == q);
}

TEST_CASE("hypergraphs embed with subset-valued structure maps") {
  auto h = make_hypergraph(FinSet{{"a", "b"}}, {{"e", {"a", "b"}}, {"f", {"a"}}});
  auto x = to_comma(h);
  CHECK(x.pres == Presentation::H1);
  CHECK(x.f("e") == set_label({"a", "b"}));
  CHECK(hypergraph_from_comma(x) == h);

  auto p = to_comma_anti(h);
  CHECK(p.pres == Presentation::P1);
  CHECK(p.a_part.labels() == h.vertices.labels());
  CHECK(p.b_parts[0].labels() == h.edges.labels());
  CHECK(hypergraph_from_comma_anti(p) == h);
}

TEST_CASE("incidence hypergraphs embed with two plain carriers") {
  FinSet v{{"a"}};
  FinSet e{{"e"}};
  FinSet i{{"i1", "i2"}};
  IncHypergraph g{v, e, i, FinMap::constant(i, v, "a"), FinMap::constant(i, e, "e")};
  auto x = to_comma(g);
  CHECK(x.pres == Presentation::R1);
  CHECK(x.b_parts.size() == 2);
  CHECK(x.f("i1") == pair_label("a", "e"));
  CHECK(incidence_from_comma(x) == g);
}

TEST_CASE("simplicity means a monic structure map") {
  CHECK_FALSE(is_simple(to_comma(parallel_pair())));
  CHECK(is_simple(to_comma(one_edge())));

  // P1 reverses the ambient arrows: simple means surjective onto the power set
  auto small = make_hypergraph(FinSet{{"a"}}, {{"e", {"a"}}, {"f", {}}});
  CHECK(is_simple(to_comma_anti(small)));
  auto missing = make_hypergraph(FinSet{{"a"}}, {{"e", {"a"}}});
  CHECK_FALSE(is_simple(to_comma_anti(missing)));
}

TEST_CASE("cosimplicity is the dual condition") {
  // loaded quiver: every vertex pair is hit
  FinSet v{{"a"}};
  FinSet e{{"e"}};
  Quiver loaded{v, e, FinMap{e, v, {{"e", "a"}}}, FinMap{e, v, {{"e", "a"}}}};
  CHECK(is_cosimple(to_comma(loaded)));
  CHECK_FALSE(is_cosimple(to_comma(one_edge())));

  auto dup = make_hypergraph(FinSet{{"a"}}, {{"e", {"a"}}, {"f", {"a"}}});
  CHECK_FALSE(is_cosimple(to_comma_anti(dup)));
  auto inj = make_hypergraph(FinSet{{"a"}}, {{"e", {"a"}}});
  CHECK(is_cosimple(to_comma_anti(inj)));
}

TEST_CASE("morphism validation matches the concrete square conditions") {
  auto q = parallel_pair();
  auto r = one_edge();
  QuiverHom h{q, r, FinMap::identity(q.vertices),
              FinMap::constant(q.edges, r.edges, "e")};
  REQUIRE(is_valid(h));
  auto m = to_comma(h);
  CHECK(validate(m).pass);
  CHECK(quiver_hom_from_comma(m) == h);

  CommaMorphism broken = m;
  broken.psis[0] = FinMap{q.vertices, q.vertices, {{"a", "b"}, {"b", "a"}}};
  CHECK_FALSE(validate(broken).pass);
}

TEST_CASE("P1 morphisms reverse the edge component") {
  auto h = make_hypergraph(FinSet{{"a", "b"}}, {{"e", {"a", "b"}}});
  auto k = make_hypergraph(FinSet{{"u"}}, {{"f", {"u"}}});
  AntiHom a{h, k, FinMap::constant(h.vertices, k.vertices, "u"),
            FinMap{k.edges, h.edges, {{"f", "e"}}}};
  REQUIRE(is_valid(a));
  auto m = to_comma_anti(a);
  CHECK(m.psis[0].dom().labels() == k.edges.labels());
  CHECK(validate(m).pass);
  CHECK(anti_hom_from_comma(m) == a);

  auto c = compose(m, identity_morphism(m.dom));
  CHECK(c.phi.assignment() == m.phi.assignment());
  CHECK(c.psis[0].assignment() == m.psis[0].assignment());
}

TEST_CASE("identities are isomorphisms and compose neutrally") {
  auto x = to_comma(parallel_pair());
  auto id = identity_morphism(x);
  CHECK(validate(id).pass);
  CHECK(is_isomorphism(id));
  auto c = compose(id, id);
  CHECK(c.phi.assignment() == id.phi.assignment());
}

TEST_CASE("simple comma objects round trip through their spaces") {
  auto q = one_edge();
  auto x = to_comma(q);
  auto g = digraph_space_of(x);
  CHECK(g.vertices == q.vertices);
  CHECK(g.has_arc("a", "b"));
  // canonical direction: spaces embed back literally
  CHECK(digraph_space_of(comma_of(g)) == g);

  SetSystem s{FinSet{{"a", "b"}}, {{"a", "b"}, {"a"}}};
  CHECK(setsystem_space_of(comma_of(s)) == s);

  IncStructure is{FinSet{{"a"}}, FinSet{{"e"}}, {{"a", "e"}}};
  CHECK(incstructure_space_of(comma_of(is)) == is);

  SetSystem t{FinSet{{"a", "b"}}, {{"a"}, {}}};
  CHECK(anti_cospace_of(anti_cocomma_of(t)) == t);
  CHECK(is_cosimple(anti_cocomma_of(t)));
}

TEST_CASE("space extraction rejects non-simple objects") {
  auto x = to_comma(parallel_pair());
  CHECK_THROWS(digraph_space_of(x));
}

TEST_CASE("the comparison morphism is an isomorphism at simple objects") {
  auto x = to_comma(one_edge());
  auto z = comma_space_iso(x);
  CHECK(validate(z).pass);
  CHECK(is_isomorphism(z));
  CHECK(z.dom == x);
  CHECK(z.cod == comma_of(digraph_space_of(x)));
}

TEST_CASE("space homs extract from comma morphisms") {
  Digraph g{FinSet{{"a", "b"}}, {{"a", "b"}}};
  Digraph h{FinSet{{"u"}}, {{"u", "u"}}};
  DigraphHom m{g, h, FinMap::constant(g.vertices, h.vertices, "u")};
  REQUIRE(is_valid(m));
  auto cm = comma_of(m);
  CHECK(validate(cm).pass);
  CHECK(digraph_space_hom(cm) == m);
}
