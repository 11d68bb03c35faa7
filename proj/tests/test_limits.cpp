#include <doctest.h>

#include <stdexcept>

#include "catgraph/labels.hpp"
#include "catgraph/graphs.hpp"
#include "catgraph/limits.hpp"

using namespace catgraph;

namespace {

Quiver single_edge(const std::string& tag) {
  FinSet v{{tag + "a", tag + "b"}};
  FinSet e{{tag + "e"}};
  return Quiver{v, e, FinMap{e, v, {{tag + "e", tag + "a"}}},
                FinMap{e, v, {{tag + "e", tag + "b"}}}};
}

SetSystem k2(const std::string& u, const std::string& w) {
  return SetSystem{FinSet{{u, w}}, {{u, w}}};
}

}  // namespace

TEST_CASE("quiver products are componentwise") {
  auto p = product(single_edge("x"), single_edge("y"));
  CHECK(p.object.vertices.size() == 4);
  CHECK(p.object.edges.size() == 1);
  CHECK(is_valid(p.proj1));
  CHECK(is_valid(p.proj2));
  auto e = p.object.edges.labels()[0];
  CHECK(p.proj1.emap(e) == "xe");
  CHECK(p.proj2.emap(e) == "ye");
}

TEST_CASE("hypergraph product edges carry a chosen linking subset") {
  auto h1 = make_hypergraph(FinSet{{"a", "b"}}, {{"e", {"a", "b"}}});
  auto h2 = make_hypergraph(FinSet{{"u", "w"}}, {{"f", {"u", "w"}}});
  auto p = product(h1, h2);
  // subsets of {a,b} x {u,w} with both projections exact: 7 of them
  CHECK(p.object.edges.size() == 7);
  CHECK(p.object.vertices.size() == 4);
  CHECK(is_valid(p.proj1));
  CHECK(is_valid(p.proj2));

  // an edge over the empty subset would project to the empty member set,
  // so every product edge projects onto the full original members
  for (const auto& e : p.object.edges.labels()) {
    CHECK(sorted_image(p.proj1.vmap, p.object.edge_members(e)) ==
          h1.edge_members("e"));
    CHECK(sorted_image(p.proj2.vmap, p.object.edge_members(e)) ==
          h2.edge_members("f"));
  }
}

TEST_CASE("incidence products pair all three carriers") {
  FinSet v{{"a"}};
  FinSet e{{"e"}};
  FinSet i{{"i1", "i2"}};
  IncHypergraph g{v, e, i, FinMap::constant(i, v, "a"), FinMap::constant(i, e, "e")};
  auto p = product(g, g);
  CHECK(p.object.vertices.size() == 1);
  CHECK(p.object.edges.size() == 1);
  CHECK(p.object.incidences.size() == 4);
  CHECK(is_valid(p.proj1));
}

TEST_CASE("equalizers carve out the agreeing part") {
  auto q = single_edge("x");
  FinSet v{{"u"}};
  FinSet e{{"l"}};
  Quiver loop{v, e, FinMap{e, v, {{"l", "u"}}}, FinMap{e, v, {{"l", "u"}}}};
  QuiverHom f{q, loop, FinMap::constant(q.vertices, v, "u"),
              FinMap::constant(q.edges, e, "l")};
  auto eq = equalizer(f, f);
  CHECK(eq.object == q);
  CHECK(is_valid(eq.include));

  // disagreeing vertex maps keep only the agreeing vertices, and edges die
  // with their endpoints
  Quiver two{FinSet{{"u", "w"}}, FinSet{{}}, FinMap{FinSet{{}}, FinSet{{"u", "w"}}, {}},
             FinMap{FinSet{{}}, FinSet{{"u", "w"}}, {}}};
  Quiver verts{FinSet{{"p", "q"}}, FinSet{{}},
               FinMap{FinSet{{}}, FinSet{{"p", "q"}}, {}},
               FinMap{FinSet{{}}, FinSet{{"p", "q"}}, {}}};
  QuiverHom g1{verts, two, FinMap{verts.vertices, two.vertices, {{"p", "u"}, {"q", "u"}}},
               FinMap{verts.edges, two.edges, {}}};
  QuiverHom g2{verts, two, FinMap{verts.vertices, two.vertices, {{"p", "u"}, {"q", "w"}}},
               FinMap{verts.edges, two.edges, {}}};
  auto eq2 = equalizer(g1, g2);
  CHECK(eq2.object.vertices.labels() == std::vector<std::string>{"p"});
}

TEST_CASE("coproducts tag the two sides") {
  auto c = coproduct(single_edge("x"), single_edge("y"));
  CHECK(c.object.vertices.size() == 4);
  CHECK(c.object.edges.size() == 2);
  CHECK(c.object.vertices.contains("0:xa"));
  CHECK(c.object.vertices.contains("1:ya"));
  CHECK(is_valid(c.inj1));
  CHECK(is_valid(c.inj2));
  CHECK(c.inj1.vmap("xa") == "0:xa");
}

TEST_CASE("coequalizers glue along the two images") {
  // two parallel vertex maps identifying a with b
  Quiver verts{FinSet{{"a", "b"}}, FinSet{{}},
               FinMap{FinSet{{}}, FinSet{{"a", "b"}}, {}},
               FinMap{FinSet{{}}, FinSet{{"a", "b"}}, {}}};
  Quiver pt{FinSet{{"p"}}, FinSet{{}}, FinMap{FinSet{{}}, FinSet{{"p"}}, {}},
            FinMap{FinSet{{}}, FinSet{{"p"}}, {}}};
  auto q = single_edge("x");  // xa -> xb
  QuiverHom f{pt, q, FinMap{pt.vertices, q.vertices, {{"p", "xa"}}},
              FinMap{pt.edges, q.edges, {}}};
  QuiverHom g{pt, q, FinMap{pt.vertices, q.vertices, {{"p", "xb"}}},
              FinMap{pt.edges, q.edges, {}}};
  auto c = coequalizer(f, g);
  CHECK(c.object.vertices.labels() == std::vector<std::string>{"xa"});
  CHECK(c.object.edges.size() == 1);
  CHECK(c.object.src(c.object.edges.labels()[0]) == "xa");
  CHECK(c.object.tgt(c.object.edges.labels()[0]) == "xa");
  CHECK(is_valid(c.project));
  (void)verts;
}

TEST_CASE("hypergraph coequalizers keep induced member sets consistent") {
  auto h = make_hypergraph(FinSet{{"a", "b"}}, {{"e", {"a"}}, {"f", {"b"}}});
  auto pt = make_hypergraph(FinSet{{"p"}}, {{"g", {"p"}}});
  HypergraphHom m1{pt, h, FinMap{pt.vertices, h.vertices, {{"p", "a"}}},
                   FinMap{pt.edges, h.edges, {{"g", "e"}}}};
  HypergraphHom m2{pt, h, FinMap{pt.vertices, h.vertices, {{"p", "b"}}},
                   FinMap{pt.edges, h.edges, {{"g", "f"}}}};
  REQUIRE(is_valid(m1));
  REQUIRE(is_valid(m2));
  auto c = coequalizer(m1, m2);
  CHECK(c.object.vertices.size() == 1);
  CHECK(c.object.edges.size() == 1);
  CHECK(c.object.edge_members(c.object.edges.labels()[0]) ==
        std::vector<std::string>{"a"});
}

TEST_CASE("digraph products keep the synchronized arcs") {
  Digraph k2d{FinSet{{"a", "b"}}, {{"a", "b"}, {"b", "a"}}};
  auto p = simple_product(k2d, k2d);
  CHECK(p.object.vertices.size() == 4);
  CHECK(p.object.arcs.size() == 4);
  CHECK(is_valid(p.proj1));
  CHECK(p.object.has_arc(pair_label("a", "a"), pair_label("b", "b")));
  CHECK_FALSE(p.object.has_arc(pair_label("a", "a"), pair_label("b", "a")));
}

TEST_CASE("set system products have the exact-projection members") {
  auto p = simple_product(k2("a", "b"), k2("u", "w"));
  CHECK(p.object.vertices.size() == 4);
  CHECK(p.object.sets.size() == 7);
  CHECK(is_valid(p.proj1));
  CHECK(is_valid(p.proj2));
}

TEST_CASE("graph products are much smaller than set system products") {
  SimpleGraph g{k2("a", "b")};
  auto p = simple_product(g, g);
  CHECK(p.object.setsystem().sets.size() == 2);
  CHECK(p.object.setsystem().vertices.size() == 4);
  CHECK(is_valid(p.proj1));
  CHECK(is_valid(p.proj2));
}

TEST_CASE("incidence structure products synchronize flags") {
  IncStructure s{FinSet{{"a"}}, FinSet{{"e"}}, {{"a", "e"}}};
  auto p = simple_product(s, s);
  CHECK(p.object.vertices.size() == 1);
  CHECK(p.object.edges.size() == 1);
  CHECK(p.object.flags.size() == 1);
  CHECK(is_valid(p.proj1));
}

TEST_CASE("simple equalizers restrict to the agreement set") {
  Digraph g{FinSet{{"a", "b"}}, {{"a", "b"}, {"b", "a"}}};
  Digraph h{FinSet{{"u", "w"}}, {{"u", "w"}, {"w", "u"}, {"u", "u"}, {"w", "w"}}};
  DigraphHom f1{g, h, FinMap{g.vertices, h.vertices, {{"a", "u"}, {"b", "w"}}}};
  DigraphHom f2{g, h, FinMap{g.vertices, h.vertices, {{"a", "u"}, {"b", "u"}}}};
  REQUIRE(is_valid(f1));
  REQUIRE(is_valid(f2));
  auto eq = simple_equalizer(f1, f2);
  CHECK(eq.object.vertices.labels() == std::vector<std::string>{"a"});
  CHECK(eq.object.arcs.empty());
  CHECK(is_valid(eq.include));

  SetSystemHom s1{k2("a", "b"), k2("a", "b"), FinMap::identity(FinSet{{"a", "b"}})};
  auto eq2 = simple_equalizer(s1, s1);
  CHECK(eq2.object == k2("a", "b"));
}
