#include <doctest.h>

#include "catgraph/errors.hpp"
#include "catgraph/graphs.hpp"
#include "catgraph/spaces.hpp"

using namespace catgraph;

namespace {

const std::vector<std::string> kEmpty{};

}  // namespace

TEST_CASE("topology constructors check the axioms") {
  FinSet pts{{"a", "b"}};
  CHECK_NOTHROW((FiniteTopSpace{pts, {{}, {"a"}, {"a", "b"}}}));
  // missing the full set
  CHECK_THROWS_AS((FiniteTopSpace{pts, {{}, {"a"}}}), KindError);
  // not closed under union
  FinSet three{{"a", "b", "c"}};
  CHECK_THROWS_AS(
      (FiniteTopSpace{three, {{}, {"a"}, {"b"}, {"a", "b", "c"}}}), KindError);
}

TEST_CASE("sigma algebra constructors check complements") {
  FinSet pts{{"a", "b"}};
  CHECK_NOTHROW((FiniteMeasSpace{pts, {{}, {"a"}, {"b"}, {"a", "b"}}}));
  CHECK_THROWS_AS((FiniteMeasSpace{pts, {{}, {"a"}, {"a", "b"}}}), KindError);
}

TEST_CASE("generating the two-point connected topology") {
  FinSet pts{{"a", "b"}};
  auto t = generate_topology(pts, {{"a"}});
  CHECK(t.opens.size() == 3);
  CHECK(t.has_open({"a"}));
  CHECK(t.has_open(kEmpty));
  CHECK(t.has_open({"a", "b"}));
  CHECK_FALSE(t.has_open({"b"}));
}

TEST_CASE("generated topologies close under union and intersection") {
  FinSet pts{{"a", "b", "c"}};
  auto t = generate_topology(pts, {{"a", "b"}, {"b", "c"}});
  CHECK(t.has_open({"b"}));
  CHECK(t.has_open({"a", "b", "c"}));
  CHECK(t.opens.size() == 5);

  // generation is idempotent
  auto again = generate_topology(pts, t.opens);
  CHECK(again == t);
}

TEST_CASE("generating a sigma algebra adds complements") {
  FinSet pts{{"a", "b", "c"}};
  auto m = generate_sigma(pts, {{"a"}});
  CHECK(m.sets.size() == 4);
  CHECK(m.has_set({"b", "c"}));
  auto again = generate_sigma(pts, m.sets);
  CHECK(again == m);
}

TEST_CASE("generation from a set system uses its carrier") {
  SetSystem s{FinSet{{"a", "b"}}, {{"a"}}};
  auto t = generate_topology(s);
  CHECK(t.points == s.vertices);
  CHECK(t.opens.size() == 3);
  auto m = generate_sigma(s);
  CHECK(m.sets.size() == 4);
}

TEST_CASE("the borel algebra is generated by the opens") {
  FinSet pts{{"a", "b", "c"}};
  auto t = generate_topology(pts, {{"a"}});
  auto b = borel(t);
  CHECK(b == generate_sigma(pts, t.opens));
  CHECK(b.has_set({"b", "c"}));
  for (const auto& o : t.opens) CHECK(b.has_set(o));
}

TEST_CASE("spaces convert to set systems and back") {
  FinSet pts{{"a", "b"}};
  auto t = generate_topology(pts, {{"a"}});
  auto s = as_setsystem(t);
  CHECK(s.vertices == pts);
  CHECK(s.sets.size() == 3);
  CHECK(generate_topology(s) == t);
}

TEST_CASE("continuity means open preimages") {
  FinSet two{{"a", "b"}};
  auto sierp = generate_topology(two, {{"a"}});
  auto discrete = generate_topology(two, {{"a"}, {"b"}});
  auto id = FinMap::identity(two);
  CHECK(is_continuous(id, discrete, sierp));
  CHECK_FALSE(is_continuous(id, sierp, discrete));

  FinMap swap{two, two, {{"a", "b"}, {"b", "a"}}};
  CHECK_FALSE(is_continuous(swap, sierp, sierp));
  CHECK(is_continuous(swap, discrete, discrete));
}

TEST_CASE("measurability mirrors continuity for sigma algebras") {
  FinSet two{{"a", "b"}};
  FiniteMeasSpace fine{two, {{}, {"a"}, {"b"}, {"a", "b"}}};
  FiniteMeasSpace coarse{two, {{}, {"a", "b"}}};
  auto id = FinMap::identity(two);
  CHECK(is_measurable(id, fine, coarse));
  CHECK_FALSE(is_measurable(id, coarse, fine));
}

TEST_CASE("checking only generators decides maps into a generated space") {
  FinSet three{{"a", "b", "c"}};
  FinSet two{{"u", "w"}};
  std::vector<std::vector<std::string>> gens{{"u"}};
  auto cod = generate_topology(two, gens);
  auto dom = generate_topology(three, {{"a"}});
  FinMap g{three, two, {{"a", "u"}, {"b", "w"}, {"c", "w"}}};
  CHECK(generator_preimages_open(g, dom, gens) == is_continuous(g, dom, cod));
  FinMap h{three, two, {{"a", "w"}, {"b", "u"}, {"c", "w"}}};
  CHECK(generator_preimages_open(h, dom, gens) == is_continuous(h, dom, cod));

  FiniteMeasSpace mdom{three, {{}, {"a"}, {"b", "c"}, {"a", "b", "c"}}};
  auto mcod = generate_sigma(two, gens);
  CHECK(generator_preimages_measurable(g, mdom, gens) == is_measurable(g, mdom, mcod));
}

TEST_CASE("antihom reports name the offending member") {
  SetSystem dom{FinSet{{"a", "b"}}, {{"a", "b"}}};
  SetSystem cod{FinSet{{"u"}}, {{"u"}}};
  SetSystemAntiHom good{dom, cod, FinMap::constant(dom.vertices, cod.vertices, "u")};
  CHECK(check_antihom(good).pass);

  SetSystem dom2{FinSet{{"a", "b"}}, {{"a"}}};
  SetSystemAntiHom bad{dom2, cod, FinMap::constant(dom2.vertices, cod.vertices, "u")};
  auto rep = check_antihom(bad);
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness.find("{u}") != std::string::npos);
}

TEST_CASE("generation refuses oversized point sets") {
  std::vector<std::string> big;
  for (int i = 0; i < 11; ++i) big.push_back("p" + std::to_string(i));
  CHECK_THROWS_AS(generate_topology(FinSet{big}, {}), BudgetError);
  CHECK_THROWS_AS(generate_sigma(FinSet{big}, {}), BudgetError);
}
