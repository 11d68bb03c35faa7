#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "catgraph/comma.hpp"
#include "catgraph/errors.hpp"
#include "catgraph/verify.hpp"

using namespace catgraph;

TEST_CASE("generator counts match hand computation") {
  // quivers: 1 empty + (1v,0e..2e): 1+1+1, + (2v,0e..2e): 1+4+16
  CHECK(all_quivers(2, 2).size() == 25);
  CHECK(all_quivers(1, 1).size() == 3);
  // digraphs: empty + 2 on one vertex + 16 on two
  CHECK(all_digraphs(2).size() == 19);
  // set systems: 2 on zero vertices + 4 on one + 16 on two
  CHECK(all_setsystems(2).size() == 22);
  CHECK(all_hypergraphs(1, 1).size() == 5);
  // every symmetric digraph really is symmetric, and none is missed
  auto syms = all_symdigraphs(2);
  CHECK(syms.size() == 11);  // empty + 2 + 8 reversal-closed arc sets on 2
  for (const auto& s : syms) CHECK_NOTHROW(SymDigraph{s.digraph()});
}

TEST_CASE("simple graph generation filters member sizes") {
  auto graphs = all_simple_graphs(2);
  for (const auto& g : graphs)
    for (const auto& m : g.setsystem().sets) {
      CHECK(m.size() >= 1);
      CHECK(m.size() <= 2);
    }
  // on {v0,v1}: subsets of {{v0},{v1},{v0,v1}} = 8, plus 4 on one vertex
  // carrier minus duplicates, plus the empty carrier
  CHECK(graphs.size() == 1 + 2 + 8);
}

TEST_CASE("topology and sigma generators emit exactly the closed families") {
  auto tops = all_topologies(2);
  // one point: {∅,{p}} only; two points: 4 topologies; zero points: 1
  CHECK(tops.size() == 1 + 1 + 4);
  for (const auto& t : tops) CHECK_NOTHROW((FiniteTopSpace{t.points, t.opens}));
  auto sigs = all_sigma_algebras(2);
  CHECK(sigs.size() == 1 + 1 + 2);
  for (const auto& s : sigs) CHECK_NOTHROW((FiniteMeasSpace{s.points, s.sets}));
}

namespace {

long long count_of(const LawReport& rep, const std::string& key) {
  for (const auto& [k, v] : rep.counts)
    if (k == key) return v;
  return -1;
}

// brute force all total maps dom -> cod
std::vector<FinMap> brute_maps(const FinSet& dom, const FinSet& cod) {
  std::vector<FinMap> out;
  if (dom.empty()) {
    out.push_back(FinMap{dom, cod, {}});
    return out;
  }
  if (cod.empty()) return out;
  std::vector<std::size_t> pick(dom.size(), 0);
  while (true) {
    std::map<std::string, std::string> a;
    for (std::size_t i = 0; i < dom.size(); ++i)
      a[dom.labels()[i]] = cod.labels()[pick[i]];
    out.push_back(FinMap{dom, cod, a});
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < cod.size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("hom enumeration agrees with validity filtering") {
  auto qs = all_quivers(2, 1);
  REQUIRE(qs.size() >= 4);
  long long checked = 0;
  for (const auto& x : qs)
    for (const auto& y : qs) {
      auto homs = enumerate_homs(x, y, 1'000'000);
      for (const auto& h : homs) CHECK(is_valid(h));
      long long brute = 0;
      for (const auto& vm : brute_maps(x.vertices, y.vertices))
        for (const auto& em : brute_maps(x.edges, y.edges))
          if (is_valid(QuiverHom{x, y, vm, em})) ++brute;
      CHECK(static_cast<long long>(homs.size()) == brute);
      checked += brute;
    }
  CHECK(checked > 0);
}

TEST_CASE("the two-vertex complete graph has exactly two self-maps") {
  Digraph k2{FinSet{{"a", "b"}}, {{"a", "b"}, {"b", "a"}}};
  auto homs = enumerate_homs(k2, k2, 1000);
  CHECK(homs.size() == 2);  // identity and the swap
  auto comma_homs = enumerate_homs(comma_of(k2), comma_of(k2), 1000);
  CHECK(comma_homs.size() == 2);
}

TEST_CASE("hom budget violations raise the budget error") {
  Digraph k2{FinSet{{"a", "b"}}, {{"a", "b"}, {"b", "a"}}};
  CHECK_THROWS_AS(enumerate_homs(k2, k2, 1), BudgetError);
}

TEST_CASE("a single reflection instance verifies the bijection") {
  FinSet v{{"a", "b"}};
  FinSet e{{"e1", "e2"}};
  Quiver x{v, e, FinMap{e, v, {{"e1", "a"}, {"e2", "a"}}},
           FinMap{e, v, {{"e1", "b"}, {"e2", "b"}}}};
  FinSet w{{"u"}};
  FinSet f{{"l"}};
  Quiver y{w, f, FinMap{f, w, {{"l", "u"}}}, FinMap{f, w, {{"l", "u"}}}};
  REQUIRE(is_simple(to_comma(y)));
  auto rep = check_reflection(to_comma(x), to_comma(y), 1'000'000);
  CHECK(rep.pass);
  CHECK(count_of(rep, "hom from object") == count_of(rep, "hom from reflection"));
  CHECK(count_of(rep, "hom from object") >= 0);
}

TEST_CASE("a single coreflection instance verifies the bijection") {
  FinSet v{{"z"}};
  FinSet e{{"l"}};
  Quiver loaded{v, e, FinMap{e, v, {{"l", "z"}}}, FinMap{e, v, {{"l", "z"}}}};
  REQUIRE(is_cosimple(to_comma(loaded)));
  FinSet w{{"a", "b"}};
  FinSet f{{"e"}};
  Quiver x{w, f, FinMap{f, w, {{"e", "a"}}}, FinMap{f, w, {{"e", "a"}}}};
  auto rep = check_coreflection(to_comma(loaded), to_comma(x), 1'000'000);
  CHECK(rep.pass);
  CHECK(count_of(rep, "hom into object") == count_of(rep, "hom into coreflection"));
  CHECK(count_of(rep, "hom into object") >= 0);
}

TEST_CASE("triangle identities hold at small size") {
  VerifyConfig cfg;
  cfg.max_size = 2;
  for (const std::string name :
       {"simplify-quiver", "closure", "interior", "deletion", "cosimplify-anti",
        "generation-topology", "generation-sigma"}) {
    auto rep = check_triangles(name, cfg);
    INFO(name, ": ", rep.witness);
    CHECK(rep.pass);
  }
  CHECK_THROWS_AS(check_triangles("nonsense", cfg), std::out_of_range);
}

TEST_CASE("the product comparison fails where it should") {
  auto rep = find_product_nonpreservation();
  CHECK(rep.pass);
  CHECK_FALSE(rep.witness.empty());
  CHECK(count_of(rep, "pairs searched") > 0);
}

TEST_CASE("the edge component is determined by maps into simple objects") {
  // size two is the smallest bound where the required counterexample into a
  // non-simple target exists
  VerifyConfig cfg;
  cfg.max_size = 2;
  auto rep = check_psi_determinacy(cfg);
  INFO(rep.witness);
  CHECK(rep.pass);
}

TEST_CASE("the law registry knows its names and rejects strangers") {
  auto names = law_names();
  for (const std::string required :
       {"simplicity-quiver", "reflective-quiver", "roundtrip-digraph",
        "adjoint-chain-digraph", "deletion-coreflection", "parent-limits-quiver",
        "product-digraph", "product-graph", "nonpreservation-ssys",
        "coreflective-quiver", "equivalence-quiver", "generation-topology",
        "sigma-atom-oracle", "generation-borel", "generation-adjunction",
        "antihom-oracle", "psi-determinacy", "triangles-closure"}) {
    INFO(required);
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  }
  VerifyConfig cfg;
  CHECK_THROWS_AS(run_law("no-such-law", cfg), std::out_of_range);
}

TEST_CASE("a fast law runs green end to end") {
  VerifyConfig cfg;
  cfg.max_size = 2;
  for (const auto& rep : run_law("simplicity-quiver", cfg)) {
    INFO(rep.instance, ": ", rep.witness);
    CHECK(rep.pass);
  }
  for (const auto& rep : run_law("roundtrip-digraph", cfg)) {
    INFO(rep.instance, ": ", rep.witness);
    CHECK(rep.pass);
  }
}
