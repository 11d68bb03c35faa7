#include <doctest.h>

#include <stdexcept>

#include "catgraph/errors.hpp"
#include "catgraph/finset.hpp"
#include "catgraph/labels.hpp"

using namespace catgraph;

TEST_CASE("finite sets canonize and reject duplicates") {
  FinSet s{{"b", "a", "c"}};
  CHECK(s.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(s.size() == 3);
  CHECK(s.contains("b"));
  CHECK_FALSE(s.contains("d"));
  CHECK(FinSet{{}}.empty());
  CHECK_THROWS_AS((FinSet{{"a", "a"}}), std::invalid_argument);
}

TEST_CASE("subset tests") {
  FinSet sub{{"a", "c"}};
  FinSet sup{{"a", "b", "c"}};
  CHECK(subset_of(sub, sup));
  CHECK_FALSE(subset_of(sup, sub));
  CHECK(subset_of(FinSet{{}}, sub));
}

TEST_CASE("maps must be total and land in the codomain") {
  FinSet d{{"x", "y"}};
  FinSet c{{"u"}};
  FinMap f{d, c, {{"x", "u"}, {"y", "u"}}};
  CHECK(f("x") == "u");
  CHECK_THROWS_AS((FinMap{d, c, {{"x", "u"}}}), std::invalid_argument);
  CHECK_THROWS_AS((FinMap{d, c, {{"x", "u"}, {"y", "v"}}}), std::invalid_argument);
  CHECK_THROWS_AS((FinMap{d, c, {{"x", "u"}, {"y", "u"}, {"z", "u"}}}),
                  std::invalid_argument);
}

TEST_CASE("identity, inclusion, constant") {
  FinSet s{{"a", "b"}};
  FinSet t{{"a", "b", "c"}};
  auto id = FinMap::identity(s);
  CHECK(id("a") == "a");
  auto inc = FinMap::inclusion(s, t);
  CHECK(inc("b") == "b");
  CHECK(inc.cod().labels() == t.labels());
  CHECK_THROWS_AS(FinMap::inclusion(t, s), std::invalid_argument);
  auto k = FinMap::constant(t, s, "a");
  CHECK(k("c") == "a");
}

TEST_CASE("composition checks the boundary") {
  FinSet a{{"1"}};
  FinSet b{{"2", "3"}};
  FinSet c{{"4"}};
  FinMap f{a, b, {{"1", "3"}}};
  FinMap g{b, c, {{"2", "4"}, {"3", "4"}}};
  auto gf = compose(g, f);
  CHECK(gf("1") == "4");
  CHECK(gf.dom().labels() == a.labels());
  CHECK(gf.cod().labels() == c.labels());
  CHECK_THROWS_AS(compose(f, g), std::invalid_argument);
}

TEST_CASE("classification and inverses") {
  FinSet two{{"a", "b"}};
  FinMap swap{two, two, {{"a", "b"}, {"b", "a"}}};
  auto cls = classify_map(swap);
  CHECK(cls.injective);
  CHECK(cls.surjective);
  CHECK(is_bijective(swap));
  auto inv = inverse(swap);
  CHECK(compose(inv, swap).assignment() == FinMap::identity(two).assignment());

  FinMap fold{two, two, {{"a", "a"}, {"b", "a"}}};
  CHECK_FALSE(classify_map(fold).injective);
  CHECK_FALSE(classify_map(fold).surjective);
  CHECK_THROWS_AS(inverse(fold), std::invalid_argument);
}

TEST_CASE("images and preimages come out sorted and deduplicated") {
  FinSet d{{"p", "q", "r"}};
  FinSet c{{"u", "v"}};
  FinMap f{d, c, {{"p", "v"}, {"q", "v"}, {"r", "u"}}};
  CHECK(sorted_image(f, {"q", "p"}) == std::vector<std::string>{"v"});
  CHECK(sorted_preimage(f, {"v"}) == std::vector<std::string>{"p", "q"});
  CHECK(sorted_preimage(f, {"u", "v"}) == std::vector<std::string>{"p", "q", "r"});
}

TEST_CASE("image factorization is epi then mono and recomposes") {
  FinSet d{{"p", "q", "r"}};
  FinSet c{{"u", "v", "w"}};
  FinMap f{d, c, {{"p", "v"}, {"q", "v"}, {"r", "u"}}};
  auto fac = image_factorization(f);
  CHECK(fac.mid.labels() == std::vector<std::string>{"u", "v"});
  CHECK(classify_map(fac.epi).surjective);
  CHECK(classify_map(fac.mono).injective);
  CHECK(compose(fac.mono, fac.epi).assignment() == f.assignment());
}

TEST_CASE("kernel pair collects exactly the agreeing pairs") {
  FinSet d{{"p", "q", "r"}};
  FinSet c{{"u", "v"}};
  FinMap f{d, c, {{"p", "u"}, {"q", "u"}, {"r", "v"}}};
  auto kp = kernel_pair(f);
  // fibers of size 2 and 1 give 4 + 1 ordered pairs
  CHECK(kp.carrier.size() == 5);
  for (const auto& x : kp.carrier.labels())
    CHECK(f(kp.p1(x)) == f(kp.p2(x)));
}

TEST_CASE("quotients pick least member names") {
  FinSet s{{"a", "b", "c", "d"}};
  auto q = quotient_by_pairs(s, {{"b", "d"}, {"d", "c"}});
  CHECK(q.classes.labels() == std::vector<std::string>{"a", "b"});
  CHECK(q.projection("c") == "b");
  CHECK(q.projection("a") == "a");
}

TEST_CASE("set coequalizer identifies the two images pointwise") {
  FinSet a{{"1", "2"}};
  FinSet b{{"x", "y", "z"}};
  FinMap p1{a, b, {{"1", "x"}, {"2", "y"}}};
  FinMap p2{a, b, {{"1", "y"}, {"2", "z"}}};
  auto q = set_coequalizer(p1, p2);
  CHECK(q.classes.size() == 1);
  CHECK(compose(q.projection, p1).assignment() ==
        compose(q.projection, p2).assignment());
  FinMap other{a, FinSet{{"w"}}, {{"1", "w"}, {"2", "w"}}};
  CHECK_THROWS_AS(set_coequalizer(p1, other), std::invalid_argument);
}

TEST_CASE("kernel pair coequalizer recovers the image factorization shape") {
  FinSet d{{"p", "q", "r"}};
  FinSet c{{"u", "v", "w"}};
  FinMap f{d, c, {{"p", "v"}, {"q", "v"}, {"r", "u"}}};
  auto a = kernel_pair_coequalizer(f);
  auto b = image_factorization(f);
  CHECK(a.mid.size() == b.mid.size());
  CHECK(compose(a.mono, a.epi).assignment() == f.assignment());
}

TEST_CASE("product sets project correctly") {
  FinSet x{{"a", "b"}};
  FinSet y{{"0"}};
  auto p = product_set(x, y);
  CHECK(p.carrier.size() == 2);
  for (const auto& l : p.carrier.labels()) {
    CHECK(x.contains(p.proj1(l)));
    CHECK(y.contains(p.proj2(l)));
  }
  CHECK(p.carrier.contains(pair_label("a", "0")));
}

TEST_CASE("power set enumerates subsets in canonical order") {
  FinSet s{{"a", "b"}};
  auto ps = power_set_with_members(s);
  CHECK(ps.carrier.size() == 4);
  CHECK(ps.carrier.contains(set_label({})));
  CHECK(ps.carrier.contains(set_label({"a", "b"})));
  CHECK(ps.members.size() == 4);

  std::vector<std::string> big;
  for (int i = 0; i < 11; ++i) big.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(power_set(FinSet{big}), BudgetError);
}

TEST_CASE("preimage map acts contravariantly on subsets") {
  FinSet d{{"p", "q"}};
  FinSet c{{"u", "v"}};
  FinMap f{d, c, {{"p", "u"}, {"q", "u"}}};
  auto pm = preimage_map(f);
  CHECK(pm(set_label({"u"})) == set_label({"p", "q"}));
  CHECK(pm(set_label({"v"})) == set_label({}));
  CHECK(pm.dom().size() == 4);
  CHECK(pm.cod().size() == 4);
}
