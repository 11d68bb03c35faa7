#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "catgraph/errors.hpp"
#include "catgraph/graphs.hpp"
#include "catgraph/json_io.hpp"
#include "catgraph/report.hpp"

using namespace catgraph;

namespace {

const char* kQuiverText = R"({
  "edges": [
    {
      "id": "e1",
      "src": "a",
      "tgt": "b"
    },
    {
      "id": "e2",
      "src": "a",
      "tgt": "b"
    }
  ],
  "kind": "quiver",
  "vertices": [
    "a",
    "b"
  ]
}
)";

std::string pair_doc(const std::string& a, const std::string& b) {
  // compose two emitted objects into a pair document
  auto strip = [](std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
  };
  return std::string("{\"kind\":\"pair\",\"first\":") + strip(a) +
         ",\"second\":" + strip(b) + "}";
}

}  // namespace

TEST_CASE("kind detection reads the tag") {
  CHECK(kind_of(kQuiverText) == "quiver");
  CHECK_THROWS_AS(kind_of("not json"), ParseError);
  CHECK_THROWS_AS(kind_of("{\"no\":\"kind\"}"), ParseError);
}

TEST_CASE("parse and emit are mutually inverse on canonical text") {
  auto q = parse_quiver(kQuiverText);
  CHECK(q.vertices.size() == 2);
  CHECK(q.edges.size() == 2);
  CHECK(emit(q) == kQuiverText);
  // emit of a freshly built object parses back to an equal object
  CHECK(parse_quiver(emit(q)) == q);
}

TEST_CASE("emit parse emit is emit for every kind") {
  auto h = make_hypergraph(FinSet{{"a", "b"}}, {{"e", {"a", "b"}}, {"f", {}}});
  CHECK(emit(parse_hypergraph(emit(h))) == emit(h));

  FinSet i{{"i1"}};
  IncHypergraph g{FinSet{{"a"}}, FinSet{{"e"}}, i,
                  FinMap::constant(i, FinSet{{"a"}}, "a"),
                  FinMap::constant(i, FinSet{{"e"}}, "e")};
  CHECK(emit(parse_incidence(emit(g))) == emit(g));

  Digraph d{FinSet{{"a", "b"}}, {{"a", "b"}}};
  CHECK(emit(parse_digraph(emit(d))) == emit(d));

  SetSystem s{FinSet{{"a", "b"}}, {{"a"}, {"a", "b"}}};
  CHECK(emit(parse_setsystem(emit(s))) == emit(s));

  auto t = generate_topology(FinSet{{"a", "b"}}, {{"a"}});
  CHECK(emit(parse_topology(emit(t))) == emit(t));

  auto m = generate_sigma(FinSet{{"a", "b"}}, {{"a"}});
  CHECK(emit(parse_sigma(emit(m))) == emit(m));
}

TEST_CASE("parse failures carry the parse error kind") {
  CHECK_THROWS_AS(parse_quiver("{"), ParseError);
  CHECK_THROWS_AS(parse_quiver("{\"kind\":\"quiver\"}"), ParseError);
  // dangling edge endpoint
  CHECK_THROWS_AS(parse_quiver(R"({"kind":"quiver","vertices":["a"],
    "edges":[{"id":"e","src":"a","tgt":"zz"}]})"),
                  ParseError);
  // ill-formed label
  CHECK_THROWS_AS(parse_quiver(R"({"kind":"quiver","vertices":["a,b"],"edges":[]})"),
                  ParseError);
  // wrong kind tag
  CHECK_THROWS_AS(parse_digraph(kQuiverText), KindError);
}

TEST_CASE("structural violations carry the kind error") {
  // digraph text with an unmatched reverse arc is fine as digraph but the
  // symmetric functors reject it downstream; an invalid topology fails here
  CHECK_THROWS_AS(
      parse_topology(R"({"kind":"topology","vertices":["a"],"sets":[[]]})"),
      KindError);
  CHECK_THROWS_AS(
      parse_sigma(R"({"kind":"sigma","vertices":["a"],"sets":[["a"]]})"),
      KindError);
}

TEST_CASE("the functor registry applies by name") {
  auto names = functor_names();
  CHECK(names.size() == 18);

  auto out = apply_named_functor("simplify-quiver", kQuiverText);
  auto q = parse_quiver(out);
  CHECK(q.edges.size() == 1);

  CHECK_THROWS_AS(apply_named_functor("no-such", kQuiverText), std::out_of_range);
  CHECK_THROWS_AS(apply_named_functor("simplify-hypergraph", kQuiverText), KindError);
}

TEST_CASE("unary functor outputs match the library constructions") {
  SetSystem beta{FinSet{{"a", "b", "c"}}, {{"a"}, {"a", "b"}, {"a", "b", "c"}}};
  auto out = parse_setsystem(apply_named_functor("del", emit(beta)));
  CHECK(out.sets.size() == 2);

  Digraph d{FinSet{{"a", "b"}}, {{"a", "b"}}};
  auto closed = parse_digraph(apply_named_functor("sym-closure", emit(d)));
  CHECK(closed.has_arc("b", "a"));
  // closure output is a fixed point: applying again is byte-identical
  CHECK(apply_named_functor("sym-closure", emit(closed)) == emit(closed));

  auto interior = parse_digraph(apply_named_functor("sym-interior", emit(d)));
  CHECK(interior.arcs.empty());

  SetSystem k2{FinSet{{"a", "b"}}, {{"a", "b"}}};
  auto sd = parse_digraph(apply_named_functor("gra-to-symdigra", emit(k2)));
  CHECK(sd.arcs.size() == 2);
  auto back = parse_setsystem(apply_named_functor("symdigra-to-gra", emit(sd)));
  CHECK(back == k2);

  auto topo = parse_topology(
      apply_named_functor("generate-topology", emit(SetSystem{FinSet{{"a", "b"}}, {{"a"}}})));
  CHECK(topo.opens.size() == 3);
  auto bor = parse_sigma(apply_named_functor("borel", emit(topo)));
  CHECK(bor.sets.size() == 4);

  // cosimplification drops the isolated vertex
  Quiver qq{FinSet{{"a", "b", "c"}}, FinSet{{"e"}},
            FinMap{FinSet{{"e"}}, FinSet{{"a", "b", "c"}}, {{"e", "a"}}},
            FinMap{FinSet{{"e"}}, FinSet{{"a", "b", "c"}}, {{"e", "b"}}}};
  auto trimmed = parse_quiver(apply_named_functor("cosimplify-quiver", emit(qq)));
  CHECK(trimmed.vertices.size() == 2);

  auto hyp = make_hypergraph(FinSet{{"a"}}, {{"e", {"a"}}, {"f", {"a"}}});
  auto deduped =
      parse_hypergraph(apply_named_functor("cosimplify-anti", emit(hyp)));
  CHECK(deduped.edges.size() == 1);
}

TEST_CASE("binary functors take pair documents") {
  SetSystem k2{FinSet{{"a", "b"}}, {{"a", "b"}}};
  auto out =
      parse_setsystem(apply_named_functor("product", pair_doc(emit(k2), emit(k2))));
  CHECK(out.sets.size() == 7);

  Digraph d{FinSet{{"a"}}, {{"a", "a"}}};
  auto dd = parse_digraph(apply_named_functor("product", pair_doc(emit(d), emit(d))));
  CHECK(dd.arcs.size() == 1);

  auto q = parse_quiver(kQuiverText);
  auto cp = parse_quiver(
      apply_named_functor("coproduct", pair_doc(emit(q), emit(q))));
  CHECK(cp.edges.size() == 4);
  CHECK(cp.vertices.contains("0:a"));

  // mixing kinds inside a pair is a kind error
  CHECK_THROWS_AS(apply_named_functor("product", pair_doc(emit(k2), emit(d))),
                  KindError);
  // colimits outside the parent presentations are kind errors
  CHECK_THROWS_AS(apply_named_functor("coproduct", pair_doc(emit(d), emit(d))),
                  KindError);
}

TEST_CASE("equalizers take parallel documents") {
  auto strip = [](std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
  };
  Digraph dom{FinSet{{"a", "b"}}, {}};
  Digraph cod{FinSet{{"u", "w"}}, {}};
  std::string doc = std::string{"{\"kind\":\"parallel\",\"dom\":"} + strip(emit(dom)) +
                    ",\"cod\":" + strip(emit(cod)) +
                    R"(,"first":{"vmap":{"a":"u","b":"u"}})" +
                    R"(,"second":{"vmap":{"a":"u","b":"w"}}})";
  auto eq = parse_digraph(apply_named_functor("equalizer", doc));
  CHECK(eq.vertices.labels() == std::vector<std::string>{"a"});

  // a component that is not a morphism is a kind error
  Digraph strict{FinSet{{"a", "b"}}, {{"a", "b"}}};
  Digraph bare{FinSet{{"u", "w"}}, {}};
  std::string bad = std::string{"{\"kind\":\"parallel\",\"dom\":"} + strip(emit(strict)) +
                    ",\"cod\":" + strip(emit(bare)) +
                    R"(,"first":{"vmap":{"a":"u","b":"w"}})" +
                    R"(,"second":{"vmap":{"a":"u","b":"w"}}})";
  CHECK_THROWS_AS(apply_named_functor("equalizer", bad), KindError);
}

TEST_CASE("reports serialize to single lines") {
  auto rep = LawReport::failed("demo", "instance", "because");
  rep.count("things", 3);
  auto line = emit_report(rep);
  CHECK(line.find('\n') == std::string::npos);
  CHECK(line.find("\"law\":\"demo\"") != std::string::npos);
  CHECK(line.find("\"pass\":false") != std::string::npos);
  CHECK(line.find("\"things\":3") != std::string::npos);
}

namespace {

// end-to-end driver access; the binary path arrives via the environment
std::string cli_path() {
  const char* p = std::getenv("CATGRAPH_CLI");
  return p ? std::string{p} : std::string{};
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& tag) {
  auto outfile = std::string{"cli_out_"} + tag + ".txt";
  auto cmd = cli_path() + " " + args + " > " + outfile + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.status = WEXITSTATUS(rc);
  std::ifstream in{outfile};
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(outfile.c_str());
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out{path};
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in{path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("the command line applies functors to files") {
  if (cli_path().empty()) {
    MESSAGE("CATGRAPH_CLI not set; skipping driver checks");
    return;
  }
  write_file("cli_in.json", kQuiverText);

  auto r = run_cli("apply --functor simplify-quiver --in cli_in.json --out cli_simplified.json", "apply");
  CHECK(r.status == 0);
  CHECK(parse_quiver(read_file("cli_simplified.json")).edges.size() == 1);

  // applying to a missing file is a parse failure
  CHECK(run_cli("apply --functor simplify-quiver --in nope.json --out x.json", "missing").status == 2);

  // wrong kind for the functor
  CHECK(run_cli("apply --functor sym-closure --in cli_in.json --out x.json", "kind").status == 3);

  // unknown functor name
  CHECK(run_cli("apply --functor frobnicate --in cli_in.json --out x.json", "unknown").status == 2);

  // malformed input
  write_file("cli_bad.json", "{oops");
  CHECK(run_cli("apply --functor simplify-quiver --in cli_bad.json --out x.json", "bad").status == 2);

  // budget violations surface as their own exit code
  std::string many = R"({"kind":"setsystem","vertices":[)";
  for (int i = 0; i < 11; ++i) many += (i ? ",\"p" : "\"p") + std::to_string(i) + "\"";
  many += R"(],"sets":[]})";
  write_file("cli_big.json", many);
  CHECK(run_cli("apply --functor generate-topology --in cli_big.json --out x.json", "budget").status == 4);

  std::remove("cli_in.json");
  std::remove("cli_bad.json");
  std::remove("cli_big.json");
  std::remove("cli_simplified.json");
  std::remove("x.json");
}

TEST_CASE("the command line checks laws and reports") {
  if (cli_path().empty()) {
    MESSAGE("CATGRAPH_CLI not set; skipping driver checks");
    return;
  }
  auto ok = run_cli("check --law roundtrip-digraph --max-size 2", "law");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("\"pass\":true") != std::string::npos);
  CHECK(ok.out.find("\"law\":\"roundtrip-digraph\"") != std::string::npos);

  CHECK(run_cli("check --law no-such-law", "nolaw").status == 2);
  CHECK(run_cli("", "nosub").status == 2);
  CHECK(run_cli("check --law reflective-quiver --max-size 2 --budget 1", "tinybudget").status == 4);
}
