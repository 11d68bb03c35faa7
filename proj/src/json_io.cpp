#include "catgraph/json_io.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "catgraph/comma.hpp"
#include "catgraph/coreflectors.hpp"
#include "catgraph/errors.hpp"
#include "catgraph/labels.hpp"
#include "catgraph/limits.hpp"
#include "catgraph/reflectors.hpp"

namespace catgraph {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.what() carries the byte offset of the failure.
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Object constructors signal referential breakage (dangling endpoints,
// duplicate ids) with invalid_argument; at the file boundary that is a parse
// failure. KindError passes through untouched.
template <class F>
auto reading(const char* what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected an object with field \"" + std::string(key) + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field \"" + std::string(key) + "\"");
  return *it;
}

std::string label_of(const json& j, const char* where) {
  if (!j.is_string())
    throw ParseError("expected a label string in " + std::string(where));
  std::string s = j.get<std::string>();
  if (!well_formed_label(s))
    throw ParseError("ill-formed label in " + std::string(where) + ": \"" + s + "\"");
  return s;
}

std::vector<std::string> label_array(const json& j, const char* where) {
  if (!j.is_array())
    throw ParseError("expected an array of labels in " + std::string(where));
  std::vector<std::string> out;
  for (const json& e : j) out.push_back(label_of(e, where));
  return out;
}

std::string tag_of(const json& j) {
  return label_of(field(j, "kind"), "\"kind\"");
}

void require_tag(const json& j, const char* kind) {
  std::string tag = tag_of(j);
  if (tag != kind)
    throw KindError("expected kind \"" + std::string(kind) + "\", found \"" + tag + "\"");
}

std::map<std::string, std::string> map_object(const json& j, const char* where) {
  if (!j.is_object())
    throw ParseError("expected a label-to-label object in " + std::string(where));
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (!well_formed_label(k))
      throw ParseError("ill-formed label in " + std::string(where) + ": \"" + k + "\"");
    out[k] = label_of(v, where);
  }
  return out;
}

// Typed readers over already-parsed JSON.

Quiver quiver_from(const json& j) {
  require_tag(j, "quiver");
  return reading("quiver", [&] {
    FinSet vs(label_array(field(j, "vertices"), "\"vertices\""));
    std::vector<std::string> ids;
    std::map<std::string, std::string> src, tgt;
    for (const json& e : field(j, "edges")) {
      std::string id = label_of(field(e, "id"), "edge \"id\"");
      ids.push_back(id);
      src[id] = label_of(field(e, "src"), "edge \"src\"");
      tgt[id] = label_of(field(e, "tgt"), "edge \"tgt\"");
    }
    FinSet es(std::move(ids));
    return Quiver(vs, es, FinMap(es, vs, std::move(src)), FinMap(es, vs, std::move(tgt)));
  });
}

SSHypergraph hypergraph_from(const json& j) {
  require_tag(j, "hypergraph");
  return reading("hypergraph", [&] {
    FinSet vs(label_array(field(j, "vertices"), "\"vertices\""));
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (const json& e : field(j, "edges")) {
      edges.emplace_back(label_of(field(e, "id"), "edge \"id\""),
                         label_array(field(e, "members"), "edge \"members\""));
    }
    return make_hypergraph(std::move(vs), edges);
  });
}

IncHypergraph incidence_from(const json& j) {
  require_tag(j, "incidence");
  return reading("incidence", [&] {
    FinSet vs(label_array(field(j, "vertices"), "\"vertices\""));
    FinSet es(label_array(field(j, "edges"), "\"edges\""));
    std::vector<std::string> ids;
    std::map<std::string, std::string> av, ae;
    for (const json& i : field(j, "incidences")) {
      std::string id = label_of(field(i, "id"), "incidence \"id\"");
      ids.push_back(id);
      av[id] = label_of(field(i, "vertex"), "incidence \"vertex\"");
      ae[id] = label_of(field(i, "edge"), "incidence \"edge\"");
    }
    FinSet is(std::move(ids));
    return IncHypergraph(vs, es, is, FinMap(is, vs, std::move(av)),
                         FinMap(is, es, std::move(ae)));
  });
}

Digraph digraph_from(const json& j) {
  require_tag(j, "digraph");
  return reading("digraph", [&] {
    FinSet vs(label_array(field(j, "vertices"), "\"vertices\""));
    std::vector<std::pair<std::string, std::string>> arcs;
    for (const json& a : field(j, "arcs")) {
      if (!a.is_array() || a.size() != 2)
        throw ParseError("expected an [v,w] pair in \"arcs\"");
      arcs.emplace_back(label_of(a[0], "\"arcs\""), label_of(a[1], "\"arcs\""));
    }
    return Digraph(std::move(vs), std::move(arcs));
  });
}

std::vector<std::vector<std::string>> sets_from(const json& j) {
  std::vector<std::vector<std::string>> sets;
  for (const json& s : field(j, "sets")) sets.push_back(label_array(s, "\"sets\""));
  return sets;
}

SetSystem setsystem_from(const json& j) {
  require_tag(j, "setsystem");
  return reading("setsystem", [&] {
    return SetSystem(FinSet(label_array(field(j, "vertices"), "\"vertices\"")), sets_from(j));
  });
}

FiniteTopSpace topology_from(const json& j) {
  require_tag(j, "topology");
  return reading("topology", [&] {
    return FiniteTopSpace(FinSet(label_array(field(j, "vertices"), "\"vertices\"")),
                          sets_from(j));
  });
}

FiniteMeasSpace sigma_from(const json& j) {
  require_tag(j, "sigma");
  return reading("sigma", [&] {
    return FiniteMeasSpace(FinSet(label_array(field(j, "vertices"), "\"vertices\"")),
                           sets_from(j));
  });
}

// Canonical emission: map-backed json orders keys alphabetically, carriers
// are already sorted, dump(2) is deterministic.

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json to_json(const Quiver& q) {
  json edges = json::array();
  for (const auto& e : q.edges)
    edges.push_back(json{{"id", e}, {"src", q.src(e)}, {"tgt", q.tgt(e)}});
  return json{{"kind", "quiver"}, {"vertices", q.vertices.labels()}, {"edges", edges}};
}

json to_json(const SSHypergraph& h) {
  json edges = json::array();
  for (const auto& e : h.edges)
    edges.push_back(json{{"id", e}, {"members", h.edge_members(e)}});
  return json{{"kind", "hypergraph"}, {"vertices", h.vertices.labels()}, {"edges", edges}};
}

json to_json(const IncHypergraph& g) {
  json incs = json::array();
  for (const auto& i : g.incidences)
    incs.push_back(json{{"id", i}, {"vertex", g.att_v(i)}, {"edge", g.att_e(i)}});
  return json{{"kind", "incidence"},
              {"vertices", g.vertices.labels()},
              {"edges", g.edges.labels()},
              {"incidences", incs}};
}

json to_json(const Digraph& g) {
  json arcs = json::array();
  for (const auto& [v, w] : g.arcs) arcs.push_back(json::array({v, w}));
  return json{{"kind", "digraph"}, {"vertices", g.vertices.labels()}, {"arcs", arcs}};
}

json collection_json(const std::vector<std::vector<std::string>>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

json to_json(const SetSystem& s) {
  return json{{"kind", "setsystem"},
              {"vertices", s.vertices.labels()},
              {"sets", collection_json(s.sets)}};
}

json to_json(const FiniteTopSpace& t) {
  return json{{"kind", "topology"},
              {"vertices", t.points.labels()},
              {"sets", collection_json(t.opens)}};
}

json to_json(const FiniteMeasSpace& m) {
  return json{{"kind", "sigma"},
              {"vertices", m.points.labels()},
              {"sets", collection_json(m.sets)}};
}

// Morphism components for "parallel" files.

FinMap finmap_from(const json& j, const char* key, const FinSet& dom, const FinSet& cod) {
  return reading(key, [&] {
    return FinMap(dom, cod, map_object(field(j, key), key));
  });
}

template <class Hom>
void require_morphism(const Hom& h, const char* which) {
  LawReport v = validate(h);
  if (!v.pass)
    throw KindError(std::string(which) + " component is not a morphism: " + v.witness);
}

struct ParallelParts {
  std::string kind;
  const json* dom;
  const json* cod;
  const json* first;
  const json* second;
};

ParallelParts parallel_parts(const json& j) {
  require_tag(j, "parallel");
  ParallelParts p{tag_of(field(j, "dom")), &field(j, "dom"), &field(j, "cod"),
                  &field(j, "first"), &field(j, "second")};
  if (tag_of(*p.cod) != p.kind)
    throw KindError("parallel pair endpoints have different kinds: \"" + p.kind +
                    "\" and \"" + tag_of(*p.cod) + "\"");
  return p;
}

std::pair<const json*, const json*> pair_parts(const json& j, std::string& kind) {
  require_tag(j, "pair");
  const json& a = field(j, "first");
  const json& b = field(j, "second");
  kind = tag_of(a);
  if (tag_of(b) != kind)
    throw KindError("pair elements have different kinds: \"" + kind + "\" and \"" +
                    tag_of(b) + "\"");
  return {&a, &b};
}

std::string apply_product(const json& j) {
  std::string kind;
  auto [a, b] = pair_parts(j, kind);
  if (kind == "quiver") return emit(product(quiver_from(*a), quiver_from(*b)).object);
  if (kind == "hypergraph")
    return emit(product(hypergraph_from(*a), hypergraph_from(*b)).object);
  if (kind == "incidence")
    return emit(product(incidence_from(*a), incidence_from(*b)).object);
  if (kind == "digraph")
    return emit(simple_product(digraph_from(*a), digraph_from(*b)).object);
  if (kind == "setsystem")
    return emit(simple_product(setsystem_from(*a), setsystem_from(*b)).object);
  throw KindError("no product over kind \"" + kind + "\"");
}

std::string apply_coproduct(const json& j) {
  std::string kind;
  auto [a, b] = pair_parts(j, kind);
  if (kind == "quiver") return emit(coproduct(quiver_from(*a), quiver_from(*b)).object);
  if (kind == "hypergraph")
    return emit(coproduct(hypergraph_from(*a), hypergraph_from(*b)).object);
  if (kind == "incidence")
    return emit(coproduct(incidence_from(*a), incidence_from(*b)).object);
  throw KindError("coproducts are available in the parent presentations only, not \"" +
                  kind + "\"");
}

std::string apply_equalizer(const json& j) {
  ParallelParts p = parallel_parts(j);
  if (p.kind == "quiver") {
    Quiver dom = quiver_from(*p.dom), cod = quiver_from(*p.cod);
    QuiverHom f{dom, cod, finmap_from(*p.first, "vmap", dom.vertices, cod.vertices),
                finmap_from(*p.first, "emap", dom.edges, cod.edges)};
    QuiverHom g{dom, cod, finmap_from(*p.second, "vmap", dom.vertices, cod.vertices),
                finmap_from(*p.second, "emap", dom.edges, cod.edges)};
    require_morphism(f, "first");
    require_morphism(g, "second");
    return emit(equalizer(f, g).object);
  }
  if (p.kind == "hypergraph") {
    SSHypergraph dom = hypergraph_from(*p.dom), cod = hypergraph_from(*p.cod);
    HypergraphHom f{dom, cod, finmap_from(*p.first, "vmap", dom.vertices, cod.vertices),
                    finmap_from(*p.first, "emap", dom.edges, cod.edges)};
    HypergraphHom g{dom, cod, finmap_from(*p.second, "vmap", dom.vertices, cod.vertices),
                    finmap_from(*p.second, "emap", dom.edges, cod.edges)};
    require_morphism(f, "first");
    require_morphism(g, "second");
    return emit(equalizer(f, g).object);
  }
  if (p.kind == "incidence") {
    IncHypergraph dom = incidence_from(*p.dom), cod = incidence_from(*p.cod);
    IncHom f{dom, cod, finmap_from(*p.first, "vmap", dom.vertices, cod.vertices),
             finmap_from(*p.first, "emap", dom.edges, cod.edges),
             finmap_from(*p.first, "imap", dom.incidences, cod.incidences)};
    IncHom g{dom, cod, finmap_from(*p.second, "vmap", dom.vertices, cod.vertices),
             finmap_from(*p.second, "emap", dom.edges, cod.edges),
             finmap_from(*p.second, "imap", dom.incidences, cod.incidences)};
    require_morphism(f, "first");
    require_morphism(g, "second");
    return emit(equalizer(f, g).object);
  }
  if (p.kind == "digraph") {
    Digraph dom = digraph_from(*p.dom), cod = digraph_from(*p.cod);
    DigraphHom f{dom, cod, finmap_from(*p.first, "vmap", dom.vertices, cod.vertices)};
    DigraphHom g{dom, cod, finmap_from(*p.second, "vmap", dom.vertices, cod.vertices)};
    require_morphism(f, "first");
    require_morphism(g, "second");
    return emit(simple_equalizer(f, g).object);
  }
  if (p.kind == "setsystem") {
    SetSystem dom = setsystem_from(*p.dom), cod = setsystem_from(*p.cod);
    SetSystemHom f{dom, cod, finmap_from(*p.first, "vmap", dom.vertices, cod.vertices)};
    SetSystemHom g{dom, cod, finmap_from(*p.second, "vmap", dom.vertices, cod.vertices)};
    require_morphism(f, "first");
    require_morphism(g, "second");
    return emit(simple_equalizer(f, g).object);
  }
  throw KindError("no equalizer over kind \"" + p.kind + "\"");
}

std::string apply_coequalizer(const json& j) {
  ParallelParts p = parallel_parts(j);
  if (p.kind == "quiver") {
    Quiver dom = quiver_from(*p.dom), cod = quiver_from(*p.cod);
    QuiverHom f{dom, cod, finmap_from(*p.first, "vmap", dom.vertices, cod.vertices),
                finmap_from(*p.first, "emap", dom.edges, cod.edges)};
    QuiverHom g{dom, cod, finmap_from(*p.second, "vmap", dom.vertices, cod.vertices),
                finmap_from(*p.second, "emap", dom.edges, cod.edges)};
    require_morphism(f, "first");
    require_morphism(g, "second");
    return emit(coequalizer(f, g).object);
  }
  if (p.kind == "hypergraph") {
    SSHypergraph dom = hypergraph_from(*p.dom), cod = hypergraph_from(*p.cod);
    HypergraphHom f{dom, cod, finmap_from(*p.first, "vmap", dom.vertices, cod.vertices),
                    finmap_from(*p.first, "emap", dom.edges, cod.edges)};
    HypergraphHom g{dom, cod, finmap_from(*p.second, "vmap", dom.vertices, cod.vertices),
                    finmap_from(*p.second, "emap", dom.edges, cod.edges)};
    require_morphism(f, "first");
    require_morphism(g, "second");
    return emit(coequalizer(f, g).object);
  }
  if (p.kind == "incidence") {
    IncHypergraph dom = incidence_from(*p.dom), cod = incidence_from(*p.cod);
    IncHom f{dom, cod, finmap_from(*p.first, "vmap", dom.vertices, cod.vertices),
             finmap_from(*p.first, "emap", dom.edges, cod.edges),
             finmap_from(*p.first, "imap", dom.incidences, cod.incidences)};
    IncHom g{dom, cod, finmap_from(*p.second, "vmap", dom.vertices, cod.vertices),
             finmap_from(*p.second, "emap", dom.edges, cod.edges),
             finmap_from(*p.second, "imap", dom.incidences, cod.incidences)};
    require_morphism(f, "first");
    require_morphism(g, "second");
    return emit(coequalizer(f, g).object);
  }
  throw KindError("coequalizers are available in the parent presentations only, not \"" +
                  p.kind + "\"");
}

}  // namespace

std::string kind_of(const std::string& text) { return tag_of(parse_text(text)); }

Quiver parse_quiver(const std::string& text) { return quiver_from(parse_text(text)); }
SSHypergraph parse_hypergraph(const std::string& text) {
  return hypergraph_from(parse_text(text));
}
IncHypergraph parse_incidence(const std::string& text) {
  return incidence_from(parse_text(text));
}
Digraph parse_digraph(const std::string& text) { return digraph_from(parse_text(text)); }
SetSystem parse_setsystem(const std::string& text) {
  return setsystem_from(parse_text(text));
}
FiniteTopSpace parse_topology(const std::string& text) {
  return topology_from(parse_text(text));
}
FiniteMeasSpace parse_sigma(const std::string& text) { return sigma_from(parse_text(text)); }

std::string emit(const Quiver& q) { return dump_canonical(to_json(q)); }
std::string emit(const SSHypergraph& h) { return dump_canonical(to_json(h)); }
std::string emit(const IncHypergraph& g) { return dump_canonical(to_json(g)); }
std::string emit(const Digraph& g) { return dump_canonical(to_json(g)); }
std::string emit(const SetSystem& s) { return dump_canonical(to_json(s)); }
std::string emit(const FiniteTopSpace& t) { return dump_canonical(to_json(t)); }
std::string emit(const FiniteMeasSpace& m) { return dump_canonical(to_json(m)); }

std::string emit_report(const LawReport& r) {
  json counts = json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  json out{{"law", r.law},
           {"instance", r.instance},
           {"pass", r.pass},
           {"witness", r.witness},
           {"counts", counts}};
  return out.dump();
}

std::vector<std::string> functor_names() {
  return {"simplify-quiver",   "simplify-hypergraph", "simplify-incidence",
          "del",               "sym-closure",         "sym-interior",
          "gra-to-symdigra",   "symdigra-to-gra",     "cosimplify-quiver",
          "cosimplify-incidence", "cosimplify-anti",  "generate-topology",
          "generate-sigma",    "borel",               "product",
          "equalizer",         "coproduct",           "coequalizer"};
}

std::string apply_named_functor(const std::string& name, const std::string& input) {
  json j = parse_text(input);
  if (name == "simplify-quiver")
    return emit(quiver_from_comma(simplify(to_comma(quiver_from(j))).result));
  if (name == "simplify-hypergraph")
    return emit(hypergraph_from_comma(simplify(to_comma(hypergraph_from(j))).result));
  if (name == "simplify-incidence")
    return emit(incidence_from_comma(simplify(to_comma(incidence_from(j))).result));
  if (name == "del") return emit(del_ssys(setsystem_from(j)).result.setsystem());
  if (name == "sym-closure") return emit(sym_closure(digraph_from(j)).result.digraph());
  if (name == "sym-interior") return emit(sym_interior(digraph_from(j)).result.digraph());
  if (name == "gra-to-symdigra")
    return emit(gra_to_symdigra(SimpleGraph(setsystem_from(j))).digraph());
  if (name == "symdigra-to-gra")
    return emit(symdigra_to_gra(SymDigraph(digraph_from(j))).setsystem());
  if (name == "cosimplify-quiver")
    return emit(quiver_from_comma(cosimplify_quiver(quiver_from(j)).result));
  if (name == "cosimplify-incidence")
    return emit(incidence_from_comma(cosimplify_inc(incidence_from(j)).result));
  if (name == "cosimplify-anti")
    return emit(hypergraph_from_comma_anti(cosimplify_p(hypergraph_from(j)).result));
  if (name == "generate-topology") return emit(generate_topology(setsystem_from(j)));
  if (name == "generate-sigma") return emit(generate_sigma(setsystem_from(j)));
  if (name == "borel") return emit(borel(topology_from(j)));
  if (name == "product") return apply_product(j);
  if (name == "equalizer") return apply_equalizer(j);
  if (name == "coproduct") return apply_coproduct(j);
  if (name == "coequalizer") return apply_coequalizer(j);
  throw std::out_of_range("unknown functor: " + name);
}

}  // namespace catgraph
