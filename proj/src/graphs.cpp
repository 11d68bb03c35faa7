#include "catgraph/graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "catgraph/errors.hpp"
#include "catgraph/labels.hpp"

namespace catgraph {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<std::pair<std::string, std::string>> canonical_pairs(
    std::vector<std::pair<std::string, std::string>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace

Quiver::Quiver(FinSet vertices_, FinSet edges_, FinMap src_, FinMap tgt_)
    : vertices(std::move(vertices_)),
      edges(std::move(edges_)),
      src(std::move(src_)),
      tgt(std::move(tgt_)) {
  require(src.dom() == edges && src.cod() == vertices, "source map has the wrong carriers");
  require(tgt.dom() == edges && tgt.cod() == vertices, "target map has the wrong carriers");
}

SSHypergraph::SSHypergraph(FinSet vertices_, FinSet edges_, FinMap incidence_)
    : vertices(std::move(vertices_)),
      edges(std::move(edges_)),
      incidence(std::move(incidence_)) {
  require(incidence.dom() == edges, "incidence map domain is not the edge set");
  require(incidence.cod() == power_set(vertices),
          "incidence map codomain is not the vertex power set");
}

std::vector<std::string> SSHypergraph::edge_members(const std::string& e) const {
  return split_set_label(incidence(e));
}

SSHypergraph make_hypergraph(
    FinSet vertices,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& edges) {
  FinSet carrier = power_set(vertices);
  std::vector<std::string> ids;
  std::map<std::string, std::string> a;
  for (const auto& [id, members] : edges) {
    ids.push_back(id);
    a[id] = set_label(members);
  }
  FinSet edge_set(std::move(ids));
  return SSHypergraph(std::move(vertices), edge_set, FinMap(edge_set, carrier, std::move(a)));
}

IncHypergraph::IncHypergraph(FinSet vertices_, FinSet edges_, FinSet incidences_,
                             FinMap att_v_, FinMap att_e_)
    : vertices(std::move(vertices_)),
      edges(std::move(edges_)),
      incidences(std::move(incidences_)),
      att_v(std::move(att_v_)),
      att_e(std::move(att_e_)) {
  require(att_v.dom() == incidences && att_v.cod() == vertices,
          "vertex attachment has the wrong carriers");
  require(att_e.dom() == incidences && att_e.cod() == edges,
          "edge attachment has the wrong carriers");
}

Digraph::Digraph(FinSet vertices_, std::vector<std::pair<std::string, std::string>> arcs_)
    : vertices(std::move(vertices_)), arcs(canonical_pairs(std::move(arcs_))) {
  for (const auto& [v, w] : arcs) {
    require(vertices.contains(v) && vertices.contains(w),
            "arc endpoint is not a vertex: (" + v + "," + w + ")");
  }
}

bool Digraph::has_arc(const std::string& v, const std::string& w) const {
  return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(v, w));
}

SetSystem::SetSystem(FinSet vertices_, std::vector<std::vector<std::string>> sets_)
    : vertices(std::move(vertices_)) {
  std::set<std::vector<std::string>> canon;
  for (auto& members : sets_) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (const auto& v : members)
      require(vertices.contains(v), "set member is not a vertex: " + v);
    canon.insert(std::move(members));
  }
  sets.assign(canon.begin(), canon.end());
}

bool SetSystem::has_set(std::vector<std::string> members) const {
  std::sort(members.begin(), members.end());
  return std::binary_search(sets.begin(), sets.end(), members);
}

SimpleGraph::SimpleGraph(SetSystem s) : s_(std::move(s)) {
  for (const auto& members : s_.sets) {
    if (members.empty() || members.size() > 2)
      throw KindError("set system is not a graph: member of size " +
                      std::to_string(members.size()));
  }
}

SymDigraph::SymDigraph(Digraph g) : g_(std::move(g)) {
  for (const auto& [v, w] : g_.arcs) {
    if (!g_.has_arc(w, v))
      throw KindError("digraph is not symmetric: (" + v + "," + w +
                      ") has no reverse arc");
  }
}

IncStructure::IncStructure(FinSet vertices_, FinSet edges_,
                           std::vector<std::pair<std::string, std::string>> flags_)
    : vertices(std::move(vertices_)),
      edges(std::move(edges_)),
      flags(canonical_pairs(std::move(flags_))) {
  for (const auto& [v, e] : flags) {
    require(vertices.contains(v), "flag vertex does not exist: " + v);
    require(edges.contains(e), "flag edge does not exist: " + e);
  }
}

bool IncStructure::has_flag(const std::string& v, const std::string& e) const {
  return std::binary_search(flags.begin(), flags.end(), std::make_pair(v, e));
}

namespace {

const char* kObjectLaw = "object-validity";

LawReport object_pass(const std::string& instance) {
  return LawReport::passed(kObjectLaw, instance);
}

LawReport hom_fail(const char* law, const std::string& witness) {
  return LawReport::failed(law, "", witness);
}

}  // namespace

LawReport validate(const Quiver& q) { return object_pass(describe(q)); }
LawReport validate(const SSHypergraph& h) { return object_pass(describe(h)); }
LawReport validate(const IncHypergraph& g) { return object_pass(describe(g)); }
LawReport validate(const Digraph& g) { return object_pass(describe(g)); }
LawReport validate(const SetSystem& s) { return object_pass(describe(s)); }
LawReport validate(const SimpleGraph& g) { return object_pass(describe(g.setsystem())); }
LawReport validate(const SymDigraph& g) { return object_pass(describe(g.digraph())); }
LawReport validate(const IncStructure& s) { return object_pass(describe(s)); }

LawReport validate(const QuiverHom& h) {
  const char* law = "quiver-hom";
  if (!(h.vmap.dom() == h.dom.vertices) || !(h.vmap.cod() == h.cod.vertices))
    return hom_fail(law, "vertex map carriers do not match the objects");
  if (!(h.emap.dom() == h.dom.edges) || !(h.emap.cod() == h.cod.edges))
    return hom_fail(law, "edge map carriers do not match the objects");
  for (const auto& e : h.dom.edges) {
    if (h.vmap(h.dom.src(e)) != h.cod.src(h.emap(e)))
      return hom_fail(law, "source square fails at edge " + e);
    if (h.vmap(h.dom.tgt(e)) != h.cod.tgt(h.emap(e)))
      return hom_fail(law, "target square fails at edge " + e);
  }
  return LawReport::passed(law, "");
}

LawReport validate(const HypergraphHom& h) {
  const char* law = "hypergraph-hom";
  if (!(h.vmap.dom() == h.dom.vertices) || !(h.vmap.cod() == h.cod.vertices))
    return hom_fail(law, "vertex map carriers do not match the objects");
  if (!(h.emap.dom() == h.dom.edges) || !(h.emap.cod() == h.cod.edges))
    return hom_fail(law, "edge map carriers do not match the objects");
  for (const auto& e : h.dom.edges) {
    std::string expected = set_label(sorted_image(h.vmap, h.dom.edge_members(e)));
    if (h.cod.incidence(h.emap(e)) != expected)
      return hom_fail(law, "incidence square fails at edge " + e);
  }
  return LawReport::passed(law, "");
}

LawReport validate(const IncHom& h) {
  const char* law = "incidence-hom";
  if (!(h.vmap.dom() == h.dom.vertices) || !(h.vmap.cod() == h.cod.vertices))
    return hom_fail(law, "vertex map carriers do not match the objects");
  if (!(h.emap.dom() == h.dom.edges) || !(h.emap.cod() == h.cod.edges))
    return hom_fail(law, "edge map carriers do not match the objects");
  if (!(h.imap.dom() == h.dom.incidences) || !(h.imap.cod() == h.cod.incidences))
    return hom_fail(law, "incidence map carriers do not match the objects");
  for (const auto& i : h.dom.incidences) {
    if (h.vmap(h.dom.att_v(i)) != h.cod.att_v(h.imap(i)))
      return hom_fail(law, "vertex attachment square fails at incidence " + i);
    if (h.emap(h.dom.att_e(i)) != h.cod.att_e(h.imap(i)))
      return hom_fail(law, "edge attachment square fails at incidence " + i);
  }
  return LawReport::passed(law, "");
}

LawReport validate(const DigraphHom& h) {
  const char* law = "digraph-hom";
  if (!(h.vmap.dom() == h.dom.vertices) || !(h.vmap.cod() == h.cod.vertices))
    return hom_fail(law, "vertex map carriers do not match the objects");
  for (const auto& [v, w] : h.dom.arcs) {
    if (!h.cod.has_arc(h.vmap(v), h.vmap(w)))
      return hom_fail(law, "arc (" + v + "," + w + ") is not preserved");
  }
  return LawReport::passed(law, "");
}

LawReport validate(const SetSystemHom& h) {
  const char* law = "setsystem-hom";
  if (!(h.vmap.dom() == h.dom.vertices) || !(h.vmap.cod() == h.cod.vertices))
    return hom_fail(law, "vertex map carriers do not match the objects");
  for (const auto& members : h.dom.sets) {
    if (!h.cod.has_set(sorted_image(h.vmap, members)))
      return hom_fail(law, "image of member " + set_label(members) + " is not a member");
  }
  return LawReport::passed(law, "");
}

LawReport validate(const IncStructureHom& h) {
  const char* law = "incstructure-hom";
  if (!(h.vmap.dom() == h.dom.vertices) || !(h.vmap.cod() == h.cod.vertices))
    return hom_fail(law, "vertex map carriers do not match the objects");
  if (!(h.emap.dom() == h.dom.edges) || !(h.emap.cod() == h.cod.edges))
    return hom_fail(law, "edge map carriers do not match the objects");
  for (const auto& [v, e] : h.dom.flags) {
    if (!h.cod.has_flag(h.vmap(v), h.emap(e)))
      return hom_fail(law, "flag (" + v + "," + e + ") is not preserved");
  }
  return LawReport::passed(law, "");
}

LawReport validate(const AntiHom& h) {
  const char* law = "anti-hom";
  if (!(h.vmap.dom() == h.dom.vertices) || !(h.vmap.cod() == h.cod.vertices))
    return hom_fail(law, "vertex map carriers do not match the objects");
  if (!(h.edge_rev.dom() == h.cod.edges) || !(h.edge_rev.cod() == h.dom.edges))
    return hom_fail(law, "reverse edge map carriers do not match the objects");
  for (const auto& e : h.cod.edges) {
    std::string expected =
        set_label(sorted_preimage(h.vmap, h.cod.edge_members(e)));
    if (h.dom.incidence(h.edge_rev(e)) != expected)
      return hom_fail(law, "preimage square fails at edge " + e);
  }
  return LawReport::passed(law, "");
}

LawReport validate(const SetSystemAntiHom& h) {
  const char* law = "setsystem-anti-hom";
  if (!(h.vmap.dom() == h.dom.vertices) || !(h.vmap.cod() == h.cod.vertices))
    return hom_fail(law, "vertex map carriers do not match the objects");
  for (const auto& members : h.cod.sets) {
    if (!h.dom.has_set(sorted_preimage(h.vmap, members)))
      return hom_fail(law, "preimage of member " + set_label(members) + " is not a member");
  }
  return LawReport::passed(law, "");
}

QuiverHom identity_hom(const Quiver& q) {
  return {q, q, FinMap::identity(q.vertices), FinMap::identity(q.edges)};
}
HypergraphHom identity_hom(const SSHypergraph& h) {
  return {h, h, FinMap::identity(h.vertices), FinMap::identity(h.edges)};
}
IncHom identity_hom(const IncHypergraph& g) {
  return {g, g, FinMap::identity(g.vertices), FinMap::identity(g.edges),
          FinMap::identity(g.incidences)};
}
DigraphHom identity_hom(const Digraph& g) { return {g, g, FinMap::identity(g.vertices)}; }
SetSystemHom identity_hom(const SetSystem& s) {
  return {s, s, FinMap::identity(s.vertices)};
}
IncStructureHom identity_hom(const IncStructure& s) {
  return {s, s, FinMap::identity(s.vertices), FinMap::identity(s.edges)};
}
AntiHom identity_anti_hom(const SSHypergraph& h) {
  return {h, h, FinMap::identity(h.vertices), FinMap::identity(h.edges)};
}
SetSystemAntiHom identity_anti_hom(const SetSystem& s) {
  return {s, s, FinMap::identity(s.vertices)};
}

namespace {

void require_composable(bool ok) {
  if (!ok) throw std::invalid_argument("composition mismatch: objects do not line up");
}

}  // namespace

QuiverHom compose(const QuiverHom& g, const QuiverHom& f) {
  require_composable(f.cod == g.dom);
  return {f.dom, g.cod, compose(g.vmap, f.vmap), compose(g.emap, f.emap)};
}
HypergraphHom compose(const HypergraphHom& g, const HypergraphHom& f) {
  require_composable(f.cod == g.dom);
  return {f.dom, g.cod, compose(g.vmap, f.vmap), compose(g.emap, f.emap)};
}
IncHom compose(const IncHom& g, const IncHom& f) {
  require_composable(f.cod == g.dom);
  return {f.dom, g.cod, compose(g.vmap, f.vmap), compose(g.emap, f.emap),
          compose(g.imap, f.imap)};
}
DigraphHom compose(const DigraphHom& g, const DigraphHom& f) {
  require_composable(f.cod == g.dom);
  return {f.dom, g.cod, compose(g.vmap, f.vmap)};
}
SetSystemHom compose(const SetSystemHom& g, const SetSystemHom& f) {
  require_composable(f.cod == g.dom);
  return {f.dom, g.cod, compose(g.vmap, f.vmap)};
}
IncStructureHom compose(const IncStructureHom& g, const IncStructureHom& f) {
  require_composable(f.cod == g.dom);
  return {f.dom, g.cod, compose(g.vmap, f.vmap), compose(g.emap, f.emap)};
}
AntiHom compose(const AntiHom& g, const AntiHom& f) {
  require_composable(f.cod == g.dom);
  return {f.dom, g.cod, compose(g.vmap, f.vmap), compose(f.edge_rev, g.edge_rev)};
}
SetSystemAntiHom compose(const SetSystemAntiHom& g, const SetSystemAntiHom& f) {
  require_composable(f.cod == g.dom);
  return {f.dom, g.cod, compose(g.vmap, f.vmap)};
}

std::string describe(const Quiver& q) {
  return "quiver(v=" + std::to_string(q.vertices.size()) +
         ",e=" + std::to_string(q.edges.size()) + ")";
}
std::string describe(const SSHypergraph& h) {
  return "hypergraph(v=" + std::to_string(h.vertices.size()) +
         ",e=" + std::to_string(h.edges.size()) + ")";
}
std::string describe(const IncHypergraph& g) {
  return "incidence(v=" + std::to_string(g.vertices.size()) +
         ",e=" + std::to_string(g.edges.size()) +
         ",i=" + std::to_string(g.incidences.size()) + ")";
}
std::string describe(const Digraph& g) {
  return "digraph(v=" + std::to_string(g.vertices.size()) +
         ",a=" + std::to_string(g.arcs.size()) + ")";
}
std::string describe(const SetSystem& s) {
  return "setsystem(v=" + std::to_string(s.vertices.size()) +
         ",s=" + std::to_string(s.sets.size()) + ")";
}
std::string describe(const IncStructure& s) {
  return "incstructure(v=" + std::to_string(s.vertices.size()) +
         ",e=" + std::to_string(s.edges.size()) +
         ",f=" + std::to_string(s.flags.size()) + ")";
}

}  // namespace catgraph
