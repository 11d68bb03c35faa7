#include "catgraph/comma.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "catgraph/errors.hpp"
#include "catgraph/labels.hpp"

namespace catgraph {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void require_presentation(const CommaObject& x, Presentation p, const std::string& who) {
  if (x.pres != p)
    throw KindError(who + " expects a " + to_string(p) + " object, got " +
                    to_string(x.pres));
}

}  // namespace

std::string to_string(Presentation p) {
  switch (p) {
    case Presentation::Q1: return "Q1";
    case Presentation::H1: return "H1";
    case Presentation::R1: return "R1";
    case Presentation::P1: return "P1";
  }
  return "?";
}

FinSet structure_carrier(Presentation pres, const FinSet& a_part,
                         const std::vector<FinSet>& b_parts) {
  switch (pres) {
    case Presentation::Q1:
      return product_set(b_parts.at(0), b_parts.at(0)).carrier;
    case Presentation::H1:
      return power_set(b_parts.at(0));
    case Presentation::R1:
      return product_set(b_parts.at(0), b_parts.at(1)).carrier;
    case Presentation::P1:
      return power_set(a_part);
  }
  throw std::logic_error("unreachable");
}

CommaObject::CommaObject(Presentation pres_, FinSet a_part_, std::vector<FinSet> b_parts_,
                         FinMap f_)
    : pres(pres_), a_part(std::move(a_part_)), b_parts(std::move(b_parts_)), f(std::move(f_)) {
  std::size_t expected = pres == Presentation::R1 ? 2 : 1;
  require(b_parts.size() == expected, "wrong number of plain carriers");
  const FinSet& expected_dom = pres == Presentation::P1 ? b_parts[0] : a_part;
  require(f.dom() == expected_dom, "structure map domain mismatch");
  require(f.cod() == structure_carrier(pres, a_part, b_parts),
          "structure map codomain mismatch");
}

bool is_simple(const CommaObject& x) {
  MapClass c = classify_map(x.f);
  return x.pres == Presentation::P1 ? c.surjective : c.injective;
}

bool is_cosimple(const CommaObject& x) {
  MapClass c = classify_map(x.f);
  return x.pres == Presentation::P1 ? c.injective : c.surjective;
}

std::string describe(const CommaObject& x) {
  std::string out = to_string(x.pres) + "(a=" + std::to_string(x.a_part.size());
  for (const auto& b : x.b_parts) out += ",b=" + std::to_string(b.size());
  return out + ")";
}

LawReport validate(const CommaMorphism& m) {
  const char* law = "comma-morphism";
  if (m.dom.pres != m.cod.pres)
    return LawReport::failed(law, "", "presentations differ");
  Presentation p = m.dom.pres;
  std::size_t expected = p == Presentation::R1 ? 2 : 1;
  if (m.psis.size() != expected)
    return LawReport::failed(law, "", "wrong number of plain components");

  if (p == Presentation::P1) {
    if (!(m.phi.dom() == m.dom.a_part) || !(m.phi.cod() == m.cod.a_part))
      return LawReport::failed(law, "", "vertex component carriers do not match");
    if (!(m.psis[0].dom() == m.cod.b_parts[0]) || !(m.psis[0].cod() == m.dom.b_parts[0]))
      return LawReport::failed(law, "", "reversed edge component carriers do not match");
    for (const auto& e : m.cod.b_parts[0]) {
      std::string expect =
          set_label(sorted_preimage(m.phi, split_set_label(m.cod.f(e))));
      if (m.dom.f(m.psis[0](e)) != expect)
        return LawReport::failed(law, "", "contravariant square fails at edge " + e);
    }
    return LawReport::passed(law, "");
  }

  if (!(m.phi.dom() == m.dom.a_part) || !(m.phi.cod() == m.cod.a_part))
    return LawReport::failed(law, "", "structured component carriers do not match");
  for (std::size_t i = 0; i < m.psis.size(); ++i) {
    if (!(m.psis[i].dom() == m.dom.b_parts[i]) || !(m.psis[i].cod() == m.cod.b_parts[i]))
      return LawReport::failed(law, "", "plain component carriers do not match");
  }

  for (const auto& a : m.dom.a_part) {
    std::string actual = m.cod.f(m.phi(a));
    std::string expect;
    switch (p) {
      case Presentation::Q1: {
        auto [v, w] = split_pair_label(m.dom.f(a));
        expect = pair_label(m.psis[0](v), m.psis[0](w));
        break;
      }
      case Presentation::H1:
        expect = set_label(sorted_image(m.psis[0], split_set_label(m.dom.f(a))));
        break;
      case Presentation::R1: {
        auto [v, e] = split_pair_label(m.dom.f(a));
        expect = pair_label(m.psis[0](v), m.psis[1](e));
        break;
      }
      default:
        break;
    }
    if (actual != expect)
      return LawReport::failed(law, "", "structure square fails at " + a);
  }
  return LawReport::passed(law, "");
}

CommaMorphism identity_morphism(const CommaObject& x) {
  std::vector<FinMap> psis;
  for (const auto& b : x.b_parts) psis.push_back(FinMap::identity(b));
  return {x, x, FinMap::identity(x.a_part), std::move(psis)};
}

CommaMorphism compose(const CommaMorphism& g, const CommaMorphism& f) {
  if (!(f.cod == g.dom))
    throw std::invalid_argument("composition mismatch: objects do not line up");
  std::vector<FinMap> psis;
  if (f.dom.pres == Presentation::P1) {
    psis.push_back(compose(f.psis[0], g.psis[0]));
  } else {
    for (std::size_t i = 0; i < f.psis.size(); ++i)
      psis.push_back(compose(g.psis[i], f.psis[i]));
  }
  CommaMorphism out{f.dom, g.cod, compose(g.phi, f.phi), std::move(psis)};
  if (!validate(out).pass)
    throw std::logic_error("composite morphism fails its square");
  return out;
}

bool is_isomorphism(const CommaMorphism& m) {
  if (!validate(m).pass) return false;
  if (!is_bijective(m.phi)) return false;
  for (const auto& psi : m.psis)
    if (!is_bijective(psi)) return false;
  std::vector<FinMap> psis;
  for (const auto& psi : m.psis) psis.push_back(inverse(psi));
  CommaMorphism inv{m.cod, m.dom, inverse(m.phi), std::move(psis)};
  return validate(inv).pass;
}

CommaObject to_comma(const Quiver& q) {
  FinSet carrier = product_set(q.vertices, q.vertices).carrier;
  std::map<std::string, std::string> a;
  for (const auto& e : q.edges) a[e] = pair_label(q.src(e), q.tgt(e));
  return CommaObject(Presentation::Q1, q.edges, {q.vertices},
                     FinMap(q.edges, carrier, std::move(a)));
}

CommaObject to_comma(const SSHypergraph& h) {
  return CommaObject(Presentation::H1, h.edges, {h.vertices}, h.incidence);
}

CommaObject to_comma(const IncHypergraph& g) {
  FinSet carrier = product_set(g.vertices, g.edges).carrier;
  std::map<std::string, std::string> a;
  for (const auto& i : g.incidences) a[i] = pair_label(g.att_v(i), g.att_e(i));
  return CommaObject(Presentation::R1, g.incidences, {g.vertices, g.edges},
                     FinMap(g.incidences, carrier, std::move(a)));
}

CommaObject to_comma_anti(const SSHypergraph& h) {
  return CommaObject(Presentation::P1, h.vertices, {h.edges}, h.incidence);
}

Quiver quiver_from_comma(const CommaObject& x) {
  require_presentation(x, Presentation::Q1, "quiver_from_comma");
  std::map<std::string, std::string> src, tgt;
  for (const auto& e : x.a_part) {
    auto [v, w] = split_pair_label(x.f(e));
    src[e] = v;
    tgt[e] = w;
  }
  return Quiver(x.b_parts[0], x.a_part, FinMap(x.a_part, x.b_parts[0], std::move(src)),
                FinMap(x.a_part, x.b_parts[0], std::move(tgt)));
}

SSHypergraph hypergraph_from_comma(const CommaObject& x) {
  require_presentation(x, Presentation::H1, "hypergraph_from_comma");
  return SSHypergraph(x.b_parts[0], x.a_part, x.f);
}

IncHypergraph incidence_from_comma(const CommaObject& x) {
  require_presentation(x, Presentation::R1, "incidence_from_comma");
  std::map<std::string, std::string> av, ae;
  for (const auto& i : x.a_part) {
    auto [v, e] = split_pair_label(x.f(i));
    av[i] = v;
    ae[i] = e;
  }
  return IncHypergraph(x.b_parts[0], x.b_parts[1], x.a_part,
                       FinMap(x.a_part, x.b_parts[0], std::move(av)),
                       FinMap(x.a_part, x.b_parts[1], std::move(ae)));
}

SSHypergraph hypergraph_from_comma_anti(const CommaObject& x) {
  require_presentation(x, Presentation::P1, "hypergraph_from_comma_anti");
  return SSHypergraph(x.a_part, x.b_parts[0], x.f);
}

CommaMorphism to_comma(const QuiverHom& h) {
  return {to_comma(h.dom), to_comma(h.cod), h.emap, {h.vmap}};
}

CommaMorphism to_comma(const HypergraphHom& h) {
  return {to_comma(h.dom), to_comma(h.cod), h.emap, {h.vmap}};
}

CommaMorphism to_comma(const IncHom& h) {
  return {to_comma(h.dom), to_comma(h.cod), h.imap, {h.vmap, h.emap}};
}

CommaMorphism to_comma_anti(const AntiHom& h) {
  return {to_comma_anti(h.dom), to_comma_anti(h.cod), h.vmap, {h.edge_rev}};
}

QuiverHom quiver_hom_from_comma(const CommaMorphism& m) {
  return {quiver_from_comma(m.dom), quiver_from_comma(m.cod), m.psis[0], m.phi};
}

HypergraphHom hypergraph_hom_from_comma(const CommaMorphism& m) {
  return {hypergraph_from_comma(m.dom), hypergraph_from_comma(m.cod), m.psis[0], m.phi};
}

IncHom inc_hom_from_comma(const CommaMorphism& m) {
  return {incidence_from_comma(m.dom), incidence_from_comma(m.cod), m.psis[0], m.psis[1],
          m.phi};
}

AntiHom anti_hom_from_comma(const CommaMorphism& m) {
  return {hypergraph_from_comma_anti(m.dom), hypergraph_from_comma_anti(m.cod), m.phi,
          m.psis[0]};
}

namespace {

void require_simple(const CommaObject& x, const std::string& who) {
  if (!is_simple(x)) throw KindError(who + " requires a simple object");
}

void require_cosimple(const CommaObject& x, const std::string& who) {
  if (!is_cosimple(x)) throw KindError(who + " requires a cosimple object");
}

}  // namespace

Digraph digraph_space_of(const CommaObject& x) {
  require_presentation(x, Presentation::Q1, "digraph_space_of");
  require_simple(x, "digraph_space_of");
  std::vector<std::pair<std::string, std::string>> arcs;
  for (const auto& e : x.a_part) arcs.push_back(split_pair_label(x.f(e)));
  return Digraph(x.b_parts[0], std::move(arcs));
}

SetSystem setsystem_space_of(const CommaObject& x) {
  require_presentation(x, Presentation::H1, "setsystem_space_of");
  require_simple(x, "setsystem_space_of");
  std::vector<std::vector<std::string>> sets;
  for (const auto& e : x.a_part) sets.push_back(split_set_label(x.f(e)));
  return SetSystem(x.b_parts[0], std::move(sets));
}

IncStructure incstructure_space_of(const CommaObject& x) {
  require_presentation(x, Presentation::R1, "incstructure_space_of");
  require_simple(x, "incstructure_space_of");
  std::vector<std::pair<std::string, std::string>> flags;
  for (const auto& i : x.a_part) flags.push_back(split_pair_label(x.f(i)));
  return IncStructure(x.b_parts[0], x.b_parts[1], std::move(flags));
}

SetSystem anti_cospace_of(const CommaObject& x) {
  require_presentation(x, Presentation::P1, "anti_cospace_of");
  require_cosimple(x, "anti_cospace_of");
  std::vector<std::vector<std::string>> sets;
  for (const auto& e : x.b_parts[0]) sets.push_back(split_set_label(x.f(e)));
  return SetSystem(x.a_part, std::move(sets));
}

CommaObject comma_of(const Digraph& g) {
  FinSet carrier = product_set(g.vertices, g.vertices).carrier;
  std::vector<std::string> labels;
  for (const auto& [v, w] : g.arcs) labels.push_back(pair_label(v, w));
  FinSet a(std::move(labels));
  return CommaObject(Presentation::Q1, a, {g.vertices}, FinMap::inclusion(a, carrier));
}

CommaObject comma_of(const SetSystem& s) {
  FinSet carrier = power_set(s.vertices);
  std::vector<std::string> labels;
  for (const auto& members : s.sets) labels.push_back(set_label(members));
  FinSet a(std::move(labels));
  return CommaObject(Presentation::H1, a, {s.vertices}, FinMap::inclusion(a, carrier));
}

CommaObject comma_of(const IncStructure& s) {
  FinSet carrier = product_set(s.vertices, s.edges).carrier;
  std::vector<std::string> labels;
  for (const auto& [v, e] : s.flags) labels.push_back(pair_label(v, e));
  FinSet a(std::move(labels));
  return CommaObject(Presentation::R1, a, {s.vertices, s.edges},
                     FinMap::inclusion(a, carrier));
}

CommaObject anti_cocomma_of(const SetSystem& s) {
  FinSet carrier = power_set(s.vertices);
  std::vector<std::string> labels;
  for (const auto& members : s.sets) labels.push_back(set_label(members));
  FinSet b(std::move(labels));
  return CommaObject(Presentation::P1, s.vertices, {b}, FinMap::inclusion(b, carrier));
}

DigraphHom digraph_space_hom(const CommaMorphism& m) {
  return {digraph_space_of(m.dom), digraph_space_of(m.cod), m.psis[0]};
}

SetSystemHom setsystem_space_hom(const CommaMorphism& m) {
  return {setsystem_space_of(m.dom), setsystem_space_of(m.cod), m.psis[0]};
}

IncStructureHom incstructure_space_hom(const CommaMorphism& m) {
  return {incstructure_space_of(m.dom), incstructure_space_of(m.cod), m.psis[0], m.psis[1]};
}

SetSystemAntiHom anti_cospace_hom(const CommaMorphism& m) {
  return {anti_cospace_of(m.dom), anti_cospace_of(m.cod), m.phi};
}

CommaMorphism comma_of(const DigraphHom& h) {
  CommaObject dom = comma_of(h.dom), cod = comma_of(h.cod);
  std::map<std::string, std::string> a;
  for (const auto& l : dom.a_part) {
    auto [v, w] = split_pair_label(l);
    a[l] = pair_label(h.vmap(v), h.vmap(w));
  }
  return {dom, cod, FinMap(dom.a_part, cod.a_part, std::move(a)), {h.vmap}};
}

CommaMorphism comma_of(const SetSystemHom& h) {
  CommaObject dom = comma_of(h.dom), cod = comma_of(h.cod);
  std::map<std::string, std::string> a;
  for (const auto& l : dom.a_part)
    a[l] = set_label(sorted_image(h.vmap, split_set_label(l)));
  return {dom, cod, FinMap(dom.a_part, cod.a_part, std::move(a)), {h.vmap}};
}

CommaMorphism comma_of(const IncStructureHom& h) {
  CommaObject dom = comma_of(h.dom), cod = comma_of(h.cod);
  std::map<std::string, std::string> a;
  for (const auto& l : dom.a_part) {
    auto [v, e] = split_pair_label(l);
    a[l] = pair_label(h.vmap(v), h.emap(e));
  }
  return {dom, cod, FinMap(dom.a_part, cod.a_part, std::move(a)), {h.vmap, h.emap}};
}

CommaMorphism anti_cocomma_of(const SetSystemAntiHom& h) {
  CommaObject dom = anti_cocomma_of(h.dom), cod = anti_cocomma_of(h.cod);
  std::map<std::string, std::string> rev;
  for (const auto& l : cod.b_parts[0])
    rev[l] = set_label(sorted_preimage(h.vmap, split_set_label(l)));
  return {dom, cod, h.vmap, {FinMap(cod.b_parts[0], dom.b_parts[0], std::move(rev))}};
}

CommaMorphism comma_space_iso(const CommaObject& x) {
  if (x.pres == Presentation::P1)
    throw KindError("comma_space_iso covers the simple presentations only");
  require_simple(x, "comma_space_iso");
  CommaObject target = [&] {
    switch (x.pres) {
      case Presentation::Q1: return comma_of(digraph_space_of(x));
      case Presentation::H1: return comma_of(setsystem_space_of(x));
      default: return comma_of(incstructure_space_of(x));
    }
  }();
  std::map<std::string, std::string> a;
  for (const auto& l : x.a_part) a[l] = x.f(l);
  std::vector<FinMap> psis;
  for (const auto& b : x.b_parts) psis.push_back(FinMap::identity(b));
  return {x, target, FinMap(x.a_part, target.a_part, std::move(a)), std::move(psis)};
}

}  // namespace catgraph
