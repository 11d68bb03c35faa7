#include "catgraph/reflectors.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "catgraph/errors.hpp"
#include "catgraph/labels.hpp"

namespace catgraph {

CommaObject complete_object(Presentation pres, const std::vector<FinSet>& b_parts) {
  if (pres == Presentation::P1)
    throw KindError("complete_object covers the simple presentations only");
  // a_part placeholder: the structure carrier is computed from b_parts alone
  // for these presentations.
  FinSet carrier = structure_carrier(pres, FinSet(), b_parts);
  return CommaObject(pres, carrier, b_parts, FinMap::identity(carrier));
}

Reflection simplify(const CommaObject& x) {
  if (x.pres == Presentation::P1)
    throw KindError("simplify covers the simple presentations only");
  Factorization fac = image_factorization(x.f);
  CommaObject result(x.pres, fac.mid, x.b_parts, fac.mono);
  std::vector<FinMap> ids;
  for (const auto& b : x.b_parts) ids.push_back(FinMap::identity(b));
  CommaMorphism unit{x, result, fac.epi, ids};
  CommaObject complete = complete_object(x.pres, x.b_parts);
  std::map<std::string, std::string> emb;
  for (const auto& l : fac.mid) emb[l] = l;
  CommaMorphism embedding{result, complete,
                          FinMap(fac.mid, complete.a_part, std::move(emb)), ids};
  return {std::move(result), std::move(unit), std::move(embedding)};
}

CommaMorphism factor_through_simplification(const CommaMorphism& m) {
  if (!is_simple(m.cod))
    throw KindError("factor_through_simplification requires a simple target");
  Reflection r = simplify(m.dom);
  std::map<std::string, std::string> a;
  for (const auto& l : m.dom.a_part) {
    std::string mid = r.unit.phi(l);
    std::string value = m.phi(l);
    auto [it, inserted] = a.emplace(mid, value);
    if (!inserted && it->second != value)
      throw std::logic_error("factorization through the unit is not well defined");
  }
  CommaMorphism out{r.result, m.cod, FinMap(r.result.a_part, m.cod.a_part, std::move(a)),
                    m.psis};
  if (!validate(out).pass)
    throw std::logic_error("factored morphism fails its square");
  return out;
}

CommaMorphism simplify_morphism(const CommaMorphism& m) {
  Reflection target = simplify(m.cod);
  return factor_through_simplification(compose(target.unit, m));
}

CommaMorphism simplification_counit(const CommaObject& y) {
  if (!is_simple(y)) throw KindError("simplification_counit requires a simple object");
  return factor_through_simplification(identity_morphism(y));
}

Deletion del_ssys(const SetSystem& h) {
  std::vector<std::vector<std::string>> kept;
  for (const auto& members : h.sets)
    if (members.size() >= 1 && members.size() <= 2) kept.push_back(members);
  SimpleGraph result(SetSystem(h.vertices, std::move(kept)));
  SetSystemHom counit{result.setsystem(), h, FinMap::identity(h.vertices)};
  return {std::move(result), std::move(counit)};
}

SetSystemHom factor_through_del(const SetSystemHom& m) {
  SimpleGraph source(m.dom);  // throws KindError unless every member is small
  (void)source;
  Deletion d = del_ssys(m.cod);
  SetSystemHom out{m.dom, d.result.setsystem(), m.vmap};
  if (!validate(out).pass)
    throw std::logic_error("factored morphism drops out of the graph");
  return out;
}

SymClosure sym_closure(const Digraph& g) {
  auto arcs = g.arcs;
  for (const auto& [v, w] : g.arcs) arcs.emplace_back(w, v);
  SymDigraph result{Digraph(g.vertices, std::move(arcs))};
  DigraphHom unit{g, result.digraph(), FinMap::identity(g.vertices)};
  return {std::move(result), std::move(unit)};
}

SymInterior sym_interior(const Digraph& g) {
  std::vector<std::pair<std::string, std::string>> arcs;
  for (const auto& [v, w] : g.arcs)
    if (g.has_arc(w, v)) arcs.emplace_back(v, w);
  SymDigraph result{Digraph(g.vertices, std::move(arcs))};
  DigraphHom counit{result.digraph(), g, FinMap::identity(g.vertices)};
  return {std::move(result), std::move(counit)};
}

DigraphHom factor_through_closure(const DigraphHom& m) {
  SymDigraph target{m.cod};  // throws KindError unless symmetric
  (void)target;
  DigraphHom out{sym_closure(m.dom).result.digraph(), m.cod, m.vmap};
  if (!validate(out).pass)
    throw std::logic_error("closure factorization fails to preserve an arc");
  return out;
}

DigraphHom factor_through_interior(const DigraphHom& m) {
  SymDigraph source{m.dom};  // throws KindError unless symmetric
  (void)source;
  DigraphHom out{m.dom, sym_interior(m.cod).result.digraph(), m.vmap};
  if (!validate(out).pass)
    throw std::logic_error("interior factorization fails to preserve an arc");
  return out;
}

SymDigraph gra_to_symdigra(const SimpleGraph& g) {
  std::vector<std::pair<std::string, std::string>> arcs;
  for (const auto& members : g.setsystem().sets) {
    if (members.size() == 1) {
      arcs.emplace_back(members[0], members[0]);
    } else {
      arcs.emplace_back(members[0], members[1]);
      arcs.emplace_back(members[1], members[0]);
    }
  }
  return SymDigraph{Digraph(g.setsystem().vertices, std::move(arcs))};
}

SimpleGraph symdigra_to_gra(const SymDigraph& d) {
  std::vector<std::vector<std::string>> sets;
  for (const auto& [v, w] : d.digraph().arcs) {
    if (v == w)
      sets.push_back({v});
    else
      sets.push_back({v, w});
  }
  return SimpleGraph{SetSystem(d.digraph().vertices, std::move(sets))};
}

DigraphHom gra_hom_to_symdigra(const SetSystemHom& h) {
  return {gra_to_symdigra(SimpleGraph{h.dom}).digraph(),
          gra_to_symdigra(SimpleGraph{h.cod}).digraph(), h.vmap};
}

SetSystemHom symdigra_hom_to_gra(const DigraphHom& h) {
  return {symdigra_to_gra(SymDigraph{h.dom}).setsystem(),
          symdigra_to_gra(SymDigraph{h.cod}).setsystem(), h.vmap};
}

}  // namespace catgraph
