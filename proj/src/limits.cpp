#include "catgraph/limits.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "catgraph/errors.hpp"
#include "catgraph/labels.hpp"
#include "catgraph/reflectors.hpp"

namespace catgraph {

namespace {

void require_parallel_valid(bool parallel, bool valid) {
  if (!parallel)
    throw std::invalid_argument("the two morphisms are not a parallel pair");
  if (!valid)
    throw std::invalid_argument("equalizer/coequalizer of an invalid morphism");
}

FinSet tagged_union(const FinSet& a, const FinSet& b) {
  std::vector<std::string> labels;
  for (const auto& l : a) labels.push_back(tag_label(0, l));
  for (const auto& l : b) labels.push_back(tag_label(1, l));
  return FinSet(std::move(labels));
}

FinMap tag_map(const FinSet& src, const FinSet& target, int side) {
  std::map<std::string, std::string> a;
  for (const auto& l : src) a[l] = tag_label(side, l);
  return FinMap(src, target, std::move(a));
}

// Applies a stored assignment while asserting that members of one quotient
// class never disagree.
class ClassAssignment {
public:
  void put(const std::string& cls, const std::string& value) {
    auto [it, inserted] = a_.emplace(cls, value);
    if (!inserted && it->second != value)
      throw std::logic_error("quotient does not respect the structure maps");
  }
  std::map<std::string, std::string> take() { return std::move(a_); }

private:
  std::map<std::string, std::string> a_;
};

}  // namespace

ProductOf<Quiver, QuiverHom> product(const Quiver& x, const Quiver& y) {
  ProductSet pv = product_set(x.vertices, y.vertices);
  ProductSet pe = product_set(x.edges, y.edges);
  std::map<std::string, std::string> src_a, tgt_a;
  for (const auto& l : pe.carrier) {
    auto [e1, e2] = split_pair_label(l);
    src_a[l] = pair_label(x.src(e1), y.src(e2));
    tgt_a[l] = pair_label(x.tgt(e1), y.tgt(e2));
  }
  Quiver obj(pv.carrier, pe.carrier, FinMap(pe.carrier, pv.carrier, std::move(src_a)),
             FinMap(pe.carrier, pv.carrier, std::move(tgt_a)));
  return {obj, {obj, x, pv.proj1, pe.proj1}, {obj, y, pv.proj2, pe.proj2}};
}

ProductOf<SSHypergraph, HypergraphHom> product(const SSHypergraph& x,
                                               const SSHypergraph& y) {
  ProductSet pv = product_set(x.vertices, y.vertices);
  PowerSet subsets = power_set_with_members(pv.carrier);

  // An edge of the product is (e1, e2) plus a subset of the vertex product
  // whose two projections are exactly the member sets of e1 and e2.
  std::vector<std::string> ids;
  std::map<std::string, std::string> inc_a, emap1, emap2;
  for (const auto& e1 : x.edges) {
    std::vector<std::string> m1 = x.edge_members(e1);
    for (const auto& e2 : y.edges) {
      std::vector<std::string> m2 = y.edge_members(e2);
      for (std::size_t i = 0; i < subsets.carrier.size(); ++i) {
        const auto& s = subsets.members[i];
        if (sorted_image(pv.proj1, s) != m1) continue;
        if (sorted_image(pv.proj2, s) != m2) continue;
        std::string id = pair_label(pair_label(e1, e2), subsets.carrier.labels()[i]);
        ids.push_back(id);
        inc_a[id] = subsets.carrier.labels()[i];
        emap1[id] = e1;
        emap2[id] = e2;
      }
    }
  }
  FinSet edges(std::move(ids));
  SSHypergraph obj(pv.carrier, edges,
                   FinMap(edges, power_set(pv.carrier), std::move(inc_a)));
  return {obj,
          {obj, x, pv.proj1, FinMap(edges, x.edges, std::move(emap1))},
          {obj, y, pv.proj2, FinMap(edges, y.edges, std::move(emap2))}};
}

ProductOf<IncHypergraph, IncHom> product(const IncHypergraph& x, const IncHypergraph& y) {
  ProductSet pv = product_set(x.vertices, y.vertices);
  ProductSet pe = product_set(x.edges, y.edges);
  ProductSet pi = product_set(x.incidences, y.incidences);
  std::map<std::string, std::string> av, ae;
  for (const auto& l : pi.carrier) {
    auto [i1, i2] = split_pair_label(l);
    av[l] = pair_label(x.att_v(i1), y.att_v(i2));
    ae[l] = pair_label(x.att_e(i1), y.att_e(i2));
  }
  IncHypergraph obj(pv.carrier, pe.carrier, pi.carrier,
                    FinMap(pi.carrier, pv.carrier, std::move(av)),
                    FinMap(pi.carrier, pe.carrier, std::move(ae)));
  return {obj,
          {obj, x, pv.proj1, pe.proj1, pi.proj1},
          {obj, y, pv.proj2, pe.proj2, pi.proj2}};
}

EqualizerOf<Quiver, QuiverHom> equalizer(const QuiverHom& f, const QuiverHom& g) {
  require_parallel_valid(f.dom == g.dom && f.cod == g.cod,
                         is_valid(f) && is_valid(g));
  std::vector<std::string> vs, es;
  for (const auto& v : f.dom.vertices)
    if (f.vmap(v) == g.vmap(v)) vs.push_back(v);
  for (const auto& e : f.dom.edges)
    if (f.emap(e) == g.emap(e)) es.push_back(e);
  FinSet ev(std::move(vs)), ee(std::move(es));
  std::map<std::string, std::string> src_a, tgt_a;
  for (const auto& e : ee) {
    src_a[e] = f.dom.src(e);
    tgt_a[e] = f.dom.tgt(e);
  }
  Quiver obj(ev, ee, FinMap(ee, ev, std::move(src_a)), FinMap(ee, ev, std::move(tgt_a)));
  return {obj, {obj, f.dom, FinMap::inclusion(ev, f.dom.vertices),
                FinMap::inclusion(ee, f.dom.edges)}};
}

EqualizerOf<SSHypergraph, HypergraphHom> equalizer(const HypergraphHom& f,
                                                   const HypergraphHom& g) {
  require_parallel_valid(f.dom == g.dom && f.cod == g.cod,
                         is_valid(f) && is_valid(g));
  std::vector<std::string> vs;
  for (const auto& v : f.dom.vertices)
    if (f.vmap(v) == g.vmap(v)) vs.push_back(v);
  FinSet ev(std::move(vs));
  std::vector<std::string> es;
  std::map<std::string, std::string> inc_a;
  for (const auto& e : f.dom.edges) {
    if (f.emap(e) != g.emap(e)) continue;
    std::vector<std::string> members = f.dom.edge_members(e);
    bool inside = true;
    for (const auto& v : members) inside = inside && ev.contains(v);
    if (!inside) continue;  // the member set must survive into the equalizer
    es.push_back(e);
    inc_a[e] = set_label(members);
  }
  FinSet ee(std::move(es));
  SSHypergraph obj(ev, ee, FinMap(ee, power_set(ev), std::move(inc_a)));
  return {obj, {obj, f.dom, FinMap::inclusion(ev, f.dom.vertices),
                FinMap::inclusion(ee, f.dom.edges)}};
}

EqualizerOf<IncHypergraph, IncHom> equalizer(const IncHom& f, const IncHom& g) {
  require_parallel_valid(f.dom == g.dom && f.cod == g.cod,
                         is_valid(f) && is_valid(g));
  std::vector<std::string> vs, es, is;
  for (const auto& v : f.dom.vertices)
    if (f.vmap(v) == g.vmap(v)) vs.push_back(v);
  for (const auto& e : f.dom.edges)
    if (f.emap(e) == g.emap(e)) es.push_back(e);
  for (const auto& i : f.dom.incidences)
    if (f.imap(i) == g.imap(i)) is.push_back(i);
  FinSet ev(std::move(vs)), ee(std::move(es)), ei(std::move(is));
  std::map<std::string, std::string> av, ae;
  for (const auto& i : ei) {
    av[i] = f.dom.att_v(i);
    ae[i] = f.dom.att_e(i);
  }
  IncHypergraph obj(ev, ee, ei, FinMap(ei, ev, std::move(av)),
                    FinMap(ei, ee, std::move(ae)));
  return {obj, {obj, f.dom, FinMap::inclusion(ev, f.dom.vertices),
                FinMap::inclusion(ee, f.dom.edges), FinMap::inclusion(ei, f.dom.incidences)}};
}

CoproductOf<Quiver, QuiverHom> coproduct(const Quiver& x, const Quiver& y) {
  FinSet cv = tagged_union(x.vertices, y.vertices);
  FinSet ce = tagged_union(x.edges, y.edges);
  std::map<std::string, std::string> src_a, tgt_a;
  for (const auto& e : x.edges) {
    src_a[tag_label(0, e)] = tag_label(0, x.src(e));
    tgt_a[tag_label(0, e)] = tag_label(0, x.tgt(e));
  }
  for (const auto& e : y.edges) {
    src_a[tag_label(1, e)] = tag_label(1, y.src(e));
    tgt_a[tag_label(1, e)] = tag_label(1, y.tgt(e));
  }
  Quiver obj(cv, ce, FinMap(ce, cv, std::move(src_a)), FinMap(ce, cv, std::move(tgt_a)));
  return {obj,
          {x, obj, tag_map(x.vertices, cv, 0), tag_map(x.edges, ce, 0)},
          {y, obj, tag_map(y.vertices, cv, 1), tag_map(y.edges, ce, 1)}};
}

CoproductOf<SSHypergraph, HypergraphHom> coproduct(const SSHypergraph& x,
                                                   const SSHypergraph& y) {
  FinSet cv = tagged_union(x.vertices, y.vertices);
  FinSet ce = tagged_union(x.edges, y.edges);
  FinSet carrier = power_set(cv);
  std::map<std::string, std::string> inc_a;
  for (int side = 0; side < 2; ++side) {
    const SSHypergraph& h = side == 0 ? x : y;
    for (const auto& e : h.edges) {
      std::vector<std::string> members;
      for (const auto& v : h.edge_members(e)) members.push_back(tag_label(side, v));
      inc_a[tag_label(side, e)] = set_label(members);
    }
  }
  SSHypergraph obj(cv, ce, FinMap(ce, carrier, std::move(inc_a)));
  return {obj,
          {x, obj, tag_map(x.vertices, cv, 0), tag_map(x.edges, ce, 0)},
          {y, obj, tag_map(y.vertices, cv, 1), tag_map(y.edges, ce, 1)}};
}

CoproductOf<IncHypergraph, IncHom> coproduct(const IncHypergraph& x,
                                             const IncHypergraph& y) {
  FinSet cv = tagged_union(x.vertices, y.vertices);
  FinSet ce = tagged_union(x.edges, y.edges);
  FinSet ci = tagged_union(x.incidences, y.incidences);
  std::map<std::string, std::string> av, ae;
  for (int side = 0; side < 2; ++side) {
    const IncHypergraph& h = side == 0 ? x : y;
    for (const auto& i : h.incidences) {
      av[tag_label(side, i)] = tag_label(side, h.att_v(i));
      ae[tag_label(side, i)] = tag_label(side, h.att_e(i));
    }
  }
  IncHypergraph obj(cv, ce, ci, FinMap(ci, cv, std::move(av)),
                    FinMap(ci, ce, std::move(ae)));
  return {obj,
          {x, obj, tag_map(x.vertices, cv, 0), tag_map(x.edges, ce, 0),
           tag_map(x.incidences, ci, 0)},
          {y, obj, tag_map(y.vertices, cv, 1), tag_map(y.edges, ce, 1),
           tag_map(y.incidences, ci, 1)}};
}

CoequalizerOf<Quiver, QuiverHom> coequalizer(const QuiverHom& f, const QuiverHom& g) {
  require_parallel_valid(f.dom == g.dom && f.cod == g.cod,
                         is_valid(f) && is_valid(g));
  Quotient qv = set_coequalizer(f.vmap, g.vmap);
  Quotient qe = set_coequalizer(f.emap, g.emap);
  ClassAssignment src_a, tgt_a;
  for (const auto& e : f.cod.edges) {
    src_a.put(qe.projection(e), qv.projection(f.cod.src(e)));
    tgt_a.put(qe.projection(e), qv.projection(f.cod.tgt(e)));
  }
  Quiver obj(qv.classes, qe.classes, FinMap(qe.classes, qv.classes, src_a.take()),
             FinMap(qe.classes, qv.classes, tgt_a.take()));
  return {obj, {f.cod, obj, qv.projection, qe.projection}};
}

CoequalizerOf<SSHypergraph, HypergraphHom> coequalizer(const HypergraphHom& f,
                                                       const HypergraphHom& g) {
  require_parallel_valid(f.dom == g.dom && f.cod == g.cod,
                         is_valid(f) && is_valid(g));
  Quotient qv = set_coequalizer(f.vmap, g.vmap);
  Quotient qe = set_coequalizer(f.emap, g.emap);
  ClassAssignment inc_a;
  for (const auto& e : f.cod.edges) {
    inc_a.put(qe.projection(e),
              set_label(sorted_image(qv.projection, f.cod.edge_members(e))));
  }
  SSHypergraph obj(qv.classes, qe.classes,
                   FinMap(qe.classes, power_set(qv.classes), inc_a.take()));
  return {obj, {f.cod, obj, qv.projection, qe.projection}};
}

CoequalizerOf<IncHypergraph, IncHom> coequalizer(const IncHom& f, const IncHom& g) {
  require_parallel_valid(f.dom == g.dom && f.cod == g.cod,
                         is_valid(f) && is_valid(g));
  Quotient qv = set_coequalizer(f.vmap, g.vmap);
  Quotient qe = set_coequalizer(f.emap, g.emap);
  Quotient qi = set_coequalizer(f.imap, g.imap);
  ClassAssignment av, ae;
  for (const auto& i : f.cod.incidences) {
    av.put(qi.projection(i), qv.projection(f.cod.att_v(i)));
    ae.put(qi.projection(i), qe.projection(f.cod.att_e(i)));
  }
  IncHypergraph obj(qv.classes, qe.classes, qi.classes,
                    FinMap(qi.classes, qv.classes, av.take()),
                    FinMap(qi.classes, qe.classes, ae.take()));
  return {obj, {f.cod, obj, qv.projection, qe.projection, qi.projection}};
}

ProductOf<Digraph, DigraphHom> simple_product(const Digraph& x, const Digraph& y) {
  Quiver qx = quiver_from_comma(comma_of(x));
  Quiver qy = quiver_from_comma(comma_of(y));
  auto qp = product(qx, qy);
  Digraph obj = digraph_space_of(simplify(to_comma(qp.object)).result);
  ProductSet pv = product_set(x.vertices, y.vertices);
  return {obj, {obj, x, pv.proj1}, {obj, y, pv.proj2}};
}

ProductOf<SetSystem, SetSystemHom> simple_product(const SetSystem& x, const SetSystem& y) {
  SSHypergraph hx = hypergraph_from_comma(comma_of(x));
  SSHypergraph hy = hypergraph_from_comma(comma_of(y));
  auto hp = product(hx, hy);
  SetSystem obj = setsystem_space_of(simplify(to_comma(hp.object)).result);
  ProductSet pv = product_set(x.vertices, y.vertices);
  return {obj, {obj, x, pv.proj1}, {obj, y, pv.proj2}};
}

ProductOf<IncStructure, IncStructureHom> simple_product(const IncStructure& x,
                                                        const IncStructure& y) {
  IncHypergraph rx = incidence_from_comma(comma_of(x));
  IncHypergraph ry = incidence_from_comma(comma_of(y));
  auto rp = product(rx, ry);
  IncStructure obj = incstructure_space_of(simplify(to_comma(rp.object)).result);
  ProductSet pv = product_set(x.vertices, y.vertices);
  ProductSet pe = product_set(x.edges, y.edges);
  return {obj, {obj, x, pv.proj1, pe.proj1}, {obj, y, pv.proj2, pe.proj2}};
}

ProductOf<SimpleGraph, SetSystemHom> simple_product(const SimpleGraph& x,
                                                    const SimpleGraph& y) {
  Digraph dx = gra_to_symdigra(x).digraph();
  Digraph dy = gra_to_symdigra(y).digraph();
  auto dp = simple_product(dx, dy);
  SimpleGraph obj = symdigra_to_gra(SymDigraph{dp.object});
  return {obj,
          {obj.setsystem(), x.setsystem(), dp.proj1.vmap},
          {obj.setsystem(), y.setsystem(), dp.proj2.vmap}};
}

EqualizerOf<Digraph, DigraphHom> simple_equalizer(const DigraphHom& f,
                                                  const DigraphHom& g) {
  require_parallel_valid(f.dom == g.dom && f.cod == g.cod,
                         is_valid(f) && is_valid(g));
  auto qe = equalizer(quiver_hom_from_comma(comma_of(f)),
                      quiver_hom_from_comma(comma_of(g)));
  Digraph obj = digraph_space_of(simplify(to_comma(qe.object)).result);
  return {obj, {obj, f.dom, FinMap::inclusion(obj.vertices, f.dom.vertices)}};
}

EqualizerOf<SetSystem, SetSystemHom> simple_equalizer(const SetSystemHom& f,
                                                      const SetSystemHom& g) {
  require_parallel_valid(f.dom == g.dom && f.cod == g.cod,
                         is_valid(f) && is_valid(g));
  auto he = equalizer(hypergraph_hom_from_comma(comma_of(f)),
                      hypergraph_hom_from_comma(comma_of(g)));
  SetSystem obj = setsystem_space_of(simplify(to_comma(he.object)).result);
  return {obj, {obj, f.dom, FinMap::inclusion(obj.vertices, f.dom.vertices)}};
}

EqualizerOf<IncStructure, IncStructureHom> simple_equalizer(const IncStructureHom& f,
                                                            const IncStructureHom& g) {
  require_parallel_valid(f.dom == g.dom && f.cod == g.cod,
                         is_valid(f) && is_valid(g));
  auto re = equalizer(inc_hom_from_comma(comma_of(f)), inc_hom_from_comma(comma_of(g)));
  IncStructure obj = incstructure_space_of(simplify(to_comma(re.object)).result);
  return {obj, {obj, f.dom, FinMap::inclusion(obj.vertices, f.dom.vertices),
                FinMap::inclusion(obj.edges, f.dom.edges)}};
}

}  // namespace catgraph
