#pragma once

#include "catgraph/comma.hpp"
#include "catgraph/graphs.hpp"

namespace catgraph {

template <class Obj, class Hom>
struct ProductOf {
  Obj object;
  Hom proj1;
  Hom proj2;
};

template <class Obj, class Hom>
struct EqualizerOf {
  Obj object;
  Hom include;
};

template <class Obj, class Hom>
struct CoproductOf {
  Obj object;
  Hom inj1;
  Hom inj2;
};

template <class Obj, class Hom>
struct CoequalizerOf {
  Obj object;
  Hom project;
};

// Limits and colimits in the three parent categories. Quiver and incidence
// (co)limits are componentwise. Hypergraph products are not componentwise on
// edges: an edge of the product is a pair of edges together with a subset of
// the vertex product projecting exactly onto the two member sets.
ProductOf<Quiver, QuiverHom> product(const Quiver& x, const Quiver& y);
ProductOf<SSHypergraph, HypergraphHom> product(const SSHypergraph& x, const SSHypergraph& y);
ProductOf<IncHypergraph, IncHom> product(const IncHypergraph& x, const IncHypergraph& y);

EqualizerOf<Quiver, QuiverHom> equalizer(const QuiverHom& f, const QuiverHom& g);
EqualizerOf<SSHypergraph, HypergraphHom> equalizer(const HypergraphHom& f,
                                                   const HypergraphHom& g);
EqualizerOf<IncHypergraph, IncHom> equalizer(const IncHom& f, const IncHom& g);

// Carriers are tagged disjoint unions ("0:" and "1:" prefixes).
CoproductOf<Quiver, QuiverHom> coproduct(const Quiver& x, const Quiver& y);
CoproductOf<SSHypergraph, HypergraphHom> coproduct(const SSHypergraph& x,
                                                   const SSHypergraph& y);
CoproductOf<IncHypergraph, IncHom> coproduct(const IncHypergraph& x, const IncHypergraph& y);

// Quotients of the shared codomain; classes are named by their least member.
CoequalizerOf<Quiver, QuiverHom> coequalizer(const QuiverHom& f, const QuiverHom& g);
CoequalizerOf<SSHypergraph, HypergraphHom> coequalizer(const HypergraphHom& f,
                                                       const HypergraphHom& g);
CoequalizerOf<IncHypergraph, IncHom> coequalizer(const IncHom& f, const IncHom& g);

// Limits in the simple categories by the reflective recipe: include into the
// parent presentation, take the limit there, simplify, and read the space
// back off. Graph limits route through the symmetric-digraph translation.
ProductOf<Digraph, DigraphHom> simple_product(const Digraph& x, const Digraph& y);
ProductOf<SetSystem, SetSystemHom> simple_product(const SetSystem& x, const SetSystem& y);
ProductOf<IncStructure, IncStructureHom> simple_product(const IncStructure& x,
                                                        const IncStructure& y);
ProductOf<SimpleGraph, SetSystemHom> simple_product(const SimpleGraph& x,
                                                    const SimpleGraph& y);

EqualizerOf<Digraph, DigraphHom> simple_equalizer(const DigraphHom& f, const DigraphHom& g);
EqualizerOf<SetSystem, SetSystemHom> simple_equalizer(const SetSystemHom& f,
                                                      const SetSystemHom& g);
EqualizerOf<IncStructure, IncStructureHom> simple_equalizer(const IncStructureHom& f,
                                                            const IncStructureHom& g);

}  // namespace catgraph
