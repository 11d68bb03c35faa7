#pragma once

#include "catgraph/comma.hpp"
#include "catgraph/graphs.hpp"

namespace catgraph {

/**
 * Result of simplifying a comma object: the simple object carrying the
 * distinct structure values, the unit into it (structured part collapsed to
 * values, plain parts untouched), and the embedding of the result into the
 * complete object on the same plain carriers.
 */
struct Reflection {
  CommaObject result;
  CommaMorphism unit;       // x -> result
  CommaMorphism embedding;  // result -> complete_object(...)
};

// Object over the given plain carriers whose structured part is the whole
// structure carrier (every ordered pair, or every subset) with the identity
// as structure map. Defined for Q1/H1/R1.
CommaObject complete_object(Presentation pres, const std::vector<FinSet>& b_parts);

// Collapses the structured carrier onto the structure map's image. The
// result is simple, the operation is literally idempotent on its own output,
// and the unit is an isomorphism exactly when the input is simple. Rejects P1.
Reflection simplify(const CommaObject& x);

// Given m : x -> y with y simple, the unique morphism from simplify(x).result
// to y whose precomposite with the unit is m.
CommaMorphism factor_through_simplification(const CommaMorphism& m);

// Functorial action on an arbitrary morphism: simplify both ends and factor.
CommaMorphism simplify_morphism(const CommaMorphism& m);

// Counit at a simple object: the inverse of its unit, as a morphism
// simplify(y).result -> y.
CommaMorphism simplification_counit(const CommaObject& y);

/**
 * Keeping only the members of size one or two, with the inclusion of the
 * resulting graph back into the set system as counit.
 */
struct Deletion {
  SimpleGraph result;
  SetSystemHom counit;  // result's system -> input
};
Deletion del_ssys(const SetSystem& h);

// Given m : g -> h with g a graph's system, the same vertex map read as a
// morphism g -> del_ssys(h).result.
SetSystemHom factor_through_del(const SetSystemHom& m);

struct SymClosure {
  SymDigraph result;
  DigraphHom unit;  // input -> result's digraph
};
// Adds the reverse of every arc.
SymClosure sym_closure(const Digraph& g);

struct SymInterior {
  SymDigraph result;
  DigraphHom counit;  // result's digraph -> input
};
// Keeps the arcs whose reverse is also present.
SymInterior sym_interior(const Digraph& g);

// m : g -> h.digraph() with h symmetric; the same vertex map from
// sym_closure(g).result's digraph.
DigraphHom factor_through_closure(const DigraphHom& m);
// m : g.digraph() -> h with g symmetric; the same vertex map into
// sym_interior(h).result's digraph.
DigraphHom factor_through_interior(const DigraphHom& m);

// Mutually inverse translations: each unordered member becomes the ordered
// arcs both ways, and conversely.
SymDigraph gra_to_symdigra(const SimpleGraph& g);
SimpleGraph symdigra_to_gra(const SymDigraph& d);
DigraphHom gra_hom_to_symdigra(const SetSystemHom& h);
SetSystemHom symdigra_hom_to_gra(const DigraphHom& h);

}  // namespace catgraph
