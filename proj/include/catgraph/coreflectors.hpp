#pragma once

#include "catgraph/comma.hpp"
#include "catgraph/graphs.hpp"

namespace catgraph {

/**
 * Result of cosimplifying: the object with its plain carriers trimmed to what
 * the structure actually touches (Q1: endpoint vertices; R1: attached
 * vertices and edges; P1: distinct edge values), and the counit back into the
 * input. The plain components of the counit are inclusions; the P1 edge
 * component, stored in its reversed direction, is the collapse of edges onto
 * their values (monic in the reversed category).
 */
struct Coreflection {
  CommaObject result;
  CommaMorphism counit;  // result -> input
};

// Defined for Q1, R1, P1; rejects H1 (the subset functor there has no left
// adjoint, so there is nothing to coimage-factor through). A Q1 or R1 result
// is generally not itself cosimple; a P1 result always is.
Coreflection cosimplify(const CommaObject& x);

Coreflection cosimplify_quiver(const Quiver& q);
Coreflection cosimplify_inc(const IncHypergraph& g);
Coreflection cosimplify_p(const SSHypergraph& h);

// Given m : y -> x with y cosimple, the unique morphism y -> cosimplify(x)
// whose postcomposite with the counit is m.
CommaMorphism factor_through_cosimplification(const CommaMorphism& m);

// Functorial action: trim both ends and restrict the components.
CommaMorphism cosimplify_morphism(const CommaMorphism& m);

// A quiver is loaded when it has an edge for every ordered vertex pair;
// equivalently its presentation is cosimple.
bool is_loaded(const Quiver& q);
// Every vertex-edge pair carries an incidence.
bool is_full_incidence(const IncHypergraph& g);

// Unit of the adjunction the Q1 cosimplification factors through: pairs the
// two tagged copies of each element. Not surjective once |x| >= 2.
FinMap pairing_unit_q1(const FinSet& x);
// R1 analogue: the diagonal into the ordered square. Not surjective once
// |x| >= 2.
FinMap pairing_unit_r1(const FinSet& x);

}  // namespace catgraph
