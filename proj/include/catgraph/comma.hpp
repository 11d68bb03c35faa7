#pragma once

#include <string>
#include <vector>

#include "catgraph/finset.hpp"
#include "catgraph/graphs.hpp"
#include "catgraph/report.hpp"

namespace catgraph {

// The four closed presentations of graph-like objects as comma objects.
// Q1: edges over ordered vertex pairs.
// H1: edges over vertex subsets.
// R1: incidences over vertex-edge pairs (two structure carriers).
// P1: vertex carrier with edges mapping contravariantly into vertex subsets;
//     morphisms send vertices forward and edges backward.
enum class Presentation { Q1, H1, R1, P1 };

std::string to_string(Presentation p);

/**
 * Object of one of the four presentations: a structured carrier (a_part), one
 * or two plain carriers (b_parts), and the structure map f stored in its
 * Set direction.
 *
 *   Q1: f : a_part -> b x b          (b_parts = {vertices})
 *   H1: f : a_part -> power(b)       (b_parts = {vertices})
 *   R1: f : a_part -> b0 x b1        (b_parts = {vertices, edges})
 *   P1: f : b_part -> power(a_part)  (a_part = vertices, b_parts = {edges})
 */
struct CommaObject {
  Presentation pres;
  FinSet a_part;
  std::vector<FinSet> b_parts;
  FinMap f;

  CommaObject(Presentation pres_, FinSet a_part_, std::vector<FinSet> b_parts_, FinMap f_);
  bool operator==(const CommaObject&) const = default;
};

// Carrier that the structure map of an object over `pres` with the given
// plain parts lands in (ordered pairs or subset labels).
FinSet structure_carrier(Presentation pres, const FinSet& a_part,
                         const std::vector<FinSet>& b_parts);

// The structure map is monic in the ambient category. For Q1/H1/R1 this is
// injectivity; for P1 the ambient arrows are reversed, so it is surjectivity.
bool is_simple(const CommaObject& x);
// Dual: epic structure map. Surjectivity for Q1/H1/R1, injectivity for P1.
bool is_cosimple(const CommaObject& x);

/**
 * Morphism between comma objects of one presentation. phi acts on a_part,
 * psis act componentwise on b_parts. For P1, psis holds the single reversed
 * edge component: a map cod.edges -> dom.edges.
 */
struct CommaMorphism {
  CommaObject dom;
  CommaObject cod;
  FinMap phi;
  std::vector<FinMap> psis;
  bool operator==(const CommaMorphism&) const = default;
};

LawReport validate(const CommaMorphism& m);
CommaMorphism identity_morphism(const CommaObject& x);
// g after f; components compose pointwise, except the P1 edge components
// which compose in the reverse order. Re-validates the result.
CommaMorphism compose(const CommaMorphism& g, const CommaMorphism& f);
bool is_isomorphism(const CommaMorphism& m);

std::string describe(const CommaObject& x);

// Round trips between the concrete kinds and their presentations. These are
// literal mutual inverses on canonical forms.
CommaObject to_comma(const Quiver& q);
CommaObject to_comma(const SSHypergraph& h);
CommaObject to_comma(const IncHypergraph& g);
CommaObject to_comma_anti(const SSHypergraph& h);  // P1

Quiver quiver_from_comma(const CommaObject& x);
SSHypergraph hypergraph_from_comma(const CommaObject& x);
IncHypergraph incidence_from_comma(const CommaObject& x);
SSHypergraph hypergraph_from_comma_anti(const CommaObject& x);

CommaMorphism to_comma(const QuiverHom& h);
CommaMorphism to_comma(const HypergraphHom& h);
CommaMorphism to_comma(const IncHom& h);
CommaMorphism to_comma_anti(const AntiHom& h);

QuiverHom quiver_hom_from_comma(const CommaMorphism& m);
HypergraphHom hypergraph_hom_from_comma(const CommaMorphism& m);
IncHom inc_hom_from_comma(const CommaMorphism& m);
AntiHom anti_hom_from_comma(const CommaMorphism& m);

// Reading a simple object as the plain space it determines: the carrier(s)
// plus the set of structure values. Rejects non-simple input.
Digraph digraph_space_of(const CommaObject& x);        // Q1
SetSystem setsystem_space_of(const CommaObject& x);    // H1
IncStructure incstructure_space_of(const CommaObject& x);  // R1
// Dual reading of a cosimple P1 object: vertices plus distinct edge values.
SetSystem anti_cospace_of(const CommaObject& x);

// A space as a simple comma object: structure elements named by their value,
// with f the inclusion of those names.
CommaObject comma_of(const Digraph& g);
CommaObject comma_of(const SetSystem& s);
CommaObject comma_of(const IncStructure& s);
CommaObject anti_cocomma_of(const SetSystem& s);  // P1

// Functorial actions on morphisms, matching the object translations above.
DigraphHom digraph_space_hom(const CommaMorphism& m);
SetSystemHom setsystem_space_hom(const CommaMorphism& m);
IncStructureHom incstructure_space_hom(const CommaMorphism& m);
SetSystemAntiHom anti_cospace_hom(const CommaMorphism& m);

CommaMorphism comma_of(const DigraphHom& h);
CommaMorphism comma_of(const SetSystemHom& h);
CommaMorphism comma_of(const IncStructureHom& h);
CommaMorphism anti_cocomma_of(const SetSystemAntiHom& h);

// Component at x of the natural isomorphism between the identity and the
// space/comma round trip: x -> comma_of(space_of(x)), structured part renamed
// to its value, plain parts unchanged. Bijective in every component when x is
// simple; rejects non-simple input.
CommaMorphism comma_space_iso(const CommaObject& x);

}  // namespace catgraph
