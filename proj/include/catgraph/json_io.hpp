#pragma once

#include <string>
#include <vector>

#include "catgraph/graphs.hpp"
#include "catgraph/report.hpp"
#include "catgraph/spaces.hpp"

namespace catgraph {

/*
 * Canonical JSON forms, one per kind tag:
 *   quiver     {"kind":"quiver","vertices":[...],"edges":[{"id","src","tgt"}]}
 *   hypergraph {"kind":"hypergraph","vertices":[...],"edges":[{"id","members"}]}
 *   incidence  {"kind":"incidence","vertices":[...],"edges":[...],
 *               "incidences":[{"id","vertex","edge"}]}
 *   digraph    {"kind":"digraph","vertices":[...],"arcs":[[v,w],...]}
 *   setsystem  {"kind":"setsystem","vertices":[...],"sets":[[...],...]}
 *   topology / sigma: the setsystem shape under their own kind tags.
 * Binary operations take composite files:
 *   pair       {"kind":"pair","first":<object>,"second":<object>}
 *   parallel   {"kind":"parallel","dom":<object>,"cod":<object>,
 *               "first":<maps>,"second":<maps>} where <maps> holds "vmap"
 *               (and "emap"/"imap" where the kind has those carriers) as
 *               label-to-label objects.
 * Emission is canonical: keys alphabetical, carriers and collections in their
 * stored sorted order, two-space indent, trailing newline. parse then emit is
 * the identity on canonical files, and emit-parse-emit equals emit.
 *
 * Errors: ParseError for malformed JSON, missing or mistyped fields,
 * ill-formed labels, and referential breakage; KindError for a wrong kind tag
 * or content that fails the kind's constraint (asymmetric digraph where a
 * symmetric one is required, collection violating the space axioms, ...).
 */

std::string kind_of(const std::string& text);

Quiver parse_quiver(const std::string& text);
SSHypergraph parse_hypergraph(const std::string& text);
IncHypergraph parse_incidence(const std::string& text);
Digraph parse_digraph(const std::string& text);
SetSystem parse_setsystem(const std::string& text);
FiniteTopSpace parse_topology(const std::string& text);
FiniteMeasSpace parse_sigma(const std::string& text);

std::string emit(const Quiver& q);
std::string emit(const SSHypergraph& h);
std::string emit(const IncHypergraph& g);
std::string emit(const Digraph& g);
std::string emit(const SetSystem& s);
std::string emit(const FiniteTopSpace& t);
std::string emit(const FiniteMeasSpace& m);

// One line, no trailing newline; counts become an object.
std::string emit_report(const LawReport& r);

// Named functors over files: parses the input by the kind each functor
// expects, applies it, returns the canonical output text.
std::vector<std::string> functor_names();
std::string apply_named_functor(const std::string& name, const std::string& input);

}  // namespace catgraph
