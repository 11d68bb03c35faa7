#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catgraph/finset.hpp"
#include "catgraph/report.hpp"

namespace catgraph {

// Object constructors enforce referential integrity (maps land where they
// must, endpoints exist) and throw std::invalid_argument otherwise. Morphism
// records are plain data; validate() reports the first broken naturality
// square instead of throwing, so candidate morphisms can be screened.

struct Quiver {
  FinSet vertices;
  FinSet edges;
  FinMap src;
  FinMap tgt;

  Quiver(FinSet vertices_, FinSet edges_, FinMap src_, FinMap tgt_);
  bool operator==(const Quiver&) const = default;
};

struct QuiverHom {
  Quiver dom;
  Quiver cod;
  FinMap vmap;
  FinMap emap;
  bool operator==(const QuiverHom&) const = default;
};

/**
 * Set-system hypergraph: the incidence map sends each edge to a subset label
 * of the vertex power set, so distinct edges may carry the same member set.
 */
struct SSHypergraph {
  FinSet vertices;
  FinSet edges;
  FinMap incidence;  // edges -> power_set(vertices)

  SSHypergraph(FinSet vertices_, FinSet edges_, FinMap incidence_);
  std::vector<std::string> edge_members(const std::string& e) const;
  bool operator==(const SSHypergraph&) const = default;
};

SSHypergraph make_hypergraph(
    FinSet vertices,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& edges);

struct HypergraphHom {
  SSHypergraph dom;
  SSHypergraph cod;
  FinMap vmap;
  FinMap emap;
  bool operator==(const HypergraphHom&) const = default;
};

struct IncHypergraph {
  FinSet vertices;
  FinSet edges;
  FinSet incidences;
  FinMap att_v;  // incidences -> vertices
  FinMap att_e;  // incidences -> edges

  IncHypergraph(FinSet vertices_, FinSet edges_, FinSet incidences_, FinMap att_v_,
                FinMap att_e_);
  bool operator==(const IncHypergraph&) const = default;
};

struct IncHom {
  IncHypergraph dom;
  IncHypergraph cod;
  FinMap vmap;
  FinMap emap;
  FinMap imap;
  bool operator==(const IncHom&) const = default;
};

// Vertex set with a set of ordered arcs; arcs are deduplicated.
struct Digraph {
  FinSet vertices;
  std::vector<std::pair<std::string, std::string>> arcs;

  Digraph(FinSet vertices_, std::vector<std::pair<std::string, std::string>> arcs_);
  bool has_arc(const std::string& v, const std::string& w) const;
  bool operator==(const Digraph&) const = default;
};

struct DigraphHom {
  Digraph dom;
  Digraph cod;
  FinMap vmap;
  bool operator==(const DigraphHom&) const = default;
};

// Vertex set with a collection of distinct subsets.
struct SetSystem {
  FinSet vertices;
  std::vector<std::vector<std::string>> sets;

  SetSystem(FinSet vertices_, std::vector<std::vector<std::string>> sets_);
  bool has_set(std::vector<std::string> members) const;
  bool operator==(const SetSystem&) const = default;
};

struct SetSystemHom {
  SetSystem dom;
  SetSystem cod;
  FinMap vmap;
  bool operator==(const SetSystemHom&) const = default;
};

// Set system whose members all have one or two elements; loops allowed.
class SimpleGraph {
public:
  explicit SimpleGraph(SetSystem s);
  const SetSystem& setsystem() const { return s_; }
  bool operator==(const SimpleGraph&) const = default;

private:
  SetSystem s_;
};

// Digraph whose arc set is closed under reversal.
class SymDigraph {
public:
  explicit SymDigraph(Digraph g);
  const Digraph& digraph() const { return g_; }
  bool operator==(const SymDigraph&) const = default;

private:
  Digraph g_;
};

// Vertex and edge carriers with a set of (vertex, edge) flags.
struct IncStructure {
  FinSet vertices;
  FinSet edges;
  std::vector<std::pair<std::string, std::string>> flags;

  IncStructure(FinSet vertices_, FinSet edges_,
               std::vector<std::pair<std::string, std::string>> flags_);
  bool has_flag(const std::string& v, const std::string& e) const;
  bool operator==(const IncStructure&) const = default;
};

struct IncStructureHom {
  IncStructure dom;
  IncStructure cod;
  FinMap vmap;
  FinMap emap;
  bool operator==(const IncStructureHom&) const = default;
};

/**
 * Hypergraph antihomomorphism: vertices map forward, edges map backward, and
 * the pulled-back edge's members are exactly the vertex preimage of the
 * original edge's members.
 */
struct AntiHom {
  SSHypergraph dom;
  SSHypergraph cod;
  FinMap vmap;      // dom.vertices -> cod.vertices
  FinMap edge_rev;  // cod.edges -> dom.edges
  bool operator==(const AntiHom&) const = default;
};

// Set-system antihomomorphism: a vertex map under which the preimage of every
// codomain member is a domain member.
struct SetSystemAntiHom {
  SetSystem dom;
  SetSystem cod;
  FinMap vmap;
  bool operator==(const SetSystemAntiHom&) const = default;
};

LawReport validate(const Quiver& q);
LawReport validate(const SSHypergraph& h);
LawReport validate(const IncHypergraph& g);
LawReport validate(const Digraph& g);
LawReport validate(const SetSystem& s);
LawReport validate(const SimpleGraph& g);
LawReport validate(const SymDigraph& g);
LawReport validate(const IncStructure& s);

LawReport validate(const QuiverHom& h);
LawReport validate(const HypergraphHom& h);
LawReport validate(const IncHom& h);
LawReport validate(const DigraphHom& h);
LawReport validate(const SetSystemHom& h);
LawReport validate(const IncStructureHom& h);
LawReport validate(const AntiHom& h);
LawReport validate(const SetSystemAntiHom& h);

template <class T>
bool is_valid(const T& x) {
  return validate(x).pass;
}

QuiverHom identity_hom(const Quiver& q);
HypergraphHom identity_hom(const SSHypergraph& h);
IncHom identity_hom(const IncHypergraph& g);
DigraphHom identity_hom(const Digraph& g);
SetSystemHom identity_hom(const SetSystem& s);
IncStructureHom identity_hom(const IncStructure& s);
AntiHom identity_anti_hom(const SSHypergraph& h);
SetSystemAntiHom identity_anti_hom(const SetSystem& s);

QuiverHom compose(const QuiverHom& g, const QuiverHom& f);
HypergraphHom compose(const HypergraphHom& g, const HypergraphHom& f);
IncHom compose(const IncHom& g, const IncHom& f);
DigraphHom compose(const DigraphHom& g, const DigraphHom& f);
SetSystemHom compose(const SetSystemHom& g, const SetSystemHom& f);
IncStructureHom compose(const IncStructureHom& g, const IncStructureHom& f);
// Edge components compose in the reverse order.
AntiHom compose(const AntiHom& g, const AntiHom& f);
SetSystemAntiHom compose(const SetSystemAntiHom& g, const SetSystemAntiHom& f);

// Short structural summaries used in report instances.
std::string describe(const Quiver& q);
std::string describe(const SSHypergraph& h);
std::string describe(const IncHypergraph& g);
std::string describe(const Digraph& g);
std::string describe(const SetSystem& s);
std::string describe(const IncStructure& s);

}  // namespace catgraph
