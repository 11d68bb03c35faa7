#pragma once

#include <string>
#include <vector>

#include "catgraph/comma.hpp"
#include "catgraph/graphs.hpp"
#include "catgraph/report.hpp"
#include "catgraph/spaces.hpp"

namespace catgraph {

/**
 * Bounds for the enumeration-based checks. max_size caps carrier sizes,
 * budget caps the raw candidate-assignment count per hom-set enumeration
 * (structure filtering happens after counting). seed is reserved for sampled
 * generators; the stock laws are exhaustive and ignore it.
 */
struct VerifyConfig {
  int max_size = 3;
  long long budget = 10'000'000;
  unsigned seed = 0;
};

// Exhaustive instance generators over canonical carriers (v0..,e0..,i0..,p0..).
// Deterministic order: by carrier sizes, then by assignment odometer.
std::vector<Quiver> all_quivers(int max_v, int max_e);
std::vector<SSHypergraph> all_hypergraphs(int max_v, int max_e);
std::vector<IncHypergraph> all_inc_hypergraphs(int max_v, int max_e, int max_i);
std::vector<Digraph> all_digraphs(int max_v);
std::vector<SymDigraph> all_symdigraphs(int max_v);
std::vector<SetSystem> all_setsystems(int max_v);
std::vector<SimpleGraph> all_simple_graphs(int max_v);
std::vector<IncStructure> all_incstructures(int max_v, int max_e);
std::vector<FiniteTopSpace> all_topologies(int max_points);
std::vector<FiniteMeasSpace> all_sigma_algebras(int max_points);

// Number of raw candidate assignments a hom enumeration between the two
// objects would examine, saturating at a large cap.
long long hom_candidate_count(const CommaObject& x, const CommaObject& y);

// All structure-preserving morphisms x -> y in deterministic order. Throws
// BudgetError when the raw candidate count exceeds the budget.
std::vector<QuiverHom> enumerate_homs(const Quiver& x, const Quiver& y, long long budget);
std::vector<HypergraphHom> enumerate_homs(const SSHypergraph& x, const SSHypergraph& y,
                                          long long budget);
std::vector<IncHom> enumerate_homs(const IncHypergraph& x, const IncHypergraph& y,
                                   long long budget);
std::vector<DigraphHom> enumerate_homs(const Digraph& x, const Digraph& y, long long budget);
std::vector<SetSystemHom> enumerate_homs(const SetSystem& x, const SetSystem& y,
                                         long long budget);
std::vector<IncStructureHom> enumerate_homs(const IncStructure& x, const IncStructure& y,
                                            long long budget);
std::vector<CommaMorphism> enumerate_homs(const CommaObject& x, const CommaObject& y,
                                          long long budget);
std::vector<AntiHom> enumerate_anti_homs(const SSHypergraph& x, const SSHypergraph& y,
                                         long long budget);
std::vector<SetSystemAntiHom> enumerate_anti_homs(const SetSystem& x, const SetSystem& y,
                                                  long long budget);

// One reflection instance: every m : x -> y with y simple factors through the
// unit of x's simplification exactly once, and factor_through_simplification
// returns that factorization. Also checks the two hom-set cardinalities match.
LawReport check_reflection(const CommaObject& x, const CommaObject& y, long long budget);

// One coreflection instance for the trimming coreflector: every m : y -> x
// with y cosimple lifts through the counit of x's cosimplification exactly
// once. Defined for Q1, R1, P1.
LawReport check_coreflection(const CommaObject& y, const CommaObject& x, long long budget);
// Same shape for the graph-in-set-system coreflection (y a graph's system)
LawReport check_deletion_coreflection(const SimpleGraph& y, const SetSystem& x,
                                      long long budget);
// and for the symmetric-interior coreflection (y symmetric).
LawReport check_interior_coreflection(const SymDigraph& y, const Digraph& x,
                                      long long budget);
// Closure is the left adjoint: every m : g -> h with h symmetric extends
// through the closure unit exactly once.
LawReport check_closure_reflection(const Digraph& g, const SymDigraph& h, long long budget);

// Unit/counit triangle identities over all enumerated objects. Names:
// simplify-quiver, simplify-hypergraph, simplify-incidence, closure, interior,
// deletion, cosimplify-anti, generation-topology, generation-sigma.
LawReport check_triangles(const std::string& adjunction, const VerifyConfig& cfg);

// Searches pairs of simple graphs (<= 2 vertices) for one whose set-system
// product comparison fails to be an isomorphism, while certifying that the
// digraph analogue is an isomorphism on every enumerated pair.
LawReport find_product_nonpreservation();

// Morphisms into a simple object are determined by their plain components;
// a non-simple target admits a genuine counterexample pair.
LawReport check_psi_determinacy(const VerifyConfig& cfg);

// Registered law suites. run_law throws std::out_of_range on an unknown name.
std::vector<std::string> law_names();
std::vector<LawReport> run_law(const std::string& name, const VerifyConfig& cfg);

}  // namespace catgraph
