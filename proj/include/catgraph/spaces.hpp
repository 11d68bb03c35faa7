#pragma once

#include <string>
#include <vector>

#include "catgraph/finset.hpp"
#include "catgraph/graphs.hpp"

namespace catgraph {

// Finite point-set spaces. Collections are canonical: each member list is
// sorted and deduplicated, and the collection is sorted. Constructors check
// the closure axioms and throw KindError when they fail.

struct FiniteTopSpace {
  FinSet points;
  std::vector<std::vector<std::string>> opens;

  // Requires the empty set and the full point set, and closure under pairwise
  // union and intersection.
  FiniteTopSpace(FinSet points_, std::vector<std::vector<std::string>> opens_);
  bool has_open(std::vector<std::string> members) const;
  bool operator==(const FiniteTopSpace&) const = default;
};

struct FiniteMeasSpace {
  FinSet points;
  std::vector<std::vector<std::string>> sets;

  // Requires the empty set and closure under complement and pairwise union.
  FiniteMeasSpace(FinSet points_, std::vector<std::vector<std::string>> sets_);
  bool has_set(std::vector<std::string> members) const;
  bool operator==(const FiniteMeasSpace&) const = default;
};

// Smallest topology containing the generator sets. Generators may be listed
// in any order and may repeat. Throws BudgetError when the point count
// exceeds the subset-enumeration bound.
FiniteTopSpace generate_topology(const FinSet& points,
                                 const std::vector<std::vector<std::string>>& generators);

// Smallest sigma algebra containing the generator sets.
FiniteMeasSpace generate_sigma(const FinSet& points,
                               const std::vector<std::vector<std::string>>& generators);

// Generation from a set system on its own vertex carrier.
FiniteTopSpace generate_topology(const SetSystem& s);
FiniteMeasSpace generate_sigma(const SetSystem& s);

// Sigma algebra generated by the open sets.
FiniteMeasSpace borel(const FiniteTopSpace& t);

SetSystem as_setsystem(const FiniteTopSpace& t);
SetSystem as_setsystem(const FiniteMeasSpace& m);

// Preimage of every open (measurable) codomain set is open (measurable).
bool is_continuous(const FinMap& g, const FiniteTopSpace& dom, const FiniteTopSpace& cod);
bool is_measurable(const FinMap& g, const FiniteMeasSpace& dom, const FiniteMeasSpace& cod);

// The adjunction test against a generated codomain only needs the generators:
// these check that the preimage of every listed generator lies in the domain
// collection.
bool generator_preimages_open(const FinMap& g, const FiniteTopSpace& dom,
                              const std::vector<std::vector<std::string>>& generators);
bool generator_preimages_measurable(const FinMap& g, const FiniteMeasSpace& dom,
                                    const std::vector<std::vector<std::string>>& generators);

// Elementwise report of the antihomomorphism condition: names the first
// codomain member whose preimage is missing from the domain collection.
LawReport check_antihom(const SetSystemAntiHom& f);

}  // namespace catgraph
