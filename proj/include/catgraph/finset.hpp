#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace catgraph {

/**
 * Finite set of opaque string labels. Labels are kept sorted and distinct;
 * iteration order is the canonical order, so every construction downstream
 * is deterministic.
 */
class FinSet {
public:
  FinSet() = default;
  // Sorts the labels; throws std::invalid_argument on duplicates.
  explicit FinSet(std::vector<std::string> labels);

  bool contains(const std::string& label) const;
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  bool operator==(const FinSet&) const = default;

private:
  std::vector<std::string> labels_;
};

// True when every label of `sub` is a label of `super`.
bool subset_of(const FinSet& sub, const FinSet& super);

/**
 * Total function between finite sets, stored as an explicit assignment.
 * Construction checks totality and that every value lies in the codomain.
 */
class FinMap {
public:
  FinMap() = default;
  FinMap(FinSet dom, FinSet cod, std::map<std::string, std::string> assignment);

  static FinMap identity(const FinSet& x);
  // Requires sub to be a subset of super; maps every label to itself.
  static FinMap inclusion(const FinSet& sub, const FinSet& super);
  static FinMap constant(const FinSet& dom, const FinSet& cod, const std::string& value);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::map<std::string, std::string>& assignment() const { return assignment_; }

  const std::string& operator()(const std::string& x) const;

  bool operator==(const FinMap&) const = default;

private:
  FinSet dom_;
  FinSet cod_;
  std::map<std::string, std::string> assignment_;
};

// g after f; throws std::invalid_argument unless f.cod() == g.dom().
FinMap compose(const FinMap& g, const FinMap& f);

struct MapClass {
  bool injective = false;
  bool surjective = false;
};
MapClass classify_map(const FinMap& f);
bool is_bijective(const FinMap& f);
// Requires a bijective map.
FinMap inverse(const FinMap& f);

// Sorted, deduplicated image of the listed elements.
std::vector<std::string> sorted_image(const FinMap& f, const std::vector<std::string>& xs);
// Sorted list of domain elements whose value lies in ys (ys need not be sorted).
std::vector<std::string> sorted_preimage(const FinMap& f, const std::vector<std::string>& ys);

/**
 * Epi-mono factorization: epi maps the domain onto mid, mono embeds mid into
 * the original codomain, and mono o epi equals the factored map.
 */
struct Factorization {
  FinMap epi;
  FinSet mid;
  FinMap mono;
};

// mid carries the labels of the values f actually takes; epi(x) = f(x), mono
// is the inclusion of those labels into f's codomain.
Factorization image_factorization(const FinMap& f);

// Pullback of f against itself: all pairs of domain elements with equal value,
// with the two projections.
struct KernelPair {
  FinSet carrier;  // pair labels
  FinMap p1;
  FinMap p2;
};
KernelPair kernel_pair(const FinMap& f);

// Quotient of a set by the equivalence generated by the given relations.
// Each class is named by its least member.
struct Quotient {
  FinSet classes;
  FinMap projection;
};
Quotient quotient_by_pairs(const FinSet& x,
                           const std::vector<std::pair<std::string, std::string>>& pairs);

// Coequalizer of a parallel pair in Set: the quotient of the shared codomain
// by the equivalence generated by p1(r) ~ p2(r).
Quotient set_coequalizer(const FinMap& p1, const FinMap& p2);

// Factors f as (class inclusion into cod) after (projection to classes) using
// the kernel pair's coequalizer. Mid labels are class representatives, so the
// result agrees with image_factorization up to the canonical relabeling and
// has the identical composite.
Factorization kernel_pair_coequalizer(const FinMap& f);

struct ProductSet {
  FinSet carrier;  // pair labels "(x,y)"
  FinMap proj1;
  FinMap proj2;
};
ProductSet product_set(const FinSet& x, const FinSet& y);

inline constexpr std::size_t kPowerSetBound = 10;

// Carrier of subset labels together with each label's member list, aligned
// with the carrier's canonical order.
struct PowerSet {
  FinSet carrier;
  std::vector<std::vector<std::string>> members;
};
// Throws BudgetError when |x| exceeds the bound.
PowerSet power_set_with_members(const FinSet& x, std::size_t bound = kPowerSetBound);
FinSet power_set(const FinSet& x, std::size_t bound = kPowerSetBound);

// Contravariant action on subsets: power_set(f.cod()) -> power_set(f.dom()),
// sending each subset label to the label of its preimage.
FinMap preimage_map(const FinMap& f, std::size_t bound = kPowerSetBound);

}  // namespace catgraph
