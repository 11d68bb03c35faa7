#include "catgraph/spaces.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "catgraph/errors.hpp"
#include "catgraph/labels.hpp"

namespace catgraph {

namespace {

// Subsets of a small point set are handled as bit masks over the canonical
// point order.

std::size_t point_index(const FinSet& points, const std::string& p) {
  const auto& ls = points.labels();
  auto it = std::lower_bound(ls.begin(), ls.end(), p);
  if (it == ls.end() || *it != p)
    throw std::invalid_argument("set member is not a point of the space: " + p);
  return static_cast<std::size_t>(it - ls.begin());
}

std::uint64_t mask_of(const FinSet& points, const std::vector<std::string>& members) {
  std::uint64_t m = 0;
  for (const auto& p : members) m |= std::uint64_t{1} << point_index(points, p);
  return m;
}

std::vector<std::string> members_of(const FinSet& points, std::uint64_t mask) {
  std::vector<std::string> ms;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (mask >> i & 1) ms.push_back(points.labels()[i]);
  return ms;
}

std::vector<std::vector<std::string>> collection_of(const FinSet& points,
                                                    const std::set<std::uint64_t>& masks) {
  std::vector<std::vector<std::string>> out;
  for (std::uint64_t m : masks) out.push_back(members_of(points, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::uint64_t> masks_of(const FinSet& points,
                                 const std::vector<std::vector<std::string>>& sets) {
  std::set<std::uint64_t> out;
  for (const auto& s : sets) out.insert(mask_of(points, s));
  return out;
}

void require_generation_size(const FinSet& points) {
  if (points.size() > kPowerSetBound)
    throw BudgetError("space generation over more than " +
                      std::to_string(kPowerSetBound) + " points");
}

// Adds combine(a, b) for all pairs until the family stabilizes.
template <class Step>
void saturate(std::set<std::uint64_t>& family, Step step) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> snapshot(family.begin(), family.end());
    for (std::uint64_t a : snapshot)
      for (std::uint64_t b : snapshot)
        if (family.insert(step(a, b)).second) grew = true;
  }
}

std::vector<std::vector<std::string>> canonize(const FinSet& points,
                                               std::vector<std::vector<std::string>> sets) {
  return collection_of(points, masks_of(points, std::move(sets)));
}

}  // namespace

namespace {

std::uint64_t full_mask(const FinSet& points) {
  if (points.size() > 64) throw BudgetError("space over more than 64 points");
  return points.size() == 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << points.size()) - 1;
}

}  // namespace

FiniteTopSpace::FiniteTopSpace(FinSet points_, std::vector<std::vector<std::string>> opens_)
    : points(std::move(points_)), opens(canonize(points, std::move(opens_))) {
  std::uint64_t full = full_mask(points);
  std::set<std::uint64_t> fam = masks_of(points, opens);
  if (!fam.count(0)) throw KindError("topology is missing the empty set");
  if (!fam.count(full)) throw KindError("topology is missing the full point set");
  for (std::uint64_t a : fam)
    for (std::uint64_t b : fam) {
      if (!fam.count(a | b)) throw KindError("topology is not closed under union");
      if (!fam.count(a & b)) throw KindError("topology is not closed under intersection");
    }
}

FiniteMeasSpace::FiniteMeasSpace(FinSet points_, std::vector<std::vector<std::string>> sets_)
    : points(std::move(points_)), sets(canonize(points, std::move(sets_))) {
  std::uint64_t full = full_mask(points);
  std::set<std::uint64_t> fam = masks_of(points, sets);
  if (!fam.count(0)) throw KindError("sigma algebra is missing the empty set");
  for (std::uint64_t a : fam) {
    if (!fam.count(full & ~a)) throw KindError("sigma algebra is not closed under complement");
    for (std::uint64_t b : fam)
      if (!fam.count(a | b)) throw KindError("sigma algebra is not closed under union");
  }
}

bool FiniteTopSpace::has_open(std::vector<std::string> members) const {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return std::binary_search(opens.begin(), opens.end(), members);
}

bool FiniteMeasSpace::has_set(std::vector<std::string> members) const {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return std::binary_search(sets.begin(), sets.end(), members);
}

FiniteTopSpace generate_topology(const FinSet& points,
                                 const std::vector<std::vector<std::string>>& generators) {
  require_generation_size(points);
  std::uint64_t full = (std::uint64_t{1} << points.size()) - 1;
  std::set<std::uint64_t> fam = masks_of(points, generators);
  fam.insert(0);
  fam.insert(full);
  saturate(fam, [](std::uint64_t a, std::uint64_t b) { return a | b; });
  saturate(fam, [](std::uint64_t a, std::uint64_t b) { return a & b; });
  // Unions of intersections may create fresh sets, so alternate to a fixpoint.
  std::size_t before = 0;
  while (before != fam.size()) {
    before = fam.size();
    saturate(fam, [](std::uint64_t a, std::uint64_t b) { return a | b; });
    saturate(fam, [](std::uint64_t a, std::uint64_t b) { return a & b; });
  }
  return FiniteTopSpace(points, collection_of(points, fam));
}

FiniteMeasSpace generate_sigma(const FinSet& points,
                               const std::vector<std::vector<std::string>>& generators) {
  require_generation_size(points);
  std::uint64_t full = (std::uint64_t{1} << points.size()) - 1;
  std::set<std::uint64_t> fam = masks_of(points, generators);
  fam.insert(0);
  std::size_t before = 0;
  while (before != fam.size()) {
    before = fam.size();
    std::vector<std::uint64_t> snapshot(fam.begin(), fam.end());
    for (std::uint64_t a : snapshot) fam.insert(full & ~a);
    saturate(fam, [](std::uint64_t a, std::uint64_t b) { return a | b; });
  }
  return FiniteMeasSpace(points, collection_of(points, fam));
}

FiniteTopSpace generate_topology(const SetSystem& s) {
  return generate_topology(s.vertices, s.sets);
}

FiniteMeasSpace generate_sigma(const SetSystem& s) { return generate_sigma(s.vertices, s.sets); }

FiniteMeasSpace borel(const FiniteTopSpace& t) { return generate_sigma(t.points, t.opens); }

SetSystem as_setsystem(const FiniteTopSpace& t) { return SetSystem(t.points, t.opens); }

SetSystem as_setsystem(const FiniteMeasSpace& m) { return SetSystem(m.points, m.sets); }

namespace {

// Preimage of each listed codomain subset, as a member list of g's domain.
std::vector<std::string> preimage_members(const FinMap& g,
                                          const std::vector<std::string>& members) {
  return sorted_preimage(g, members);
}

bool preimages_in(const FinMap& g, const std::vector<std::vector<std::string>>& targets,
                  const std::vector<std::vector<std::string>>& collection) {
  for (const auto& t : targets) {
    std::vector<std::string> pre = preimage_members(g, t);
    if (!std::binary_search(collection.begin(), collection.end(), pre)) return false;
  }
  return true;
}

}  // namespace

bool is_continuous(const FinMap& g, const FiniteTopSpace& dom, const FiniteTopSpace& cod) {
  if (g.dom() != dom.points || g.cod() != cod.points)
    throw std::invalid_argument("continuity check against mismatched point sets");
  return preimages_in(g, cod.opens, dom.opens);
}

bool is_measurable(const FinMap& g, const FiniteMeasSpace& dom, const FiniteMeasSpace& cod) {
  if (g.dom() != dom.points || g.cod() != cod.points)
    throw std::invalid_argument("measurability check against mismatched point sets");
  return preimages_in(g, cod.sets, dom.sets);
}

bool generator_preimages_open(const FinMap& g, const FiniteTopSpace& dom,
                              const std::vector<std::vector<std::string>>& generators) {
  std::vector<std::vector<std::string>> canon;
  for (auto s : generators) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    canon.push_back(std::move(s));
  }
  return preimages_in(g, canon, dom.opens);
}

bool generator_preimages_measurable(const FinMap& g, const FiniteMeasSpace& dom,
                                    const std::vector<std::vector<std::string>>& generators) {
  std::vector<std::vector<std::string>> canon;
  for (auto s : generators) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    canon.push_back(std::move(s));
  }
  return preimages_in(g, canon, dom.sets);
}

LawReport check_antihom(const SetSystemAntiHom& f) {
  std::string inst = describe(f.dom) + " <- " + describe(f.cod);
  std::int64_t checked = 0;
  for (const auto& members : f.cod.sets) {
    std::vector<std::string> pre = sorted_preimage(f.vmap, members);
    ++checked;
    if (!f.dom.has_set(pre)) {
      return LawReport::failed("antihom", inst,
                               "preimage of " + set_label(members) +
                                   " is not a domain member: " + set_label(pre))
          .count("members checked", checked);
    }
  }
  return LawReport::passed("antihom", inst).count("members checked", checked);
}

}  // namespace catgraph
