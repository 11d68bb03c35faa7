#include "catgraph/finset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "catgraph/errors.hpp"
#include "catgraph/labels.hpp"

namespace catgraph {

FinSet::FinSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  auto dup = std::adjacent_find(labels_.begin(), labels_.end());
  if (dup != labels_.end())
    throw std::invalid_argument("duplicate label: " + *dup);
}

bool FinSet::contains(const std::string& label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool subset_of(const FinSet& sub, const FinSet& super) {
  return std::includes(super.labels().begin(), super.labels().end(),
                       sub.labels().begin(), sub.labels().end());
}

FinMap::FinMap(FinSet dom, FinSet cod, std::map<std::string, std::string> assignment)
    : dom_(std::move(dom)), cod_(std::move(cod)), assignment_(std::move(assignment)) {
  if (assignment_.size() != dom_.size())
    throw std::invalid_argument("assignment is not total on the domain");
  for (const auto& [x, y] : assignment_) {
    if (!dom_.contains(x))
      throw std::invalid_argument("assignment key outside domain: " + x);
    if (!cod_.contains(y))
      throw std::invalid_argument("value outside codomain: " + y);
  }
}

FinMap FinMap::identity(const FinSet& x) {
  std::map<std::string, std::string> a;
  for (const auto& l : x) a[l] = l;
  return FinMap(x, x, std::move(a));
}

FinMap FinMap::inclusion(const FinSet& sub, const FinSet& super) {
  if (!subset_of(sub, super))
    throw std::invalid_argument("inclusion source is not a subset");
  std::map<std::string, std::string> a;
  for (const auto& l : sub) a[l] = l;
  return FinMap(sub, super, std::move(a));
}

FinMap FinMap::constant(const FinSet& dom, const FinSet& cod, const std::string& value) {
  std::map<std::string, std::string> a;
  for (const auto& l : dom) a[l] = value;
  return FinMap(dom, cod, std::move(a));
}

const std::string& FinMap::operator()(const std::string& x) const {
  auto it = assignment_.find(x);
  if (it == assignment_.end())
    throw std::out_of_range("not in domain: " + x);
  return it->second;
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (!(f.cod() == g.dom()))
    throw std::invalid_argument("composition mismatch: codomain differs from domain");
  std::map<std::string, std::string> a;
  for (const auto& [x, y] : f.assignment()) a[x] = g(y);
  return FinMap(f.dom(), g.cod(), std::move(a));
}

MapClass classify_map(const FinMap& f) {
  std::set<std::string> seen;
  bool injective = true;
  for (const auto& [x, y] : f.assignment()) {
    (void)x;
    if (!seen.insert(y).second) injective = false;
  }
  return {injective, seen.size() == f.cod().size()};
}

bool is_bijective(const FinMap& f) {
  auto c = classify_map(f);
  return c.injective && c.surjective;
}

FinMap inverse(const FinMap& f) {
  if (!is_bijective(f))
    throw std::invalid_argument("inverse of a non-bijective map");
  std::map<std::string, std::string> a;
  for (const auto& [x, y] : f.assignment()) a[y] = x;
  return FinMap(f.cod(), f.dom(), std::move(a));
}

std::vector<std::string> sorted_image(const FinMap& f, const std::vector<std::string>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(f(x));
  return {out.begin(), out.end()};
}

std::vector<std::string> sorted_preimage(const FinMap& f, const std::vector<std::string>& ys) {
  std::set<std::string> targets(ys.begin(), ys.end());
  std::vector<std::string> out;
  for (const auto& x : f.dom())
    if (targets.count(f(x))) out.push_back(x);
  return out;
}

Factorization image_factorization(const FinMap& f) {
  std::set<std::string> range;
  for (const auto& [x, y] : f.assignment()) {
    (void)x;
    range.insert(y);
  }
  FinSet mid(std::vector<std::string>(range.begin(), range.end()));
  std::map<std::string, std::string> epi_a;
  for (const auto& x : f.dom()) epi_a[x] = f(x);
  return {FinMap(f.dom(), mid, std::move(epi_a)), mid, FinMap::inclusion(mid, f.cod())};
}

KernelPair kernel_pair(const FinMap& f) {
  std::vector<std::string> labels;
  std::map<std::string, std::string> a1, a2;
  for (const auto& x : f.dom()) {
    for (const auto& y : f.dom()) {
      if (f(x) != f(y)) continue;
      std::string l = pair_label(x, y);
      labels.push_back(l);
      a1[l] = x;
      a2[l] = y;
    }
  }
  FinSet carrier(std::move(labels));
  return {carrier, FinMap(carrier, f.dom(), std::move(a1)),
          FinMap(carrier, f.dom(), std::move(a2))};
}

Quotient quotient_by_pairs(const FinSet& x,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
  // Union-find keyed by label; the root of a class is its least member.
  std::map<std::string, std::string> parent;
  for (const auto& l : x) parent[l] = l;
  auto find = [&](std::string l) {
    while (parent.at(l) != l) l = parent.at(l);
    return l;
  };
  for (const auto& [a, b] : pairs) {
    if (!x.contains(a) || !x.contains(b))
      throw std::invalid_argument("relation mentions a label outside the set");
    std::string ra = find(a), rb = find(b);
    if (ra == rb) continue;
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
  }
  std::set<std::string> reps;
  std::map<std::string, std::string> proj;
  for (const auto& l : x) {
    std::string r = find(l);
    reps.insert(r);
    proj[l] = r;
  }
  FinSet classes(std::vector<std::string>(reps.begin(), reps.end()));
  return {classes, FinMap(x, classes, std::move(proj))};
}

Quotient set_coequalizer(const FinMap& p1, const FinMap& p2) {
  if (!(p1.dom() == p2.dom()) || !(p1.cod() == p2.cod()))
    throw std::invalid_argument("coequalizer of a non-parallel pair");
  std::vector<std::pair<std::string, std::string>> rel;
  for (const auto& r : p1.dom()) rel.emplace_back(p1(r), p2(r));
  return quotient_by_pairs(p1.cod(), rel);
}

Factorization kernel_pair_coequalizer(const FinMap& f) {
  KernelPair kp = kernel_pair(f);
  Quotient q = set_coequalizer(kp.p1, kp.p2);
  std::map<std::string, std::string> mono_a;
  for (const auto& rep : q.classes) mono_a[rep] = f(rep);
  return {q.projection, q.classes, FinMap(q.classes, f.cod(), std::move(mono_a))};
}

ProductSet product_set(const FinSet& x, const FinSet& y) {
  std::vector<std::string> labels;
  std::map<std::string, std::string> a1, a2;
  for (const auto& u : x) {
    for (const auto& v : y) {
      std::string l = pair_label(u, v);
      labels.push_back(l);
      a1[l] = u;
      a2[l] = v;
    }
  }
  FinSet carrier(std::move(labels));
  return {carrier, FinMap(carrier, x, std::move(a1)), FinMap(carrier, y, std::move(a2))};
}

PowerSet power_set_with_members(const FinSet& x, std::size_t bound) {
  if (x.size() > bound)
    throw BudgetError("power set of " + std::to_string(x.size()) +
                      " elements exceeds the bound of " + std::to_string(bound));
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;
  const auto& ls = x.labels();
  for (std::size_t mask = 0; mask < (std::size_t{1} << ls.size()); ++mask) {
    std::vector<std::string> members;
    for (std::size_t i = 0; i < ls.size(); ++i)
      if (mask & (std::size_t{1} << i)) members.push_back(ls[i]);
    entries.emplace_back(set_label(members), std::move(members));
  }
  std::sort(entries.begin(), entries.end());
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> members;
  for (auto& [l, m] : entries) {
    labels.push_back(l);
    members.push_back(std::move(m));
  }
  PowerSet out;
  out.carrier = FinSet(std::move(labels));
  out.members = std::move(members);
  return out;
}

FinSet power_set(const FinSet& x, std::size_t bound) {
  return power_set_with_members(x, bound).carrier;
}

FinMap preimage_map(const FinMap& f, std::size_t bound) {
  PowerSet pc = power_set_with_members(f.cod(), bound);
  PowerSet pd = power_set_with_members(f.dom(), bound);
  std::map<std::string, std::string> a;
  for (std::size_t i = 0; i < pc.carrier.size(); ++i) {
    a[pc.carrier.labels()[i]] = set_label(sorted_preimage(f, pc.members[i]));
  }
  return FinMap(pc.carrier, pd.carrier, std::move(a));
}

}  // namespace catgraph
