#include "catgraph/coreflectors.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "catgraph/errors.hpp"
#include "catgraph/labels.hpp"

namespace catgraph {

namespace {

Coreflection cosimplify_q1(const CommaObject& x) {
  std::set<std::string> touched;
  for (const auto& e : x.a_part) {
    auto [v, w] = split_pair_label(x.f(e));
    touched.insert(v);
    touched.insert(w);
  }
  FinSet trimmed(std::vector<std::string>(touched.begin(), touched.end()));
  FinSet carrier = product_set(trimmed, trimmed).carrier;
  std::map<std::string, std::string> a;
  for (const auto& e : x.a_part) a[e] = x.f(e);
  CommaObject result(Presentation::Q1, x.a_part, {trimmed},
                     FinMap(x.a_part, carrier, std::move(a)));
  CommaMorphism counit{result, x, FinMap::identity(x.a_part),
                       {FinMap::inclusion(trimmed, x.b_parts[0])}};
  return {std::move(result), std::move(counit)};
}

Coreflection cosimplify_r1(const CommaObject& x) {
  std::set<std::string> vs, es;
  for (const auto& i : x.a_part) {
    auto [v, e] = split_pair_label(x.f(i));
    vs.insert(v);
    es.insert(e);
  }
  FinSet tv(std::vector<std::string>(vs.begin(), vs.end()));
  FinSet te(std::vector<std::string>(es.begin(), es.end()));
  FinSet carrier = product_set(tv, te).carrier;
  std::map<std::string, std::string> a;
  for (const auto& i : x.a_part) a[i] = x.f(i);
  CommaObject result(Presentation::R1, x.a_part, {tv, te},
                     FinMap(x.a_part, carrier, std::move(a)));
  CommaMorphism counit{result, x, FinMap::identity(x.a_part),
                       {FinMap::inclusion(tv, x.b_parts[0]),
                        FinMap::inclusion(te, x.b_parts[1])}};
  return {std::move(result), std::move(counit)};
}

Coreflection cosimplify_p1(const CommaObject& x) {
  std::set<std::string> values;
  for (const auto& e : x.b_parts[0]) values.insert(x.f(e));
  FinSet coran(std::vector<std::string>(values.begin(), values.end()));
  CommaObject result(Presentation::P1, x.a_part, {coran},
                     FinMap::inclusion(coran, x.f.cod()));
  std::map<std::string, std::string> collapse;
  for (const auto& e : x.b_parts[0]) collapse[e] = x.f(e);
  CommaMorphism counit{result, x, FinMap::identity(x.a_part),
                       {FinMap(x.b_parts[0], coran, std::move(collapse))}};
  return {std::move(result), std::move(counit)};
}

}  // namespace

Coreflection cosimplify(const CommaObject& x) {
  switch (x.pres) {
    case Presentation::Q1: return cosimplify_q1(x);
    case Presentation::R1: return cosimplify_r1(x);
    case Presentation::P1: return cosimplify_p1(x);
    case Presentation::H1:
      throw KindError("cosimplify is not defined over H1");
  }
  throw std::logic_error("unreachable");
}

Coreflection cosimplify_quiver(const Quiver& q) { return cosimplify(to_comma(q)); }
Coreflection cosimplify_inc(const IncHypergraph& g) { return cosimplify(to_comma(g)); }
Coreflection cosimplify_p(const SSHypergraph& h) {
  return cosimplify(to_comma_anti(h));
}

CommaMorphism factor_through_cosimplification(const CommaMorphism& m) {
  if (!is_cosimple(m.dom))
    throw KindError("factor_through_cosimplification requires a cosimple source");
  Coreflection c = cosimplify(m.cod);

  if (m.dom.pres == Presentation::P1) {
    std::map<std::string, std::string> rev;
    for (const auto& e : m.cod.b_parts[0]) {
      std::string cls = m.cod.f(e);
      std::string value = m.psis[0](e);
      auto [it, inserted] = rev.emplace(cls, value);
      if (!inserted && it->second != value)
        throw std::logic_error("cosimple factorization is not well defined");
    }
    CommaMorphism out{m.dom, c.result, m.phi,
                      {FinMap(c.result.b_parts[0], m.dom.b_parts[0], std::move(rev))}};
    if (!validate(out).pass)
      throw std::logic_error("factored morphism fails its square");
    return out;
  }

  std::vector<FinMap> psis;
  for (std::size_t i = 0; i < m.psis.size(); ++i) {
    const FinSet& trimmed = c.result.b_parts[i];
    std::map<std::string, std::string> a;
    for (const auto& b : m.dom.b_parts[i]) {
      if (!trimmed.contains(m.psis[i](b)))
        throw std::logic_error("cosimple factorization leaves the trimmed carrier");
      a[b] = m.psis[i](b);
    }
    psis.emplace_back(m.dom.b_parts[i], trimmed, std::move(a));
  }
  CommaMorphism out{m.dom, c.result, m.phi, std::move(psis)};
  if (!validate(out).pass)
    throw std::logic_error("factored morphism fails its square");
  return out;
}

CommaMorphism cosimplify_morphism(const CommaMorphism& m) {
  Coreflection cd = cosimplify(m.dom);
  Coreflection cc = cosimplify(m.cod);

  if (m.dom.pres == Presentation::P1) {
    std::map<std::string, std::string> rev;
    for (const auto& cls : cc.result.b_parts[0])
      rev[cls] = set_label(sorted_preimage(m.phi, split_set_label(cls)));
    CommaMorphism out{cd.result, cc.result, m.phi,
                      {FinMap(cc.result.b_parts[0], cd.result.b_parts[0], std::move(rev))}};
    if (!validate(out).pass)
      throw std::logic_error("trimmed morphism fails its square");
    return out;
  }

  std::vector<FinMap> psis;
  for (std::size_t i = 0; i < m.psis.size(); ++i) {
    std::map<std::string, std::string> a;
    for (const auto& b : cd.result.b_parts[i]) a[b] = m.psis[i](b);
    psis.emplace_back(cd.result.b_parts[i], cc.result.b_parts[i], std::move(a));
  }
  CommaMorphism out{cd.result, cc.result, m.phi, std::move(psis)};
  if (!validate(out).pass)
    throw std::logic_error("trimmed morphism fails its square");
  return out;
}

bool is_loaded(const Quiver& q) { return is_cosimple(to_comma(q)); }
bool is_full_incidence(const IncHypergraph& g) { return is_cosimple(to_comma(g)); }

FinMap pairing_unit_q1(const FinSet& x) {
  std::vector<std::string> tagged;
  for (const auto& l : x) {
    tagged.push_back(tag_label(0, l));
    tagged.push_back(tag_label(1, l));
  }
  FinSet two_copies(std::move(tagged));
  FinSet carrier = product_set(two_copies, two_copies).carrier;
  std::map<std::string, std::string> a;
  for (const auto& l : x) a[l] = pair_label(tag_label(0, l), tag_label(1, l));
  return FinMap(x, carrier, std::move(a));
}

FinMap pairing_unit_r1(const FinSet& x) {
  FinSet carrier = product_set(x, x).carrier;
  std::map<std::string, std::string> a;
  for (const auto& l : x) a[l] = pair_label(l, l);
  return FinMap(x, carrier, std::move(a));
}

}  // namespace catgraph
