#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace catgraph {

/**
 * Outcome of one law instance. A failing report carries a witness naming the
 * violated condition and the offending element, with enough of the instance
 * recorded to reproduce the failure from the report alone.
 */
struct LawReport {
  std::string law;
  std::string instance;
  bool pass = true;
  std::string witness;
  std::vector<std::pair<std::string, std::int64_t>> counts;

  static LawReport passed(std::string law, std::string instance) {
    LawReport r;
    r.law = std::move(law);
    r.instance = std::move(instance);
    return r;
  }

  static LawReport failed(std::string law, std::string instance, std::string witness) {
    LawReport r;
    r.law = std::move(law);
    r.instance = std::move(instance);
    r.pass = false;
    r.witness = std::move(witness);
    return r;
  }

  LawReport& count(const std::string& key, std::int64_t value) {
    counts.emplace_back(key, value);
    return *this;
  }
};

}  // namespace catgraph
