#pragma once

#include <string>
#include <utility>
#include <vector>

namespace catgraph {

// Canonical structured-label encodings. Derived carriers (products, power
// sets, quotients, coproducts) name their elements with these, so equality of
// constructed objects is literal string equality.

// "(a,b)"
std::string pair_label(const std::string& a, const std::string& b);
std::pair<std::string, std::string> split_pair_label(const std::string& label);

// "{a,b}" with members sorted; "{}" for the empty subset.
std::string set_label(std::vector<std::string> members);
std::vector<std::string> split_set_label(const std::string& label);

// Coproduct tagging: side 0 -> "0:x", side 1 -> "1:x".
std::string tag_label(int side, const std::string& label);

// A label is well formed when its brackets nest properly and commas appear
// only inside brackets. Splitting is unambiguous on well-formed labels.
bool well_formed_label(const std::string& label);

}  // namespace catgraph
