#include "catgraph/labels.hpp"

#include <algorithm>
#include <stdexcept>

namespace catgraph {

namespace {

// Splits "a,b,c" at commas that sit outside every bracket pair.
std::vector<std::string> split_top_level(const std::string& body) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : body) {
    if (c == '(' || c == '{') depth++;
    if (c == ')' || c == '}') depth--;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::pair<std::string, std::string> split_pair_label(const std::string& label) {
  if (label.size() < 3 || label.front() != '(' || label.back() != ')')
    throw std::invalid_argument("not a pair label: " + label);
  auto parts = split_top_level(label.substr(1, label.size() - 2));
  if (parts.size() != 2)
    throw std::invalid_argument("not a pair label: " + label);
  return {parts[0], parts[1]};
}

std::string set_label(std::vector<std::string> members) {
  std::sort(members.begin(), members.end());
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += members[i];
  }
  out += "}";
  return out;
}

std::vector<std::string> split_set_label(const std::string& label) {
  if (label.size() < 2 || label.front() != '{' || label.back() != '}')
    throw std::invalid_argument("not a set label: " + label);
  std::string body = label.substr(1, label.size() - 2);
  if (body.empty()) return {};
  return split_top_level(body);
}

std::string tag_label(int side, const std::string& label) {
  return (side == 0 ? "0:" : "1:") + label;
}

bool well_formed_label(const std::string& label) {
  if (label.empty()) return false;
  std::vector<char> stack;
  for (char c : label) {
    if (c == '(' || c == '{') stack.push_back(c);
    if (c == ')') {
      if (stack.empty() || stack.back() != '(') return false;
      stack.pop_back();
    }
    if (c == '}') {
      if (stack.empty() || stack.back() != '{') return false;
      stack.pop_back();
    }
    if (c == ',' && stack.empty()) return false;
  }
  return stack.empty();
}

}  // namespace catgraph
