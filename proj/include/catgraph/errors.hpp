#pragma once

#include <stdexcept>
#include <string>

namespace catgraph {

// Input could not be read as the requested structure. Carries a location hint
// (byte offset or JSON pointer) when one is available.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input parsed but is not of the kind an operation accepts (wrong tag, or a
// constraint of the claimed kind fails, e.g. a non-symmetric digraph where a
// symmetric one is required).
class KindError : public std::runtime_error {
public:
  explicit KindError(const std::string& what) : std::runtime_error(what) {}
};

// A size or enumeration budget would be exceeded.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace catgraph
