#ifndef CHAINPAIR_ERRORS_HPP
#define CHAINPAIR_ERRORS_HPP

#include <stdexcept>

namespace chainpair {

/// A size guard or search-state cap was hit. Distinct from "infeasible".
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A solution could not be mapped back to a partition.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed chain, instance or solution file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chainpair

#endif  // CHAINPAIR_ERRORS_HPP
