#pragma once

#include <stdexcept>
#include <string>

namespace gig {

// Invalid caller input: out-of-bounds coordinates, malformed paths,
// labelings that are not permutations, unparsable values.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A closed-form formula was asked to evaluate outside the grid sizes
// it is stated for.
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A request exceeded a configured enumeration / path-count cap.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gig
