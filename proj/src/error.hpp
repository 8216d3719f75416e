#pragma once

#include <stdexcept>
#include <string>

namespace npc {

// Input could not be read: bad JSON, bad polynomial text, undeclared
// variable, non-homogeneous generator, zero denominator.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested quantity is undefined or an argument is out of range.
struct value_error : std::runtime_error {
  explicit value_error(const std::string& what) : std::runtime_error(what) {}
};

// Random linear forms produced a wrong-dimensional scheme in every attempt.
struct genericity_error : std::runtime_error {
  explicit genericity_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Divisors do not intersect the variety (or each other) in the expected
// codimension.
struct improper_intersection_error : std::runtime_error {
  explicit improper_intersection_error(const std::string& what)
      : std::runtime_error(what) {}
};

struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace npc
