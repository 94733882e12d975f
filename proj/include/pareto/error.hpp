#pragma once

#include <stdexcept>
#include <string>

namespace pareto {

// Invalid parameter or malformed argument (non-bijective map, n < 2, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An outcome identifier that the attached OutcomeDomain does not know.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operation defined only for real-valued (Level) profiles was given outcomes.
class UnsupportedDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Search or enumeration would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. The message carries the location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pareto
