#pragma once

#include <stdexcept>
#include <string>

namespace syzcolor {

// Input text could not be read as a graph.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the domain of a bounding function or index.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Instance too large for an exhaustive (desk-scale) routine.
class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

// A caller broke a documented precondition (e.g. passed a non-clique).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace syzcolor
