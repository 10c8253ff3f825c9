#pragma once

#include <stdexcept>
#include <string>

namespace causatum {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed KB text. Carries the 1-based line number of the offending input.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A precondition on operation inputs does not hold.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Input exceeds a configured enumeration limit.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

// Conditioning on an event of probability zero.
class NullConditioningError : public DomainError {
 public:
  explicit NullConditioningError(const std::string& what) : DomainError(what) {}
};

// The rule base contains a cycle reachable from the goal.
class CycleError : public Error {
 public:
  explicit CycleError(const std::string& what) : Error(what) {}
};

// The effect already follows from the field; no scenario is needed.
class DegenerateEffectError : public DomainError {
 public:
  explicit DegenerateEffectError(const std::string& what) : DomainError(what) {}
};

// No candidate world has positive posterior mass.
class NoExplanationError : public DomainError {
 public:
  explicit NoExplanationError(const std::string& what) : DomainError(what) {}
};

// Two explanation structures do not share a topology.
class StructureError : public Error {
 public:
  explicit StructureError(const std::string& what) : Error(what) {}
};

}  // namespace causatum
