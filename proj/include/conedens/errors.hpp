#pragma once

#include <stdexcept>
#include <string>

namespace conedens {

// A checker was called on inputs that violate a theorem hypothesis.
// Distinct from std::invalid_argument (malformed input) and from
// std::logic_error (an internal invariant breach, i.e. a bug).
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// The ideal family of the requested box exceeds the configured cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, std::uint64_t cap)
      : std::runtime_error(what), cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

// DSL text could not be parsed; position is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace conedens
