#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgx {

// Bad argument values: non-prime characteristic, mixed-field operands,
// witness elements outside the group, and the like.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Arguments outside an operation's mathematical domain (inverse of zero,
// order of the zero element, ...).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration or construction would exceed the configured cap.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A composite object failed its construction-time validation, e.g. an action
// table that is not a homomorphism into the automorphisms of the kernel.
struct construction_error : std::runtime_error {
  explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

// Descriptor text rejected by the parser; `position` is a 0-based byte offset.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

}  // namespace pgx
