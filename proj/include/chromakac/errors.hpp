#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chromakac {

/// Malformed graph input. Carries the 1-based line number of the offending line.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A configured size guard was exceeded (vertex cap, lattice cap, oracle guards).
class size_limit_error : public std::runtime_error {
 public:
  size_limit_error(const std::string& message, std::uint64_t reached, std::uint64_t cap)
      : std::runtime_error(message + " (reached " + std::to_string(reached) + ", cap " +
                           std::to_string(cap) + ")"),
        reached_(reached),
        cap_(cap) {}

  std::uint64_t reached() const noexcept { return reached_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t reached_;
  std::uint64_t cap_;
};

/// An exact-arithmetic identity that must hold internally failed (e.g. a
/// rational coefficient that should have reduced to an integer did not).
class integrality_error : public std::logic_error {
 public:
  explicit integrality_error(const std::string& message) : std::logic_error(message) {}
};

/// Size guards for the exponential parts of the computation. All values are
/// overridable by callers; the defaults keep everything desk-scale.
struct Limits {
  int max_vertices = 16;
  std::uint64_t max_lattice_elements = 2'000'000;
  int max_coloring_colors = 8;
  int max_coloring_vertices = 10;
  int max_orientation_edges = 20;
};

}  // namespace chromakac
