#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pgx/groups.hpp"

namespace pgx {

// pi_e(G): the set of element orders, ascending and divisor-closed.
struct Spectrum {
  std::vector<std::uint64_t> orders;
  std::uint64_t source_order = 1;  // |G|

  bool operator==(const Spectrum&) const = default;
};

// The divisibility-maximal members of a spectrum; the spectrum is exactly the
// divisor closure of this antichain.
struct MuSet {
  std::vector<std::uint64_t> maxima;

  bool operator==(const MuSet&) const = default;
};

// Graph on the primes dividing some spectrum member; {p,q} is an edge exactly
// when pq is itself an element order.
struct PrimeGraph {
  std::vector<std::uint64_t> vertices;                         // ascending
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // p < q, sorted

  bool operator==(const PrimeGraph&) const = default;
};

// Ascending prime support of n, by trial division.  input_error on n = 0.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Orders of all elements of g, deduplicated and ascending.  The result is
// checked to be divisor-closed (a group-theoretic certainty; violations mean
// an engine bug and raise logic_error).
Spectrum spectrum(const Group& g);

// Divisibility-maximal members of s; checked to be an antichain covering s.
MuSet mu(const Spectrum& s);

PrimeGraph prime_graph(const Spectrum& s);

// Connected components; each part ascending, parts ordered by least member.
// The part count is the invariant t(G).
std::vector<std::vector<std::uint64_t>> components(const PrimeGraph& g);

// Labeled equality: identical vertex sets and identical edge sets.
bool graphs_equal(const PrimeGraph& a, const PrimeGraph& b);

}  // namespace pgx
