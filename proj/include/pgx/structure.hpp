#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgx/groups.hpp"

namespace pgx {

enum class CheckStatus { Pass, Fail, Skip };

// "pass" / "fail" / "skip".
std::string check_status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  std::string detail;  // human-readable evidence, empty when nothing to add
};

struct VerificationReport {
  std::string subject;  // descriptor of the group under test
  std::string kind;     // "frobenius", "2frobenius", or "theorem"
  std::vector<CheckResult> checks;
  bool overall = false;  // true iff no check failed
};

struct FrobeniusWitness {
  Group kernel;
  Group complement;
};

// Checks that g is a Frobenius group with the given kernel and complement:
// kernel normal, |kernel|*|complement| = |g| with trivial intersection,
// the complement acts fixed-point-freely by conjugation, the kernel is
// nilpotent, |kernel| = 1 (mod |complement|), and every Sylow subgroup of the
// complement is cyclic (for the prime 2: cyclic or a unique involution).
// One CheckResult per condition; throws input_error if a witness is not a
// subgroup of g.
VerificationReport verify_frobenius(const Group& g, const FrobeniusWitness& w);

// Checks that 1 < h < k < g is a 2-Frobenius series: h and k normal in g,
// k Frobenius with kernel h (some cyclic complement inside k), g/h Frobenius
// with kernel k/h, and the layer orders split the primes as pi(k/h) = {3},
// pi(h) u pi(g/k) = {2,5}.  Throws input_error if h or k is not a subgroup
// of g.
VerificationReport verify_2frobenius(const Group& g, const Group& h, const Group& k);

// Searches g for a Frobenius decomposition: for each prime-graph component
// pi, collects the elements whose order involves only primes of pi, and when
// that set is a proper normal subgroup with a cyclic complement that passes
// verify_frobenius, returns the witness.  Returns nullopt when no component
// yields one.  Throws input_error when the prime graph of g is connected
// (the search is only meaningful for disconnected graphs).
std::optional<FrobeniusWitness> find_frobenius_structure(const Group& g);

// All normal subgroups of g, sorted by order (trivial subgroup and g
// included).  Every normal subgroup is a join of normal closures of
// conjugacy classes, so the join-closure of the class closures is complete.
std::vector<Group> normal_subgroups(const Group& g);

// First pair (h, k) of normal subgroups, ordered by (|h|, |k|) ascending,
// for which verify_2frobenius(g, h, k) passes; nullopt if none does.
std::optional<std::pair<Group, Group>> find_2frobenius_series(const Group& g);

enum class TheoremCase { Case1, Case2, Case3, Case4, NoMatch };

// "Case1" .. "Case4", "NoMatch".
std::string theorem_case_name(TheoremCase c);

struct TheoremClassification {
  TheoremCase which = TheoremCase::NoMatch;
  VerificationReport report;
};

// Decides which case of the classification a group with the prime graph of
// pgl2(9) falls into:
//   Case1: Frobenius with abelian 3-group kernel,
//   Case2: Frobenius with {2,5}-kernel and cyclic complement of order 3,
//   Case3: 2-Frobenius series,
//   Case4: order 720 with maximal element orders {3,8,10} (spectral
//          identification with pgl2(9)).
// Groups whose prime graph differs from pgl2(9)'s classify as NoMatch.
TheoremClassification theorem_case(const Group& g);

}  // namespace pgx
