#pragma once

#include <cstdint>

#include "pgx/groups.hpp"

namespace pgx {

// PGL(2,q) as canonical projective matrices over GF(q); order q^3 - q.
// q must be a prime power.  For even q this coincides with PSL(2,q).
Group pgl2(std::uint64_t q, std::uint64_t cap = Group::kDefaultCap);

// PSL(2,q): the canonical matrices whose determinant is a nonzero square;
// order (q^3 - q)/2 for odd q, q^3 - q for even q.
Group psl2(std::uint64_t q, std::uint64_t cap = Group::kDefaultCap);

// Permutation groups from standard generators:
//   symmetric(n)   = <(1 2), (1 2 ... n)>
//   alternating(n) = <(1 2 3), (2 3 4), ..., (n-2 n-1 n)>
Group alternating(std::uint32_t n, std::uint64_t cap = Group::kDefaultCap);
Group symmetric(std::uint32_t n, std::uint64_t cap = Group::kDefaultCap);

// GF(p^k)+ x| C_m where C_m is the unique order-m subgroup of the unit group
// acting by multiplication.  Frobenius for every m > 1 (the action is fixed
// point free); m = 1 degenerates to the additive group with a trivial
// complement.  input_error when m does not divide p^k - 1.
Group frobenius_field(std::uint64_t p, std::uint32_t k, std::uint64_t m,
                      std::uint64_t cap = Group::kDefaultCap);

// The three named solvable witnesses with prime graph equal to Γ(PGL(2,9)).
//
// paper.g1: GF(81)+ x| GF(81)*, the full multiplication action; Frobenius of
// order 6480 with cyclic complement of order 80.
Group paper_g1();

// paper.g2: (GF(4)+ x GF(25)+) x| C3 where C3 = <(w, b)> acts diagonally by
// coordinate-wise multiplication, w of order 3 in GF(4)*, b of order 3 in
// GF(25)*; Frobenius of order 300.  The diagonal C3 (rather than the full
// 72-element unit-group product, which fixes (0, y) pointwise under (h, 1))
// is what makes the action fixed point free with a cyclic 3-group complement.
Group paper_g2();

// paper.g3: GF(25)+ x| T with T = <b> x| <f> of order 6, where b of order 3
// in GF(25)* acts by multiplication and f is the 5th-power (Frobenius field)
// automorphism.  Conjugation in T sends b to b^5 = b^-1, so t -> (v -> value
// action) is a genuine homomorphism T -> Aut(GF(25)+); realizing f as plain
// multiplication would not be one.  2-Frobenius of order 150 with normal
// series 1 < H < K < G, |H| = 25, |K/H| = 3, |G/K| = 2.
Group paper_g3();

// The normal series witnesses of paper.g3, as subgroups of it:
// h = the embedded GF(25)+ (order 25), k = h extended by b (order 75).
struct SeriesWitness {
  Group g;
  Group h;
  Group k;
};
SeriesWitness paper_g3_series();

}  // namespace pgx
