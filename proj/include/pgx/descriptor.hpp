#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgx/groups.hpp"

namespace pgx {

enum class DescriptorKind { Pgl2, Psl2, Alt, Sym, Frobfield, Perm, PaperG1, PaperG2, PaperG3 };

// A parsed construction recipe.  Grammar:
//   descriptor := name "(" args ")" | "paper.g1" | "paper.g2" | "paper.g3"
//   name       := "pgl2" | "psl2" | "alt" | "sym" | "frobfield" | "perm"
//   args       := integer ("," integer)*
//                 except perm: degree ";" cycle-list ("," cycle-list)*
//   cycle-list := ( "(" integer+ ")" )+     1-based points, whitespace-separated
struct Descriptor {
  DescriptorKind kind = DescriptorKind::PaperG1;
  std::vector<std::uint64_t> args;  // pgl2/psl2/alt/sym: 1 value; frobfield: p, k, m
  std::uint32_t degree = 0;         // perm only
  // perm only: one entry per generator, each a list of cycles of 1-based points.
  std::vector<std::vector<std::vector<std::uint32_t>>> perm_gens;
  bool operator==(const Descriptor&) const = default;
};

// Parses the grammar above; parse_error (with byte position) on bad syntax,
// unknown names, or wrong arity.  Round-trips: parse_descriptor(render(d))
// == d for every parseable d.
Descriptor parse_descriptor(const std::string& text);

// Canonical text form: numeric args without spaces ("frobfield(3,4,80)"),
// permutations as "perm(5; (1 2)(3 4), (1 2 3))".
std::string render(const Descriptor& d);

// Builds the described group; its descriptor() is render(d).  Errors
// propagate from the constructions (input_error, capacity_error, ...).
Group realize(const Descriptor& d, std::uint64_t cap = Group::kDefaultCap);

// Comma-separated generator list in the perm cycle syntax, e.g.
// "(1 2)(3 4), (1 2 3)"; used for witness flags.  Empty or blank text yields
// no generators.  parse_error on bad syntax, input_error on out-of-range or
// repeated points.
std::vector<GroupElement> parse_permutation_words(const std::string& text, std::uint32_t degree);

}  // namespace pgx
