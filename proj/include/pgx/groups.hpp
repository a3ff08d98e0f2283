#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "pgx/ffield.hpp"

namespace pgx {

class GroupElement;

// Bijection of {0..n-1}; image[i] is where point i goes.  Rendered 1-based in
// cycle notation at the text boundary.
struct Permutation {
  std::vector<std::uint16_t> image;
  bool operator==(const Permutation&) const = default;
};

// Canonical representative of a projective 2x2 matrix [[a,b],[c,d]]: the
// first nonzero entry in reading order is scaled to 1, determinant nonzero.
struct ProjMat {
  FieldElement a, b, c, d;
  bool operator==(const ProjMat&) const = default;
};

// Tuple of field elements, one per factor of a direct product of
// field-derived abelian groups (additive or multiplicative per factor).
struct DirectPair {
  std::vector<FieldElement> parts;
  bool operator==(const DirectPair&) const = default;
};

// Element (k, c) of a semidirect product K x| C.  Parts are boxed because the
// kernel or complement may itself be a semidirect product.
struct SemidirectPair {
  std::shared_ptr<const GroupElement> kernel_part;
  std::shared_ptr<const GroupElement> complement_part;
  bool operator==(const SemidirectPair& other) const;
};

class GroupElement {
 public:
  using Payload = std::variant<Permutation, ProjMat, DirectPair, SemidirectPair>;

  GroupElement() : payload_(Permutation{}) {}
  explicit GroupElement(Payload payload) : payload_(std::move(payload)) {}

  const Payload& payload() const { return payload_; }

  const Permutation* as_permutation() const { return std::get_if<Permutation>(&payload_); }
  const ProjMat* as_proj_mat() const { return std::get_if<ProjMat>(&payload_); }
  const DirectPair* as_direct_pair() const { return std::get_if<DirectPair>(&payload_); }
  const SemidirectPair* as_semidirect_pair() const { return std::get_if<SemidirectPair>(&payload_); }

  bool operator==(const GroupElement& other) const { return payload_ == other.payload_; }

 private:
  Payload payload_;
};

// Total order used for deterministic reporting; compares the variant tag
// first, then the payload contents.
int compare(const GroupElement& a, const GroupElement& b);
inline bool element_less(const GroupElement& a, const GroupElement& b) { return compare(a, b) < 0; }

struct ElementHash {
  std::size_t operator()(const GroupElement& e) const;
};

GroupElement semidirect_pair(GroupElement kernel_part, GroupElement complement_part);

// Scales (a,b,c,d) so the first nonzero entry is 1.  input_error on a
// singular or mixed-field tuple.
GroupElement make_proj_mat(const FieldElement& a, const FieldElement& b,
                           const FieldElement& c, const FieldElement& d);

class ActionTable;

// A finite group: a multiplication rule (permutation composition, canonical
// projective matrices, field-factor tuples, or a semidirect glue of two
// groups) plus an optional explicit element list for generated subgroups.
// Group values are cheap shared handles; the underlying data is immutable
// and enumeration caches fill at most once (thread-safe).
class Group {
 public:
  static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

  // Closure of `gens` inside Sym({1..degree}); enumerates eagerly.
  static Group permutation_group(std::uint32_t degree, std::vector<GroupElement> gens,
                                 std::string descriptor, std::uint64_t cap = kDefaultCap);

  // All canonical invertible 2x2 projective matrices over f; with
  // `square_determinants_only` the determinant must be a nonzero square.
  static Group projective_group(std::shared_ptr<const Field> f, bool square_determinants_only,
                                std::string descriptor, std::uint64_t cap = kDefaultCap);

  static Group field_additive(std::shared_ptr<const Field> f, std::uint64_t cap = kDefaultCap);
  static Group field_multiplicative(std::shared_ptr<const Field> f, std::uint64_t cap = kDefaultCap);

  // Concatenates the factor lists of two field-factor groups.
  static Group direct_product(const Group& a, const Group& b);

  // K x| C with the action given by a validated table over exactly these two
  // groups.  Multiplication uses the left-action convention
  //   (k1, c1) * (k2, c2) = (k1 * act(c1)(k2), c1 * c2).
  static Group semidirect(const Group& kernel, const Group& complement,
                          std::shared_ptr<const ActionTable> act, std::string descriptor = "");

  // Subgroup generated by `gens` (which must lie in this group); carries the
  // parent's multiplication rule and enumerates eagerly.
  Group subgroup_generated(std::vector<GroupElement> gens, std::string descriptor = "") const;

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;

  // Least n >= 1 with g^n = 1, by iterated multiplication.
  std::uint64_t element_order(const GroupElement& g) const;

  // Group order; known structurally without enumeration where the
  // representation allows it.
  std::uint64_t order() const;

  // Deterministically ordered element list (cached; capacity_error if the
  // order exceeds the cap).
  const std::vector<GroupElement>& elements() const;

  bool contains(const GroupElement& g) const;

  // A generating set: the constructing generators where the group has them,
  // canonical per-factor generators for field-factor groups, embedded
  // kernel/complement generators for semidirect products, and the full
  // element list as a last resort.
  std::vector<GroupElement> generators() const;

  bool is_abelian() const;
  bool is_cyclic() const;

  // True iff for every prime p | |G| the set of p-power-order elements is
  // multiplication-closed and exactly as large as the p-part of |G|.
  bool is_nilpotent() const;

  const std::string& descriptor() const;
  std::uint64_t cap() const;

  // Representation queries used by the structure layer.
  bool is_semidirect() const;
  const Group& semidirect_kernel() const;
  const Group& semidirect_complement() const;
  const ActionTable& semidirect_action() const;
  bool is_field_factor_group() const;

  bool same_underlying(const Group& other) const { return impl_ == other.impl_; }

 private:
  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Exhaustive normality check: g h g^-1 stays in H for every enumerated g.
bool is_normal(const Group& g, const Group& h);

// Precomputed action of a complement group on a kernel group: one bijective
// kernel map per complement element.  Validated on construction to be a
// homomorphism into Aut(kernel); violations raise construction_error naming
// the failed identity and a witness.
class ActionTable {
 public:
  using ActionFn = std::function<GroupElement(const GroupElement& c, const GroupElement& k)>;

  static std::shared_ptr<const ActionTable> build(const Group& kernel, const Group& complement,
                                                  const ActionFn& act);

  const Group& kernel() const { return kernel_; }
  const Group& complement() const { return complement_; }

  GroupElement apply(const GroupElement& c, const GroupElement& k) const;
  std::uint32_t apply_index(std::uint32_t complement_index, std::uint32_t kernel_index) const {
    return maps_[complement_index][kernel_index];
  }
  std::uint32_t kernel_index(const GroupElement& k) const;
  std::uint32_t complement_index(const GroupElement& c) const;

 private:
  ActionTable(Group kernel, Group complement);

  Group kernel_;
  Group complement_;
  std::vector<std::vector<std::uint32_t>> maps_;
  std::unordered_map<GroupElement, std::uint32_t, ElementHash> kernel_index_;
  std::unordered_map<GroupElement, std::uint32_t, ElementHash> complement_index_;
};

// True iff no non-identity complement element fixes a non-identity kernel
// element under the action.
bool is_fixed_point_free(const Group& kernel, const Group& complement, const ActionTable& act);

// The kernel and complement of a semidirect product, embedded as subgroups
// {(k, 1)} and {(1, c)} of it.
std::pair<Group, Group> semidirect_embedded_parts(const Group& g);

// Compact deterministic text form: permutations in 1-based cycle notation
// ("()" for the identity), matrices as [[a,b],[c,d]] over packed values,
// field tuples as (v1,v2,...), semidirect pairs as (kernel | complement).
std::string element_text(const GroupElement& e);

// Permutation of {1..degree} from 1-based cycles; the cycles must be disjoint
// with all points in range (input_error otherwise).
GroupElement permutation_from_cycles(std::uint32_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles);

}  // namespace pgx
