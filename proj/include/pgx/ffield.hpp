#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pgx/errors.hpp"

namespace pgx {

// Explicit finite field GF(p^k) in the polynomial basis.  Elements are packed
// residue vectors: the element with coefficients (c0, c1, ..., c_{k-1}),
// constant term first, is stored as the base-p integer c0 + c1*p + ... .
// That integer also defines the deterministic element order used everywhere.
//
// The modulus is pinned to the lexicographically least monic irreducible of
// degree k (coefficients compared constant-term-first), so two constructions
// of GF(p, k) agree element-for-element.  Fields are immutable once built;
// create them through field_new, which memoizes per (p, k).
class Field {
 public:
  static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

  std::uint64_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint64_t size() const { return q_; }

  // Monic modulus as k+1 coefficients, constant term first, leading 1 last.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string modulus_text() const;

  // Element arithmetic on packed values.  All inputs must be < size().
  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;          // domain_error on 0
  std::uint32_t pow(std::uint32_t a, std::int64_t n) const;
  std::uint32_t frobenius(std::uint32_t a) const { return pow(a, static_cast<std::int64_t>(p_)); }

  // Least n >= 1 with a^n = 1; divides q - 1.  domain_error on 0.
  std::uint64_t unit_order(std::uint32_t a) const;

  // Least element (in packed order) of multiplicative order q - 1.
  std::uint32_t generator() const { return generator_; }

  std::vector<std::uint32_t> coeffs(std::uint32_t a) const;
  std::uint32_t pack(const std::vector<std::uint32_t>& coeffs) const;

 private:
  friend std::shared_ptr<const Field> field_new(std::uint64_t, std::uint32_t, std::uint64_t);
  Field(std::uint64_t p, std::uint32_t k);

  std::uint64_t p_;
  std::uint32_t k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 0;
  // Discrete log tables: exp_[i] = generator^i for i < q-1, log_[x] defined
  // for units.  Multiplication and inversion go through these.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

// Builds (or fetches the memoized) GF(p^k).  Errors: input_error if p is not
// prime or k == 0, capacity_error if p^k exceeds `cap`.
std::shared_ptr<const Field> field_new(std::uint64_t p, std::uint32_t k,
                                       std::uint64_t cap = Field::kDefaultCap);

// A field element: an owning-field reference plus the packed value.  The
// field object outlives its elements (fields are memoized for the process
// lifetime, so this holds trivially for anything built via field_new).
struct FieldElement {
  const Field* field = nullptr;
  std::uint32_t value = 0;

  bool operator==(const FieldElement&) const = default;
};

// Operand fields must agree on (p, k); mixed-field arithmetic is an input_error.
FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldElement& x);
FieldElement mul(const FieldElement& x, const FieldElement& y);
FieldElement inv(const FieldElement& x);
FieldElement pow(const FieldElement& x, std::int64_t n);
FieldElement frobenius_map(const FieldElement& x);
std::uint64_t unit_order(const FieldElement& x);
FieldElement multiplicative_generator(const Field& f);

bool same_field(const Field& a, const Field& b);

}  // namespace pgx
