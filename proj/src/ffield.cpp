#include "pgx/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace pgx {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomial arithmetic over GF(p), coefficient vectors constant term
// first.  Only used during construction (modulus search, table building);
// element arithmetic afterwards goes through the log/exp tables.
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return trim(out);
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  a = trim(a);
  while (a.size() >= b.size()) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t t = std::uint64_t{b[i]} * lead % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    a = trim(a);
  }
  return a;
}

bool poly_is_zero(const Poly& a) { return trim(a).empty(); }

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& monic, std::uint64_t p) {
  std::size_t deg = monic.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly div(d + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) { div[i] = static_cast<std::uint32_t>(v % p); v /= p; }
      div[d] = 1;
      if (poly_is_zero(poly_mod(monic, div, p))) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field::Field(std::uint64_t p, std::uint32_t k) : p_(p), k_(k) {
  q_ = 1;
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;

  // Lexicographically least monic irreducible of degree k, comparing
  // coefficient tuples constant term first.  The constant coefficient is the
  // most significant position of the scan, so it varies slowest.
  std::vector<std::uint32_t> cs(k, 0);
  for (;;) {
    Poly candidate(cs.begin(), cs.end());
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) {
      modulus_.assign(candidate.begin(), candidate.end());
      break;
    }
    // Odometer step with the last coefficient fastest.
    std::int32_t i = static_cast<std::int32_t>(k) - 1;
    while (i >= 0 && cs[i] == p - 1) cs[i--] = 0;
    if (i < 0) throw construction_error("no irreducible polynomial found");  // unreachable
    ++cs[i];
  }

  // Find the least generator using raw polynomial arithmetic, then lay out
  // the discrete log tables from it.
  Poly mod(modulus_.begin(), modulus_.end());
  auto raw_mul = [&](std::uint32_t a, std::uint32_t b) {
    Poly pa = [&](std::uint32_t v) {
      Poly c(k, 0);
      for (std::uint32_t i = 0; i < k; ++i) { c[i] = static_cast<std::uint32_t>(v % p); v = static_cast<std::uint32_t>(v / p); }
      return c;
    }(a);
    Poly pb(k, 0);
    { std::uint32_t v = b; for (std::uint32_t i = 0; i < k; ++i) { pb[i] = static_cast<std::uint32_t>(v % p); v = static_cast<std::uint32_t>(v / p); } }
    Poly r = poly_mod(poly_mul(pa, pb, p), mod, p);
    std::uint32_t out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = static_cast<std::uint32_t>(out * p + r[i]);
    return out;
  };
  auto raw_pow = [&](std::uint32_t a, std::uint64_t n) {
    std::uint32_t r = 1;
    while (n) {
      if (n & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      n >>= 1;
    }
    return r;
  };

  std::uint64_t phi = q_ - 1;
  auto factors = prime_factors(phi);
  auto order_of = [&](std::uint32_t a) {
    std::uint64_t n = phi;
    for (auto r : factors)
      while (n % r == 0 && raw_pow(a, n / r) == 1) n /= r;
    return n;
  };
  generator_ = 1;
  for (std::uint32_t v = 1; v < q_; ++v) {
    if (order_of(v) == phi) { generator_ = v; break; }
  }

  exp_.resize(phi ? phi : 1);
  log_.assign(q_, 0);
  std::uint32_t acc = 1;
  for (std::uint64_t i = 0; i < phi; ++i) {
    exp_[i] = acc;
    log_[acc] = static_cast<std::uint32_t>(i);
    acc = raw_mul(acc, generator_);
  }
}

std::string Field::modulus_text() const {
  // Human-readable polynomial, highest degree first, e.g. "x^4 + x^3 + x^2 + 1".
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c > 1) os << c;
    if (i >= 1) {
      if (c > 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0;
  std::uint32_t mult = 1;
  const std::uint32_t p = static_cast<std::uint32_t>(p_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t da = a % p, db = b % p;
    a /= p; b /= p;
    std::uint32_t s = da + db;
    if (s >= p) s -= p;
    out += s * mult;
    mult *= p;
  }
  return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  std::uint32_t out = 0;
  std::uint32_t mult = 1;
  const std::uint32_t p = static_cast<std::uint32_t>(p_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t da = a % p;
    a /= p;
    out += (da ? p - da : 0) * mult;
    mult *= p;
  }
  return out;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t phi = q_ - 1;
  std::uint64_t e = log_[a] + log_[b];
  if (e >= phi) e -= phi;
  return exp_[e];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
  std::uint64_t phi = q_ - 1;
  std::uint64_t e = (phi - log_[a]) % phi;
  return exp_[e];
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t n) const {
  if (a == 0) {
    if (n < 0) throw domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
    return n == 0 ? 1 : 0;
  }
  std::uint64_t phi = q_ - 1;
  if (phi == 0) return 1;
  std::int64_t e = static_cast<std::int64_t>(log_[a]) * 1;
  // Reduce the exponent mod q-1 before scaling to avoid overflow on |n|.
  std::int64_t nm = n % static_cast<std::int64_t>(phi);
  if (nm < 0) nm += static_cast<std::int64_t>(phi);
  std::uint64_t total = static_cast<std::uint64_t>(e) * static_cast<std::uint64_t>(nm) % phi;
  return exp_[total];
}

std::uint64_t Field::unit_order(std::uint32_t a) const {
  if (a == 0) throw domain_error("multiplicative order of zero");
  std::uint64_t phi = q_ - 1;
  if (phi == 0) return 1;
  // order = (q-1) / gcd(q-1, log a)
  return phi / std::gcd(phi, static_cast<std::uint64_t>(log_[a]));
}

std::vector<std::uint32_t> Field::coeffs(std::uint32_t a) const {
  std::vector<std::uint32_t> out(k_);
  const std::uint32_t p = static_cast<std::uint32_t>(p_);
  for (std::uint32_t i = 0; i < k_; ++i) { out[i] = a % p; a /= p; }
  return out;
}

std::uint32_t Field::pack(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() != k_) throw input_error("coefficient vector has wrong length");
  std::uint32_t out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw input_error("coefficient out of range");
    out = static_cast<std::uint32_t>(out * p_ + coeffs[i]);
  }
  return out;
}

std::shared_ptr<const Field> field_new(std::uint64_t p, std::uint32_t k, std::uint64_t cap) {
  if (!is_prime(p)) throw input_error("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw input_error("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > cap) {
      throw capacity_error("field size " + std::to_string(p) + "^" + std::to_string(k) +
                           " exceeds cap " + std::to_string(cap));
    }
  }

  static std::mutex registry_mutex;
  static std::map<std::pair<std::uint64_t, std::uint32_t>, std::shared_ptr<const Field>> registry;
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto key = std::make_pair(p, k);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto field = std::shared_ptr<const Field>(new Field(p, k));
  registry.emplace(key, field);
  return field;
}

namespace {
const Field& common_field(const FieldElement& x, const FieldElement& y) {
  if (!x.field || !y.field) throw input_error("field element without a field");
  if (!same_field(*x.field, *y.field)) throw input_error("operands from different fields");
  return *x.field;
}
}  // namespace

bool same_field(const Field& a, const Field& b) {
  return &a == &b || (a.characteristic() == b.characteristic() && a.degree() == b.degree());
}

FieldElement add(const FieldElement& x, const FieldElement& y) {
  const Field& f = common_field(x, y);
  return {x.field, f.add(x.value, y.value)};
}
FieldElement sub(const FieldElement& x, const FieldElement& y) {
  const Field& f = common_field(x, y);
  return {x.field, f.sub(x.value, y.value)};
}
FieldElement neg(const FieldElement& x) { return {x.field, x.field->neg(x.value)}; }
FieldElement mul(const FieldElement& x, const FieldElement& y) {
  const Field& f = common_field(x, y);
  return {x.field, f.mul(x.value, y.value)};
}
FieldElement inv(const FieldElement& x) { return {x.field, x.field->inv(x.value)}; }
FieldElement pow(const FieldElement& x, std::int64_t n) { return {x.field, x.field->pow(x.value, n)}; }
FieldElement frobenius_map(const FieldElement& x) { return {x.field, x.field->frobenius(x.value)}; }
std::uint64_t unit_order(const FieldElement& x) { return x.field->unit_order(x.value); }
FieldElement multiplicative_generator(const Field& f) { return {&f, f.generator()}; }

}  // namespace pgx
