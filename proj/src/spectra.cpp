#include "pgx/spectra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pgx/errors.hpp"

namespace pgx {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  if (n == 0) throw input_error("prime_divisors(0) is undefined");
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

namespace {

bool contains_sorted(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

void require_divisor_closed(const std::vector<std::uint64_t>& orders) {
  for (std::uint64_t n : orders)
    for (std::uint64_t d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        if (!contains_sorted(orders, d) || !contains_sorted(orders, n / d))
          throw std::logic_error("spectrum is not divisor-closed at " + std::to_string(n));
      }
}

}  // namespace

Spectrum spectrum(const Group& g) {
  std::set<std::uint64_t> seen;
  for (const auto& e : g.elements()) seen.insert(g.element_order(e));
  Spectrum s;
  s.orders.assign(seen.begin(), seen.end());
  s.source_order = g.order();
  require_divisor_closed(s.orders);
  return s;
}

MuSet mu(const Spectrum& s) {
  MuSet m;
  for (std::uint64_t n : s.orders) {
    bool maximal = true;
    for (std::uint64_t k : s.orders)
      if (k != n && k % n == 0) {
        maximal = false;
        break;
      }
    if (maximal) m.maxima.push_back(n);
  }
  // Antichain + covering assertions; failures mean an engine bug.
  for (std::uint64_t a : m.maxima)
    for (std::uint64_t b : m.maxima)
      if (a != b && b % a == 0)
        throw std::logic_error("mu is not an antichain: " + std::to_string(a) + " divides " +
                               std::to_string(b));
  for (std::uint64_t n : s.orders) {
    bool covered = false;
    for (std::uint64_t a : m.maxima)
      if (a % n == 0) {
        covered = true;
        break;
      }
    if (!covered)
      throw std::logic_error("mu does not cover spectrum member " + std::to_string(n));
  }
  return m;
}

PrimeGraph prime_graph(const Spectrum& s) {
  PrimeGraph g;
  std::set<std::uint64_t> primes;
  for (std::uint64_t n : s.orders)
    for (std::uint64_t p : prime_divisors(n)) primes.insert(p);
  g.vertices.assign(primes.begin(), primes.end());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      std::uint64_t p = g.vertices[i], q = g.vertices[j];
      if (contains_sorted(s.orders, p * q)) g.edges.emplace_back(p, q);
    }
  return g;
}

std::vector<std::vector<std::uint64_t>> components(const PrimeGraph& g) {
  std::vector<std::vector<std::uint64_t>> parts;
  std::vector<char> visited(g.vertices.size(), 0);
  auto index_of = [&](std::uint64_t v) {
    return static_cast<std::size_t>(
        std::lower_bound(g.vertices.begin(), g.vertices.end(), v) - g.vertices.begin());
  };
  for (std::size_t start = 0; start < g.vertices.size(); ++start) {
    if (visited[start]) continue;
    std::vector<std::uint64_t> part;
    std::vector<std::size_t> stack{start};
    visited[start] = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      part.push_back(g.vertices[i]);
      for (const auto& [p, q] : g.edges) {
        if (p == g.vertices[i]) {
          std::size_t j = index_of(q);
          if (!visited[j]) visited[j] = 1, stack.push_back(j);
        } else if (q == g.vertices[i]) {
          std::size_t j = index_of(p);
          if (!visited[j]) visited[j] = 1, stack.push_back(j);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  // Scanning starts from ascending vertices, so parts are already ordered by
  // least member.
  return parts;
}

bool graphs_equal(const PrimeGraph& a, const PrimeGraph& b) {
  return a.vertices == b.vertices && a.edges == b.edges;
}

}  // namespace pgx
