#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "pgx/constructions.hpp"
#include "pgx/spectra.hpp"
#include "pgx/structure.hpp"
#include "property_suites.hpp"

using namespace pgx;
using pgx_tests::fleet;
using pgx_tests::nilpotent_oracle;
using pgx_tests::raw_orders;

TEST_CASE("spectra are divisor-closed across the whole fleet") {
  for (const Group& g : fleet()) {
    Spectrum s = spectrum(g);
    std::set<std::uint64_t> have(s.orders.begin(), s.orders.end());
    for (auto o : s.orders)
      for (std::uint64_t d = 1; d * d <= o; ++d)
        if (o % d == 0) {
          CHECK(have.count(d) == 1);
          CHECK(have.count(o / d) == 1);
        }
    // And the spectrum is exactly the set of element orders.
    std::set<std::uint64_t> raw;
    for (auto o : raw_orders(g)) raw.insert(o);
    CHECK(have == raw);
  }
}

TEST_CASE("mu is an antichain covering the spectrum across the fleet") {
  for (const Group& g : fleet()) {
    Spectrum s = spectrum(g);
    MuSet m = mu(s);
    std::set<std::uint64_t> have(s.orders.begin(), s.orders.end());
    for (auto v : m.maxima) CHECK(have.count(v) == 1);
    for (auto a : m.maxima)
      for (auto b : m.maxima)
        if (a != b) CHECK(b % a != 0);  // antichain under divisibility
    for (auto o : s.orders) {
      bool covered = false;
      for (auto v : m.maxima) covered = covered || (v % o == 0);
      CHECK(covered);
    }
  }
}

TEST_CASE("graph edges coincide with products of primes in raw element orders") {
  for (const Group& g : fleet()) {
    PrimeGraph graph = prime_graph(spectrum(g));
    std::vector<std::uint64_t> orders = raw_orders(g);

    // Vertices are exactly the primes dividing some element order.
    std::set<std::uint64_t> vertex_oracle;
    for (auto o : orders)
      for (auto p : prime_divisors(o)) vertex_oracle.insert(p);
    CHECK(std::set<std::uint64_t>(graph.vertices.begin(), graph.vertices.end()) ==
          vertex_oracle);

    std::set<std::pair<std::uint64_t, std::uint64_t>> edge_set(graph.edges.begin(),
                                                               graph.edges.end());
    for (auto p : graph.vertices)
      for (auto q : graph.vertices) {
        if (p >= q) continue;
        bool product_realized = false;
        for (auto o : orders) product_realized = product_realized || (o % (p * q) == 0);
        CHECK(edge_set.count({p, q}) == (product_realized ? 1u : 0u));
      }
  }
}

TEST_CASE("semidirect multiplication is associative over seeded random triples") {
  std::mt19937 rng(12345);
  std::size_t checked = 0;
  for (const Group& g :
       {paper_g1(), paper_g2(), paper_g3(), frobenius_field(2, 4, 15)}) {
    const auto& elems = g.elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int i = 0; i < 300; ++i) {
      const GroupElement& a = elems[pick(rng)];
      const GroupElement& b = elems[pick(rng)];
      const GroupElement& c = elems[pick(rng)];
      REQUIRE(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
      ++checked;
    }
    // Identity and inverse axioms on the same sampled elements.
    GroupElement id = g.identity();
    for (int i = 0; i < 100; ++i) {
      const GroupElement& a = elems[pick(rng)];
      REQUIRE(g.multiply(a, id) == a);
      REQUIRE(g.multiply(id, a) == a);
      REQUIRE(g.multiply(a, g.inverse(a)) == id);
    }
  }
  CHECK(checked == 1200);
}

TEST_CASE("is_nilpotent matches the direct-product-of-Sylows oracle at desk scale") {
  std::size_t covered = 0;
  for (const Group& g : fleet()) {
    if (g.order() > 2000) continue;
    CHECK(g.is_nilpotent() == nilpotent_oracle(g));
    ++covered;
  }
  CHECK(covered >= 20);
}

TEST_CASE("every frobenius_field over the (p,k,m) grid verifies as Frobenius") {
  std::size_t swept = 0;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t pk = p;
    for (std::uint32_t k = 1; pk <= 2401; ++k, pk *= p) {
      std::uint64_t units = pk - 1;
      for (std::uint64_t m = 2; m <= units; ++m) {
        if (units % m != 0) continue;
        Group g = frobenius_field(p, k, m);
        auto [kernel, complement] = semidirect_embedded_parts(g);
        VerificationReport r = verify_frobenius(g, {kernel, complement});
        REQUIRE_MESSAGE(r.overall, "frobenius_field(", p, ",", k, ",", m, ")");
        REQUIRE(kernel.order() % complement.order() == 1 % complement.order());
        ++swept;
      }
    }
  }
  CHECK(swept >= 150);  // the grid is exhaustive for p^k <= 2401, m | p^k - 1
}
