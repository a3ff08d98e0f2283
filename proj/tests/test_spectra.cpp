#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "pgx/constructions.hpp"
#include "pgx/errors.hpp"
#include "pgx/spectra.hpp"

using namespace pgx;

namespace {

std::set<std::uint64_t> order_set(const Spectrum& s) {
  return {s.orders.begin(), s.orders.end()};
}

}  // namespace

TEST_CASE("prime_divisors factors correctly") {
  CHECK(prime_divisors(1).empty());
  CHECK(prime_divisors(2) == std::vector<std::uint64_t>{2});
  CHECK(prime_divisors(720) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_divisors(80) == std::vector<std::uint64_t>{2, 5});
  CHECK(prime_divisors(6480) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_divisors(97) == std::vector<std::uint64_t>{97});
  CHECK_THROWS_AS(prime_divisors(0), input_error);
}

TEST_CASE("spectrum of pgl2(9) is the divisor closure of {3,8,10}") {
  Spectrum s = spectrum(pgl2(9));
  CHECK(s.source_order == 720);
  CHECK(order_set(s) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 8, 10});
  MuSet m = mu(s);
  CHECK(m.maxima == std::vector<std::uint64_t>{3, 8, 10});
}

TEST_CASE("spectra of the classified solvable groups") {
  Spectrum s1 = spectrum(paper_g1());
  CHECK(s1.source_order == 6480);
  CHECK(mu(s1).maxima == std::vector<std::uint64_t>{3, 80});

  Spectrum s2 = spectrum(paper_g2());
  CHECK(s2.source_order == 300);
  CHECK(order_set(s2) == std::set<std::uint64_t>{1, 2, 3, 5, 10});
  CHECK(mu(s2).maxima == std::vector<std::uint64_t>{3, 10});

  Spectrum s3 = spectrum(paper_g3());
  CHECK(s3.source_order == 150);
  CHECK(order_set(s3) == std::set<std::uint64_t>{1, 2, 3, 5, 10});
  CHECK(mu(s3).maxima == std::vector<std::uint64_t>{3, 10});
}

TEST_CASE("spectra of the control groups") {
  CHECK(order_set(spectrum(psl2(9))) == std::set<std::uint64_t>{1, 2, 3, 4, 5});
  CHECK(order_set(spectrum(alternating(5))) == std::set<std::uint64_t>{1, 2, 3, 5});
  Spectrum s5 = spectrum(symmetric(5));
  CHECK(order_set(s5) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6});
  CHECK(mu(s5).maxima == std::vector<std::uint64_t>{4, 5, 6});
}

TEST_CASE("prime graphs of the key groups") {
  PrimeGraph target = prime_graph(spectrum(pgl2(9)));
  CHECK(target.vertices == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(target.edges == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 5}});

  // The three solvable groups share the target graph.
  for (const Group& g : {paper_g1(), paper_g2(), paper_g3()})
    CHECK(graphs_equal(prime_graph(spectrum(g)), target));

  PrimeGraph a6 = prime_graph(spectrum(psl2(9)));
  CHECK(a6.vertices == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(a6.edges.empty());
  CHECK(!graphs_equal(a6, target));

  PrimeGraph a5 = prime_graph(spectrum(alternating(5)));
  CHECK(a5.edges.empty());  // in particular 2 and 5 are nonadjacent

  PrimeGraph s5 = prime_graph(spectrum(symmetric(5)));
  CHECK(s5.edges == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}});
  CHECK(!graphs_equal(s5, target));
}

TEST_CASE("components split by connectivity and sort by least member") {
  PrimeGraph g = prime_graph(spectrum(pgl2(9)));
  auto parts = components(g);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::vector<std::uint64_t>{2, 5});
  CHECK(parts[1] == std::vector<std::uint64_t>{3});

  PrimeGraph edgeless = prime_graph(spectrum(psl2(9)));
  auto singletons = components(edgeless);
  REQUIRE(singletons.size() == 3);
  CHECK(singletons[0] == std::vector<std::uint64_t>{2});
  CHECK(singletons[1] == std::vector<std::uint64_t>{3});
  CHECK(singletons[2] == std::vector<std::uint64_t>{5});

  PrimeGraph s5 = prime_graph(spectrum(symmetric(5)));
  auto sp = components(s5);
  REQUIRE(sp.size() == 2);
  CHECK(sp[0] == std::vector<std::uint64_t>{2, 3});
  CHECK(sp[1] == std::vector<std::uint64_t>{5});
}

TEST_CASE("mu recovers the spectrum as its divisor closure") {
  for (const Group& g : {pgl2(9), symmetric(5), paper_g1(), paper_g3()}) {
    Spectrum s = spectrum(g);
    MuSet m = mu(s);
    std::set<std::uint64_t> closure;
    for (auto top : m.maxima)
      for (std::uint64_t d = 1; d <= top; ++d)
        if (top % d == 0) closure.insert(d);
    CHECK(closure == order_set(s));
    // Antichain: no member divides another.
    for (auto a : m.maxima)
      for (auto b : m.maxima)
        if (a != b) CHECK(b % a != 0);
  }
}

TEST_CASE("trivial and p-group spectra") {
  Group c1 = Group::permutation_group(1, {}, "trivial");
  Spectrum s = spectrum(c1);
  CHECK(s.orders == std::vector<std::uint64_t>{1});
  CHECK(mu(s).maxima == std::vector<std::uint64_t>{1});
  CHECK(prime_graph(s).vertices.empty());
  CHECK(components(prime_graph(s)).empty());

  Group c4 = Group::permutation_group(4, {permutation_from_cycles(4, {{1, 2, 3, 4}})}, "c4");
  Spectrum s4 = spectrum(c4);
  CHECK(order_set(s4) == std::set<std::uint64_t>{1, 2, 4});
  CHECK(mu(s4).maxima == std::vector<std::uint64_t>{4});
  CHECK(prime_graph(s4).vertices == std::vector<std::uint64_t>{2});
  CHECK(prime_graph(s4).edges.empty());
}

TEST_CASE("graphs_equal is exact on vertices and edges") {
  PrimeGraph a{{2, 3}, {}};
  PrimeGraph b{{2, 3}, {{2, 3}}};
  PrimeGraph c{{2, 5}, {}};
  CHECK(graphs_equal(a, a));
  CHECK(!graphs_equal(a, b));
  CHECK(!graphs_equal(a, c));
}
