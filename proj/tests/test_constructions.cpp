#include <set>

#include "doctest.h"
#include "pgx/constructions.hpp"
#include "pgx/errors.hpp"
#include "pgx/spectra.hpp"

using namespace pgx;

TEST_CASE("projective group orders follow q(q-1)(q+1)") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull, 11ull, 13ull, 25ull, 27ull}) {
    Group g = pgl2(q);
    CHECK(g.order() == q * (q - 1) * (q + 1));
    Group h = psl2(q);
    std::uint64_t expected = q % 2 == 0 ? q * (q - 1) * (q + 1) : q * (q - 1) * (q + 1) / 2;
    CHECK(h.order() == expected);
  }
}

TEST_CASE("psl2 elements form an index-2 subset of pgl2 for odd q") {
  Group g = pgl2(9);
  Group h = psl2(9);
  CHECK(2 * h.order() == g.order());
  std::size_t found = 0;
  for (const auto& e : h.elements())
    if (g.contains(e)) ++found;
  CHECK(found == h.order());
}

TEST_CASE("maximal element orders of pgl2(q) lie in {p, q-1, q+1}") {
  struct Case {
    std::uint64_t q, p;
  };
  for (Case c : {Case{3, 3}, Case{5, 5}, Case{7, 7}, Case{9, 3}, Case{11, 11}, Case{13, 13},
                 Case{25, 5}, Case{27, 3}}) {
    MuSet m = mu(spectrum(pgl2(c.q)));
    std::set<std::uint64_t> allowed{c.p, c.q - 1, c.q + 1};
    for (auto v : m.maxima) CHECK(allowed.count(v) == 1);
  }
}

TEST_CASE("small projective groups match their classical isomorphs") {
  CHECK(pgl2(3).order() == 24);   // sym(4)
  CHECK(psl2(3).order() == 12);   // alt(4)
  CHECK(pgl2(5).order() == 120);  // sym(5)
  CHECK(psl2(5).order() == 60);   // alt(5)
  CHECK(mu(spectrum(pgl2(5))).maxima == mu(spectrum(symmetric(5))).maxima);
  CHECK(mu(spectrum(psl2(5))).maxima == mu(spectrum(alternating(5))).maxima);
  CHECK(mu(spectrum(pgl2(9))).maxima == std::vector<std::uint64_t>{3, 8, 10});
}

TEST_CASE("alternating and symmetric groups have the right orders") {
  CHECK(symmetric(1).order() == 1);
  CHECK(symmetric(2).order() == 2);
  CHECK(symmetric(4).order() == 24);
  CHECK(symmetric(6).order() == 720);
  CHECK(alternating(3).order() == 3);
  CHECK(alternating(4).order() == 12);
  CHECK(alternating(6).order() == 360);
  CHECK_THROWS_AS(symmetric(0), input_error);
}

TEST_CASE("frobenius_field orders and degenerate arguments") {
  CHECK(frobenius_field(5, 2, 3).order() == 75);
  CHECK(frobenius_field(3, 1, 2).order() == 6);   // sym(3) abstractly
  CHECK(frobenius_field(2, 2, 3).order() == 12);  // alt(4) abstractly
  CHECK(frobenius_field(7, 1, 6).order() == 42);
  CHECK(frobenius_field(5, 2, 1).order() == 25);  // degenerate: trivial complement
  CHECK_THROWS_AS(frobenius_field(5, 2, 7), input_error);  // 7 does not divide 24
  CHECK_THROWS_AS(frobenius_field(4, 1, 3), input_error);  // 4 is not prime
}

TEST_CASE("the three classified groups have their published shapes") {
  Group g1 = paper_g1();
  CHECK(g1.order() == 6480);
  CHECK(g1.is_semidirect());
  CHECK(g1.semidirect_kernel().order() == 81);
  CHECK(g1.semidirect_complement().order() == 80);
  CHECK(g1.descriptor() == "paper.g1");
  CHECK(mu(spectrum(g1)).maxima == std::vector<std::uint64_t>{3, 80});

  Group g2 = paper_g2();
  CHECK(g2.order() == 300);
  CHECK(g2.is_semidirect());
  CHECK(g2.semidirect_kernel().order() == 100);
  CHECK(g2.semidirect_complement().order() == 3);
  CHECK(g2.descriptor() == "paper.g2");

  Group g3 = paper_g3();
  CHECK(g3.order() == 150);
  CHECK(g3.is_semidirect());
  CHECK(g3.semidirect_kernel().order() == 25);
  CHECK(g3.semidirect_complement().order() == 6);
  CHECK(g3.descriptor() == "paper.g3");
}

TEST_CASE("the 2-frobenius series witness sits inside paper.g3") {
  SeriesWitness w = paper_g3_series();
  CHECK(w.g.order() == 150);
  CHECK(w.h.order() == 25);
  CHECK(w.k.order() == 75);
  for (const auto& e : w.h.elements()) CHECK(w.k.contains(e));
  for (const auto& e : w.k.elements()) CHECK(w.g.contains(e));
}

TEST_CASE("identical descriptors produce equal spectra on repeat construction") {
  // Determinism at the library level: fresh handles, same elements.
  Spectrum a = spectrum(paper_g2());
  Spectrum b = spectrum(paper_g2());
  CHECK(a.orders == b.orders);
  Group p = pgl2(7);
  Group q = pgl2(7);
  CHECK(p.elements() == q.elements());
}

TEST_CASE("pgl2 rejects non-prime-powers and tiny fields") {
  CHECK_THROWS_AS(pgl2(6), input_error);
  CHECK_THROWS_AS(pgl2(1), input_error);
  CHECK_THROWS_AS(pgl2(0), input_error);
  CHECK_THROWS_AS(psl2(12), input_error);
}
