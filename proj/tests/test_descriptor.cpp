#include <string>
#include <vector>

#include "doctest.h"
#include "pgx/constructions.hpp"
#include "pgx/descriptor.hpp"
#include "pgx/errors.hpp"

using namespace pgx;

TEST_CASE("named descriptors parse to the right kinds and arguments") {
  Descriptor d = parse_descriptor("pgl2(9)");
  CHECK(d.kind == DescriptorKind::Pgl2);
  CHECK(d.args == std::vector<std::uint64_t>{9});

  CHECK(parse_descriptor("psl2(25)").kind == DescriptorKind::Psl2);
  CHECK(parse_descriptor("alt(5)").args == std::vector<std::uint64_t>{5});
  CHECK(parse_descriptor("sym(6)").kind == DescriptorKind::Sym);

  Descriptor ff = parse_descriptor("frobfield(3,4,80)");
  CHECK(ff.kind == DescriptorKind::Frobfield);
  CHECK(ff.args == std::vector<std::uint64_t>{3, 4, 80});

  CHECK(parse_descriptor("paper.g1").kind == DescriptorKind::PaperG1);
  CHECK(parse_descriptor("paper.g2").kind == DescriptorKind::PaperG2);
  CHECK(parse_descriptor("paper.g3").kind == DescriptorKind::PaperG3);
}

TEST_CASE("permutation descriptors carry degree and cycle lists") {
  Descriptor d = parse_descriptor("perm(5; (1 2)(3 4), (1 2 3))");
  CHECK(d.kind == DescriptorKind::Perm);
  CHECK(d.degree == 5);
  REQUIRE(d.perm_gens.size() == 2);
  CHECK(d.perm_gens[0] == std::vector<std::vector<std::uint32_t>>{{1, 2}, {3, 4}});
  CHECK(d.perm_gens[1] == std::vector<std::vector<std::uint32_t>>{{1, 2, 3}});

  Descriptor trivial = parse_descriptor("perm(1;)");
  CHECK(trivial.degree == 1);
  CHECK(trivial.perm_gens.empty());
}

TEST_CASE("whitespace is accepted and rendering is canonical") {
  CHECK(render(parse_descriptor("  pgl2 ( 9 )  ")) == "pgl2(9)");
  CHECK(render(parse_descriptor("frobfield( 3 , 4 , 80 )")) == "frobfield(3,4,80)");
  CHECK(render(parse_descriptor("perm(5;(1 2)(3 4),(1 2 3))")) ==
        "perm(5; (1 2)(3 4), (1 2 3))");
  CHECK(render(parse_descriptor("perm( 1 ; )")) == "perm(1;)");
  CHECK(render(parse_descriptor(" paper.g2 ")) == "paper.g2");
}

TEST_CASE("parse then render then parse is the identity") {
  for (const char* text :
       {"pgl2(9)", "psl2(25)", "alt(5)", "sym(6)", "frobfield(3,4,80)", "frobfield(2,2,3)",
        "paper.g1", "paper.g2", "paper.g3", "perm(1;)", "perm(5; (1 2)(3 4), (1 2 3))",
        "perm(7; (1 2 3 4 5 6 7))", "perm(4; (1 2), (1 2 3 4))"}) {
    Descriptor d = parse_descriptor(text);
    CHECK(parse_descriptor(render(d)) == d);
    CHECK(render(parse_descriptor(render(d))) == render(d));
  }
}

TEST_CASE("parse errors carry the offending position") {
  try {
    parse_descriptor("pgl2(x)");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 5);
    CHECK(std::string(e.what()).find("at position 5") != std::string::npos);
  }
  try {
    parse_descriptor("bogus(3)");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 0);
  }
  try {
    parse_descriptor("pgl2(9) junk");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 8);
  }
}

TEST_CASE("malformed descriptors raise parse_error, never crash") {
  for (const char* text :
       {"", "   ", "pgl2", "pgl2(", "pgl2()", "pgl2(9", "pgl2(9,3)", "pgl2(9))",
        "frobfield(3,4)", "frobfield(3,4,80,1)", "perm", "perm(", "perm(5)", "perm(5;",
        "perm(5; ()", "perm(5; (0 1))", "perm(5; (1 2)", "perm(5; 1 2)", "perm(;)",
        "paper.g4", "paper.", "paper", "(1 2)", "42", "pgl2(99999999999999999999)",
        "perm(70000;)", "sym(-3)", "alt(5)x", "p g l 2 ( 9 )", "frobfield(3;4;80)"}) {
    CHECK_THROWS_AS(parse_descriptor(text), parse_error);
  }
}

TEST_CASE("realize produces the advertised groups") {
  CHECK(realize(parse_descriptor("pgl2(9)")).order() == 720);
  CHECK(realize(parse_descriptor("psl2(9)")).order() == 360);
  CHECK(realize(parse_descriptor("alt(5)")).order() == 60);
  CHECK(realize(parse_descriptor("sym(5)")).order() == 120);
  CHECK(realize(parse_descriptor("frobfield(5,2,3)")).order() == 75);
  CHECK(realize(parse_descriptor("paper.g1")).order() == 6480);
  CHECK(realize(parse_descriptor("paper.g2")).order() == 300);
  CHECK(realize(parse_descriptor("paper.g3")).order() == 150);
  CHECK(realize(parse_descriptor("perm(5; (1 2)(3 4), (1 2 3))")).order() == 12);
  CHECK(realize(parse_descriptor("perm(1;)")).order() == 1);
}

TEST_CASE("realize rejects semantically bad arguments with input errors") {
  CHECK_THROWS_AS(realize(parse_descriptor("pgl2(6)")), input_error);
  CHECK_THROWS_AS(realize(parse_descriptor("pgl2(1)")), input_error);
  CHECK_THROWS_AS(realize(parse_descriptor("frobfield(6,1,5)")), input_error);
  CHECK_THROWS_AS(realize(parse_descriptor("frobfield(3,70,2)")), input_error);
  CHECK_THROWS_AS(realize(parse_descriptor("frobfield(5,2,7)")), input_error);
  CHECK_THROWS_AS(realize(parse_descriptor("alt(0)")), input_error);
  // Cycle points above the degree surface as input errors at realization.
  CHECK_THROWS_AS(realize(parse_descriptor("perm(3; (1 4))")), input_error);
  // Field sizes beyond the table cap surface as capacity errors.
  CHECK_THROWS_AS(realize(parse_descriptor("pgl2(2097152)")), capacity_error);
}

TEST_CASE("descriptor cap flows through to enumeration") {
  // Permutation realizations enumerate eagerly, so the cap trips inside realize.
  CHECK_THROWS_AS(realize(parse_descriptor("sym(6)"), 100), capacity_error);
  CHECK(realize(parse_descriptor("sym(6)"), 1000).order() == 720);
  // Lazy constructions know their order up front and defer the failure to the
  // first actual enumeration.
  Group g = realize(parse_descriptor("pgl2(9)"), 100);
  CHECK(g.order() == 720);
  CHECK_THROWS_AS(g.elements(), capacity_error);
}

TEST_CASE("parse_permutation_words reads comma-separated generator lists") {
  auto gens = parse_permutation_words("(1 2)(3 4), (1 2 3)", 5);
  REQUIRE(gens.size() == 2);
  CHECK(element_text(gens[0]) == "(1 2)(3 4)");
  CHECK(element_text(gens[1]) == "(1 2 3)");
  CHECK_THROWS_AS(parse_permutation_words("(1 9)", 5), input_error);
  CHECK_THROWS_AS(parse_permutation_words("nope", 5), parse_error);
}
