#include "pgx/descriptor.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "pgx/constructions.hpp"
#include "pgx/errors.hpp"

namespace pgx {
namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

  std::uint64_t integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected an integer");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("integer too large");
      v = v * 10 + digit;
      ++pos;
    }
    return v;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '.' || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a descriptor name");
    return s.substr(start, pos - start);
  }

  // One generator: a nonempty run of parenthesized cycles.
  std::vector<std::vector<std::uint32_t>> cycle_list() {
    std::vector<std::vector<std::uint32_t>> cycles;
    while (peek() == '(') {
      ++pos;  // consume '('
      std::vector<std::uint32_t> cycle;
      while (peek() != ')') {
        std::uint64_t v = integer();
        if (v == 0) fail("cycle points are 1-based");
        if (v > 0xffff) fail("cycle point exceeds the permutation degree limit");
        cycle.push_back(static_cast<std::uint32_t>(v));
      }
      ++pos;  // consume ')'
      if (cycle.empty()) fail("empty cycle");
      cycles.push_back(std::move(cycle));
    }
    if (cycles.empty()) fail("expected a parenthesized cycle");
    return cycles;
  }
};

}  // namespace

Descriptor parse_descriptor(const std::string& text) {
  Cursor cur{text};
  Descriptor d;

  std::size_t name_pos = (cur.skip_ws(), cur.pos);
  std::string name = cur.word();

  if (name == "paper.g1" || name == "paper.g2" || name == "paper.g3") {
    d.kind = name == "paper.g1"   ? DescriptorKind::PaperG1
             : name == "paper.g2" ? DescriptorKind::PaperG2
                                  : DescriptorKind::PaperG3;
    if (!cur.at_end()) cur.fail("unexpected trailing text");
    return d;
  }

  std::size_t arity = 1;
  if (name == "pgl2") {
    d.kind = DescriptorKind::Pgl2;
  } else if (name == "psl2") {
    d.kind = DescriptorKind::Psl2;
  } else if (name == "alt") {
    d.kind = DescriptorKind::Alt;
  } else if (name == "sym") {
    d.kind = DescriptorKind::Sym;
  } else if (name == "frobfield") {
    d.kind = DescriptorKind::Frobfield;
    arity = 3;
  } else if (name == "perm") {
    d.kind = DescriptorKind::Perm;
  } else {
    throw parse_error("unknown descriptor name '" + name + "'", name_pos);
  }

  cur.expect('(');

  if (d.kind == DescriptorKind::Perm) {
    std::uint64_t degree = cur.integer();
    if (degree > 0xffff) cur.fail("degree exceeds the permutation limit");
    d.degree = static_cast<std::uint32_t>(degree);
    cur.expect(';');
    if (cur.peek() != ')') {
      d.perm_gens.push_back(cur.cycle_list());
      while (cur.eat(',')) d.perm_gens.push_back(cur.cycle_list());
    }
  } else {
    d.args.push_back(cur.integer());
    while (cur.eat(',')) d.args.push_back(cur.integer());
    if (d.args.size() != arity)
      cur.fail(name + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s") +
               ", got " + std::to_string(d.args.size()));
  }

  cur.expect(')');
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  return d;
}

std::string render(const Descriptor& d) {
  switch (d.kind) {
    case DescriptorKind::PaperG1: return "paper.g1";
    case DescriptorKind::PaperG2: return "paper.g2";
    case DescriptorKind::PaperG3: return "paper.g3";
    default: break;
  }
  if (d.kind == DescriptorKind::Perm) {
    std::string out = "perm(" + std::to_string(d.degree) + ";";
    for (std::size_t i = 0; i < d.perm_gens.size(); ++i) {
      out += i ? ", " : " ";
      for (const auto& cycle : d.perm_gens[i]) {
        out += "(";
        for (std::size_t j = 0; j < cycle.size(); ++j) {
          if (j) out += " ";
          out += std::to_string(cycle[j]);
        }
        out += ")";
      }
    }
    out += ")";
    return out;
  }
  std::string name;
  switch (d.kind) {
    case DescriptorKind::Pgl2: name = "pgl2"; break;
    case DescriptorKind::Psl2: name = "psl2"; break;
    case DescriptorKind::Alt: name = "alt"; break;
    case DescriptorKind::Sym: name = "sym"; break;
    case DescriptorKind::Frobfield: name = "frobfield"; break;
    default: name = "perm"; break;
  }
  std::string out = name + "(";
  for (std::size_t i = 0; i < d.args.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d.args[i]);
  }
  out += ")";
  return out;
}

Group realize(const Descriptor& d, std::uint64_t cap) {
  switch (d.kind) {
    case DescriptorKind::Pgl2:
      return pgl2(d.args.at(0), cap);
    case DescriptorKind::Psl2:
      return psl2(d.args.at(0), cap);
    case DescriptorKind::Alt: {
      std::uint64_t n = d.args.at(0);
      if (n > 0xffff) throw input_error("alt degree exceeds the permutation limit");
      return alternating(static_cast<std::uint32_t>(n), cap);
    }
    case DescriptorKind::Sym: {
      std::uint64_t n = d.args.at(0);
      if (n > 0xffff) throw input_error("sym degree exceeds the permutation limit");
      return symmetric(static_cast<std::uint32_t>(n), cap);
    }
    case DescriptorKind::Frobfield: {
      std::uint64_t k = d.args.at(1);
      if (k == 0 || k > 64) throw input_error("frobfield extension degree must be in 1..64");
      return frobenius_field(d.args.at(0), static_cast<std::uint32_t>(k), d.args.at(2), cap);
    }
    case DescriptorKind::Perm: {
      std::vector<GroupElement> gens;
      gens.reserve(d.perm_gens.size());
      for (const auto& cycles : d.perm_gens) gens.push_back(permutation_from_cycles(d.degree, cycles));
      return Group::permutation_group(d.degree, std::move(gens), render(d), cap);
    }
    case DescriptorKind::PaperG1:
      return paper_g1();
    case DescriptorKind::PaperG2:
      return paper_g2();
    case DescriptorKind::PaperG3:
      return paper_g3();
  }
  throw input_error("unhandled descriptor kind");
}

std::vector<GroupElement> parse_permutation_words(const std::string& text, std::uint32_t degree) {
  Cursor cur{text};
  std::vector<GroupElement> out;
  if (cur.at_end()) return out;
  out.push_back(permutation_from_cycles(degree, cur.cycle_list()));
  while (cur.eat(',')) out.push_back(permutation_from_cycles(degree, cur.cycle_list()));
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  return out;
}

}  // namespace pgx
