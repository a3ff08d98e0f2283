#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "pgx/descriptor.hpp"
#include "pgx/errors.hpp"
#include "pgx/groups.hpp"
#include "pgx/serialize.hpp"
#include "pgx/spectra.hpp"
#include "pgx/structure.hpp"

namespace {

// Exit codes: 0 = success/equal/verified, 1 = semantic negative (graphs
// differ, verification failed), 2 = usage/parse/capacity errors.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

pgx::Group realize_checked(const pgx::Descriptor& d, std::uint64_t cap) {
  pgx::Group g = pgx::realize(d, cap);
  if ((d.kind == pgx::DescriptorKind::Pgl2 || d.kind == pgx::DescriptorKind::Psl2) &&
      !d.args.empty() && d.args[0] % 2 == 0)
    std::cerr << "note: in characteristic 2 every determinant is a square, so psl2(" +
                     std::to_string(d.args[0]) + ") = pgl2(" + std::to_string(d.args[0]) + ")\n";
  return g;
}

// Degree for parsing witness generator words; only permutation-flavored
// subjects accept element-list witnesses from the command line.
std::uint32_t witness_degree(const pgx::Descriptor& d) {
  switch (d.kind) {
    case pgx::DescriptorKind::Perm:
      return d.degree;
    case pgx::DescriptorKind::Alt:
    case pgx::DescriptorKind::Sym:
      return static_cast<std::uint32_t>(d.args.at(0));
    default:
      throw pgx::input_error("witness flags need a permutation subject (perm/alt/sym)");
  }
}

int run_spectrum(const std::string& text, std::uint64_t cap) {
  pgx::Descriptor d = pgx::parse_descriptor(text);
  pgx::Group g = realize_checked(d, cap);
  pgx::Spectrum s = pgx::spectrum(g);
  pgx::MuSet m = pgx::mu(s);
  std::cout << pgx::spectrum_json(s, m) << "\n";
  return kOk;
}

int run_graph(const std::string& text, const std::string& format, std::uint64_t cap) {
  pgx::Descriptor d = pgx::parse_descriptor(text);
  pgx::Group g = realize_checked(d, cap);
  pgx::PrimeGraph graph = pgx::prime_graph(pgx::spectrum(g));
  std::cout << (format == "dot" ? pgx::graph_dot(graph) : pgx::graph_json(graph)) << "\n";
  return kOk;
}

int run_compare(const std::string& left_text, const std::string& right_text, std::uint64_t cap) {
  pgx::Descriptor dl = pgx::parse_descriptor(left_text);
  pgx::Descriptor dr = pgx::parse_descriptor(right_text);
  pgx::PrimeGraph left = pgx::prime_graph(pgx::spectrum(realize_checked(dl, cap)));
  pgx::PrimeGraph right = pgx::prime_graph(pgx::spectrum(realize_checked(dr, cap)));
  std::cout << pgx::compare_json(left, right) << "\n";
  return pgx::graphs_equal(left, right) ? kOk : kNegative;
}

int run_verify(const std::string& kind, const std::string& text, const std::string& kernel_text,
               const std::string& complement_text, const std::string& series_text,
               std::uint64_t cap) {
  pgx::Descriptor d = pgx::parse_descriptor(text);
  pgx::Group g = realize_checked(d, cap);

  pgx::VerificationReport report;
  std::optional<std::string> case_name;

  if (kind == "frobenius") {
    if (!series_text.empty()) throw pgx::input_error("--series applies to the 2frobenius kind");
    std::optional<pgx::FrobeniusWitness> w;
    if (!kernel_text.empty() || !complement_text.empty()) {
      if (kernel_text.empty() || complement_text.empty())
        throw pgx::input_error("--kernel and --complement must be given together");
      std::uint32_t degree = witness_degree(d);
      w = pgx::FrobeniusWitness{
          g.subgroup_generated(pgx::parse_permutation_words(kernel_text, degree),
                               "kernel witness < " + g.descriptor()),
          g.subgroup_generated(pgx::parse_permutation_words(complement_text, degree),
                               "complement witness < " + g.descriptor())};
    } else if (g.is_semidirect()) {
      auto parts = pgx::semidirect_embedded_parts(g);
      w = pgx::FrobeniusWitness{std::move(parts.first), std::move(parts.second)};
    } else {
      w = pgx::find_frobenius_structure(g);
    }
    if (w) {
      report = pgx::verify_frobenius(g, *w);
    } else {
      report.subject = g.descriptor();
      report.kind = "frobenius";
      report.checks.push_back(
          {"frobenius structure search", pgx::CheckStatus::Fail, "no Frobenius witness found"});
      report.overall = false;
    }
  } else if (kind == "2frobenius") {
    if (!kernel_text.empty() || !complement_text.empty())
      throw pgx::input_error("--kernel/--complement apply to the frobenius kind");
    std::optional<std::pair<pgx::Group, pgx::Group>> series;
    if (!series_text.empty()) {
      std::size_t sep = series_text.find(';');
      if (sep == std::string::npos)
        throw pgx::input_error("--series wants two generator lists separated by ';'");
      std::uint32_t degree = witness_degree(d);
      series = std::make_pair(
          g.subgroup_generated(
              pgx::parse_permutation_words(series_text.substr(0, sep), degree),
              "series H < " + g.descriptor()),
          g.subgroup_generated(
              pgx::parse_permutation_words(series_text.substr(sep + 1), degree),
              "series K < " + g.descriptor()));
    } else {
      series = pgx::find_2frobenius_series(g);
    }
    if (series) {
      report = pgx::verify_2frobenius(g, series->first, series->second);
    } else {
      report.subject = g.descriptor();
      report.kind = "2frobenius";
      report.checks.push_back(
          {"2-frobenius series search", pgx::CheckStatus::Fail, "no verifying normal series found"});
      report.overall = false;
    }
  } else {  // theorem
    pgx::TheoremClassification c = pgx::theorem_case(g);
    report = std::move(c.report);
    case_name = pgx::theorem_case_name(c.which);
  }

  std::cout << (case_name ? pgx::report_json(report, *case_name) : pgx::report_json(report)) << "\n";
  return report.overall ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"element-order spectra, prime graphs, and Frobenius-structure verification"};
  app.require_subcommand(1);

  std::string spectrum_desc;
  std::uint64_t spectrum_cap = pgx::Group::kDefaultCap;
  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "element orders and their maxima");
  spectrum_cmd->add_option("descriptor", spectrum_desc, "group descriptor, e.g. pgl2(9)")->required();
  spectrum_cmd->add_option("--cap", spectrum_cap, "enumeration cap");

  std::string graph_desc;
  std::string graph_format = "json";
  std::uint64_t graph_cap = pgx::Group::kDefaultCap;
  CLI::App* graph_cmd = app.add_subcommand("graph", "prime graph of a group");
  graph_cmd->add_option("descriptor", graph_desc, "group descriptor")->required();
  graph_cmd->add_option("--format", graph_format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  graph_cmd->add_option("--cap", graph_cap, "enumeration cap");

  std::string compare_left, compare_right;
  std::uint64_t compare_cap = pgx::Group::kDefaultCap;
  CLI::App* compare_cmd = app.add_subcommand("compare", "compare two prime graphs");
  compare_cmd->add_option("left", compare_left, "first group descriptor")->required();
  compare_cmd->add_option("right", compare_right, "second group descriptor")->required();
  compare_cmd->add_option("--cap", compare_cap, "enumeration cap");

  std::string verify_kind, verify_desc, verify_kernel, verify_complement, verify_series;
  std::uint64_t verify_cap = pgx::Group::kDefaultCap;
  CLI::App* verify_cmd = app.add_subcommand("verify", "verify Frobenius/2-Frobenius/theorem structure");
  verify_cmd->add_option("kind", verify_kind, "what to verify")
      ->required()
      ->check(CLI::IsMember({"frobenius", "2frobenius", "theorem"}));
  verify_cmd->add_option("descriptor", verify_desc, "group descriptor")->required();
  verify_cmd->add_option("--kernel", verify_kernel, "kernel witness generators (cycle syntax)");
  verify_cmd->add_option("--complement", verify_complement,
                         "complement witness generators (cycle syntax)");
  verify_cmd->add_option("--series", verify_series,
                         "H and K witness generators, separated by ';' (cycle syntax)");
  verify_cmd->add_option("--cap", verify_cap, "enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum_cmd) return run_spectrum(spectrum_desc, spectrum_cap);
    if (*graph_cmd) return run_graph(graph_desc, graph_format, graph_cap);
    if (*compare_cmd) return run_compare(compare_left, compare_right, compare_cap);
    if (*verify_cmd)
      return run_verify(verify_kind, verify_desc, verify_kernel, verify_complement, verify_series,
                        verify_cap);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
