#include "pgx/serialize.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "json.hpp"

namespace pgx {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json graph_value(const PrimeGraph& g) {
  ordered_json out;
  out["vertices"] = g.vertices;
  ordered_json edges = ordered_json::array();
  for (const auto& [p, q] : g.edges) edges.push_back(ordered_json::array({p, q}));
  out["edges"] = std::move(edges);
  return out;
}

ordered_json report_value(const VerificationReport& r, const std::string* case_name) {
  ordered_json out;
  out["subject"] = r.subject;
  out["kind"] = r.kind;
  if (case_name) out["case"] = *case_name;
  out["overall"] = r.overall ? "pass" : "fail";
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = check_status_name(c.status);
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace

std::string spectrum_json(const Spectrum& s, const MuSet& m) {
  ordered_json out;
  out["order"] = s.source_order;
  out["element_orders"] = s.orders;
  out["mu"] = m.maxima;
  return out.dump();
}

std::string graph_json(const PrimeGraph& g) {
  return graph_value(g).dump();
}

std::string graph_dot(const PrimeGraph& g) {
  if (g.vertices.empty()) return "graph G { }";
  std::string out = "graph G {\n";
  for (std::uint64_t v : g.vertices) out += "  " + std::to_string(v) + ";\n";
  for (const auto& [p, q] : g.edges)
    out += "  " + std::to_string(p) + " -- " + std::to_string(q) + ";\n";
  out += "}";
  return out;
}

std::string compare_json(const PrimeGraph& left, const PrimeGraph& right) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> l(left.edges.begin(), left.edges.end());
  std::set<std::pair<std::uint64_t, std::uint64_t>> r(right.edges.begin(), right.edges.end());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> diff;
  std::set_symmetric_difference(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(diff));

  ordered_json out;
  out["equal"] = graphs_equal(left, right);
  out["left"] = graph_value(left);
  out["right"] = graph_value(right);
  ordered_json edges = ordered_json::array();
  for (const auto& [p, q] : diff) edges.push_back(ordered_json::array({p, q}));
  out["edge_symmetric_difference"] = std::move(edges);
  return out.dump();
}

std::string report_json(const VerificationReport& r) {
  return report_value(r, nullptr).dump();
}

std::string report_json(const VerificationReport& r, const std::string& case_name) {
  return report_value(r, &case_name).dump();
}

}  // namespace pgx
