#include "pgx/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pgx/constructions.hpp"
#include "pgx/errors.hpp"
#include "pgx/spectra.hpp"

namespace pgx {
namespace {

std::string set_text(const std::vector<std::uint64_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  out += "}";
  return out;
}

std::string graph_text(const PrimeGraph& g) {
  std::string out = "vertices " + set_text(g.vertices) + ", edges {";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(g.edges[i].first) + "-" + std::to_string(g.edges[i].second);
  }
  out += "}";
  return out;
}

CheckResult make_check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

CheckResult make_skip(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::Skip, std::move(detail)};
}

void finish(VerificationReport& r) {
  r.overall = std::none_of(r.checks.begin(), r.checks.end(),
                           [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

// Conjugation by each generator maps the finite subgroup h into itself, and
// an injective self-map of a finite set is onto; conjugations by inverses
// and products of generators are then also bijections of h, so checking the
// generators alone is equivalent to checking every element of g.
bool normal_via_generators(const Group& g, const Group& h) {
  for (const auto& x : g.generators()) {
    GroupElement xi = g.inverse(x);
    for (const auto& e : h.elements())
      if (!h.contains(g.multiply(g.multiply(x, e), xi))) return false;
  }
  return true;
}

bool contains_group(const Group& big, const Group& small) {
  for (const auto& e : small.generators())
    if (!big.contains(e)) return false;
  return true;
}

std::uint64_t intersection_size(const Group& a, const Group& b) {
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& big = a.order() <= b.order() ? b : a;
  std::uint64_t n = 0;
  for (const auto& e : small.elements())
    if (big.contains(e)) ++n;
  return n;
}

void require_subgroup_witness(const Group& g, const Group& w, const char* role) {
  for (const auto& e : w.generators())
    if (!g.contains(e))
      throw input_error(std::string(role) + " witness is not a subgroup of " + g.descriptor());
}

// True when w is exactly the pair of embedded factors {(k,1)} and {(1,c)} of
// the semidirect product g.  Conjugation then reduces to the action table:
// (1,c)(k,1)(1,c)^-1 = (act(c)(k), 1), and order-structure questions about
// the witnesses can be answered in the isomorphic factor groups.
bool is_embedded_factor_witness(const Group& g, const FrobeniusWitness& w) {
  if (!g.is_semidirect()) return false;
  const Group& kf = g.semidirect_kernel();
  const Group& cf = g.semidirect_complement();
  if (g.order() != kf.order() * cf.order()) return false;
  if (w.kernel.order() != kf.order() || w.complement.order() != cf.order()) return false;
  GroupElement idk = kf.identity();
  GroupElement idc = cf.identity();
  for (const auto& e : w.kernel.generators()) {
    const auto* p = e.as_semidirect_pair();
    if (!p || !(*p->complement_part == idc)) return false;
  }
  for (const auto& e : w.complement.generators()) {
    const auto* p = e.as_semidirect_pair();
    if (!p || !(*p->kernel_part == idk)) return false;
  }
  return true;
}

struct FixedPointScan {
  bool free = true;
  std::string witness;  // least fixed pair in element order, when not free
};

FixedPointScan scan_fixed_points(const Group& g, const FrobeniusWitness& w, bool embedded) {
  FixedPointScan out;
  if (embedded) {
    const ActionTable& act = g.semidirect_action();
    const Group& kf = g.semidirect_kernel();
    const Group& cf = g.semidirect_complement();
    const auto& kelems = kf.elements();
    const auto& celems = cf.elements();
    std::uint32_t idc = act.complement_index(cf.identity());
    std::uint32_t idk = act.kernel_index(kf.identity());
    for (std::uint32_t ci = 0; ci < celems.size() && out.free; ++ci) {
      if (ci == idc) continue;
      for (std::uint32_t ki = 0; ki < kelems.size(); ++ki) {
        if (ki == idk) continue;
        if (act.apply_index(ci, ki) == ki) {
          out.free = false;
          out.witness = "fixed point: c = " + element_text(celems[ci]) +
                        ", k = " + element_text(kelems[ki]);
          break;
        }
      }
    }
    return out;
  }
  GroupElement id = g.identity();
  for (const auto& c : w.complement.elements()) {
    if (c == id) continue;
    GroupElement ci = g.inverse(c);
    for (const auto& k : w.kernel.elements()) {
      if (k == id) continue;
      if (g.multiply(g.multiply(c, k), ci) == k) {
        out.free = false;
        out.witness = "fixed point: c = " + element_text(c) + ", k = " + element_text(k);
        return out;
      }
    }
  }
  return out;
}

}  // namespace

std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "fail";
}

VerificationReport verify_frobenius(const Group& g, const FrobeniusWitness& w) {
  require_subgroup_witness(g, w.kernel, "kernel");
  require_subgroup_witness(g, w.complement, "complement");

  VerificationReport r;
  r.subject = g.descriptor();
  r.kind = "frobenius";

  const std::uint64_t n = g.order();
  const std::uint64_t nk = w.kernel.order();
  const std::uint64_t nc = w.complement.order();
  const bool embedded = is_embedded_factor_witness(g, w);
  // Isomorphic stand-ins for the witnesses when they are the embedded
  // factors; their elements multiply without the semidirect wrapping.
  const Group& kernel_model = embedded ? g.semidirect_kernel() : w.kernel;
  const Group& complement_model = embedded ? g.semidirect_complement() : w.complement;

  // (i) kernel normal
  r.checks.push_back(make_check("kernel is normal", normal_via_generators(g, w.kernel), ""));

  // (ii) product of orders and trivial intersection
  {
    std::uint64_t inter = intersection_size(w.kernel, w.complement);
    bool ok = nk > 1 && nc > 1 && nk * nc == n && inter == 1;
    std::string detail = "|G| = " + std::to_string(n) + ", |K| = " + std::to_string(nk) +
                         ", |C| = " + std::to_string(nc) + ", intersection " + std::to_string(inter);
    r.checks.push_back(make_check("kernel and complement factor the group", ok, std::move(detail)));
  }

  // (iii) fixed-point-free conjugation
  {
    FixedPointScan s = scan_fixed_points(g, w, embedded);
    r.checks.push_back(make_check("conjugation action is fixed-point-free", s.free, std::move(s.witness)));
  }

  // (iv) kernel nilpotent
  r.checks.push_back(make_check("kernel is nilpotent", kernel_model.is_nilpotent(), ""));

  // (v) |K| = 1 (mod |C|)
  {
    bool ok = nk % nc == 1 % nc;
    std::string detail = std::to_string(nk) + " ≡ " + std::to_string(nk % nc) +
                         " (mod " + std::to_string(nc) + ")";
    r.checks.push_back(make_check("kernel ≡ 1 mod complement", ok, std::move(detail)));
  }

  // (vi) cyclic Sylow structure of the complement
  {
    std::vector<std::uint64_t> corders;
    corders.reserve(complement_model.order());
    for (const auto& e : complement_model.elements())
      corders.push_back(complement_model.element_order(e));
    bool ok = true;
    std::string detail;
    for (std::uint64_t p : prime_divisors(nc)) {
      std::uint64_t part = 1;
      for (std::uint64_t m = nc; m % p == 0; m /= p) part *= p;
      bool cyclic = std::find(corders.begin(), corders.end(), part) != corders.end();
      std::string note;
      if (cyclic) {
        note = std::to_string(p) + ": cyclic of order " + std::to_string(part);
      } else if (p == 2) {
        std::uint64_t involutions = static_cast<std::uint64_t>(
            std::count(corders.begin(), corders.end(), std::uint64_t{2}));
        if (involutions == 1) {
          note = "2: unique involution";
        } else {
          ok = false;
          note = "2: not cyclic, " + std::to_string(involutions) + " involutions";
        }
      } else {
        ok = false;
        note = std::to_string(p) + ": no element of order " + std::to_string(part);
      }
      if (!detail.empty()) detail += "; ";
      detail += note;
    }
    r.checks.push_back(make_check(
        "complement Sylow subgroups are cyclic (2: cyclic or unique involution)", ok, std::move(detail)));
  }

  // The non-solvable complement criterion is intentionally not implemented:
  // no complement this tool constructs is non-solvable.
  r.checks.push_back(make_skip("non-solvable complement criterion",
                               "skipped: no constructed complement is non-solvable"));

  finish(r);
  return r;
}

namespace {

// Quotient of g by a normal subgroup, realized as a permutation group on the
// enumerated cosets.  Representatives are the first element of each coset in
// g's element order; right multiplication permutes coset indices, and that
// assignment is a homomorphism exactly because the subgroup is normal.
struct Quotient {
  Group parent;
  Group group;  // permutation group on coset indices
  std::vector<GroupElement> reps;
  std::unordered_map<GroupElement, std::uint32_t, ElementHash> coset_of;

  GroupElement project(const GroupElement& x) const {
    Permutation p;
    p.image.resize(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      p.image[i] = static_cast<std::uint16_t>(coset_of.at(parent.multiply(reps[i], x)));
    return GroupElement{GroupElement::Payload{std::move(p)}};
  }

  Group project_subgroup(const Group& s, std::string descriptor) const {
    std::vector<GroupElement> gens;
    for (const auto& e : s.generators()) gens.push_back(project(e));
    return group.subgroup_generated(std::move(gens), std::move(descriptor));
  }
};

Quotient make_quotient(const Group& g, const Group& h) {
  const auto& elems = g.elements();
  const auto& helems = h.elements();
  std::vector<GroupElement> reps;
  std::unordered_map<GroupElement, std::uint32_t, ElementHash> coset_of;
  coset_of.reserve(elems.size() * 2);
  for (const auto& x : elems) {
    if (coset_of.count(x)) continue;
    auto idx = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (const auto& e : helems) coset_of.emplace(g.multiply(x, e), idx);
  }
  if (reps.size() > 0xffff)
    throw capacity_error("quotient on " + std::to_string(reps.size()) +
                         " cosets exceeds the permutation degree limit");
  auto project = [&](const GroupElement& x) {
    Permutation p;
    p.image.resize(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      p.image[i] = static_cast<std::uint16_t>(coset_of.at(g.multiply(reps[i], x)));
    return GroupElement{GroupElement::Payload{std::move(p)}};
  };
  std::vector<GroupElement> qgens;
  for (const auto& x : g.generators()) qgens.push_back(project(x));
  Group qg = Group::permutation_group(static_cast<std::uint32_t>(reps.size()), std::move(qgens),
                                      g.descriptor() + "/" + std::to_string(h.order()), g.cap());
  return Quotient{g, std::move(qg), std::move(reps), std::move(coset_of)};
}

// Search for a cyclic complement making `whole` Frobenius with the given
// kernel.  Candidates are the elements of order |whole|/|kernel| in
// enumeration order, each gated through verify_frobenius.  Every candidate
// shares the same kernel and complement orders, so the congruence condition
// |kernel| = 1 (mod m) can be hoisted: when it fails, no candidate can pass
// and the scan is skipped.
std::optional<Group> cyclic_frobenius_complement(const Group& whole, const Group& kernel) {
  if (kernel.order() == 0 || whole.order() % kernel.order() != 0) return std::nullopt;
  const std::uint64_t m = whole.order() / kernel.order();
  if (m < 2) return std::nullopt;
  if (kernel.order() % m != 1 % m) return std::nullopt;
  for (const auto& e : whole.elements()) {
    if (whole.element_order(e) != m) continue;
    Group cand = whole.subgroup_generated({e}, "cyclic complement < " + whole.descriptor());
    if (intersection_size(cand, kernel) != 1) continue;
    if (verify_frobenius(whole, FrobeniusWitness{kernel, cand}).overall) return cand;
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_2frobenius(const Group& g, const Group& h, const Group& k) {
  require_subgroup_witness(g, h, "series subgroup H");
  require_subgroup_witness(g, k, "series subgroup K");

  VerificationReport r;
  r.subject = g.descriptor();
  r.kind = "2frobenius";

  const std::uint64_t n = g.order();
  const std::uint64_t nh = h.order();
  const std::uint64_t nk = k.order();

  const bool shape = nh > 1 && nh < nk && nk < n && nk % nh == 0 && n % nk == 0 && contains_group(k, h);
  {
    std::string detail;
    if (shape)
      detail = "|H| = " + std::to_string(nh) + ", |K/H| = " + std::to_string(nk / nh) +
               ", |G/K| = " + std::to_string(n / nk);
    else
      detail = "|H| = " + std::to_string(nh) + ", |K| = " + std::to_string(nk) +
               ", |G| = " + std::to_string(n) + " is not a proper chain 1 < H < K < G";
    r.checks.push_back(make_check("series is 1 < H < K < G", shape, std::move(detail)));
  }

  const bool h_normal = normal_via_generators(g, h);
  r.checks.push_back(make_check("H is normal in G", h_normal, ""));
  r.checks.push_back(make_check("K is normal in G", normal_via_generators(g, k), ""));

  // Lower layer: K Frobenius with kernel H.
  if (shape) {
    const std::uint64_t m = nk / nh;
    auto comp = cyclic_frobenius_complement(k, h);
    std::string detail;
    if (comp)
      detail = "cyclic complement of order " + std::to_string(m) + " inside K";
    else if (nh % m != 1 % m)
      detail = "impossible: |H| = " + std::to_string(nh) + " is not 1 (mod " + std::to_string(m) + ")";
    else
      detail = "no cyclic complement of order " + std::to_string(m) + " verifies";
    r.checks.push_back(make_check("K is Frobenius with kernel H", comp.has_value(), std::move(detail)));
  } else {
    r.checks.push_back(make_skip("K is Frobenius with kernel H", "not evaluated: series shape failed"));
  }

  // Upper layer: G/H Frobenius with kernel K/H, in the coset quotient.
  if (shape && h_normal) {
    Quotient q = make_quotient(g, h);
    Group kh = q.project_subgroup(k, "K/" + std::to_string(nh));
    if (kh.order() != nk / nh) {
      r.checks.push_back(make_check("G/H is Frobenius with kernel K/H", false,
                                    "projected K/H has order " + std::to_string(kh.order()) +
                                        ", expected " + std::to_string(nk / nh)));
    } else {
      auto comp = cyclic_frobenius_complement(q.group, kh);
      std::string detail = "quotient on " + std::to_string(q.reps.size()) + " cosets; ";
      detail += comp ? "cyclic complement of order " + std::to_string(n / nk)
                     : "no cyclic complement of order " + std::to_string(n / nk) + " verifies";
      r.checks.push_back(
          make_check("G/H is Frobenius with kernel K/H", comp.has_value(), std::move(detail)));
    }
  } else {
    r.checks.push_back(make_skip("G/H is Frobenius with kernel K/H",
                                 shape ? "not evaluated: H is not normal in G"
                                       : "not evaluated: series shape failed"));
  }

  // Layer primes against the target decomposition.
  if (shape) {
    auto pkh = prime_divisors(nk / nh);
    auto ph = prime_divisors(nh);
    auto pgk = prime_divisors(n / nk);
    std::vector<std::uint64_t> outer = ph;
    outer.insert(outer.end(), pgk.begin(), pgk.end());
    std::sort(outer.begin(), outer.end());
    outer.erase(std::unique(outer.begin(), outer.end()), outer.end());
    bool ok = pkh == std::vector<std::uint64_t>{3} && outer == std::vector<std::uint64_t>{2, 5};
    std::string detail = "pi(K/H) = " + set_text(pkh) + ", pi(H) = " + set_text(ph) +
                         ", pi(G/K) = " + set_text(pgk);
    r.checks.push_back(make_check("layer primes are pi(K/H) = {3} and pi(H) u pi(G/K) = {2,5}", ok,
                                  std::move(detail)));
  } else {
    r.checks.push_back(make_skip("layer primes are pi(K/H) = {3} and pi(H) u pi(G/K) = {2,5}",
                                 "not evaluated: series shape failed"));
  }

  finish(r);
  return r;
}

std::optional<FrobeniusWitness> find_frobenius_structure(const Group& g) {
  Spectrum sp = spectrum(g);
  PrimeGraph graph = prime_graph(sp);
  auto comps = components(graph);
  if (comps.size() < 2)
    throw input_error("prime graph of " + g.descriptor() +
                      " is connected; the Frobenius search needs a disconnected graph");

  const auto& elems = g.elements();
  std::vector<std::uint64_t> orders(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) orders[i] = g.element_order(elems[i]);

  for (const auto& part : comps) {
    // S = identity plus every element whose order uses only primes of this
    // component.
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      bool ok = true;
      for (std::uint64_t p : prime_divisors(orders[i]))
        if (!std::binary_search(part.begin(), part.end(), p)) {
          ok = false;
          break;
        }
      if (ok) inside.push_back(i);
    }
    const std::uint64_t size = inside.size();
    if (size < 2 || size >= g.order() || g.order() % size != 0) continue;

    std::unordered_set<GroupElement, ElementHash> member;
    member.reserve(inside.size() * 2);
    for (auto i : inside) member.insert(elems[i]);
    bool closed = true;
    for (auto i : inside) {
      for (auto j : inside)
        if (!member.count(g.multiply(elems[i], elems[j]))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (!closed) continue;

    std::vector<GroupElement> kgens;
    kgens.reserve(inside.size());
    for (auto i : inside) kgens.push_back(elems[i]);
    Group kernel = g.subgroup_generated(std::move(kgens),
                                        "component " + set_text(part) + " subgroup < " + g.descriptor());
    if (!is_normal(g, kernel)) continue;

    const std::uint64_t want = g.order() / size;
    GroupElement id = g.identity();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (orders[i] != want || member.count(elems[i])) continue;
      Group comp = g.subgroup_generated({elems[i]}, "cyclic complement < " + g.descriptor());
      bool meets = false;
      for (const auto& x : comp.elements())
        if (!(x == id) && member.count(x)) {
          meets = true;
          break;
        }
      if (meets) continue;
      FrobeniusWitness w{kernel, comp};
      // Soundness gate: only verified witnesses leave this function.
      if (verify_frobenius(g, w).overall) return w;
    }
  }
  return std::nullopt;
}

namespace {

// Smallest subgroup of g containing `seed` and closed under conjugation.
// Each round adds one escaping conjugate and re-closes; the subgroup at
// least doubles per round, so the loop ends within log2(|g|) rounds.
Group normal_closure_in(const Group& g, const GroupElement& seed) {
  std::vector<GroupElement> gens{seed};
  for (;;) {
    Group n = g.subgroup_generated(gens, "normal closure < " + g.descriptor());
    std::optional<GroupElement> escape;
    for (const auto& x : g.generators()) {
      GroupElement xi = g.inverse(x);
      for (const auto& e : n.elements()) {
        GroupElement c = g.multiply(g.multiply(x, e), xi);
        if (!n.contains(c)) {
          escape = c;
          break;
        }
      }
      if (escape) break;
    }
    if (!escape) return n;
    gens.push_back(*escape);
  }
}

}  // namespace

std::vector<Group> normal_subgroups(const Group& g) {
  const auto& elems = g.elements();
  std::vector<Group> found;
  auto known = [&found](const Group& n) {
    for (const auto& f : found) {
      if (f.order() != n.order()) continue;
      bool sub = true;
      for (const auto& e : n.generators())
        if (!f.contains(e)) {
          sub = false;
          break;
        }
      if (sub) return true;  // same order + containment = equality
    }
    return false;
  };

  found.push_back(g.subgroup_generated({}, "trivial < " + g.descriptor()));

  // Atoms: normal closures of conjugacy class representatives.  Every normal
  // subgroup is a union of full classes, hence the join of the closures of
  // the classes it contains, so join-closing the atoms finds all of them.
  std::unordered_set<GroupElement, ElementHash> seen;
  seen.insert(g.identity());
  for (const auto& x : elems) {
    if (seen.count(x)) continue;
    for (const auto& t : elems) seen.insert(g.multiply(g.multiply(t, x), g.inverse(t)));
    Group n = normal_closure_in(g, x);
    if (!known(n)) found.push_back(std::move(n));
  }

  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t m = found.size();
    for (std::size_t i = 1; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        std::vector<GroupElement> gens = found[i].generators();
        auto more = found[j].generators();
        gens.insert(gens.end(), more.begin(), more.end());
        Group join = g.subgroup_generated(std::move(gens), "normal join < " + g.descriptor());
        if (!known(join)) {
          found.push_back(std::move(join));
          grew = true;
        }
      }
    }
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const Group& a, const Group& b) { return a.order() < b.order(); });
  return found;
}

std::optional<std::pair<Group, Group>> find_2frobenius_series(const Group& g) {
  std::vector<Group> normals = normal_subgroups(g);
  for (const auto& h : normals) {
    if (h.order() <= 1 || h.order() >= g.order()) continue;
    for (const auto& k : normals) {
      if (k.order() <= h.order() || k.order() >= g.order()) continue;
      if (k.order() % h.order() != 0 || !contains_group(k, h)) continue;
      if (verify_2frobenius(g, h, k).overall) return std::make_pair(h, k);
    }
  }
  return std::nullopt;
}

std::string theorem_case_name(TheoremCase c) {
  switch (c) {
    case TheoremCase::Case1: return "Case1";
    case TheoremCase::Case2: return "Case2";
    case TheoremCase::Case3: return "Case3";
    case TheoremCase::Case4: return "Case4";
    case TheoremCase::NoMatch: return "NoMatch";
  }
  return "NoMatch";
}

TheoremClassification theorem_case(const Group& g) {
  TheoremClassification out;
  out.report.subject = g.descriptor();
  out.report.kind = "theorem";

  Spectrum sp = spectrum(g);
  PrimeGraph graph = prime_graph(sp);
  PrimeGraph target = prime_graph(spectrum(pgl2(9)));
  bool match = graphs_equal(graph, target);
  out.report.checks.push_back(make_check("prime graph matches pgl2(9)", match, graph_text(graph)));
  if (!match) {
    out.which = TheoremCase::NoMatch;
    out.report.checks.push_back(
        make_check("case classification", false, "NoMatch: prime graph differs from pgl2(9)"));
    finish(out.report);
    return out;
  }

  std::optional<TheoremCase> which;
  std::string detail;

  // The matched graph is disconnected, so the search precondition holds.
  if (auto w = find_frobenius_structure(g)) {
    auto pik = prime_divisors(w->kernel.order());
    auto pic = prime_divisors(w->complement.order());
    if (pik == std::vector<std::uint64_t>{3} && w->kernel.is_abelian()) {
      which = TheoremCase::Case1;
      detail = "Case1: Frobenius, abelian 3-group kernel of order " +
               std::to_string(w->kernel.order()) + ", complement of order " +
               std::to_string(w->complement.order());
    } else if (pik == std::vector<std::uint64_t>{2, 5} && pic == std::vector<std::uint64_t>{3} &&
               w->complement.is_cyclic()) {
      which = TheoremCase::Case2;
      detail = "Case2: Frobenius, {2,5}-kernel of order " + std::to_string(w->kernel.order()) +
               ", cyclic complement of order " + std::to_string(w->complement.order());
    }
  }
  if (!which) {
    if (auto series = find_2frobenius_series(g)) {
      const std::uint64_t nh = series->first.order();
      const std::uint64_t nk = series->second.order();
      which = TheoremCase::Case3;
      detail = "Case3: 2-Frobenius series with |H| = " + std::to_string(nh) +
               ", |K/H| = " + std::to_string(nk / nh) + ", |G/K| = " + std::to_string(g.order() / nk);
    }
  }
  if (!which) {
    MuSet m = mu(sp);
    if (g.order() == 720 && m.maxima == std::vector<std::uint64_t>{3, 8, 10}) {
      which = TheoremCase::Case4;
      detail = "Case4: spectral identification with pgl2(9) (order 720, mu = {3,8,10})";
    }
  }

  out.which = which.value_or(TheoremCase::NoMatch);
  out.report.checks.push_back(make_check("case classification", which.has_value(),
                                         which ? detail : "NoMatch: graph matches but no case applies"));
  finish(out.report);
  return out;
}

}  // namespace pgx
