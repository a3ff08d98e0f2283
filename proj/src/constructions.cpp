#include "pgx/constructions.hpp"

#include <string>
#include <utility>
#include <vector>

#include "pgx/errors.hpp"

namespace pgx {

namespace {

std::pair<std::uint64_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
  if (q < 2) throw input_error("expected a prime power >= 2, got " + std::to_string(q));
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1)
    throw input_error(std::to_string(q) + " is not a prime power");
  return {p, k};
}

Group projective(std::uint64_t q, bool squares_only, const std::string& name, std::uint64_t cap) {
  auto [p, k] = factor_prime_power(q);
  auto f = field_new(p, k, cap);
  return Group::projective_group(f, squares_only, name + "(" + std::to_string(q) + ")", cap);
}

Group frobfield_impl(std::uint64_t p, std::uint32_t k, std::uint64_t m, std::uint64_t cap,
                     std::string descriptor) {
  auto f = field_new(p, k, cap);
  std::uint64_t units = f->size() - 1;
  if (m == 0 || units % m != 0)
    throw input_error("complement order " + std::to_string(m) + " does not divide " +
                      std::to_string(units));
  Group kernel = Group::field_additive(f, cap);
  Group full_units = Group::field_multiplicative(f, cap);
  std::vector<GroupElement> cgens;
  if (m > 1) {
    std::uint32_t u = f->pow(f->generator(), static_cast<std::int64_t>(units / m));
    cgens.push_back(GroupElement(DirectPair{{{f.get(), u}}}));
  }
  Group complement = full_units.subgroup_generated(
      std::move(cgens), "C" + std::to_string(m) + " < GF(" + std::to_string(f->size()) + ")*");
  const Field* fp = f.get();
  auto table = ActionTable::build(
      kernel, complement, [fp](const GroupElement& c, const GroupElement& v) {
        DirectPair out = *v.as_direct_pair();
        out.parts[0].value = fp->mul(c.as_direct_pair()->parts[0].value, out.parts[0].value);
        return GroupElement(std::move(out));
      });
  return Group::semidirect(kernel, complement, std::move(table), std::move(descriptor));
}

}  // namespace

Group pgl2(std::uint64_t q, std::uint64_t cap) { return projective(q, false, "pgl2", cap); }

Group psl2(std::uint64_t q, std::uint64_t cap) { return projective(q, true, "psl2", cap); }

Group symmetric(std::uint32_t n, std::uint64_t cap) {
  if (n == 0) throw input_error("symmetric(0) is undefined");
  std::vector<GroupElement> gens;
  if (n >= 2) {
    gens.push_back(permutation_from_cycles(n, {{1, 2}}));
    std::vector<std::uint32_t> full(n);
    for (std::uint32_t i = 0; i < n; ++i) full[i] = i + 1;
    gens.push_back(permutation_from_cycles(n, {full}));
  }
  return Group::permutation_group(n, std::move(gens), "sym(" + std::to_string(n) + ")", cap);
}

Group alternating(std::uint32_t n, std::uint64_t cap) {
  if (n == 0) throw input_error("alternating(0) is undefined");
  std::vector<GroupElement> gens;
  for (std::uint32_t i = 1; i + 2 <= n; ++i)
    gens.push_back(permutation_from_cycles(n, {{i, i + 1, i + 2}}));
  return Group::permutation_group(n, std::move(gens), "alt(" + std::to_string(n) + ")", cap);
}

Group frobenius_field(std::uint64_t p, std::uint32_t k, std::uint64_t m, std::uint64_t cap) {
  return frobfield_impl(p, k, m, cap,
                        "frobfield(" + std::to_string(p) + "," + std::to_string(k) + "," +
                            std::to_string(m) + ")");
}

Group paper_g1() { return frobfield_impl(3, 4, 80, Group::kDefaultCap, "paper.g1"); }

Group paper_g2() {
  auto f4 = field_new(2, 2);
  auto f25 = field_new(5, 2);
  Group kernel = Group::direct_product(Group::field_additive(f4), Group::field_additive(f25));
  Group units =
      Group::direct_product(Group::field_multiplicative(f4), Group::field_multiplicative(f25));
  std::uint32_t w = f4->generator();                 // order 3
  std::uint32_t b = f25->pow(f25->generator(), 8);   // order 24/8 = 3
  GroupElement diag(DirectPair{{{f4.get(), w}, {f25.get(), b}}});
  Group c3 = units.subgroup_generated({diag}, "diagonal C3 < GF(4)* x GF(25)*");
  const Field* f4p = f4.get();
  const Field* f25p = f25.get();
  auto table = ActionTable::build(
      kernel, c3, [f4p, f25p](const GroupElement& c, const GroupElement& v) {
        const auto& cp = *c.as_direct_pair();
        DirectPair out = *v.as_direct_pair();
        out.parts[0].value = f4p->mul(cp.parts[0].value, out.parts[0].value);
        out.parts[1].value = f25p->mul(cp.parts[1].value, out.parts[1].value);
        return GroupElement(std::move(out));
      });
  return Group::semidirect(kernel, c3, std::move(table), "paper.g2");
}

Group paper_g3() {
  auto f25 = field_new(5, 2);
  auto f2 = field_new(2, 1);
  Group v = Group::field_additive(f25);
  std::uint32_t b = f25->pow(f25->generator(), 8);  // order 3
  Group tk = Group::field_multiplicative(f25).subgroup_generated(
      {GroupElement(DirectPair{{{f25.get(), b}}})}, "<b> < GF(25)*");
  Group tc = Group::field_additive(f2);  // C2, written additively: 1 = the automorphism f
  const Field* f25p = f25.get();
  auto t_table = ActionTable::build(
      tk, tc, [f25p](const GroupElement& c, const GroupElement& x) {
        DirectPair out = *x.as_direct_pair();
        if (c.as_direct_pair()->parts[0].value != 0) out.parts[0].value = f25p->frobenius(out.parts[0].value);
        return GroupElement(std::move(out));
      });
  Group t = Group::semidirect(tk, tc, std::move(t_table), "<b> x| <frob5>");
  auto g_table = ActionTable::build(
      v, t, [f25p](const GroupElement& c, const GroupElement& x) {
        const auto& tp = *c.as_semidirect_pair();
        std::uint32_t scale = tp.kernel_part->as_direct_pair()->parts[0].value;
        std::uint32_t twist = tp.complement_part->as_direct_pair()->parts[0].value;
        DirectPair out = *x.as_direct_pair();
        if (twist != 0) out.parts[0].value = f25p->frobenius(out.parts[0].value);
        out.parts[0].value = f25p->mul(scale, out.parts[0].value);
        return GroupElement(std::move(out));
      });
  return Group::semidirect(v, t, std::move(g_table), "paper.g3");
}

SeriesWitness paper_g3_series() {
  Group g = paper_g3();
  const Group& v = g.semidirect_kernel();
  const Group& t = g.semidirect_complement();
  GroupElement id_t = t.identity();
  std::vector<GroupElement> hgens;
  for (const auto& kg : v.generators()) hgens.push_back(semidirect_pair(kg, id_t));
  Group h = g.subgroup_generated(hgens, "V < paper.g3");
  GroupElement b_in_t = semidirect_pair(t.semidirect_kernel().generators().at(0),
                                        t.semidirect_complement().identity());
  std::vector<GroupElement> kgens = hgens;
  kgens.push_back(semidirect_pair(v.identity(), b_in_t));
  Group k = g.subgroup_generated(kgens, "V<b> < paper.g3");
  return {std::move(g), std::move(h), std::move(k)};
}

}  // namespace pgx
