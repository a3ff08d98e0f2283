#include "pgx/groups.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace pgx {

// ---------------------------------------------------------------------------
// elements

bool SemidirectPair::operator==(const SemidirectPair& other) const {
  return *kernel_part == *other.kernel_part && *complement_part == *other.complement_part;
}

namespace {

int compare_u64(std::uint64_t a, std::uint64_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

int compare_field_elem(const FieldElement& a, const FieldElement& b) {
  return compare_u64(a.value, b.value);
}

}  // namespace

int compare(const GroupElement& a, const GroupElement& b) {
  if (a.payload().index() != b.payload().index())
    return a.payload().index() < b.payload().index() ? -1 : 1;
  if (const auto* pa = a.as_permutation()) {
    const auto* pb = b.as_permutation();
    if (int c = compare_u64(pa->image.size(), pb->image.size())) return c;
    for (std::size_t i = 0; i < pa->image.size(); ++i)
      if (int c = compare_u64(pa->image[i], pb->image[i])) return c;
    return 0;
  }
  if (const auto* ma = a.as_proj_mat()) {
    const auto* mb = b.as_proj_mat();
    if (int c = compare_field_elem(ma->a, mb->a)) return c;
    if (int c = compare_field_elem(ma->b, mb->b)) return c;
    if (int c = compare_field_elem(ma->c, mb->c)) return c;
    return compare_field_elem(ma->d, mb->d);
  }
  if (const auto* da = a.as_direct_pair()) {
    const auto* db = b.as_direct_pair();
    if (int c = compare_u64(da->parts.size(), db->parts.size())) return c;
    for (std::size_t i = 0; i < da->parts.size(); ++i)
      if (int c = compare_field_elem(da->parts[i], db->parts[i])) return c;
    return 0;
  }
  const auto* sa = a.as_semidirect_pair();
  const auto* sb = b.as_semidirect_pair();
  if (int c = compare(*sa->kernel_part, *sb->kernel_part)) return c;
  return compare(*sa->complement_part, *sb->complement_part);
}

namespace {
void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}
}  // namespace

std::size_t ElementHash::operator()(const GroupElement& e) const {
  std::size_t seed = e.payload().index();
  if (const auto* p = e.as_permutation()) {
    for (auto v : p->image) hash_mix(seed, v);
  } else if (const auto* m = e.as_proj_mat()) {
    hash_mix(seed, m->a.value);
    hash_mix(seed, m->b.value);
    hash_mix(seed, m->c.value);
    hash_mix(seed, m->d.value);
  } else if (const auto* d = e.as_direct_pair()) {
    for (const auto& part : d->parts) hash_mix(seed, part.value);
  } else if (const auto* s = e.as_semidirect_pair()) {
    hash_mix(seed, (*this)(*s->kernel_part));
    hash_mix(seed, (*this)(*s->complement_part));
  }
  return seed;
}

GroupElement semidirect_pair(GroupElement kernel_part, GroupElement complement_part) {
  SemidirectPair p;
  p.kernel_part = std::make_shared<const GroupElement>(std::move(kernel_part));
  p.complement_part = std::make_shared<const GroupElement>(std::move(complement_part));
  return GroupElement(std::move(p));
}

GroupElement make_proj_mat(const FieldElement& a, const FieldElement& b,
                           const FieldElement& c, const FieldElement& d) {
  if (!a.field || !same_field(*a.field, *b.field) || !same_field(*a.field, *c.field) ||
      !same_field(*a.field, *d.field))
    throw input_error("projective matrix entries must come from one field");
  const Field& f = *a.field;
  std::uint32_t det = f.sub(f.mul(a.value, d.value), f.mul(b.value, c.value));
  if (det == 0) throw input_error("projective matrix must have nonzero determinant");
  std::uint32_t lead = a.value ? a.value : b.value ? b.value : c.value ? c.value : d.value;
  std::uint32_t s = f.inv(lead);
  ProjMat m{{&f, f.mul(a.value, s)}, {&f, f.mul(b.value, s)},
            {&f, f.mul(c.value, s)}, {&f, f.mul(d.value, s)}};
  return GroupElement(std::move(m));
}

// ---------------------------------------------------------------------------
// rules

namespace {

struct PermRule {
  std::uint32_t degree;
};

struct ProjRule {
  std::shared_ptr<const Field> field;
  bool squares_only;
  std::vector<char> square_ok;  // per packed value; filled iff squares_only
};

struct DirectRule {
  struct Factor {
    std::shared_ptr<const Field> field;
    bool multiplicative;
  };
  std::vector<Factor> factors;
};

struct SemiRule {
  Group kernel;
  Group complement;
  std::shared_ptr<const ActionTable> act;
};

}  // namespace

struct Group::Impl {
  std::variant<PermRule, ProjRule, DirectRule, std::shared_ptr<const SemiRule>> rule;
  std::string descriptor;
  std::uint64_t cap = kDefaultCap;
  std::vector<GroupElement> gens;
  std::optional<std::vector<GroupElement>> explicit_elements;
  std::optional<std::uint64_t> known_order;

  mutable std::once_flag elements_once;
  mutable std::vector<GroupElement> elements_cache;
  mutable std::once_flag members_once;
  mutable std::unordered_set<GroupElement, ElementHash> members_cache;
};

namespace {

const Permutation& perm_of(const GroupElement& e, std::uint32_t degree) {
  const auto* p = e.as_permutation();
  if (!p || p->image.size() != degree) throw input_error("element is not a permutation of this group");
  return *p;
}

const ProjMat& mat_of(const GroupElement& e, const Field& f) {
  const auto* m = e.as_proj_mat();
  if (!m || !m->a.field || !same_field(*m->a.field, f))
    throw input_error("element is not a projective matrix over this group's field");
  return *m;
}

const DirectPair& pair_of(const GroupElement& e, const DirectRule& r) {
  const auto* d = e.as_direct_pair();
  if (!d || d->parts.size() != r.factors.size())
    throw input_error("element does not match this group's factor list");
  for (std::size_t i = 0; i < d->parts.size(); ++i)
    if (!d->parts[i].field || !same_field(*d->parts[i].field, *r.factors[i].field))
      throw input_error("element does not match this group's factor fields");
  return *d;
}

const SemidirectPair& semi_of(const GroupElement& e) {
  const auto* s = e.as_semidirect_pair();
  if (!s) throw input_error("element is not a semidirect pair");
  return *s;
}

GroupElement canonical_mat(const Field& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                           std::uint32_t d) {
  std::uint32_t lead = a ? a : b ? b : c ? c : d;
  std::uint32_t s = f.inv(lead);
  ProjMat m{{&f, f.mul(a, s)}, {&f, f.mul(b, s)}, {&f, f.mul(c, s)}, {&f, f.mul(d, s)}};
  return GroupElement(std::move(m));
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
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

}  // namespace

// ---------------------------------------------------------------------------
// core operations

GroupElement Group::identity() const {
  if (const auto* pr = std::get_if<PermRule>(&impl_->rule)) {
    Permutation p;
    p.image.resize(pr->degree);
    std::iota(p.image.begin(), p.image.end(), 0);
    return GroupElement(std::move(p));
  }
  if (const auto* xr = std::get_if<ProjRule>(&impl_->rule)) {
    return canonical_mat(*xr->field, 1, 0, 0, 1);
  }
  if (const auto* dr = std::get_if<DirectRule>(&impl_->rule)) {
    DirectPair d;
    d.parts.reserve(dr->factors.size());
    for (const auto& fac : dr->factors)
      d.parts.push_back({fac.field.get(), fac.multiplicative ? fac.field->one() : fac.field->zero()});
    return GroupElement(std::move(d));
  }
  const auto& sr = *std::get<std::shared_ptr<const SemiRule>>(impl_->rule);
  return semidirect_pair(sr.kernel.identity(), sr.complement.identity());
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const {
  if (const auto* pr = std::get_if<PermRule>(&impl_->rule)) {
    const Permutation& pa = perm_of(a, pr->degree);
    const Permutation& pb = perm_of(b, pr->degree);
    Permutation out;
    out.image.resize(pr->degree);
    for (std::uint32_t i = 0; i < pr->degree; ++i) out.image[i] = pb.image[pa.image[i]];
    return GroupElement(std::move(out));
  }
  if (const auto* xr = std::get_if<ProjRule>(&impl_->rule)) {
    const Field& f = *xr->field;
    const ProjMat& ma = mat_of(a, f);
    const ProjMat& mb = mat_of(b, f);
    std::uint32_t ra = f.add(f.mul(ma.a.value, mb.a.value), f.mul(ma.b.value, mb.c.value));
    std::uint32_t rb = f.add(f.mul(ma.a.value, mb.b.value), f.mul(ma.b.value, mb.d.value));
    std::uint32_t rc = f.add(f.mul(ma.c.value, mb.a.value), f.mul(ma.d.value, mb.c.value));
    std::uint32_t rd = f.add(f.mul(ma.c.value, mb.b.value), f.mul(ma.d.value, mb.d.value));
    return canonical_mat(f, ra, rb, rc, rd);
  }
  if (const auto* dr = std::get_if<DirectRule>(&impl_->rule)) {
    const DirectPair& da = pair_of(a, *dr);
    const DirectPair& db = pair_of(b, *dr);
    DirectPair out;
    out.parts.reserve(dr->factors.size());
    for (std::size_t i = 0; i < dr->factors.size(); ++i) {
      const Field& f = *dr->factors[i].field;
      std::uint32_t v = dr->factors[i].multiplicative ? f.mul(da.parts[i].value, db.parts[i].value)
                                                      : f.add(da.parts[i].value, db.parts[i].value);
      out.parts.push_back({&f, v});
    }
    return GroupElement(std::move(out));
  }
  const auto& sr = *std::get<std::shared_ptr<const SemiRule>>(impl_->rule);
  const SemidirectPair& sa = semi_of(a);
  const SemidirectPair& sb = semi_of(b);
  GroupElement twisted = sr.act->apply(*sa.complement_part, *sb.kernel_part);
  return semidirect_pair(sr.kernel.multiply(*sa.kernel_part, twisted),
                         sr.complement.multiply(*sa.complement_part, *sb.complement_part));
}

GroupElement Group::inverse(const GroupElement& a) const {
  if (const auto* pr = std::get_if<PermRule>(&impl_->rule)) {
    const Permutation& pa = perm_of(a, pr->degree);
    Permutation out;
    out.image.resize(pr->degree);
    for (std::uint32_t i = 0; i < pr->degree; ++i) out.image[pa.image[i]] = static_cast<std::uint16_t>(i);
    return GroupElement(std::move(out));
  }
  if (const auto* xr = std::get_if<ProjRule>(&impl_->rule)) {
    const Field& f = *xr->field;
    const ProjMat& m = mat_of(a, f);
    // Adjugate; the determinant scale is absorbed by canonicalization.
    return canonical_mat(f, m.d.value, f.neg(m.b.value), f.neg(m.c.value), m.a.value);
  }
  if (const auto* dr = std::get_if<DirectRule>(&impl_->rule)) {
    const DirectPair& da = pair_of(a, *dr);
    DirectPair out;
    out.parts.reserve(dr->factors.size());
    for (std::size_t i = 0; i < dr->factors.size(); ++i) {
      const Field& f = *dr->factors[i].field;
      std::uint32_t v = dr->factors[i].multiplicative ? f.inv(da.parts[i].value) : f.neg(da.parts[i].value);
      out.parts.push_back({&f, v});
    }
    return GroupElement(std::move(out));
  }
  const auto& sr = *std::get<std::shared_ptr<const SemiRule>>(impl_->rule);
  const SemidirectPair& sa = semi_of(a);
  GroupElement cinv = sr.complement.inverse(*sa.complement_part);
  GroupElement kinv = sr.kernel.inverse(*sa.kernel_part);
  // Sequence the action before semidirect_pair: argument evaluation order is
  // unspecified, and the move of cinv must not race the apply that reads it.
  GroupElement kpart = sr.act->apply(cinv, kinv);
  return semidirect_pair(std::move(kpart), std::move(cinv));
}

std::uint64_t Group::element_order(const GroupElement& g) const {
  GroupElement id = identity();
  if (g == id) return 1;
  std::uint64_t bound = order();
  GroupElement acc = g;
  std::uint64_t n = 1;
  while (!(acc == id)) {
    acc = multiply(acc, g);
    ++n;
    if (n > bound) throw input_error("element order exceeds the group order; element not in group?");
  }
  return n;
}

std::uint64_t Group::order() const {
  if (impl_->known_order) return *impl_->known_order;
  return elements().size();
}

namespace {

// Closure of `gens` under right multiplication starting at the identity;
// finiteness supplies inverses.  Returns elements in BFS discovery order.
std::vector<GroupElement> bfs_closure(const Group& g, const std::vector<GroupElement>& gens,
                                      std::uint64_t cap) {
  GroupElement id = g.identity();
  std::vector<GroupElement> out{id};
  std::unordered_set<GroupElement, ElementHash> seen{id};
  std::queue<GroupElement> todo;
  todo.push(id);
  while (!todo.empty()) {
    GroupElement x = std::move(todo.front());
    todo.pop();
    for (const auto& gen : gens) {
      GroupElement y = g.multiply(x, gen);
      if (seen.insert(y).second) {
        if (out.size() >= cap)
          throw capacity_error("subgroup closure exceeds cap " + std::to_string(cap) +
                               " (partial count " + std::to_string(out.size()) + ")");
        out.push_back(y);
        todo.push(y);
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<GroupElement>& Group::elements() const {
  std::call_once(impl_->elements_once, [this] {
    if (impl_->explicit_elements) {
      impl_->elements_cache = *impl_->explicit_elements;
      return;
    }
    if (std::holds_alternative<PermRule>(impl_->rule)) {
      impl_->elements_cache = bfs_closure(*this, impl_->gens, impl_->cap);
      return;
    }
    std::uint64_t predicted = *impl_->known_order;
    if (predicted > impl_->cap)
      throw capacity_error("group order " + std::to_string(predicted) + " exceeds cap " +
                           std::to_string(impl_->cap));
    if (const auto* xr = std::get_if<ProjRule>(&impl_->rule)) {
      const Field& f = *xr->field;
      std::uint64_t q = f.size();
      std::vector<GroupElement> out;
      out.reserve(predicted);
      auto keep = [&](std::uint32_t det) {
        if (det == 0) return false;
        return !xr->squares_only || xr->square_ok[det] != 0;
      };
      // Canonical tuples ascending: the a=0 block forces b=1 and c != 0, then
      // the a=1 block runs over free (b,c,d).
      for (std::uint32_t c = 1; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d)
          if (keep(f.neg(c))) {
            ProjMat m{{&f, 0}, {&f, 1}, {&f, c}, {&f, d}};
            out.emplace_back(std::move(m));
          }
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          std::uint32_t bc = f.mul(b, c);
          for (std::uint32_t d = 0; d < q; ++d)
            if (keep(f.sub(d, bc))) {
              ProjMat m{{&f, 1}, {&f, b}, {&f, c}, {&f, d}};
              out.emplace_back(std::move(m));
            }
        }
      impl_->elements_cache = std::move(out);
      return;
    }
    if (const auto* dr = std::get_if<DirectRule>(&impl_->rule)) {
      std::vector<GroupElement> out;
      out.reserve(predicted);
      std::vector<std::uint32_t> vals(dr->factors.size());
      for (std::size_t i = 0; i < vals.size(); ++i)
        vals[i] = dr->factors[i].multiplicative ? 1 : 0;
      bool running = true;
      while (running) {
        DirectPair d;
        d.parts.reserve(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i)
          d.parts.push_back({dr->factors[i].field.get(), vals[i]});
        out.emplace_back(std::move(d));
        // Odometer, last factor fastest.
        running = false;
        for (std::size_t i = vals.size(); i-- > 0;) {
          if (++vals[i] < dr->factors[i].field->size()) { running = true; break; }
          vals[i] = dr->factors[i].multiplicative ? 1 : 0;
        }
      }
      impl_->elements_cache = std::move(out);
      return;
    }
    const auto& sr = *std::get<std::shared_ptr<const SemiRule>>(impl_->rule);
    std::vector<GroupElement> out;
    out.reserve(predicted);
    for (const auto& k : sr.kernel.elements())
      for (const auto& c : sr.complement.elements()) out.push_back(semidirect_pair(k, c));
    impl_->elements_cache = std::move(out);
  });
  return impl_->elements_cache;
}

bool Group::contains(const GroupElement& g) const {
  if (!impl_->explicit_elements) {
    if (const auto* xr = std::get_if<ProjRule>(&impl_->rule)) {
      const auto* m = g.as_proj_mat();
      if (!m || !m->a.field || !same_field(*m->a.field, *xr->field)) return false;
      const Field& f = *xr->field;
      std::uint32_t lead =
          m->a.value ? m->a.value : m->b.value ? m->b.value : m->c.value ? m->c.value : m->d.value;
      if (lead != 1) return false;
      std::uint32_t det = f.sub(f.mul(m->a.value, m->d.value), f.mul(m->b.value, m->c.value));
      if (det == 0) return false;
      return !xr->squares_only || xr->square_ok[det] != 0;
    }
    if (const auto* dr = std::get_if<DirectRule>(&impl_->rule)) {
      const auto* d = g.as_direct_pair();
      if (!d || d->parts.size() != dr->factors.size()) return false;
      for (std::size_t i = 0; i < d->parts.size(); ++i) {
        const auto& fac = dr->factors[i];
        if (!d->parts[i].field || !same_field(*d->parts[i].field, *fac.field)) return false;
        if (d->parts[i].value >= fac.field->size()) return false;
        if (fac.multiplicative && d->parts[i].value == 0) return false;
      }
      return true;
    }
    if (const auto* sp = std::get_if<std::shared_ptr<const SemiRule>>(&impl_->rule)) {
      const auto* s = g.as_semidirect_pair();
      if (!s) return false;
      return (*sp)->kernel.contains(*s->kernel_part) && (*sp)->complement.contains(*s->complement_part);
    }
  }
  // Permutation groups and generated subgroups: hash the enumerated list.
  std::call_once(impl_->members_once, [this] {
    const auto& elems = elements();
    impl_->members_cache.reserve(elems.size());
    for (const auto& e : elems) impl_->members_cache.insert(e);
  });
  return impl_->members_cache.count(g) > 0;
}

std::vector<GroupElement> Group::generators() const {
  if (!impl_->gens.empty()) return impl_->gens;
  if (const auto* dr = std::get_if<DirectRule>(&impl_->rule); dr && !impl_->explicit_elements) {
    std::vector<GroupElement> out;
    GroupElement id = identity();
    for (std::size_t i = 0; i < dr->factors.size(); ++i) {
      const auto& fac = dr->factors[i];
      const Field& f = *fac.field;
      std::vector<std::uint32_t> seeds;
      if (fac.multiplicative) {
        if (f.size() > 2) seeds.push_back(f.generator());
      } else {
        // Additive basis: the monomials 1, x, x^2, ...
        std::uint32_t v = 1;
        for (std::uint32_t deg = 0; deg < f.degree(); ++deg) {
          seeds.push_back(v);
          v = static_cast<std::uint32_t>(v * f.characteristic());
        }
      }
      for (std::uint32_t v : seeds) {
        DirectPair d = *id.as_direct_pair();
        d.parts[i].value = v;
        out.push_back(GroupElement(std::move(d)));
      }
    }
    return out;
  }
  if (const auto* sp = std::get_if<std::shared_ptr<const SemiRule>>(&impl_->rule);
      sp && !impl_->explicit_elements) {
    const auto& sr = **sp;
    std::vector<GroupElement> out;
    GroupElement idK = sr.kernel.identity();
    GroupElement idC = sr.complement.identity();
    for (const auto& kg : sr.kernel.generators()) out.push_back(semidirect_pair(kg, idC));
    for (const auto& cg : sr.complement.generators()) out.push_back(semidirect_pair(idK, cg));
    return out;
  }
  // Last resort: the full element list generates.
  return elements();
}

bool Group::is_abelian() const {
  const auto& elems = elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!(multiply(elems[i], elems[j]) == multiply(elems[j], elems[i]))) return false;
  return true;
}

bool Group::is_cyclic() const {
  std::uint64_t n = order();
  for (const auto& e : elements())
    if (element_order(e) == n) return true;
  return false;
}

bool Group::is_nilpotent() const {
  const auto& elems = elements();
  std::uint64_t n = order();
  std::vector<std::uint64_t> orders(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) orders[i] = element_order(elems[i]);

  for (std::uint64_t prime : distinct_primes(n)) {
    std::uint64_t p_part = 1;
    for (std::uint64_t m = n; m % prime == 0; m /= prime) p_part *= prime;

    auto is_ppower = [&](std::uint64_t m) {
      while (m % prime == 0) m /= prime;
      return m == 1;
    };
    std::vector<const GroupElement*> s_p;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (is_ppower(orders[i])) s_p.push_back(&elems[i]);
    if (s_p.size() != p_part) return false;
    if (s_p.size() == elems.size()) continue;  // the whole group is trivially closed

    std::unordered_set<GroupElement, ElementHash> in_sp;
    in_sp.reserve(s_p.size());
    for (const auto* e : s_p) in_sp.insert(*e);
    for (const auto* x : s_p)
      for (const auto* y : s_p)
        if (!in_sp.count(multiply(*x, *y))) return false;
  }
  return true;
}

const std::string& Group::descriptor() const { return impl_->descriptor; }
std::uint64_t Group::cap() const { return impl_->cap; }

bool Group::is_semidirect() const {
  return std::holds_alternative<std::shared_ptr<const SemiRule>>(impl_->rule);
}
const Group& Group::semidirect_kernel() const {
  if (!is_semidirect()) throw input_error("group is not a semidirect product");
  return std::get<std::shared_ptr<const SemiRule>>(impl_->rule)->kernel;
}
const Group& Group::semidirect_complement() const {
  if (!is_semidirect()) throw input_error("group is not a semidirect product");
  return std::get<std::shared_ptr<const SemiRule>>(impl_->rule)->complement;
}
const ActionTable& Group::semidirect_action() const {
  if (!is_semidirect()) throw input_error("group is not a semidirect product");
  return *std::get<std::shared_ptr<const SemiRule>>(impl_->rule)->act;
}
bool Group::is_field_factor_group() const {
  return std::holds_alternative<DirectRule>(impl_->rule);
}

// ---------------------------------------------------------------------------
// factories

Group Group::permutation_group(std::uint32_t degree, std::vector<GroupElement> gens,
                               std::string descriptor, std::uint64_t cap) {
  if (degree == 0) throw input_error("permutation degree must be at least 1");
  if (degree > 0xffff) throw input_error("permutation degree too large");
  for (const auto& g : gens) {
    const auto* p = g.as_permutation();
    if (!p || p->image.size() != degree)
      throw input_error("generator is not a permutation of degree " + std::to_string(degree));
    std::vector<char> seen(degree, 0);
    for (auto v : p->image) {
      if (v >= degree || seen[v]) throw input_error("generator image is not a bijection");
      seen[v] = 1;
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->rule = PermRule{degree};
  impl->descriptor = std::move(descriptor);
  impl->cap = cap;
  impl->gens = std::move(gens);
  Group g{impl};
  impl->explicit_elements = bfs_closure(g, impl->gens, cap);
  impl->known_order = impl->explicit_elements->size();
  return g;
}

Group Group::projective_group(std::shared_ptr<const Field> f, bool square_determinants_only,
                              std::string descriptor, std::uint64_t cap) {
  if (!f) throw input_error("projective group needs a field");
  ProjRule rule;
  rule.field = f;
  rule.squares_only = square_determinants_only;
  std::uint64_t q = f->size();
  std::uint64_t n = q * q * q - q;
  if (square_determinants_only) {
    rule.square_ok.assign(q, 0);
    for (std::uint32_t x = 1; x < q; ++x) rule.square_ok[f->mul(x, x)] = 1;
    if (f->characteristic() != 2) n /= 2;  // in characteristic 2 every unit is a square
  }
  auto impl = std::make_shared<Impl>();
  impl->rule = std::move(rule);
  impl->descriptor = std::move(descriptor);
  impl->cap = cap;
  impl->known_order = n;
  // Root-subgroup generators: the upper and lower unipotents over a basis
  // generate SL(2,q) (hence PSL projectively); one non-square diagonal scalar
  // extends to all of PGL for odd q.  Even q needs no extra: PSL = PGL there.
  std::uint32_t mono = 1;
  for (std::uint32_t i = 0; i < f->degree(); ++i) {
    impl->gens.push_back(canonical_mat(*f, 1, mono, 0, 1));
    impl->gens.push_back(canonical_mat(*f, 1, 0, mono, 1));
    mono = static_cast<std::uint32_t>(mono * f->characteristic());
  }
  if (!square_determinants_only && f->characteristic() != 2)
    impl->gens.push_back(canonical_mat(*f, f->generator(), 0, 0, 1));
  return Group{impl};
}

Group Group::field_additive(std::shared_ptr<const Field> f, std::uint64_t cap) {
  if (!f) throw input_error("additive group needs a field");
  DirectRule rule;
  rule.factors.push_back({f, false});
  auto impl = std::make_shared<Impl>();
  impl->rule = std::move(rule);
  impl->descriptor = "GF(" + std::to_string(f->size()) + ")+";
  impl->cap = cap;
  impl->known_order = f->size();
  return Group{impl};
}

Group Group::field_multiplicative(std::shared_ptr<const Field> f, std::uint64_t cap) {
  if (!f) throw input_error("multiplicative group needs a field");
  DirectRule rule;
  rule.factors.push_back({f, true});
  auto impl = std::make_shared<Impl>();
  impl->rule = std::move(rule);
  impl->descriptor = "GF(" + std::to_string(f->size()) + ")*";
  impl->cap = cap;
  impl->known_order = f->size() - 1;
  return Group{impl};
}

Group Group::direct_product(const Group& a, const Group& b) {
  const auto* ra = std::get_if<DirectRule>(&a.impl_->rule);
  const auto* rb = std::get_if<DirectRule>(&b.impl_->rule);
  if (!ra || !rb || a.impl_->explicit_elements || b.impl_->explicit_elements)
    throw input_error("direct products are supported for full field-factor groups only");
  DirectRule rule;
  rule.factors = ra->factors;
  rule.factors.insert(rule.factors.end(), rb->factors.begin(), rb->factors.end());
  auto impl = std::make_shared<Impl>();
  impl->rule = std::move(rule);
  impl->descriptor = a.descriptor() + " x " + b.descriptor();
  impl->cap = std::max(a.cap(), b.cap());
  impl->known_order = a.order() * b.order();
  return Group{impl};
}

Group Group::semidirect(const Group& kernel, const Group& complement,
                        std::shared_ptr<const ActionTable> act, std::string descriptor) {
  if (!act) throw input_error("semidirect product needs an action table");
  if (!act->kernel().same_underlying(kernel) || !act->complement().same_underlying(complement))
    throw input_error("action table was built for different kernel/complement groups");
  auto impl = std::make_shared<Impl>();
  impl->rule =
      std::shared_ptr<const SemiRule>(new SemiRule{kernel, complement, std::move(act)});
  impl->descriptor = descriptor.empty()
                         ? "(" + kernel.descriptor() + ") x| (" + complement.descriptor() + ")"
                         : std::move(descriptor);
  impl->cap = std::max(kernel.cap(), complement.cap());
  impl->known_order = kernel.order() * complement.order();
  return Group{impl};
}

Group Group::subgroup_generated(std::vector<GroupElement> gens, std::string descriptor) const {
  for (const auto& g : gens)
    if (!contains(g)) throw input_error("subgroup generator lies outside the parent group");
  auto impl = std::make_shared<Impl>();
  impl->rule = impl_->rule;
  impl->descriptor = descriptor.empty()
                         ? "subgroup(" + std::to_string(gens.size()) + " gens) of " + impl_->descriptor
                         : std::move(descriptor);
  impl->cap = impl_->cap;
  impl->gens = std::move(gens);
  Group g{impl};
  impl->explicit_elements = bfs_closure(g, impl->gens, impl->cap);
  impl->known_order = impl->explicit_elements->size();
  return g;
}

bool is_normal(const Group& g, const Group& h) {
  for (const auto& x : g.elements()) {
    GroupElement xi = g.inverse(x);
    for (const auto& k : h.elements())
      if (!h.contains(g.multiply(g.multiply(x, k), xi))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// action tables

ActionTable::ActionTable(Group kernel, Group complement)
    : kernel_(std::move(kernel)), complement_(std::move(complement)) {}

std::shared_ptr<const ActionTable> ActionTable::build(const Group& kernel, const Group& complement,
                                                      const ActionFn& act) {
  auto table = std::shared_ptr<ActionTable>(new ActionTable(kernel, complement));
  const auto& kelems = kernel.elements();
  const auto& celems = complement.elements();
  table->kernel_index_.reserve(kelems.size());
  for (std::uint32_t i = 0; i < kelems.size(); ++i) table->kernel_index_.emplace(kelems[i], i);
  table->complement_index_.reserve(celems.size());
  for (std::uint32_t i = 0; i < celems.size(); ++i) table->complement_index_.emplace(celems[i], i);

  table->maps_.assign(celems.size(), std::vector<std::uint32_t>(kelems.size()));
  for (std::uint32_t ci = 0; ci < celems.size(); ++ci)
    for (std::uint32_t ki = 0; ki < kelems.size(); ++ki) {
      GroupElement image = act(celems[ci], kelems[ki]);
      auto it = table->kernel_index_.find(image);
      if (it == table->kernel_index_.end())
        throw construction_error("action image leaves the kernel (complement element #" +
                                 std::to_string(ci) + ", kernel element #" + std::to_string(ki) + ")");
      table->maps_[ci][ki] = it->second;
    }

  // Index-level kernel multiplication.  Fast path: a one-factor field group
  // enumerated in value order, where the index is the packed value itself
  // (additive) or value - 1 (multiplicative).
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> kmul;
  {
    bool additive_codec = true, mult_codec = true;
    const Field* kf = nullptr;
    for (std::uint32_t i = 0; i < kelems.size() && (additive_codec || mult_codec); ++i) {
      const auto* dp = kelems[i].as_direct_pair();
      if (!dp || dp->parts.size() != 1) {
        additive_codec = mult_codec = false;
        break;
      }
      kf = dp->parts[0].field;
      if (dp->parts[0].value != i) additive_codec = false;
      if (dp->parts[0].value != i + 1) mult_codec = false;
    }
    if (additive_codec && kf) {
      kmul = [kf](std::uint32_t i, std::uint32_t j) { return kf->add(i, j); };
    } else if (mult_codec && kf) {
      kmul = [kf](std::uint32_t i, std::uint32_t j) { return kf->mul(i + 1, j + 1) - 1; };
    } else {
      ActionTable* t = table.get();
      const Group* k = &kernel;
      kmul = [t, k, &kelems](std::uint32_t i, std::uint32_t j) {
        return t->kernel_index_.at(k->multiply(kelems[i], kelems[j]));
      };
    }
  }

  // (1) The complement identity must act as the identity map.
  std::uint32_t id_ci = table->complement_index_.at(complement.identity());
  for (std::uint32_t ki = 0; ki < kelems.size(); ++ki)
    if (table->maps_[id_ci][ki] != ki)
      throw construction_error("action violates act(1) = id: kernel element #" + std::to_string(ki) +
                               " moves under the identity");

  // (2) Generator maps must be automorphisms (bijective, multiplicative).
  // Every other map is a composition of these by (3), hence an automorphism.
  std::vector<GroupElement> cgens = complement.generators();
  for (const auto& s : cgens) {
    std::uint32_t si = table->complement_index_.at(s);
    const auto& row = table->maps_[si];
    std::vector<char> hit(kelems.size(), 0);
    for (std::uint32_t ki = 0; ki < kelems.size(); ++ki) {
      if (hit[row[ki]])
        throw construction_error("action violates bijectivity: complement generator #" +
                                 std::to_string(si) + " is not injective on the kernel");
      hit[row[ki]] = 1;
    }
    for (std::uint32_t i = 0; i < kelems.size(); ++i)
      for (std::uint32_t j = 0; j < kelems.size(); ++j)
        if (row[kmul(i, j)] != kmul(row[i], row[j]))
          throw construction_error(
              "action violates act(s)(x*y) = act(s)(x)*act(s)(y) at kernel elements #" +
              std::to_string(i) + ", #" + std::to_string(j) + " (complement generator #" +
              std::to_string(si) + ")");
  }

  // (3) Homomorphism: act(s*c) = act(s) after act(c) for every generator s and
  // every complement element c; induction over words pins the whole table.
  for (const auto& s : cgens) {
    std::uint32_t si = table->complement_index_.at(s);
    const auto& rows = table->maps_[si];
    for (std::uint32_t ci = 0; ci < celems.size(); ++ci) {
      std::uint32_t sci = table->complement_index_.at(complement.multiply(s, celems[ci]));
      const auto& lhs = table->maps_[sci];
      const auto& rowc = table->maps_[ci];
      for (std::uint32_t ki = 0; ki < kelems.size(); ++ki)
        if (lhs[ki] != rows[rowc[ki]])
          throw construction_error(
              "action violates act(s*c) = act(s)act(c) at kernel element #" + std::to_string(ki) +
              " (complement elements #" + std::to_string(si) + ", #" + std::to_string(ci) + ")");
    }
  }

  return table;
}

GroupElement ActionTable::apply(const GroupElement& c, const GroupElement& k) const {
  return kernel_.elements()[maps_[complement_index(c)][kernel_index(k)]];
}

std::uint32_t ActionTable::kernel_index(const GroupElement& k) const {
  auto it = kernel_index_.find(k);
  if (it == kernel_index_.end()) throw input_error("element is not in the action's kernel");
  return it->second;
}

std::uint32_t ActionTable::complement_index(const GroupElement& c) const {
  auto it = complement_index_.find(c);
  if (it == complement_index_.end()) throw input_error("element is not in the action's complement");
  return it->second;
}

bool is_fixed_point_free(const Group& kernel, const Group& complement, const ActionTable& act) {
  if (!act.kernel().same_underlying(kernel) || !act.complement().same_underlying(complement))
    throw input_error("action table does not belong to these groups");
  std::uint32_t id_ci = act.complement_index(complement.identity());
  std::uint32_t id_ki = act.kernel_index(kernel.identity());
  std::uint64_t nc = complement.order();
  std::uint64_t nk = kernel.order();
  for (std::uint32_t ci = 0; ci < nc; ++ci) {
    if (ci == id_ci) continue;
    for (std::uint32_t ki = 0; ki < nk; ++ki) {
      if (ki == id_ki) continue;
      if (act.apply_index(ci, ki) == ki) return false;
    }
  }
  return true;
}

GroupElement permutation_from_cycles(std::uint32_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p;
  p.image.resize(degree);
  std::iota(p.image.begin(), p.image.end(), 0);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::uint32_t pt : cycle) {
      if (pt < 1 || pt > degree)
        throw input_error("cycle point " + std::to_string(pt) + " outside 1.." +
                          std::to_string(degree));
      if (used[pt - 1])
        throw input_error("cycle point " + std::to_string(pt) + " repeated; cycles must be disjoint");
      used[pt - 1] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.image[cycle[i] - 1] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()] - 1);
  }
  return GroupElement(std::move(p));
}

std::string element_text(const GroupElement& e) {
  if (const auto* p = e.as_permutation()) {
    std::string out;
    std::vector<char> done(p->image.size(), 0);
    for (std::size_t i = 0; i < p->image.size(); ++i) {
      if (done[i] || p->image[i] == i) continue;
      out += '(';
      std::size_t j = i;
      bool first = true;
      do {
        if (!first) out += ' ';
        out += std::to_string(j + 1);
        done[j] = 1;
        j = p->image[j];
        first = false;
      } while (j != i);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }
  if (const auto* m = e.as_proj_mat()) {
    return "[[" + std::to_string(m->a.value) + "," + std::to_string(m->b.value) + "],[" +
           std::to_string(m->c.value) + "," + std::to_string(m->d.value) + "]]";
  }
  if (const auto* d = e.as_direct_pair()) {
    std::string out = "(";
    for (std::size_t i = 0; i < d->parts.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(d->parts[i].value);
    }
    return out + ")";
  }
  const auto* s = e.as_semidirect_pair();
  return "(" + element_text(*s->kernel_part) + " | " + element_text(*s->complement_part) + ")";
}

std::pair<Group, Group> semidirect_embedded_parts(const Group& g) {
  if (!g.is_semidirect()) throw input_error("group is not a semidirect product");
  const Group& k = g.semidirect_kernel();
  const Group& c = g.semidirect_complement();
  GroupElement idK = k.identity();
  GroupElement idC = c.identity();
  std::vector<GroupElement> kgens, cgens;
  for (const auto& kg : k.generators()) kgens.push_back(semidirect_pair(kg, idC));
  for (const auto& cg : c.generators()) cgens.push_back(semidirect_pair(idK, cg));
  Group kernel_sub = g.subgroup_generated(std::move(kgens), "kernel of " + g.descriptor());
  Group complement_sub = g.subgroup_generated(std::move(cgens), "complement of " + g.descriptor());
  return {std::move(kernel_sub), std::move(complement_sub)};
}

}  // namespace pgx
