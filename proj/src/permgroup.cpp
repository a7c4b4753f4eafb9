#include "orbidual/permgroup.hpp"

#include <algorithm>
#include <set>

namespace orbidual {

namespace {

// Closure of a set of permutations under composition.  Seeds must all act
// on the same n points.  Throws CapExceeded past caps.max_elements.
std::vector<Perm> close(int n, const std::vector<Perm>& seeds, const PermGroupCaps& caps) {
  std::set<Perm> seen;
  seen.insert(Perm(n));
  std::vector<Perm> frontier = {Perm(n)};
  for (const Perm& s : seeds) {
    if (s.n() != n) throw ValidationError("generator acts on the wrong number of points");
    std::vector<bool> hit(n, false);
    for (int i = 0; i < n; ++i) {
      if (s(i) < 0 || s(i) >= n || hit[s(i)])
        throw ValidationError("generator is not a permutation of {1..n}");
      hit[s(i)] = true;
    }
    if (seen.insert(s).second) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    if (static_cast<long long>(seen.size()) > caps.max_elements)
      throw CapExceeded("permutation group closure exceeds max_elements");
    std::vector<Perm> next;
    for (const Perm& a : frontier)
      for (const Perm& g : seeds) {
        Perm p = compose(a, g);
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  if (static_cast<long long>(seen.size()) > caps.max_elements)
    throw CapExceeded("permutation group closure exceeds max_elements");
  return std::vector<Perm>(seen.begin(), seen.end());
}

}  // namespace

PermGroup::PermGroup(int n, std::vector<Perm> gens, const PermGroupCaps& caps)
    : n_(n), gens_(std::move(gens)) {
  if (n < 0) throw ValidationError("negative point count");
  elems_ = close(n, gens_, caps);
}

bool PermGroup::contains(const Perm& s) const {
  return std::binary_search(elems_.begin(), elems_.end(), s);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (n_ != other.n_) return false;
  for (const Perm& s : elems_)
    if (!other.contains(s)) return false;
  return true;
}

PermGroup trivial_perm_group(int n) { return PermGroup(n, {}); }

PermGroup symmetric_group(int n, const PermGroupCaps& caps) {
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm t(n);  // transposition (1 2)
    t.img[0] = 1;
    t.img[1] = 0;
    Perm c(n);  // n-cycle (1 2 ... n)
    for (int i = 0; i < n; ++i) c.img[i] = (i + 1) % n;
    gens = {t, c};
  }
  return PermGroup(n, std::move(gens), caps);
}

PermGroup cyclic_generated(int n, const Perm& s, const PermGroupCaps& caps) {
  return PermGroup(n, {s}, caps);
}

PermGroup loop_shift_group(int l, int k, const PermGroupCaps& caps) {
  if (l < 1 || k < 1) throw ValidationError("loop_shift_group needs l >= 1, k >= 1");
  int n = k * l;
  Perm s(n);
  for (int i = 0; i < n; ++i) s.img[i] = (i + l) % n;
  return PermGroup(n, {s}, caps);
}

std::vector<PermGroup> all_subgroups(const PermGroup& g, const PermGroupCaps& caps) {
  // Start from all cyclic subgroups, then close under joins with cyclic
  // subgroups.  Every subgroup is a join of cyclic subgroups, so this
  // reaches all of them.
  int n = g.n();
  std::vector<std::vector<Perm>> cyclics;
  {
    std::set<std::vector<Perm>> seen;
    for (const Perm& s : g.elements()) {
      PermGroup c(n, {s}, caps);
      if (seen.insert(c.elements()).second) cyclics.push_back(c.elements());
    }
  }

  std::set<std::vector<Perm>> known;
  known.insert(trivial_perm_group(n).elements());
  std::vector<std::vector<Perm>> frontier(known.begin(), known.end());
  for (const auto& c : cyclics)
    if (known.insert(c).second) frontier.push_back(c);

  while (!frontier.empty()) {
    std::vector<std::vector<Perm>> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclics) {
        std::vector<Perm> gens = h;
        gens.insert(gens.end(), c.begin(), c.end());
        PermGroupCaps join_cap = caps;
        join_cap.max_elements = g.order();  // joins stay inside g
        std::vector<Perm> j = PermGroup(n, std::move(gens), join_cap).elements();
        if (known.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }

  std::vector<PermGroup> out;
  out.reserve(known.size());
  for (const auto& e : known) out.emplace_back(n, e, PermGroupCaps{g.order()});
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

long long fixed_dim(const PermGroup& t) { return orbit_count(t.elements(), t.n()); }

PcReport is_pc(const PermGroup& s, const PermGroupCaps& caps) {
  PcReport rep;
  rep.points = s.n();
  for (const PermGroup& t : all_subgroups(s, caps)) {
    long long orbits = fixed_dim(t);
    if ((orbits - s.n()) % 2 != 0) {
      rep.holds = false;
      rep.witness_subgroup = t.generators().empty() ? t.elements() : t.generators();
      rep.witness_orbits = orbits;
      return rep;
    }
  }
  return rep;
}

}  // namespace orbidual
