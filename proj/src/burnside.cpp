#include "orbidual/burnside.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace orbidual {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<int> mul_table, int identity,
                         const FiniteGroupCaps& caps)
    : n_(static_cast<int>(names.size())),
      id_(identity),
      mul_(std::move(mul_table)),
      names_(std::move(names)) {
  if (n_ <= 0) throw ValidationError("group must be non-empty");
  if (n_ > caps.max_order)
    throw CapExceeded("group order " + std::to_string(n_) + " exceeds cap " +
                      std::to_string(caps.max_order));
  if (mul_.size() != static_cast<size_t>(n_) * n_)
    throw ValidationError("multiplication table size mismatch");
  if (identity < 0 || identity >= n_) throw ValidationError("identity index out of range");
  for (int v : mul_)
    if (v < 0 || v >= n_) throw ValidationError("multiplication table entry out of range");
  for (int a = 0; a < n_; ++a)
    if (mul(id_, a) != a || mul(a, id_) != a)
      throw ValidationError("identity element does not act as identity");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == id_ && mul(b, a) == id_) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) throw ValidationError("element without a two-sided inverse");
  }
  if (n_ <= 128) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw ValidationError("multiplication table is not associative");
  } else {
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (int t = 0; t < 10000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw ValidationError("multiplication table is not associative");
    }
  }
}

GroupRef make_group(std::vector<std::string> names, std::vector<int> mul_table, int identity,
                    const FiniteGroupCaps& caps) {
  return std::make_shared<const FiniteGroup>(std::move(names), std::move(mul_table), identity,
                                             caps);
}

Subgp::Subgp(GroupRef g, std::vector<int> elems) : g_(std::move(g)), elems_(std::move(elems)) {
  if (!g_) throw ValidationError("subgroup without an ambient group");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty()) throw ValidationError("subgroup must be non-empty");
  for (int e : elems_)
    if (e < 0 || e >= g_->size()) throw ValidationError("subgroup element index out of range");
  if (!std::binary_search(elems_.begin(), elems_.end(), g_->id()))
    throw ValidationError("subgroup must contain the identity");
  for (int a : elems_) {
    if (!std::binary_search(elems_.begin(), elems_.end(), g_->inv(a)))
      throw ValidationError("subgroup not closed under inverse");
    for (int b : elems_)
      if (!std::binary_search(elems_.begin(), elems_.end(), g_->mul(a, b)))
        throw ValidationError("subgroup not closed under multiplication");
  }
}

Subgp Subgp::full(GroupRef g) {
  std::vector<int> all(g->size());
  for (int i = 0; i < g->size(); ++i) all[i] = i;
  return Subgp(std::move(g), std::move(all));
}

Subgp Subgp::trivial(GroupRef g) {
  int e = g->id();
  return Subgp(std::move(g), {e});
}

bool Subgp::contains(int e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

bool Subgp::contains_all(const Subgp& other) const {
  if (g_.get() != other.g_.get())
    throw ValidationError("subgroup comparison across different ambient groups");
  for (int e : other.elems_)
    if (!contains(e)) return false;
  return true;
}

Subgp generated_subgroup(const GroupRef& g, const std::vector<int>& gens) {
  std::set<int> seen = {g->id()};
  std::vector<int> frontier = {g->id()};
  std::vector<int> seeds = gens;
  for (int s : gens) seeds.push_back(g->inv(s));
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int s : seeds) {
        int p = g->mul(a, s);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return Subgp(g, std::vector<int>(seen.begin(), seen.end()));
}

Subgp conjugate_subgroup(const Subgp& k, int by) {
  const FiniteGroup& g = *k.group();
  int byi = g.inv(by);
  std::vector<int> out;
  out.reserve(k.elems().size());
  for (int e : k.elems()) out.push_back(g.mul(g.mul(by, e), byi));
  return Subgp(k.group(), std::move(out));
}

namespace {

std::vector<int> conjugate_list(const FiniteGroup& g, const std::vector<int>& elems, int by) {
  int byi = g.inv(by);
  std::vector<int> out;
  out.reserve(elems.size());
  for (int e : elems) out.push_back(g.mul(g.mul(by, e), byi));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool are_conjugate_in(const Subgp& a, const Subgp& b, const Subgp& ambient, int* witness) {
  if (a.group().get() != b.group().get() || a.group().get() != ambient.group().get())
    throw ValidationError("conjugacy test across different ambient groups");
  if (a.elems().size() != b.elems().size()) return false;
  const FiniteGroup& g = *a.group();
  for (int w : ambient.elems())
    if (conjugate_list(g, a.elems(), w) == b.elems()) {
      if (witness) *witness = w;
      return true;
    }
  return false;
}

std::vector<int> canonical_conjugacy_key(const Subgp& k, const Subgp& within, int* witness) {
  if (k.group().get() != within.group().get())
    throw ValidationError("conjugacy key across different ambient groups");
  const FiniteGroup& g = *k.group();
  std::vector<int> best;
  int best_w = g.id();
  for (int w : within.elems()) {
    std::vector<int> c = conjugate_list(g, k.elems(), w);
    if (best.empty() || c < best) {
      best = std::move(c);
      best_w = w;
    }
  }
  if (witness) *witness = best_w;
  return best;
}

long long conj_class_count(const Subgp& h) {
  const FiniteGroup& g = *h.group();
  std::set<int> seen;
  long long classes = 0;
  for (int a : h.elems()) {
    if (seen.count(a)) continue;
    ++classes;
    for (int w : h.elems()) seen.insert(g.mul(g.mul(w, a), g.inv(w)));
  }
  return classes;
}

std::vector<Subgp> all_subgroups_of(const Subgp& h) {
  const GroupRef& g = h.group();
  std::vector<std::vector<int>> cyclics;
  {
    std::set<std::vector<int>> seen;
    for (int a : h.elems()) {
      std::vector<int> c = generated_subgroup(g, {a}).elems();
      if (seen.insert(c).second) cyclics.push_back(std::move(c));
    }
  }
  std::set<std::vector<int>> known;
  known.insert(Subgp::trivial(g).elems());
  std::vector<std::vector<int>> frontier(known.begin(), known.end());
  for (const auto& c : cyclics)
    if (known.insert(c).second) frontier.push_back(c);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& sub : frontier)
      for (const auto& c : cyclics) {
        std::vector<int> gens = sub;
        gens.insert(gens.end(), c.begin(), c.end());
        std::vector<int> j = generated_subgroup(g, gens).elems();
        if (static_cast<long long>(j.size()) <= h.order() && known.insert(j).second)
          next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  std::vector<Subgp> out;
  for (const auto& e : known) {
    Subgp s(g, e);
    if (h.contains_all(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GSet::GSet(Subgp domain, int points, std::vector<int> table)
    : domain_(std::move(domain)), points_(points), table_(std::move(table)) {
  if (points_ < 0) throw ValidationError("negative point count");
  size_t rows = domain_.elems().size();
  if (table_.size() != rows * static_cast<size_t>(points_))
    throw ValidationError("action table size mismatch");
  for (int v : table_)
    if (v < 0 || v >= points_) throw ValidationError("action table entry out of range");
  row_.assign(domain_.group()->size(), -1);
  for (size_t r = 0; r < rows; ++r) row_[domain_.elems()[r]] = static_cast<int>(r);
  const FiniteGroup& g = *domain_.group();
  // Identity axiom.
  int idr = row_[g.id()];
  for (int p = 0; p < points_; ++p)
    if (table_[static_cast<size_t>(idr) * points_ + p] != p)
      throw ValidationError("identity does not act trivially");
  // Compatibility: a(b p) = (ab) p, checked fully when affordable.
  double cost = static_cast<double>(rows) * rows * points_;
  if (cost <= 2e8) {
    for (int a : domain_.elems())
      for (int b : domain_.elems()) {
        int ab = g.mul(a, b);
        for (int p = 0; p < points_; ++p)
          if (apply(a, apply(b, p)) != apply(ab, p))
            throw ValidationError("action table violates compatibility");
      }
  }
}

int GSet::apply(int ambient_elem, int point) const {
  int r = row_[ambient_elem];
  if (r < 0) throw ValidationError("element outside the action domain");
  return table_[static_cast<size_t>(r) * points_ + point];
}

int GSet::row_of(int ambient_elem) const { return row_[ambient_elem]; }

GSet coset_gset(const Subgp& g, const Subgp& k) {
  if (!g.contains_all(k)) throw ValidationError("coset_gset: k is not a subgroup of g");
  const FiniteGroup& fg = *g.group();
  std::map<std::vector<int>, int> coset_index;
  std::vector<int> coset_of(fg.size(), -1);
  int points = 0;
  for (int x : g.elems()) {
    if (coset_of[x] >= 0) continue;
    std::vector<int> coset;
    coset.reserve(k.elems().size());
    for (int e : k.elems()) coset.push_back(fg.mul(x, e));
    std::sort(coset.begin(), coset.end());
    int idx = points++;
    coset_index.emplace(std::move(coset), idx);
    for (int e : k.elems()) coset_of[fg.mul(x, e)] = idx;
  }
  std::vector<int> table(g.elems().size() * static_cast<size_t>(points));
  // Representative of each coset: smallest element (cosets were built over
  // sorted x, so the first element seen fixed the index; rebuild reps).
  std::vector<int> rep(points, -1);
  for (int x : g.elems())
    if (rep[coset_of[x]] < 0) rep[coset_of[x]] = x;
  for (size_t r = 0; r < g.elems().size(); ++r) {
    int a = g.elems()[r];
    for (int p = 0; p < points; ++p) table[r * points + p] = coset_of[fg.mul(a, rep[p])];
  }
  return GSet(g, points, std::move(table));
}

GSet point_gset(const Subgp& g) {
  return GSet(g, 1, std::vector<int>(g.elems().size(), 0));
}

GSet disjoint_union_gset(const std::vector<GSet>& parts) {
  if (parts.empty()) throw ValidationError("disjoint union of zero parts");
  const Subgp& dom = parts[0].domain();
  int total = 0;
  for (const GSet& x : parts) {
    if (!(x.domain() == dom)) throw ValidationError("disjoint union across different domains");
    total += x.points();
  }
  std::vector<int> table(dom.elems().size() * static_cast<size_t>(total));
  int base = 0;
  for (const GSet& x : parts) {
    for (size_t r = 0; r < dom.elems().size(); ++r)
      for (int p = 0; p < x.points(); ++p)
        table[r * total + base + p] = base + x.apply(dom.elems()[r], p);
    base += x.points();
  }
  return GSet(dom, total, std::move(table));
}

GSet relabel_gset(const GSet& x, const std::vector<int>& new_of_old) {
  if (static_cast<int>(new_of_old.size()) != x.points())
    throw ValidationError("relabeling size mismatch");
  std::vector<int> check = new_of_old;
  std::sort(check.begin(), check.end());
  for (int p = 0; p < x.points(); ++p)
    if (check[p] != p) throw ValidationError("relabeling is not a bijection");
  const std::vector<int>& es = x.domain().elems();
  std::vector<int> table(es.size() * static_cast<size_t>(x.points()));
  std::vector<int> old_of_new(x.points());
  for (int p = 0; p < x.points(); ++p) old_of_new[new_of_old[p]] = p;
  for (size_t r = 0; r < es.size(); ++r)
    for (int p = 0; p < x.points(); ++p)
      table[r * x.points() + p] = new_of_old[x.apply(es[r], old_of_new[p])];
  return GSet(x.domain(), x.points(), std::move(table));
}

BurnsideElement::BurnsideElement(Subgp group) : group_(std::move(group)) {}

void BurnsideElement::add_term(const Subgp& k, const Int& coeff) {
  if (coeff == 0) return;
  if (!group_.contains_all(k))
    throw ValidationError("Burnside term subgroup outside the base group");
  std::vector<int> key = canonical_conjugacy_key(k, group_);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  if (!(group_ == o.group_)) throw ValidationError("Burnside addition across different groups");
  for (const auto& [key, c] : o.terms_) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  return *this += o.negated();
}

BurnsideElement BurnsideElement::negated() const {
  BurnsideElement out(group_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

Int BurnsideElement::total_points() const {
  Int total = 0;
  for (const auto& [key, c] : terms_)
    total += c * (group_.order() / static_cast<long long>(key.size()));
  return total;
}

std::string BurnsideElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << orbidual::to_string(c) << "*[" << group_.order() << "/{";
    for (size_t i = 0; i < key.size(); ++i) {
      if (i) os << ",";
      os << group_.group()->name(key[i]);
    }
    os << "}]";
  }
  return os.str();
}

BurnsideElement equivariant_chi(const GSet& x, const Subgp& h) {
  if (!x.domain().contains_all(h))
    throw ValidationError("equivariant_chi: actor outside the action domain");
  BurnsideElement out(h);
  std::vector<char> seen(static_cast<size_t>(x.points()), 0);
  for (int p = 0; p < x.points(); ++p) {
    if (seen[p]) continue;
    // Orbit of p under h.
    std::vector<int> orbit = {p};
    seen[p] = 1;
    for (size_t i = 0; i < orbit.size(); ++i)
      for (int a : h.elems()) {
        int q = x.apply(a, orbit[i]);
        if (!seen[q]) {
          seen[q] = 1;
          orbit.push_back(q);
        }
      }
    std::vector<int> stab;
    for (int a : h.elems())
      if (x.apply(a, p) == p) stab.push_back(a);
    out.add_term(Subgp(h.group(), std::move(stab)), 1);
  }
  return out;
}

Int chi_orb_burnside(const BurnsideElement& b, const Subgp& actor) {
  if (!b.group().contains_all(actor))
    throw ValidationError("chi_orb_burnside: actor outside the base group");
  Int total = 0;
  for (const auto& [key, c] : b.terms()) {
    GSet x = coset_gset(b.group(), Subgp(b.group().group(), key));
    total += c * chi_orb_set(x, actor);
  }
  return total;
}

BurnsideElement reduce_to(const BurnsideElement& b, const Subgp& h) {
  if (!b.group().contains_all(h))
    throw ValidationError("reduce_to: target outside the base group");
  BurnsideElement out(h);
  for (const auto& [key, c] : b.terms()) {
    GSet x = coset_gset(b.group(), Subgp(b.group().group(), key));
    BurnsideElement chi = equivariant_chi(x, h);
    for (const auto& [k2, c2] : chi.terms()) out.add_term(Subgp(h.group(), k2), c * c2);
  }
  return out;
}

BurnsideElement induce_to(const BurnsideElement& b, const Subgp& g) {
  if (!g.contains_all(b.group()))
    throw ValidationError("induce_to: base group is not contained in the target");
  BurnsideElement out(g);
  for (const auto& [key, c] : b.terms()) out.add_term(Subgp(g.group(), key), c);
  return out;
}

}  // namespace orbidual
