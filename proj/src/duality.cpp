#include "orbidual/duality.hpp"

#include <algorithm>
#include <set>

namespace orbidual {

namespace {

// M and M' define the same map on A = Z^n/L iff (M - M') L^-1 is integral.
bool same_endomorphism(const IMat& m1, const IMat& m2, const FracMat& lat_inv) {
  IMat d = m1;
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j) d.at(i, j) -= m2.at(i, j);
  return frac_mul(frac_of(d), lat_inv).is_integral();
}

}  // namespace

SemidirectGroup::SemidirectGroup(FinAbGroup a, PermGroup s, std::vector<IMat> phi,
                                 const FiniteGroupCaps& caps)
    : a_(std::move(a)), s_(std::move(s)), phi_(std::move(phi)) {
  const std::vector<Perm>& ps = s_.elements();
  if (phi_.size() != ps.size())
    throw ValidationError("one automorphism matrix per permutation element required");
  if (a_.order() * Int(s_.order()) > Int(caps.max_order))
    throw CapExceeded("semidirect product order exceeds cap");
  a_elems_ = a_.elements();
  FracMat lat_inv = inverse(a_.lattice());
  // Validate each matrix as an endomorphism of A and tabulate its action.
  int na = static_cast<int>(a_elems_.size());
  int ns = static_cast<int>(ps.size());
  std::vector<std::vector<int>> act(ns, std::vector<int>(na));
  for (int si = 0; si < ns; ++si) {
    const IMat& m = phi_[si];
    if (m.rows != a_.n() || m.cols != a_.n())
      throw ValidationError("automorphism matrix shape mismatch");
    if (!frac_mul(frac_of(mul(a_.lattice(), m)), lat_inv).is_integral())
      throw ValidationError("matrix does not define an endomorphism of the abelian part");
    std::vector<char> hit(static_cast<size_t>(na), 0);
    for (int ai = 0; ai < na; ++ai) {
      AbElement img(mat_apply(m, a_elems_[ai].x));
      int idx = a_index(img);
      act[si][ai] = idx;
      hit[idx] = 1;
    }
    for (char h : hit)
      if (!h) throw ValidationError("automorphism matrix is not bijective on the abelian part");
  }
  // Identity must act trivially; composition must respect the group law.
  int id_si = s_index(Perm(s_.n()));
  if (!same_endomorphism(phi_[id_si], IMat::identity(a_.n()), lat_inv))
    throw ValidationError("identity permutation must act as the identity automorphism");
  for (int si = 0; si < ns; ++si)
    for (int ti = 0; ti < ns; ++ti) {
      Perm st = compose(ps[si], ps[ti]);
      int sti = s_index(st);
      if (!same_endomorphism(phi_[sti], mul(phi_[si], phi_[ti]), lat_inv))
        throw ValidationError("automorphism assignment is not a group homomorphism");
    }
  // Addition table of A, then the concrete multiplication table.
  std::vector<int> add(static_cast<size_t>(na) * na);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      add[static_cast<size_t>(i) * na + j] = a_index(ab_add(a_elems_[i], a_elems_[j]));
  std::vector<int> smul(static_cast<size_t>(ns) * ns);
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      smul[static_cast<size_t>(i) * ns + j] = s_index(compose(ps[i], ps[j]));

  int n = na * ns;
  std::vector<std::string> names(static_cast<size_t>(n));
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int ai = 0; ai < na; ++ai)
    for (int si = 0; si < ns; ++si)
      names[encode(ai, si)] =
          "(" + orbidual::to_string(a_elems_[ai]) + "|" + to_cycles(ps[si]) + ")";
  for (int ai = 0; ai < na; ++ai)
    for (int si = 0; si < ns; ++si) {
      int lhs = encode(ai, si);
      for (int aj = 0; aj < na; ++aj)
        for (int sj = 0; sj < ns; ++sj) {
          int a_part = add[static_cast<size_t>(ai) * na + act[si][aj]];
          int s_part = smul[static_cast<size_t>(si) * ns + sj];
          table[static_cast<size_t>(lhs) * n + encode(aj, sj)] = encode(a_part, s_part);
        }
    }
  int identity = encode(a_index(AbElement(std::vector<Rat>(a_.n(), Rat(0)))), id_si);
  fg_ = make_group(std::move(names), std::move(table), identity, caps);
}

int SemidirectGroup::a_index(const AbElement& x) const {
  auto it = std::lower_bound(a_elems_.begin(), a_elems_.end(), x);
  if (it == a_elems_.end() || !(*it == x))
    throw ValidationError("element not in the abelian part");
  return static_cast<int>(it - a_elems_.begin());
}

int SemidirectGroup::s_index(const Perm& p) const {
  const std::vector<Perm>& ps = s_.elements();
  auto it = std::lower_bound(ps.begin(), ps.end(), p);
  if (it == ps.end() || !(*it == p))
    throw ValidationError("permutation not in the symmetry part");
  return static_cast<int>(it - ps.begin());
}

const IMat& SemidirectGroup::phi_matrix(const Perm& p) const { return phi_[s_index(p)]; }

AbElement SemidirectGroup::apply_auto(const Perm& p, const AbElement& x) const {
  return AbElement(mat_apply(phi_matrix(p), x.x));
}

SemidirectGroup make_semidirect_perm(const FinAbGroup& a, const PermGroup& s,
                                     const FiniteGroupCaps& caps) {
  return make_semidirect(
      a, s, [](const Perm& p) { return perm_matrix(p); }, caps);
}

SemidirectGroup make_semidirect(const FinAbGroup& a, const PermGroup& s,
                                const std::function<IMat(const Perm&)>& phi,
                                const FiniteGroupCaps& caps) {
  std::vector<IMat> mats;
  mats.reserve(s.elements().size());
  for (const Perm& p : s.elements()) mats.push_back(phi(p));
  return SemidirectGroup(a, s, std::move(mats), caps);
}

SemidirectGroup dual_semidirect(const SemidirectGroup& sd, const FiniteGroupCaps& caps) {
  const FinAbGroup& a = sd.abelian();
  FracMat lat_inv = inverse(a.lattice());
  return make_semidirect(
      a.dual(), sd.perm(),
      [&](const Perm& p) {
        const IMat& m = sd.phi_matrix(inverse(p));
        return transpose(frac_mul(frac_of(mul(a.lattice(), m)), lat_inv).to_imat());
      },
      caps);
}

SemidirectSubgp semidirect_subgp(const SemidirectGroup& sd, AbSubgroup h, PermGroup t) {
  if (!(h.parent().lattice() == sd.abelian().lattice()))
    throw ValidationError("abelian part of the subgroup lives in a different group");
  if (!t.is_subgroup_of(sd.perm()))
    throw ValidationError("permutation part is not a subgroup of S");
  for (const Perm& p : t.elements())
    for (const AbElement& e : h.elements())
      if (!h.contains(sd.apply_auto(p, e)))
        throw ValidationError("permutation part does not preserve the abelian subgroup");
  return SemidirectSubgp{std::move(h), std::move(t)};
}

Subgp materialize(const SemidirectGroup& sd, const SemidirectSubgp& ht) {
  SemidirectSubgp checked = semidirect_subgp(sd, ht.h, ht.t);
  std::vector<int> elems;
  for (const AbElement& e : checked.h.elements())
    for (const Perm& p : checked.t.elements()) elems.push_back(sd.encode(sd.a_index(e), sd.s_index(p)));
  return Subgp(sd.concrete(), std::move(elems));
}

BurnsideElement to_burnside(const SemidirectGroup& sd, const SemidirectBurnside& b) {
  BurnsideElement out(Subgp::full(sd.concrete()));
  for (const SdTerm& t : b) out.add_term(materialize(sd, SemidirectSubgp{t.h, t.t}), t.coeff);
  return out;
}

SemidirectBurnside to_semidirect(const SemidirectGroup& sd, const BurnsideElement& b) {
  if (!(b.group() == Subgp::full(sd.concrete())))
    throw ValidationError("Burnside element is not over the full semidirect group");
  SemidirectBurnside out;
  for (const auto& [key, coeff] : b.terms()) {
    // Split the element set into abelian parts and permutation parts.
    std::set<int> a_idx;
    std::set<int> s_idx;
    for (int e : key) {
      auto [ai, si] = sd.decode(e);
      a_idx.insert(ai);
      s_idx.insert(si);
    }
    if (a_idx.size() * s_idx.size() != key.size())
      throw ValidationError("Burnside term is not of semidirect shape");
    for (int ai : a_idx)
      for (int si : s_idx)
        if (!std::binary_search(key.begin(), key.end(), sd.encode(ai, si)))
          throw ValidationError("Burnside term is not of semidirect shape");
    std::vector<AbElement> gens_a;
    for (int ai : a_idx) gens_a.push_back(sd.ab_elements()[ai]);
    AbSubgroup h = subgroup_generated(sd.abelian(), gens_a);
    if (h.order() != Int(static_cast<long long>(a_idx.size())))
      throw ValidationError("abelian part of a Burnside term is not a subgroup");
    std::vector<Perm> gens_s;
    for (int si : s_idx) gens_s.push_back(sd.perm().elements()[si]);
    PermGroupCaps tc;
    tc.max_elements = sd.perm().order();
    PermGroup t(sd.perm().n(), gens_s, tc);
    if (t.order() != static_cast<long long>(s_idx.size()))
      throw ValidationError("permutation part of a Burnside term is not a subgroup");
    out.push_back(SdTerm{std::move(h), std::move(t), coeff});
  }
  return out;
}

BurnsideElement saito_dual_abelian(const SemidirectGroup& src, const SemidirectGroup& dst,
                                   const BurnsideElement& b) {
  if (src.perm().order() != 1 || dst.perm().order() != 1)
    throw ValidationError("abelian duality requires trivial permutation parts");
  if (!(dst.abelian().lattice() == src.abelian().dual().lattice()))
    throw ValidationError("destination context is not the dual of the source");
  if (!(b.group() == Subgp::full(src.concrete())))
    throw ValidationError("Burnside element is not over the full group");
  BurnsideElement out(Subgp::full(dst.concrete()));
  for (const auto& [key, coeff] : b.terms()) {
    std::vector<AbElement> gens;
    for (int e : key) gens.push_back(src.ab_elements()[src.decode(e).first]);
    AbSubgroup k = subgroup_generated(src.abelian(), gens);
    AbSubgroup kd = dual_subgroup(k);
    std::vector<int> delems;
    for (const AbElement& x : kd.elements()) delems.push_back(dst.encode(dst.a_index(x), 0));
    out.add_term(Subgp(dst.concrete(), std::move(delems)), coeff);
  }
  return out;
}

SemidirectBurnside saito_dual_semidirect(const SemidirectGroup& src, const SemidirectBurnside& b) {
  SemidirectBurnside out;
  out.reserve(b.size());
  for (const SdTerm& t : b) {
    semidirect_subgp(src, t.h, t.t);  // validate against the source context
    out.push_back(SdTerm{dual_subgroup(t.h), t.t, t.coeff});
  }
  return out;
}

std::pair<bool, bool> check_conjugacy_duality(const SemidirectGroup& sd,
                                              const SemidirectGroup& sd_dual,
                                              const SemidirectSubgp& s1,
                                              const SemidirectSubgp& s2) {
  Subgp m1 = materialize(sd, s1);
  Subgp m2 = materialize(sd, s2);
  bool primal = are_conjugate_in(m1, m2, Subgp::full(sd.concrete()));
  Subgp d1 = materialize(sd_dual, SemidirectSubgp{dual_subgroup(s1.h), s1.t});
  Subgp d2 = materialize(sd_dual, SemidirectSubgp{dual_subgroup(s2.h), s2.t});
  bool dual = are_conjugate_in(d1, d2, Subgp::full(sd_dual.concrete()));
  return {primal, dual};
}

bool check_induction_diagram(const SemidirectGroup& sd, const SemidirectGroup& sd_dual,
                             const PermGroup& s_small, const SemidirectBurnside& b) {
  if (!s_small.is_subgroup_of(sd.perm()))
    throw ValidationError("induction diagram: S' is not a subgroup of S");
  for (const SdTerm& t : b)
    if (!t.t.is_subgroup_of(s_small))
      throw ValidationError("induction diagram: term outside A(G x| S')");
  // Dual first, then induce from A* x| S' up to A* x| S.
  SemidirectBurnside dual_terms = saito_dual_semidirect(sd, b);
  Subgp small_dual = materialize(
      sd_dual, SemidirectSubgp{full_subgroup(sd_dual.abelian()), s_small});
  BurnsideElement over_small(small_dual);
  for (const SdTerm& t : dual_terms)
    over_small.add_term(materialize(sd_dual, SemidirectSubgp{t.h, t.t}), t.coeff);
  BurnsideElement path1 = induce_to(over_small, Subgp::full(sd_dual.concrete()));
  // Induce first (term-wise identity on (H, T) data), then dualize over S.
  BurnsideElement path2 = to_burnside(sd_dual, dual_terms);
  return path1 == path2;
}

std::vector<SemidirectSubgp> enumerate_semidirect_subgps(const SemidirectGroup& sd,
                                                         const EnumerationCaps& caps) {
  std::vector<SemidirectSubgp> out;
  PermGroupCaps pc;
  pc.max_elements = sd.perm().order();
  std::vector<PermGroup> ts = all_subgroups(sd.perm(), pc);
  std::vector<AbSubgroup> hs = enumerate_subgroups(sd.abelian(), {}, caps);
  for (const AbSubgroup& h : hs)
    for (const PermGroup& t : ts) {
      bool ok = true;
      for (const Perm& p : t.elements()) {
        for (const AbElement& e : h.elements())
          if (!h.contains(sd.apply_auto(p, e))) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (ok) out.push_back(SemidirectSubgp{h, t});
    }
  return out;
}

}  // namespace orbidual
