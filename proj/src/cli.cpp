#include "orbidual/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbidual/abgrp.hpp"
#include "orbidual/burnside.hpp"
#include "orbidual/duality.hpp"
#include "orbidual/permgroup.hpp"
#include "orbidual/poly.hpp"
#include "orbidual/report.hpp"
#include "orbidual/theorems.hpp"

namespace orbidual {

namespace {

using nlohmann::json;

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<Perm> parse_perm_list(const std::string& text, int n) {
  std::vector<Perm> out;
  if (text.empty()) return out;
  for (const std::string& part : split_on(text, ';')) out.push_back(parse_cycles(part, n));
  return out;
}

std::vector<AbElement> parse_ab_gens(const std::string& text, int n) {
  std::vector<AbElement> out;
  if (text.empty()) return out;
  for (const std::string& part : split_on(text, ';')) out.push_back(parse_ab_element(part, n));
  return out;
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  for (const std::string& part : split_on(text, ',')) {
    if (part.empty()) throw ValidationError("empty entry in integer list '" + text + "'");
    out.push_back(Int(part));
  }
  return out;
}

struct GlobalOpts {
  bool json = false;
  bool timings = false;
  long long max_group_order = 0;  // 0 = module defaults
  long long max_subgroups = 0;
};

TheoremCaps caps_from(const GlobalOpts& g) {
  TheoremCaps c;
  if (g.max_group_order > 0) {
    c.abelian.max_order = Int(g.max_group_order);
    c.concrete.max_order = static_cast<int>(g.max_group_order);
    c.perm.max_elements = g.max_group_order;
  }
  if (g.max_subgroups > 0) c.abelian.max_subgroups = g.max_subgroups;
  return c;
}

// pc check closes arbitrary user generators; give it room for S_7 by
// default instead of the library's tighter default.
PermGroupCaps pc_caps_from(const GlobalOpts& g) {
  PermGroupCaps c;
  c.max_elements = g.max_group_order > 0 ? g.max_group_order : 5040;
  return c;
}

json matrix_json(const IMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(std::ostream& out, const IMat& m, const std::string& indent) {
  for (int i = 0; i < m.rows; ++i) {
    out << indent << "[";
    for (int j = 0; j < m.cols; ++j) {
      if (j) out << " ";
      out << m.at(i, j).str();
    }
    out << "]\n";
  }
}

std::string gens_string(const std::vector<AbElement>& gens) {
  if (gens.empty()) return "(none)";
  std::string s;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += "; ";
    s += to_string(gens[i]);
  }
  return s;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int report_exit_code(const VerificationReport& rep) {
  if (rep.verdict == "counterexample") return 2;
  if (!rep.all_equal()) return 2;  // exploratory inequality
  return 0;
}

void emit_report(std::ostream& out, const GlobalOpts& g, const VerificationReport& rep) {
  if (g.json)
    emit_json(out, rep.to_json());
  else
    out << rep.to_table();
}

// Runs `compute`, stamping wall-clock ms into the report only on request
// so that identical inputs stay byte-identical by default.
template <typename F>
VerificationReport timed(const GlobalOpts& g, F&& compute) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep = compute();
  auto t1 = std::chrono::steady_clock::now();
  if (g.timings)
    rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

AbSubgroup subgroup_from_spec(const FinAbGroup& g, const std::string& spec, bool default_full) {
  if (spec.empty()) return default_full ? full_subgroup(g) : trivial_subgroup(g);
  return subgroup_generated(g, parse_ab_gens(spec, g.n()));
}

void cmd_poly_analyze(std::ostream& out, const GlobalOpts& g, const std::string& text) {
  InvertiblePolynomial f = parse_polynomial(text);
  std::vector<Atom> atoms = classify_atoms(f);
  IMat e = f.exponent_matrix();
  Int d = det(e);
  std::vector<Rat> q = weights(f);
  FinAbGroup gf(e);
  if (g.json) {
    json j;
    j["polynomial"] = to_string(f);
    j["n"] = f.n;
    json ja = json::array();
    for (const Atom& a : atoms) ja.push_back(to_string(a));
    j["atoms"] = ja;
    j["exponent_matrix"] = matrix_json(e);
    j["det"] = d.str();
    json jw = json::array();
    for (const Rat& w : q) jw.push_back(to_string(w));
    j["weights"] = jw;
    j["group_order"] = gf.order().str();
    json ji = json::array();
    for (const Int& v : gf.invariant_factors())
      if (v > 1) ji.push_back(v.str());
    j["group_invariant_factors"] = ji;
    json jg = json::array();
    for (const AbElement& a : gf.generators()) jg.push_back(to_string(a));
    j["group_generators"] = jg;
    emit_json(out, j);
    return;
  }
  out << "polynomial: " << to_string(f) << "\n";
  out << "variables: " << f.n << "\n";
  out << "atoms:\n";
  for (const Atom& a : atoms) out << "  " << to_string(a) << "\n";
  out << "exponent matrix (row i = monomial i):\n";
  print_matrix(out, e, "  ");
  out << "det: " << d.str() << "\n";
  out << "weights: ";
  for (size_t i = 0; i < q.size(); ++i) {
    if (i) out << ", ";
    out << to_string(q[i]);
  }
  out << "\n";
  out << "|G_f|: " << gf.order().str() << "\n";
  out << "G_f generators: " << gens_string(gf.generators()) << "\n";
}

void cmd_poly_transpose(std::ostream& out, const GlobalOpts& g, const std::string& text) {
  InvertiblePolynomial f = parse_polynomial(text);
  InvertiblePolynomial ft = transpose(f);
  if (g.json) {
    json j;
    j["polynomial"] = to_string(f);
    j["transpose"] = to_string(ft);
    emit_json(out, j);
    return;
  }
  out << "polynomial: " << to_string(f) << "\n";
  out << "transpose:  " << to_string(ft) << "\n";
}

void cmd_group_symmetries(std::ostream& out, const GlobalOpts& g, const std::string& text) {
  InvertiblePolynomial f = parse_polynomial(text);
  FinAbGroup gf(f.exponent_matrix());
  FinAbGroup gd(transpose(f).exponent_matrix());
  if (g.json) {
    json j;
    j["polynomial"] = to_string(f);
    j["order"] = gf.order().str();
    json ji = json::array();
    for (const Int& v : gf.invariant_factors())
      if (v > 1) ji.push_back(v.str());
    j["invariant_factors"] = ji;
    json jg = json::array();
    for (const AbElement& a : gf.generators()) jg.push_back(to_string(a));
    j["generators"] = jg;
    j["dual_order"] = gd.order().str();
    json jd = json::array();
    for (const AbElement& a : gd.generators()) jd.push_back(to_string(a));
    j["dual_generators"] = jd;
    emit_json(out, j);
    return;
  }
  out << "polynomial: " << to_string(f) << "\n";
  out << "|G_f|: " << gf.order().str() << "\n";
  out << "invariant factors: ";
  bool first = true;
  for (const Int& v : gf.invariant_factors())
    if (v > 1) {
      if (!first) out << ", ";
      out << v.str();
      first = false;
    }
  if (first) out << "1";
  out << "\n";
  out << "generators: " << gens_string(gf.generators()) << "\n";
  out << "dual group |G_f~|: " << gd.order().str() << "\n";
  out << "dual generators: " << gens_string(gd.generators()) << "\n";
}

void cmd_group_subgroups(std::ostream& out, const GlobalOpts& g, const std::string& text,
                         const std::string& invariant_under) {
  InvertiblePolynomial f = parse_polynomial(text);
  FinAbGroup gf(f.exponent_matrix());
  std::vector<Perm> action = parse_perm_list(invariant_under, f.n);
  for (const Perm& p : action)
    if (!check_invariance(f, p))
      throw ValidationError("permutation " + to_cycles(p) + " is not a symmetry of f");
  TheoremCaps caps = caps_from(g);
  std::vector<AbSubgroup> subs = enumerate_subgroups(gf, action, caps.abelian);
  if (g.json) {
    json j;
    j["polynomial"] = to_string(f);
    j["count"] = static_cast<long long>(subs.size());
    json js = json::array();
    for (const AbSubgroup& k : subs) {
      json jk;
      jk["order"] = k.order().str();
      jk["basis"] = matrix_json(k.basis());
      json jg = json::array();
      for (const AbElement& a : k.generators()) jg.push_back(to_string(a));
      jk["generators"] = jg;
      js.push_back(jk);
    }
    j["subgroups"] = js;
    emit_json(out, j);
    return;
  }
  out << "polynomial: " << to_string(f) << "\n";
  if (!action.empty()) out << "restricted to subgroups invariant under: " << invariant_under << "\n";
  out << "subgroups: " << subs.size() << "\n";
  for (const AbSubgroup& k : subs)
    out << "  order " << k.order().str() << "  generators: " << gens_string(k.generators())
        << "\n";
}

void cmd_group_dual(std::ostream& out, const GlobalOpts& g, const std::string& text,
                    const std::string& subgroup_spec) {
  InvertiblePolynomial f = parse_polynomial(text);
  FinAbGroup gf(f.exponent_matrix());
  AbSubgroup k = subgroup_from_spec(gf, subgroup_spec, /*default_full=*/false);
  AbSubgroup kd = dual_subgroup(k);
  if (g.json) {
    json j;
    j["polynomial"] = to_string(f);
    j["subgroup_order"] = k.order().str();
    json jg = json::array();
    for (const AbElement& a : k.generators()) jg.push_back(to_string(a));
    j["subgroup_generators"] = jg;
    j["dual_order"] = kd.order().str();
    json jd = json::array();
    for (const AbElement& a : kd.generators()) jd.push_back(to_string(a));
    j["dual_generators"] = jd;
    emit_json(out, j);
    return;
  }
  out << "polynomial: " << to_string(f) << "\n";
  out << "subgroup of G_f: order " << k.order().str() << ", generators "
      << gens_string(k.generators()) << "\n";
  out << "dual subgroup of G_f~: order " << kd.order().str() << ", generators "
      << gens_string(kd.generators()) << "\n";
}

void cmd_pc_check(std::ostream& out, const GlobalOpts& g, int n, const std::string& gens) {
  std::vector<Perm> gen_list = parse_perm_list(gens, n);
  PermGroup s(n, gen_list, pc_caps_from(g));
  PcReport pc = is_pc(s, pc_caps_from(g));
  if (g.json) {
    json j;
    j["n"] = n;
    j["order"] = s.order();
    j["pc"] = pc.holds;
    if (!pc.holds) {
      json w;
      json jg = json::array();
      for (const Perm& p : pc.witness_subgroup) jg.push_back(to_cycles(p));
      w["subgroup_generators"] = jg;
      w["orbits"] = pc.witness_orbits;
      w["points"] = pc.points;
      j["witness"] = w;
    }
    emit_json(out, j);
    return;
  }
  out << "group: closure of " << gens << " in S_" << n << "\n";
  out << "order: " << s.order() << "\n";
  out << "PC: " << (pc.holds ? "true" : "false") << "\n";
  if (!pc.holds) {
    out << "violating subgroup generated by:";
    for (const Perm& p : pc.witness_subgroup) out << " " << to_cycles(p);
    out << "\n";
    out << "its orbit count " << pc.witness_orbits << " differs in parity from " << pc.points
        << " points\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  GlobalOpts g;
  int code = 0;

  CLI::App app{"exact Berglund-Huebsch duality and orbifold Euler characteristics"};
  app.name("orbidual");
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "machine-readable JSON on stdout");
  app.add_flag("--timings", g.timings, "populate the ms field of verification reports");
  app.add_option("--max-group-order", g.max_group_order,
                 "cap on group orders in enumerations and table builds")
      ->envname("ORBIDUAL_MAX_GROUP_ORDER");
  app.add_option("--max-subgroups", g.max_subgroups, "cap on enumerated subgroup counts")
      ->envname("ORBIDUAL_MAX_SUBGROUPS");

  // ---- poly ----
  auto* poly = app.add_subcommand("poly", "parse and transform invertible polynomials");
  poly->require_subcommand(1);
  poly->fallthrough();

  auto* analyze = poly->add_subcommand("analyze", "validate and describe a polynomial");
  analyze->fallthrough();
  std::string an_poly;
  analyze->add_option("polynomial", an_poly, "e.g. \"x1^2*x2+x2^2*x1\"")->required();
  analyze->callback([&] { cmd_poly_analyze(out, g, an_poly); });

  auto* transp = poly->add_subcommand("transpose", "Berglund-Huebsch transpose");
  transp->fallthrough();
  std::string tr_poly;
  transp->add_option("polynomial", tr_poly, "polynomial text")->required();
  transp->callback([&] { cmd_poly_transpose(out, g, tr_poly); });

  // ---- group ----
  auto* group = app.add_subcommand("group", "diagonal symmetry groups and their subgroups");
  group->require_subcommand(1);
  group->fallthrough();

  auto* symm = group->add_subcommand("symmetries", "the group G_f and its dual");
  symm->fallthrough();
  std::string sy_poly;
  symm->add_option("polynomial", sy_poly, "polynomial text")->required();
  symm->callback([&] { cmd_group_symmetries(out, g, sy_poly); });

  auto* subs = group->add_subcommand("subgroups", "enumerate subgroups of G_f");
  subs->fallthrough();
  std::string su_poly, su_inv;
  subs->add_option("polynomial", su_poly, "polynomial text")->required();
  subs->add_option("--invariant-under", su_inv,
                   "semicolon-separated cycles; keep only invariant subgroups");
  subs->callback([&] { cmd_group_subgroups(out, g, su_poly, su_inv); });

  auto* dualc = group->add_subcommand("dual", "dual subgroup in G_f~");
  dualc->fallthrough();
  std::string du_poly, du_sub;
  dualc->add_option("polynomial", du_poly, "polynomial text")->required();
  dualc->add_option("--subgroup", du_sub,
                    "semicolon-separated generator vectors, e.g. \"1/3,1/3\" (default trivial)");
  dualc->callback([&] { cmd_group_dual(out, g, du_poly, du_sub); });

  // ---- pc ----
  auto* pc = app.add_subcommand("pc", "parity condition for permutation groups");
  pc->require_subcommand(1);
  pc->fallthrough();
  auto* pcc = pc->add_subcommand("check", "check the parity condition");
  pcc->fallthrough();
  int pc_n = 0;
  std::string pc_gens;
  pcc->add_option("--n", pc_n, "number of points")->required();
  pcc->add_option("--gens", pc_gens, "semicolon-separated cycles, e.g. \"(1 2 3);(4 5)\"")
      ->required();
  pcc->callback([&] { cmd_pc_check(out, g, pc_n, pc_gens); });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "verify the exact identities on an instance");
  verify->require_subcommand(1);
  verify->fallthrough();

  auto* vab = verify->add_subcommand(
      "abelian", "reduction identity over Z/d1 x ... x Z/dk for every subgroup K");
  vab->fallthrough();
  std::string ab_orders, ab_g;
  vab->add_option("--orders", ab_orders, "cyclic factor orders, e.g. \"3,9\"")->required();
  vab->add_option("--g", ab_g, "generators of the acting subgroup G (default: full group)");
  vab->callback([&] {
    std::vector<Int> ds = parse_int_list(ab_orders);
    int n = static_cast<int>(ds.size());
    IMat lat(n, n);
    for (int i = 0; i < n; ++i) {
      if (ds[i] < 1) throw ValidationError("factor orders must be positive");
      lat.at(i, i) = ds[i];
    }
    FinAbGroup amb(lat);
    AbSubgroup gg = subgroup_from_spec(amb, ab_g, /*default_full=*/true);
    VerificationReport rep = timed(g, [&] { return verify_abelian_theorem(amb, gg, caps_from(g)); });
    emit_report(out, g, rep);
    code = report_exit_code(rep);
  });

  auto* vmain = verify->add_subcommand(
      "main", "equality of the two extremal orbifold Euler characteristics");
  vmain->fallthrough();
  std::string mn_poly, mn_s, mn_g, mn_t;
  vmain->add_option("--poly", mn_poly, "polynomial text")->required();
  vmain->add_option("--s", mn_s, "generators of the permutation symmetry group S (default trivial)");
  vmain->add_option("--g", mn_g, "generators of G <= G_f (default: full G_f)");
  vmain->add_option("--t", mn_t, "generators of T <= S (default trivial)");
  vmain->callback([&] {
    InvertiblePolynomial f = parse_polynomial(mn_poly);
    TheoremCaps caps = caps_from(g);
    PermGroup s(f.n, parse_perm_list(mn_s, f.n), caps.perm);
    PermGroup t(f.n, parse_perm_list(mn_t, f.n), caps.perm);
    FinAbGroup gf(f.exponent_matrix());
    AbSubgroup gg = subgroup_from_spec(gf, mn_g, /*default_full=*/true);
    VerificationReport rep = timed(g, [&] { return verify_main_theorem(f, s, gg, t, caps); });
    emit_report(out, g, rep);
    code = report_exit_code(rep);
  });

  auto* vloop = verify->add_subcommand(
      "loop", "periodic-loop identity over every shift-invariant subgroup");
  vloop->fallthrough();
  std::string lp_p;
  int lp_k = 1;
  vloop->add_option("--p", lp_p, "base exponents, e.g. \"2,2\"")->required();
  vloop->add_option("--k", lp_k, "number of periods (>= 1)")->required();
  vloop->callback([&] {
    VerificationReport rep =
        timed(g, [&] { return verify_loop_theorem(parse_int_list(lp_p), lp_k, caps_from(g)); });
    emit_report(out, g, rep);
    code = report_exit_code(rep);
  });

  auto* vsaito = verify->add_subcommand(
      "saito-loop", "Burnside-level duality of the two-term loop expressions");
  vsaito->fallthrough();
  std::string sl_p;
  bool sl_flip = false;
  vsaito->add_option("--p", sl_p, "loop exponents, e.g. \"2,2\"")->required();
  vsaito->add_flag("--flip-sign", sl_flip, "negative control: use the wrong sign");
  vsaito->callback([&] {
    VerificationReport rep = timed(
        g, [&] { return verify_saito_duality_loop(parse_int_list(sl_p), sl_flip, caps_from(g)); });
    emit_report(out, g, rep);
    code = report_exit_code(rep);
  });

  // ---- explore ----
  auto* explore = app.add_subcommand("explore", "gather evidence on open identities");
  explore->require_subcommand(1);
  explore->fallthrough();
  auto* conj = explore->add_subcommand(
      "conjecture", "compare chi_orb of H x| T orbit spaces with their duals (never asserts)");
  conj->fallthrough();
  // --h (the coset subgroup) would collide with the default -h short help.
  conj->set_help_flag("--help", "print help");
  std::string cj_poly, cj_s, cj_g, cj_h, cj_t;
  conj->add_option("--poly", cj_poly, "polynomial text")->required();
  conj->add_option("--s", cj_s, "generators of S (default trivial)");
  conj->add_option("--g", cj_g, "generators of G <= G_f (default: full G_f)");
  conj->add_option("--h", cj_h, "generators of H <= G_f (default trivial)");
  conj->add_option("--t", cj_t, "generators of T <= S (default trivial)");
  conj->callback([&] {
    InvertiblePolynomial f = parse_polynomial(cj_poly);
    TheoremCaps caps = caps_from(g);
    PermGroup s(f.n, parse_perm_list(cj_s, f.n), caps.perm);
    PermGroup t(f.n, parse_perm_list(cj_t, f.n), caps.perm);
    FinAbGroup gf(f.exponent_matrix());
    AbSubgroup gg = subgroup_from_spec(gf, cj_g, /*default_full=*/true);
    AbSubgroup hh = subgroup_from_spec(gf, cj_h, /*default_full=*/false);
    VerificationReport rep =
        timed(g, [&] { return explore_reduction_conjecture(f, s, gg, hh, t, caps); });
    emit_report(out, g, rep);
    code = report_exit_code(rep);
  });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    // Normalize CLI11's assorted nonzero codes to the documented usage-error
    // code; --help and friends stay 0.
    int c = app.exit(e, out, err);
    return c == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ArithmeticError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}

}  // namespace orbidual
