#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "satoh/aut.hpp"
#include "satoh/trbar.hpp"

using nlohmann::json;
using namespace satoh;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json necklace_json(const Word& w) {
  json arr = json::array();
  for (char c : w) arr.push_back(letter_name(static_cast<Letter>(c)));
  return arr;
}

json cyclic_json(const CyclicClass& c) {
  json arr = json::array();
  for (const auto& [w, coef] : c.terms)
    arr.push_back({{"coeff", coef.get_str()}, {"necklace", necklace_json(w)}});
  return arr;
}

json bclass_json(const BClass& b) {
  json out;
  json tor = json::array();
  for (const Word& w : b.torsion) tor.push_back(necklace_json(w));
  out["torsion"] = std::move(tor);
  if (!b.free_part.empty()) {
    json fr = json::array();
    for (const auto& [w, c] : b.free_part)
      fr.push_back({{"coeff", c.get_str()}, {"necklace", necklace_json(w)}});
    out["free"] = std::move(fr);
  }
  return out;
}

ReduceMode pick_mode(const std::string& name, int degree, int genus) {
  if (name == "none") return ReduceMode::none;
  if (name == "cbar") return ReduceMode::cbar;
  if (name == "mir") return ReduceMode::mir;
  if (name == "auto")
    return cbar_in_budget(degree, genus) ? ReduceMode::cbar : ReduceMode::mir;
  throw std::invalid_argument("unknown reduce mode: " + name);
}

json obstruction_json(const ObstructionValue& ob) {
  json out;
  out["degree"] = ob.degree;
  out["zero"] = ob.zero;
  if (ob.mode == ReduceMode::mir) {
    json b = bclass_json(ob.mir_value);
    out.update(b);
  } else {
    out["representative"] = cyclic_json(ob.representative);
    out["reduce"] = ob.mode == ReduceMode::cbar ? "cbar" : "none";
  }
  return out;
}

int tree_sum_degree(const TreeSum& ts) {
  if (ts.terms.empty()) return 0;
  return ts.terms[0].lhs.leaf_count() + ts.terms[0].rhs.leaf_count() - 2;
}

struct Check {
  std::string name;
  bool pass;
};

Word wd(std::initializer_list<Letter> ls) {
  Word w;
  for (Letter x : ls) w.push_back(static_cast<char>(x));
  return w;
}

std::vector<Check> golden_checks() {
  std::vector<Check> out;
  auto add = [&](const std::string& name, bool pass) {
    out.push_back({name, pass});
  };
  Letter a1 = letter_a(0), b1 = letter_b(0), a2 = letter_a(1), a3 = letter_a(2);
  auto lf = RootedTree::leaf;
  auto pair_tree = [&](Letter x, Letter y) {
    return RootedTree::node(lf(x), lf(y));
  };

  // half ladder on a symplectic pair is exactly zero
  TreeSum sympl = tree_sum_single(2, pair_tree(a1, b1), pair_tree(a1, b1), 1,
                                  true);
  add("half_ladder_a1b1_zero",
      trbar_formula(sympl, ReduceMode::none).representative.is_zero());

  // half ladder on (a1, a2): representative and nonzero under both reductions
  TreeSum ladder = tree_sum_single(2, pair_tree(a1, a2), pair_tree(a1, a2), 1,
                                   true);
  {
    CyclicClass expect(2, 3);
    expect.add(wd({a2, a2, a1}), 1);
    expect.add(wd({a1, a1, a2}), 1);
    auto ob = trbar_formula(ladder, ReduceMode::none);
    add("half_ladder_a1a2_value", ob.representative == expect);
    add("half_ladder_a1a2_nonzero_cbar",
        !trbar_formula(ladder, ReduceMode::cbar).zero);
    add("half_ladder_a1a2_nonzero_mir",
        !trbar_formula(ladder, ReduceMode::mir).zero);
  }

  // whole four-leaf tree at genus 3
  TreeSum whole = tree_sum_single(3, pair_tree(a1, a3), pair_tree(a2, b1));
  {
    CyclicClass expect(3, 3);
    expect.add(wd({a3, a2, a2}), -1);
    expect.add(wd({a2, a3, a3}), -1);
    add("whole_tree_g3_value",
        trbar_formula(whole, ReduceMode::none).representative == expect);
  }

  // direct route on the commutator lift
  FreeAutomorphism f =
      parse_automorphism("[K a1 a2, K3 b1 a1 a2] [K a2 a1, K3 b2 a2 a1]", 2);
  {
    CyclicClass expect(2, 3);
    expect.add(wd({a2, a1, a1}), 1);
    expect.add(wd({a2, a2, a1}), -1);
    auto ob = trbar_direct(f, 2, ReduceMode::cbar);
    add("direct_route_value", ob.representative == expect && !ob.zero);
    // both routes give the same class modulo the trace lattice
    CyclicClass diff = ob.representative;
    diff -= trbar_formula(ladder, ReduceMode::none).representative;
    add("route_agreement",
        diff.is_zero() ||
            lattice_member(cbar_lattice(3, 2),
                           cyclic_coordinates(diff, necklace_basis(3, 2))));
    add("squared_lift_zero",
        trbar_direct(aut_compose(f, f), 2, ReduceMode::cbar).zero);
  }

  // antisymmetric obstruction and the reduction triangle
  {
    WedgeClass expect;
    expect.flip(a1, a2);
    add("tr_as_a1a2", tr_as(ladder) == expect);
    add("tr_as_symplectic_pair_zero", tr_as(sympl).is_zero());
    add("triangle_ladder", iota(tr_as(ladder), 2) == tr_mir(ladder));
    add("triangle_symplectic_pair", iota(tr_as(sympl), 2) == tr_mir(sympl));
    add("triangle_whole_tree", iota(tr_as(whole), 3) == tr_mir(whole));
  }

  // necklace/bracelet counting formulas against brute force
  {
    bool ok = true;
    for (int k = 1; k <= 6 && ok; ++k)
      for (int n = 1; n <= 3 && ok; ++n) ok = counts(k, n) == brute_counts(k, n);
    CountReport c32 = counts(3, 2);
    ok = ok && c32.b_free_rank == 0 && c32.b_torsion_rank == 4;
    add("counts_closed_form", ok);
  }

  // torsion witnesses
  for (int k = 1; k <= 3; ++k) {
    add("witness_k" + std::to_string(k), witness_check(k, k + 2).ok());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact obstruction computations for symplectic derivations"};
  app.require_subcommand(1);

  int genus = 2, degree = 2, k = 3, n = 2, max_degree = 8;
  std::string input, aut_path, reduce = "auto";
  bool brute_check = false;

  auto* cmd_trace = app.add_subcommand("trace", "trace of a tree sum");
  cmd_trace->add_option("--g", genus, "genus")->required();
  cmd_trace->add_option("--input", input, "tree sum JSON file")->required();

  auto* cmd_trbar = app.add_subcommand("trbar", "obstruction of a tree sum");
  cmd_trbar->add_option("--g", genus, "genus")->required();
  cmd_trbar->add_option("--input", input, "tree sum JSON file")->required();
  cmd_trbar->add_option("--reduce", reduce, "none|cbar|mir|auto");

  auto* cmd_direct =
      app.add_subcommand("trbar-direct", "obstruction of an automorphism");
  cmd_direct->add_option("--g", genus, "genus")->required();
  cmd_direct->add_option("--degree", degree, "filtration degree k")->required();
  cmd_direct->add_option("--aut", aut_path, "automorphism file")->required();
  cmd_direct->add_option("--reduce", reduce, "none|cbar|mir|auto");
  cmd_direct->add_option("--max-degree", max_degree, "expansion degree cap");

  auto* cmd_counts = app.add_subcommand("counts", "necklace/bracelet counts");
  cmd_counts->add_option("--k", k, "word length")->required();
  cmd_counts->add_option("--n", n, "alphabet size")->required();
  cmd_counts->add_flag("--brute-check", brute_check, "verify by enumeration");

  auto* cmd_witness = app.add_subcommand("witness", "torsion witness report");
  cmd_witness->add_option("--k", k, "degree parameter")->required();
  cmd_witness->add_option("--g", genus, "genus")->required();

  auto* cmd_verify =
      app.add_subcommand("verify-paper", "run the golden example suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 3;
  }

  try {
    json out;
    if (cmd_trace->parsed()) {
      TreeSum ts = tree_sum_from_json(slurp(input), genus);
      CyclicClass tr = satoh_trace(eta(ts));
      out["degree"] = tree_sum_degree(ts);
      out["terms"] = cyclic_json(tr);
      out["zero"] = tr.is_zero();
    } else if (cmd_trbar->parsed()) {
      TreeSum ts = tree_sum_from_json(slurp(input), genus);
      ReduceMode mode = pick_mode(reduce, tree_sum_degree(ts) + 1, genus);
      out = obstruction_json(trbar_formula(ts, mode));
    } else if (cmd_direct->parsed()) {
      FreeAutomorphism f = parse_automorphism(slurp(aut_path), genus);
      ReduceMode mode = pick_mode(reduce, degree + 1, genus);
      out = obstruction_json(trbar_direct(f, degree, mode, max_degree));
    } else if (cmd_counts->parsed()) {
      CountReport c = counts(k, n);
      out["necklaces"] = c.necklaces;
      out["bracelets"] = c.bracelets;
      out["chiral"] = c.chiral;
      out["b_free_rank"] = c.b_free_rank;
      out["b_torsion_rank"] = c.b_torsion_rank;
      if (brute_check) out["brute_agrees"] = c == brute_counts(k, n);
    } else if (cmd_witness->parsed()) {
      WitnessReport rep = witness_check(k, genus);
      out["k"] = k;
      out["genus"] = genus;
      out["trace_free"] = rep.trace_free;
      out["symplectic"] = rep.symplectic;
      out["mir_nonzero"] = rep.mir_nonzero;
      out["coordinate_one"] = rep.coordinate_one;
      if (rep.decomposition_checked)
        out["decomposition_ok"] = rep.decomposition_ok;
      out["ok"] = rep.ok();
      out.update(bclass_json(tr_mir(witness(k, genus))));
    } else if (cmd_verify->parsed()) {
      bool all = true;
      json checks = json::array();
      for (const Check& c : golden_checks()) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}});
        all = all && c.pass;
      }
      out["checks"] = std::move(checks);
      out["all_pass"] = all;
      std::cout << out.dump() << "\n";
      return all ? 0 : 1;
    }
    std::cout << out.dump() << "\n";
    return 0;
  } catch (const std::domain_error& e) {
    std::cout << json{{"error", {{"type", "precondition"},
                                 {"message", e.what()}}}}.dump()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << json{{"error", {{"type", "parse"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return 3;
  }
}
