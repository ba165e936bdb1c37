#include "malleq/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "malleq/classical.hpp"
#include "malleq/encode.hpp"
#include "malleq/equiv.hpp"
#include "malleq/generators.hpp"
#include "malleq/reductions.hpp"

namespace malleq {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot write file");
  out << content;
}

template <typename F>
auto with_source(const std::string& path, F&& f) {
  try {
    return f(read_file(path));
  } catch (const Error& e) {
    std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw Error(path + ": " + msg);
  }
}

ProofPtr load_proof(const std::string& path) {
  return with_source(path, [](const std::string& text) {
    return infer_conclusion(parse_proof(text));
  });
}

BdtPtr load_bdt(const std::string& path) {
  return with_source(path, [](const std::string& text) { return parse_bdt(text); });
}

MallProofPtr load_mall_proof(const std::string& path) {
  return with_source(path, [](const std::string& text) {
    return infer_mall_conclusion(parse_mall_proof(text));
  });
}

OccPair parse_pair_option(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) throw Error("--pair expects i,j");
  try {
    int i = std::stoi(text.substr(0, comma));
    int j = std::stoi(text.substr(comma + 1));
    return occ_pair(i, j);
  } catch (const std::exception&) {
    throw Error("--pair expects i,j");
  }
}

Valuation parse_assignments(const std::vector<std::string>& args) {
  Valuation v;
  for (const auto& a : args) {
    std::size_t eq = a.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 2 != a.size() ||
        (a[eq + 1] != '0' && a[eq + 1] != '1')) {
      throw Error("assignment '" + a + "' is not of the form var=0 or var=1");
    }
    v[a.substr(0, eq)] = a[eq + 1] - '0';
  }
  return v;
}

int verdict(bool equivalent, std::ostream& out) {
  out << (equivalent ? "equivalent" : "inequivalent") << '\n';
  return equivalent ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"proof equivalence for the implication/sum sequent calculus"};
  app.require_subcommand(1);

  std::string file1, file2, pair_text, out_prefix, f_vertex, s_vertex;
  bool use_oracle = false, show_witness_flag = false, explicit_slicing = false;
  bool check_representation_flag = false;
  int vars_option = -1;
  GenConfig gen_cfg;
  std::vector<std::string> assignments;
  bool force_equivalent = false, force_inequivalent = false;

  auto* check = app.add_subcommand("check", "validate a proof file");
  check->add_option("proof", file1)->required();

  auto* equivc = app.add_subcommand("equiv", "decide equivalence of two proofs");
  equivc->add_option("proof1", file1)->required();
  equivc->add_option("proof2", file2)->required();
  equivc->add_flag("--oracle", use_oracle, "compare explicit slicings instead");
  equivc->add_flag("--witness", show_witness_flag, "print the separating pair");

  auto* slice = app.add_subcommand("slice", "print the slicing of a proof");
  slice->add_option("proof", file1)->required();
  slice->add_flag("--explicit", explicit_slicing, "use the direct recursion, not expansion");

  auto* bdt_slice = app.add_subcommand("bdt-slice", "print the decision-tree slicing");
  bdt_slice->add_option("proof", file1)->required();
  bdt_slice->add_option("--pair", pair_text, "only the entry for occurrence pair i,j");

  auto* bdt = app.add_subcommand("bdt", "decision tree operations");
  bdt->require_subcommand(1);
  auto* bdt_equiv = bdt->add_subcommand("equiv", "decide equivalence of two trees");
  bdt_equiv->add_option("tree1", file1)->required();
  bdt_equiv->add_option("tree2", file2)->required();
  bdt_equiv->add_flag("--oracle", use_oracle, "compare truth tables instead");
  bdt_equiv->add_flag("--witness", show_witness_flag, "print the separating leaves");
  auto* bdt_eval = bdt->add_subcommand("eval", "evaluate a tree under an assignment");
  bdt_eval->add_option("tree", file1)->required();
  bdt_eval->add_option("assignments", assignments, "var=bit pairs");

  auto* encode = app.add_subcommand("encode", "turn a free tree into a proof");
  encode->add_option("tree", file1)->required();
  encode->add_option("--vars", vars_option, "universe size (default: variables used)");
  encode->add_flag("--check-representation", check_representation_flag,
                   "verify the encoding instead of printing it");

  auto* reduce = app.add_subcommand("reduce", "order decision gadgets");
  reduce->require_subcommand(1);
  auto* red_proof = reduce->add_subcommand("ord-proof", "line order as a proof pair");
  red_proof->add_option("line", file1)->required();
  red_proof->add_option("--f", f_vertex)->required();
  red_proof->add_option("--s", s_vertex)->required();
  red_proof->add_option("--out", out_prefix, "write the pair to <prefix>.1 and <prefix>.2");
  auto* red_bdt = reduce->add_subcommand("ord-bdt", "line order as a tree pair");
  red_bdt->add_option("line", file1)->required();
  red_bdt->add_option("--f", f_vertex)->required();
  red_bdt->add_option("--s", s_vertex)->required();
  red_bdt->add_option("--out", out_prefix, "write the pair to <prefix>.1 and <prefix>.2");

  auto* gen = app.add_subcommand("gen", "seeded generators");
  gen->require_subcommand(1);
  auto* gen_bdt = gen->add_subcommand("bdt", "a random free tree");
  gen_bdt->add_option("--seed", gen_cfg.seed);
  gen_bdt->add_option("--vars", gen_cfg.var_budget);
  gen_bdt->add_option("--depth", gen_cfg.depth_budget);
  auto* gen_pair = gen->add_subcommand("proof-pair", "a proof pair with a known verdict");
  gen_pair->add_option("--seed", gen_cfg.seed);
  gen_pair->add_option("--vars", gen_cfg.var_budget);
  gen_pair->add_option("--depth", gen_cfg.depth_budget);
  gen_pair->add_option("--mutations", gen_cfg.mutation_count);
  gen_pair->add_flag("--equivalent", force_equivalent, "force an equivalent pair");
  gen_pair->add_flag("--inequivalent", force_inequivalent, "force an inequivalent pair");
  auto* gen_line = gen->add_subcommand("line", "a random line instance");
  gen_line->add_option("--seed", gen_cfg.seed);
  gen_line->add_option("--vars", gen_cfg.var_budget);

  auto* mall = app.add_subcommand("mall", "one-sided calculus operations");
  mall->require_subcommand(1);
  auto* mall_check = mall->add_subcommand("check", "validate a one-sided proof file");
  mall_check->add_option("proof", file1)->required();
  auto* mall_equivc = mall->add_subcommand("equiv", "decide equivalence of one-sided proofs");
  mall_equivc->add_option("proof1", file1)->required();
  mall_equivc->add_option("proof2", file2)->required();
  mall_equivc->add_flag("--oracle", use_oracle, "compare explicit slicings instead");
  mall_equivc->add_flag("--witness", show_witness_flag, "print the separating pair");

  std::vector<const char*> argv;
  argv.push_back("malleq");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (check->parsed()) {
      ProofPtr p = load_proof(file1);
      out << "ok\n" << show_sequent(p->conclusion) << '\n';
      return 0;
    }
    if (equivc->parsed()) {
      ProofPtr p = load_proof(file1);
      ProofPtr q = load_proof(file2);
      if (use_oracle) return verdict(proof_equiv_oracle(p, q), out);
      EquivVerdict v = proof_equiv(p, q);
      int code = verdict(v.equivalent, out);
      if (show_witness_flag && v.witness) out << show_witness(*v.witness) << '\n';
      return code;
    }
    if (slice->parsed()) {
      ProofPtr p = load_proof(file1);
      Slicing s = explicit_slicing ? slicing(p) : expand(bdt_slicing(p));
      out << show_slicing(s);
      return 0;
    }
    if (bdt_slice->parsed()) {
      ProofPtr p = load_proof(file1);
      if (!pair_text.empty()) {
        out << show_bdt(bdt_slicing_pair(p, parse_pair_option(pair_text))) << '\n';
      } else {
        out << show_bdt_slicing(bdt_slicing(p));
      }
      return 0;
    }
    if (bdt_equiv->parsed()) {
      BdtPtr a = load_bdt(file1);
      BdtPtr b = load_bdt(file2);
      if (use_oracle) return verdict(equiv_oracle(a, b), out);
      BdtEquivResult r = equiv(a, b);
      int code = verdict(r.equivalent, out);
      if (show_witness_flag && r.witness) {
        out << "left leaf " << show_leaf_path(r.witness->first) << '\n';
        out << "right leaf " << show_leaf_path(r.witness->second) << '\n';
      }
      return code;
    }
    if (bdt_eval->parsed()) {
      BdtPtr t = load_bdt(file1);
      int value = eval(*t, parse_assignments(assignments));
      out << value << '\n';
      return value == 1 ? 0 : 1;
    }
    if (encode->parsed()) {
      BdtPtr t = load_bdt(file1);
      int n = vars_option >= 0 ? vars_option : static_cast<int>(bdt_vars(*t).size());
      if (check_representation_flag) {
        RepresentationReport report = check_representation(n, t);
        out << (report.ok ? "ok" : "representation check failed") << '\n';
        for (const auto& c : report.checks) {
          out << (c.ok ? "  ok   " : "  FAIL ") << c.what << '\n';
        }
        return report.ok ? 0 : 1;
      }
      out << show_proof(encode_bdt(n, t)) << '\n';
      return 0;
    }
    if (red_proof->parsed() || red_bdt->parsed()) {
      OrdInstance inst{with_source(file1, [](const std::string& text) {
                         return parse_line_graph(text);
                       }),
                       f_vertex, s_vertex};
      if (red_proof->parsed()) {
        auto [p, q] = ord_to_proof_pair(inst);
        if (!out_prefix.empty()) {
          write_file(out_prefix + ".1", show_proof(p) + "\n");
          write_file(out_prefix + ".2", show_proof(q) + "\n");
        }
        return verdict(proof_equiv(p, q).equivalent, out);
      }
      auto [a, b] = ord_to_bdt_pair(inst);
      if (!out_prefix.empty()) {
        write_file(out_prefix + ".1", show_bdt(a) + "\n");
        write_file(out_prefix + ".2", show_bdt(b) + "\n");
      }
      return verdict(equiv(a, b).equivalent, out);
    }
    if (gen_bdt->parsed()) {
      out << show_bdt(random_free_bdt(gen_cfg)) << '\n';
      return 0;
    }
    if (gen_pair->parsed()) {
      if (force_equivalent && force_inequivalent) {
        throw Error("--equivalent and --inequivalent are mutually exclusive");
      }
      std::optional<bool> force;
      if (force_equivalent) force = true;
      if (force_inequivalent) force = false;
      GeneratedPair pair = equivalent_pair(gen_cfg, force);
      out << show_proof(pair.first) << '\n';
      out << show_proof(pair.second) << '\n';
      out << "expected: " << (pair.expected ? "equivalent" : "inequivalent") << '\n';
      return 0;
    }
    if (gen_line->parsed()) {
      OrdInstance inst = random_line(gen_cfg);
      out << show_line_graph(inst.graph);
      out << "# f = " << inst.f << '\n';
      out << "# s = " << inst.s << '\n';
      return 0;
    }
    if (mall_check->parsed()) {
      MallProofPtr p = load_mall_proof(file1);
      out << "ok\n" << show_mall_sequent(p->conclusion) << '\n';
      return 0;
    }
    if (mall_equivc->parsed()) {
      MallProofPtr p = load_mall_proof(file1);
      MallProofPtr q = load_mall_proof(file2);
      if (use_oracle) return verdict(mall_equiv_oracle(p, q), out);
      EquivVerdict v = mall_equiv(p, q);
      int code = verdict(v.equivalent, out);
      if (show_witness_flag && v.witness) out << show_witness(*v.witness) << '\n';
      return code;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace malleq
