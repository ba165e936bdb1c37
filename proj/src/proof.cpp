#include "malleq/proof.hpp"

#include <numeric>
#include <sstream>

#include "malleq/parse_util.hpp"

namespace malleq {

namespace {

ProofPtr make_node(Rule rule, std::string name, int i, int j, FormulaPtr formula, ProofPtr left,
                   ProofPtr right, Sequent conclusion) {
  return std::make_shared<Proof>(Proof{rule, std::move(name), i, j, std::move(formula),
                                       std::move(left), std::move(right), std::move(conclusion)});
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw ProofError(msg);
}

void check_labels(const Sequent& s) {
  std::string dup = find_duplicate_label(s);
  require(dup.empty(), "duplicate label '" + dup + "' in inferred conclusion");
}

}  // namespace

int premise_count(Rule r) {
  switch (r) {
    case Rule::Ax: return 0;
    case Rule::ImpR:
    case Rule::Ex:
    case Rule::PlusL:
    case Rule::PlusR: return 1;
    case Rule::ImpL:
    case Rule::DPlus: return 2;
  }
  return 0;
}

int proof_size(const Proof& p) {
  int n = 1;
  if (p.left) n += proof_size(*p.left);
  if (p.right) n += proof_size(*p.right);
  return n;
}

ProofPtr ax(const std::string& atom_name) {
  FormulaPtr a = atom(atom_name);
  Sequent s{{a}, a};
  return make_node(Rule::Ax, atom_name, 0, 0, nullptr, nullptr, nullptr, std::move(s));
}

ProofPtr imp_r(ProofPtr premise) {
  require(premise && premise->inferred(), "premise lacks a conclusion");
  const Sequent& p = premise->conclusion;
  require(!p.context.empty(), "impR premise needs a nonempty context");
  Sequent s;
  s.context.assign(p.context.begin(), p.context.end() - 1);
  s.succedent = imp(p.context.back(), p.succedent);
  return make_node(Rule::ImpR, "", 0, 0, nullptr, std::move(premise), nullptr, std::move(s));
}

ProofPtr imp_l(ProofPtr left, ProofPtr right) {
  require(left && right && left->inferred() && right->inferred(),
          "premise lacks a conclusion");
  const Sequent& l = left->conclusion;
  const Sequent& r = right->conclusion;
  require(!r.context.empty(), "impL right premise needs the implication result first");
  Sequent s;
  s.context = l.context;
  s.context.push_back(imp(l.succedent, r.context.front()));
  s.context.insert(s.context.end(), r.context.begin() + 1, r.context.end());
  s.succedent = r.succedent;
  check_labels(s);
  return make_node(Rule::ImpL, "", 0, 0, nullptr, std::move(left), std::move(right), std::move(s));
}

ProofPtr ex(int i, int j, ProofPtr premise) {
  require(premise && premise->inferred(), "premise lacks a conclusion");
  int n = static_cast<int>(premise->conclusion.context.size());
  require(i >= 1 && i <= n && j >= 1 && j <= n,
          "exchange position out of range (context has " + std::to_string(n) + " formulas)");
  require(i != j, "exchange needs two distinct positions");
  Sequent s = premise->conclusion;
  std::swap(s.context[i - 1], s.context[j - 1]);
  return make_node(Rule::Ex, "", i, j, nullptr, std::move(premise), nullptr, std::move(s));
}

ProofPtr plus_l(FormulaPtr result, ProofPtr premise) {
  require(premise && premise->inferred(), "premise lacks a conclusion");
  require(result && result->kind == Formula::Kind::Plus, "plusL result must be a sum");
  require(formula_equal(premise->conclusion.succedent, result->left),
          "plusL premise succedent must be the left disjunct");
  Sequent s{premise->conclusion.context, result};
  check_labels(s);
  return make_node(Rule::PlusL, "", 0, 0, std::move(result), std::move(premise), nullptr,
                   std::move(s));
}

ProofPtr plus_r(FormulaPtr result, ProofPtr premise) {
  require(premise && premise->inferred(), "premise lacks a conclusion");
  require(result && result->kind == Formula::Kind::Plus, "plusR result must be a sum");
  require(formula_equal(premise->conclusion.succedent, result->right),
          "plusR premise succedent must be the right disjunct");
  Sequent s{premise->conclusion.context, result};
  check_labels(s);
  return make_node(Rule::PlusR, "", 0, 0, std::move(result), std::move(premise), nullptr,
                   std::move(s));
}

ProofPtr dplus(const std::string& label, ProofPtr left, ProofPtr right) {
  require(left && right && left->inferred() && right->inferred(),
          "premise lacks a conclusion");
  const Sequent& l = left->conclusion;
  const Sequent& r = right->conclusion;
  require(!l.context.empty() && !r.context.empty(), "dplus premises need nonempty contexts");
  require(l.context.size() == r.context.size(), "dplus premises must share their context");
  for (std::size_t k = 0; k + 1 < l.context.size(); ++k) {
    require(formula_equal(l.context[k], r.context[k]), "dplus premises must share their context");
  }
  require(formula_equal(l.succedent, r.succedent), "dplus premises must share their succedent");
  Sequent s;
  s.context.assign(l.context.begin(), l.context.end() - 1);
  s.context.push_back(plus(label, l.context.back(), r.context.back()));
  s.succedent = l.succedent;
  check_labels(s);  // covers freshness of the new label
  return make_node(Rule::DPlus, label, 0, 0, nullptr, std::move(left), std::move(right),
                   std::move(s));
}

namespace {

ProofPtr infer_rec(const ProofPtr& raw, NodePath& path) {
  ProofPtr l, r;
  try {
    if (raw->left) {
      path.push_back(0);
      l = infer_rec(raw->left, path);
      path.pop_back();
    }
    if (raw->right) {
      path.push_back(1);
      r = infer_rec(raw->right, path);
      path.pop_back();
    }
    switch (raw->rule) {
      case Rule::Ax: return ax(raw->name);
      case Rule::ImpR: return imp_r(std::move(l));
      case Rule::ImpL: return imp_l(std::move(l), std::move(r));
      case Rule::Ex: return ex(raw->pos_i, raw->pos_j, std::move(l));
      case Rule::PlusL: return plus_l(raw->formula, std::move(l));
      case Rule::PlusR: return plus_r(raw->formula, std::move(l));
      case Rule::DPlus: return dplus(raw->name, std::move(l), std::move(r));
    }
    throw ProofError("unknown rule");
  } catch (const Error& e) {
    std::string at = show_node_path(path);
    std::string msg = e.what();
    if (msg.rfind("at ", 0) == 0) throw;  // already annotated deeper down
    throw ProofError("at " + at + ": " + msg);
  }
}

}  // namespace

ProofPtr infer_conclusion(const ProofPtr& raw) {
  NodePath path;
  return infer_rec(raw, path);
}

namespace {

void check_rec(const ProofPtr& p, NodePath& path) {
  if (!p->inferred()) throw ProofError("at " + show_node_path(path) + ": missing conclusion");
  if (p->left) {
    path.push_back(0);
    check_rec(p->left, path);
    path.pop_back();
  }
  if (p->right) {
    path.push_back(1);
    check_rec(p->right, path);
    path.pop_back();
  }
  ProofPtr fresh;
  try {
    switch (p->rule) {
      case Rule::Ax: fresh = ax(p->name); break;
      case Rule::ImpR: fresh = imp_r(p->left); break;
      case Rule::ImpL: fresh = imp_l(p->left, p->right); break;
      case Rule::Ex: fresh = ex(p->pos_i, p->pos_j, p->left); break;
      case Rule::PlusL: fresh = plus_l(p->formula, p->left); break;
      case Rule::PlusR: fresh = plus_r(p->formula, p->left); break;
      case Rule::DPlus: fresh = dplus(p->name, p->left, p->right); break;
    }
  } catch (const Error& e) {
    throw ProofError("at " + show_node_path(path) + ": " + e.what());
  }
  if (!sequent_equal(fresh->conclusion, p->conclusion)) {
    throw ProofError("at " + show_node_path(path) + ": stored conclusion '" +
                     show_sequent(p->conclusion) + "' differs from inferred '" +
                     show_sequent(fresh->conclusion) + "'");
  }
}

}  // namespace

CheckResult check_proof(const ProofPtr& p) {
  NodePath path;
  try {
    check_rec(p, path);
  } catch (const ProofError& e) {
    return {false, e.what()};
  }
  return {true, ""};
}

ProofPtr node_at(const ProofPtr& root, const NodePath& path) {
  ProofPtr cur = root;
  for (int step : path) {
    ProofPtr next = step == 0 ? cur->left : cur->right;
    if (step < 0 || step > 1 || !next) {
      throw Error("no node at path " + show_node_path(path));
    }
    cur = next;
  }
  return cur;
}

ProofPtr replace_at(const ProofPtr& root, const NodePath& path, ProofPtr subtree) {
  if (path.empty()) return subtree;
  NodePath rest(path.begin() + 1, path.end());
  ProofPtr l = root->left, r = root->right;
  if (path.front() == 0) {
    if (!l) throw Error("no node at path " + show_node_path(path));
    l = replace_at(l, rest, std::move(subtree));
  } else {
    if (!r) throw Error("no node at path " + show_node_path(path));
    r = replace_at(r, rest, std::move(subtree));
  }
  switch (root->rule) {
    case Rule::Ax: throw Error("no node at path " + show_node_path(path));
    case Rule::ImpR: return imp_r(std::move(l));
    case Rule::ImpL: return imp_l(std::move(l), std::move(r));
    case Rule::Ex: return ex(root->pos_i, root->pos_j, std::move(l));
    case Rule::PlusL: return plus_l(root->formula, std::move(l));
    case Rule::PlusR: return plus_r(root->formula, std::move(l));
    case Rule::DPlus: return dplus(root->name, std::move(l), std::move(r));
  }
  throw Error("unknown rule");
}

namespace {

int context_atoms(const Sequent& s) {
  int n = 0;
  for (const auto& f : s.context) n += f->atoms;
  return n;
}

std::vector<int> identity_embedding(int n) {
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

std::vector<int> premise_embedding(const Proof& node, int slot) {
  if (slot < 0 || slot >= premise_count(node.rule)) {
    throw Error("rule has no premise slot " + std::to_string(slot));
  }
  const Proof& premise = slot == 0 ? *node.left : *node.right;
  if (!premise.inferred() || !node.inferred()) throw Error("conclusions not inferred");
  const Sequent& p = premise.conclusion;
  int n = atom_count(p);
  switch (node.rule) {
    case Rule::Ax: break;
    case Rule::ImpR:
      return identity_embedding(n);
    case Rule::ImpL: {
      if (slot == 0) return identity_embedding(n);
      // conclusion atoms: Gamma | A | B | Delta | C, right premise is B | Delta | C
      int shift = atom_count(node.left->conclusion);
      std::vector<int> out(n);
      for (int k = 0; k < n; ++k) out[k] = k + shift;
      return out;
    }
    case Rule::Ex: {
      // block starts before and after swapping positions i and j
      std::vector<int> starts(p.context.size() + 1, 0);
      for (std::size_t k = 0; k < p.context.size(); ++k) {
        starts[k + 1] = starts[k] + p.context[k]->atoms;
      }
      std::vector<int> dest(p.context.size());
      std::iota(dest.begin(), dest.end(), 0);
      std::swap(dest[node.pos_i - 1], dest[node.pos_j - 1]);
      // dest[k] = conclusion position of premise formula k
      std::vector<int> new_starts(p.context.size(), 0);
      {
        std::vector<int> sizes(p.context.size());
        for (std::size_t k = 0; k < p.context.size(); ++k) sizes[k] = p.context[k]->atoms;
        std::swap(sizes[node.pos_i - 1], sizes[node.pos_j - 1]);
        std::vector<int> cstarts(p.context.size() + 1, 0);
        for (std::size_t k = 0; k < p.context.size(); ++k) cstarts[k + 1] = cstarts[k] + sizes[k];
        for (std::size_t k = 0; k < p.context.size(); ++k) new_starts[k] = cstarts[dest[k]];
      }
      std::vector<int> out(n);
      for (std::size_t k = 0; k < p.context.size(); ++k) {
        for (int a = 0; a < p.context[k]->atoms; ++a) out[starts[k] + a] = new_starts[k] + a;
      }
      int succ_start = starts.back();
      for (int a = 0; a + succ_start < n; ++a) out[succ_start + a] = succ_start + a;
      return out;
    }
    case Rule::PlusL:
      return identity_embedding(n);
    case Rule::PlusR: {
      // succedent B sits after the phantom left disjunct A
      int g = context_atoms(p);
      int a = node.formula->left->atoms;
      std::vector<int> out(n);
      for (int k = 0; k < n; ++k) out[k] = k < g ? k : k + a;
      return out;
    }
    case Rule::DPlus: {
      const Sequent& l = node.left->conclusion;
      const Sequent& r = node.right->conclusion;
      int g = context_atoms(l) - l.context.back()->atoms;
      int a = l.context.back()->atoms;
      int b = r.context.back()->atoms;
      std::vector<int> out(n);
      if (slot == 0) {
        // Gamma and A keep their indices, C shifts past B
        for (int k = 0; k < n; ++k) out[k] = k < g + a ? k : k + b;
      } else {
        // Gamma keeps, B and C shift past A
        for (int k = 0; k < n; ++k) out[k] = k < g ? k : k + a;
      }
      return out;
    }
  }
  throw Error("rule has no premises");
}

std::vector<int> premise_embedding(const ProofPtr& root, const NodePath& path, int slot) {
  return premise_embedding(*node_at(root, path), slot);
}

ProofPtr permute_impR_over_dplus(const ProofPtr& p) {
  require(p->rule == Rule::ImpR, "expected ImpR at the root");
  ProofPtr exch = p->left;
  require(exch->rule == Rule::Ex && exch->pos_i + exch->pos_j == 3,
          "expected Ex(1,2) under the ImpR");
  ProofPtr dp = exch->left;
  require(dp->rule == Rule::DPlus, "expected dplus under the exchange");
  require(dp->conclusion.context.size() == 2, "dplus context must have exactly two formulas");
  ProofPtr a = imp_r(ex(1, 2, dp->left));
  ProofPtr b = imp_r(ex(1, 2, dp->right));
  ProofPtr out = dplus(dp->name, std::move(a), std::move(b));
  require(sequent_equal(out->conclusion, p->conclusion), "rewrite changed the conclusion");
  return out;
}

ProofPtr distribute_impL_over_dplus(const ProofPtr& p) {
  require(p->rule == Rule::ImpL, "expected ImpL at the root");
  ProofPtr nu = p->left;
  ProofPtr dp = p->right;
  require(dp->rule == Rule::DPlus, "expected dplus as the right premise");
  require(dp->left->conclusion.context.size() >= 2,
          "dplus premises need a formula ahead of the disjunct");
  ProofPtr a = imp_l(nu, dp->left);
  ProofPtr b = imp_l(nu, dp->right);
  ProofPtr out = dplus(dp->name, std::move(a), std::move(b));
  require(sequent_equal(out->conclusion, p->conclusion), "rewrite changed the conclusion");
  return out;
}

ProofPtr insert_identity_exchange(const ProofPtr& root, const NodePath& path, int i, int j) {
  ProofPtr target = node_at(root, path);
  return replace_at(root, path, ex(i, j, ex(i, j, target)));
}

ProofPtr swap_dplus_branches(const ProofPtr& root, const NodePath& path) {
  ProofPtr target = node_at(root, path);
  require(target->rule == Rule::DPlus, "expected dplus at " + show_node_path(path));
  require(formula_equal(target->left->conclusion.context.back(),
                        target->right->conclusion.context.back()),
          "swapping needs syntactically equal disjuncts");
  return replace_at(root, path, dplus(target->name, target->right, target->left));
}

namespace {

ProofPtr raw_node(Rule rule, std::string name, int i, int j, FormulaPtr formula, ProofPtr left,
                  ProofPtr right) {
  return std::make_shared<Proof>(
      Proof{rule, std::move(name), i, j, std::move(formula), std::move(left), std::move(right), {}});
}

ProofPtr parse_proof_at(detail::Cursor& c) {
  c.expect('(');
  std::size_t at = c.pos;
  std::string head = c.ident();
  ProofPtr out;
  if (head == "ax") {
    std::string a = c.ident();
    out = raw_node(Rule::Ax, a, 0, 0, nullptr, nullptr, nullptr);
  } else if (head == "impR") {
    out = raw_node(Rule::ImpR, "", 0, 0, nullptr, parse_proof_at(c), nullptr);
  } else if (head == "impL") {
    ProofPtr l = parse_proof_at(c);
    ProofPtr r = parse_proof_at(c);
    out = raw_node(Rule::ImpL, "", 0, 0, nullptr, std::move(l), std::move(r));
  } else if (head == "ex") {
    int i = c.integer();
    int j = c.integer();
    out = raw_node(Rule::Ex, "", i, j, nullptr, parse_proof_at(c), nullptr);
  } else if (head == "plusL" || head == "plusR") {
    FormulaPtr f = parse_formula_prefix(c);
    ProofPtr l = parse_proof_at(c);
    out = raw_node(head == "plusL" ? Rule::PlusL : Rule::PlusR, "", 0, 0, std::move(f),
                   std::move(l), nullptr);
  } else if (head == "dplus") {
    std::string label = c.label();
    ProofPtr l = parse_proof_at(c);
    ProofPtr r = parse_proof_at(c);
    out = raw_node(Rule::DPlus, label, 0, 0, nullptr, std::move(l), std::move(r));
  } else {
    throw ParseError("unknown rule '" + head + "'", at);
  }
  c.expect(')');
  return out;
}

void show_proof_to(const Proof& p, std::ostringstream& out) {
  out << '(';
  switch (p.rule) {
    case Rule::Ax:
      out << "ax " << p.name;
      break;
    case Rule::ImpR:
      out << "impR ";
      show_proof_to(*p.left, out);
      break;
    case Rule::ImpL:
      out << "impL ";
      show_proof_to(*p.left, out);
      out << ' ';
      show_proof_to(*p.right, out);
      break;
    case Rule::Ex:
      out << "ex " << p.pos_i << ' ' << p.pos_j << ' ';
      show_proof_to(*p.left, out);
      break;
    case Rule::PlusL:
    case Rule::PlusR:
      out << (p.rule == Rule::PlusL ? "plusL " : "plusR ") << show_formula(p.formula) << ' ';
      show_proof_to(*p.left, out);
      break;
    case Rule::DPlus:
      out << "dplus " << p.name << ' ';
      show_proof_to(*p.left, out);
      out << ' ';
      show_proof_to(*p.right, out);
      break;
  }
  out << ')';
}

}  // namespace

ProofPtr parse_proof(std::string_view text) {
  detail::Cursor c(text);
  ProofPtr p = parse_proof_at(c);
  c.expect_end();
  return p;
}

std::string show_proof(const Proof& p) {
  std::ostringstream out;
  show_proof_to(p, out);
  return out.str();
}

std::string show_node_path(const NodePath& path) {
  if (path.empty()) return "/";
  std::string out;
  for (int step : path) out += "/" + std::to_string(step);
  return out;
}

}  // namespace malleq
