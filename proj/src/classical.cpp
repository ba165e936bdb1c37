#include "malleq/classical.hpp"

#include <numeric>
#include <sstream>

#include "malleq/parse_util.hpp"

namespace malleq {

namespace {

MallFormulaPtr make_formula(MallFormula::Kind kind, std::string name, MallFormulaPtr l,
                            MallFormulaPtr r) {
  bool leaf_kind = kind == MallFormula::Kind::Atom || kind == MallFormula::Kind::DualAtom;
  if (!leaf_kind && (!l || !r)) throw Error("connective needs two subformulas");
  int atoms = (l ? l->atoms : 1) + (r ? r->atoms : 0);
  return std::make_shared<MallFormula>(
      MallFormula{kind, std::move(name), std::move(l), std::move(r), atoms});
}

}  // namespace

MallFormulaPtr matom(const std::string& name) {
  if (!valid_atom_name(name)) throw Error("invalid atom name '" + name + "'");
  return make_formula(MallFormula::Kind::Atom, name, nullptr, nullptr);
}

MallFormulaPtr mdual(const std::string& name) {
  if (!valid_atom_name(name)) throw Error("invalid atom name '" + name + "'");
  return make_formula(MallFormula::Kind::DualAtom, name, nullptr, nullptr);
}

MallFormulaPtr mtensor(MallFormulaPtr l, MallFormulaPtr r) {
  return make_formula(MallFormula::Kind::Tensor, "", std::move(l), std::move(r));
}

MallFormulaPtr mpar(MallFormulaPtr l, MallFormulaPtr r) {
  return make_formula(MallFormula::Kind::Par, "", std::move(l), std::move(r));
}

MallFormulaPtr mplus(const std::string& label, MallFormulaPtr l, MallFormulaPtr r) {
  if (!valid_label(label)) throw Error("invalid label '" + label + "'");
  return make_formula(MallFormula::Kind::Plus, label, std::move(l), std::move(r));
}

MallFormulaPtr mwith(const std::string& label, MallFormulaPtr l, MallFormulaPtr r) {
  if (!valid_label(label)) throw Error("invalid label '" + label + "'");
  return make_formula(MallFormula::Kind::With, label, std::move(l), std::move(r));
}

bool operator==(const MallFormula& a, const MallFormula& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  if (!a.left) return true;
  return *a.left == *b.left && *a.right == *b.right;
}

bool mall_formula_equal(const MallFormulaPtr& a, const MallFormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool mall_sequent_equal(const MallSequent& a, const MallSequent& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!mall_formula_equal(a[i], b[i])) return false;
  }
  return true;
}

int mall_atom_count(const MallSequent& s) {
  int n = 0;
  for (const auto& f : s) n += f->atoms;
  return n;
}

namespace {

void collect_labels(const MallFormula& f, std::vector<std::string>& out) {
  if (!f.left) return;
  if (f.kind == MallFormula::Kind::Plus || f.kind == MallFormula::Kind::With) {
    out.push_back(f.name);
  }
  collect_labels(*f.left, out);
  collect_labels(*f.right, out);
}

}  // namespace

std::string find_duplicate_mall_label(const MallSequent& s) {
  std::vector<std::string> labels;
  for (const auto& f : s) collect_labels(*f, labels);
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) return l;
  }
  return "";
}

namespace {

MallProofPtr make_node(MallRule rule, std::string name, int i, int j, MallFormulaPtr formula,
                       MallProofPtr left, MallProofPtr right, MallSequent conclusion) {
  return std::make_shared<MallProof>(MallProof{rule, std::move(name), i, j, std::move(formula),
                                               std::move(left), std::move(right),
                                               std::move(conclusion), true});
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw ProofError(msg);
}

void check_labels(const MallSequent& s) {
  std::string dup = find_duplicate_mall_label(s);
  require(dup.empty(), "duplicate label '" + dup + "' in inferred conclusion");
}

void require_inferred(const MallProofPtr& p) {
  require(p && p->has_conclusion, "premise lacks a conclusion");
}

}  // namespace

MallProofPtr mall_ax(const std::string& atom_name) {
  MallSequent s{mdual(atom_name), matom(atom_name)};
  return make_node(MallRule::Ax, atom_name, 0, 0, nullptr, nullptr, nullptr, std::move(s));
}

MallProofPtr mall_tensor(MallProofPtr left, MallProofPtr right) {
  require_inferred(left);
  require_inferred(right);
  const MallSequent& l = left->conclusion;
  const MallSequent& r = right->conclusion;
  require(!l.empty() && !r.empty(), "tensor premises cannot be empty");
  MallSequent s(l.begin(), l.end() - 1);
  s.insert(s.end(), r.begin(), r.end() - 1);
  s.push_back(mtensor(l.back(), r.back()));
  check_labels(s);
  return make_node(MallRule::Tensor, "", 0, 0, nullptr, std::move(left), std::move(right),
                   std::move(s));
}

MallProofPtr mall_par(MallProofPtr premise) {
  require_inferred(premise);
  const MallSequent& p = premise->conclusion;
  require(p.size() >= 2, "par needs two formulas to fuse");
  MallSequent s(p.begin(), p.end() - 2);
  s.push_back(mpar(p[p.size() - 2], p.back()));
  return make_node(MallRule::Par, "", 0, 0, nullptr, std::move(premise), nullptr, std::move(s));
}

MallProofPtr mall_plus_l(MallFormulaPtr result, MallProofPtr premise) {
  require_inferred(premise);
  require(result && result->kind == MallFormula::Kind::Plus, "plusL result must be a sum");
  const MallSequent& p = premise->conclusion;
  require(!p.empty(), "plusL premise cannot be empty");
  require(mall_formula_equal(p.back(), result->left),
          "plusL premise must end with the left disjunct");
  MallSequent s(p.begin(), p.end() - 1);
  s.push_back(result);
  check_labels(s);
  return make_node(MallRule::PlusL, "", 0, 0, std::move(result), std::move(premise), nullptr,
                   std::move(s));
}

MallProofPtr mall_plus_r(MallFormulaPtr result, MallProofPtr premise) {
  require_inferred(premise);
  require(result && result->kind == MallFormula::Kind::Plus, "plusR result must be a sum");
  const MallSequent& p = premise->conclusion;
  require(!p.empty(), "plusR premise cannot be empty");
  require(mall_formula_equal(p.back(), result->right),
          "plusR premise must end with the right disjunct");
  MallSequent s(p.begin(), p.end() - 1);
  s.push_back(result);
  check_labels(s);
  return make_node(MallRule::PlusR, "", 0, 0, std::move(result), std::move(premise), nullptr,
                   std::move(s));
}

MallProofPtr mall_with(const std::string& label, MallProofPtr left, MallProofPtr right) {
  require_inferred(left);
  require_inferred(right);
  const MallSequent& l = left->conclusion;
  const MallSequent& r = right->conclusion;
  require(!l.empty() && !r.empty(), "with premises cannot be empty");
  require(l.size() == r.size(), "with premises must share their context");
  for (std::size_t k = 0; k + 1 < l.size(); ++k) {
    require(mall_formula_equal(l[k], r[k]), "with premises must share their context");
  }
  MallSequent s(l.begin(), l.end() - 1);
  s.push_back(mwith(label, l.back(), r.back()));
  check_labels(s);  // covers freshness of the new label
  return make_node(MallRule::With, label, 0, 0, nullptr, std::move(left), std::move(right),
                   std::move(s));
}

MallProofPtr mall_ex(int i, int j, MallProofPtr premise) {
  require_inferred(premise);
  int n = static_cast<int>(premise->conclusion.size());
  require(i >= 1 && i <= n && j >= 1 && j <= n,
          "exchange position out of range (sequent has " + std::to_string(n) + " formulas)");
  require(i != j, "exchange needs two distinct positions");
  MallSequent s = premise->conclusion;
  std::swap(s[i - 1], s[j - 1]);
  return make_node(MallRule::Ex, "", i, j, nullptr, std::move(premise), nullptr, std::move(s));
}

namespace {

MallProofPtr rebuild(const MallProof& raw, MallProofPtr l, MallProofPtr r) {
  switch (raw.rule) {
    case MallRule::Ax: return mall_ax(raw.name);
    case MallRule::Tensor: return mall_tensor(std::move(l), std::move(r));
    case MallRule::Par: return mall_par(std::move(l));
    case MallRule::PlusL: return mall_plus_l(raw.formula, std::move(l));
    case MallRule::PlusR: return mall_plus_r(raw.formula, std::move(l));
    case MallRule::With: return mall_with(raw.name, std::move(l), std::move(r));
    case MallRule::Ex: return mall_ex(raw.pos_i, raw.pos_j, std::move(l));
  }
  throw ProofError("unknown rule");
}

MallProofPtr infer_rec(const MallProofPtr& raw, NodePath& path) {
  MallProofPtr l, r;
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
    return rebuild(*raw, std::move(l), std::move(r));
  } catch (const Error& e) {
    std::string msg = e.what();
    if (msg.rfind("at ", 0) == 0) throw;
    throw ProofError("at " + show_node_path(path) + ": " + msg);
  }
}

void check_rec(const MallProofPtr& p, NodePath& path) {
  if (!p->has_conclusion) throw ProofError("at " + show_node_path(path) + ": missing conclusion");
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
  MallProofPtr fresh;
  try {
    fresh = rebuild(*p, p->left, p->right);
  } catch (const Error& e) {
    throw ProofError("at " + show_node_path(path) + ": " + e.what());
  }
  if (!mall_sequent_equal(fresh->conclusion, p->conclusion)) {
    throw ProofError("at " + show_node_path(path) + ": stored conclusion '" +
                     show_mall_sequent(p->conclusion) + "' differs from inferred '" +
                     show_mall_sequent(fresh->conclusion) + "'");
  }
}

}  // namespace

MallProofPtr infer_mall_conclusion(const MallProofPtr& raw) {
  NodePath path;
  return infer_rec(raw, path);
}

CheckResult check_mall_proof(const MallProofPtr& p) {
  NodePath path;
  try {
    check_rec(p, path);
  } catch (const ProofError& e) {
    return {false, e.what()};
  }
  return {true, ""};
}

namespace {

int mall_premise_count(MallRule r) {
  switch (r) {
    case MallRule::Ax: return 0;
    case MallRule::Par:
    case MallRule::PlusL:
    case MallRule::PlusR:
    case MallRule::Ex: return 1;
    case MallRule::Tensor:
    case MallRule::With: return 2;
  }
  return 0;
}

std::vector<int> identity_embedding(int n) {
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

std::vector<int> mall_premise_embedding(const MallProof& node, int slot) {
  if (slot < 0 || slot >= mall_premise_count(node.rule)) {
    throw Error("rule has no premise slot " + std::to_string(slot));
  }
  const MallProof& premise = slot == 0 ? *node.left : *node.right;
  const MallSequent& p = premise.conclusion;
  int n = mall_atom_count(p);
  switch (node.rule) {
    case MallRule::Ax: break;
    case MallRule::Par:
    case MallRule::PlusL:
      return identity_embedding(n);
    case MallRule::PlusR: {
      int g = n - p.back()->atoms;
      int a = node.formula->left->atoms;
      std::vector<int> out(n);
      for (int k = 0; k < n; ++k) out[k] = k < g ? k : k + a;
      return out;
    }
    case MallRule::Tensor: {
      const MallSequent& l = node.left->conclusion;
      const MallSequent& r = node.right->conclusion;
      int g = mall_atom_count(l) - l.back()->atoms;
      int d = mall_atom_count(r) - r.back()->atoms;
      std::vector<int> out(n);
      if (slot == 0) {
        // Gamma keeps its place, A moves past Delta
        for (int k = 0; k < n; ++k) out[k] = k < g ? k : k + d;
      } else {
        // Delta lands after Gamma, B after A
        int a = l.back()->atoms;
        for (int k = 0; k < n; ++k) out[k] = k < d ? k + g : k + g + a;
      }
      return out;
    }
    case MallRule::With: {
      if (slot == 0) return identity_embedding(n);
      int g = n - p.back()->atoms;
      int a = node.left->conclusion.back()->atoms;
      std::vector<int> out(n);
      for (int k = 0; k < n; ++k) out[k] = k < g ? k : k + a;
      return out;
    }
    case MallRule::Ex: {
      std::vector<int> starts(p.size() + 1, 0);
      for (std::size_t k = 0; k < p.size(); ++k) starts[k + 1] = starts[k] + p[k]->atoms;
      std::vector<int> dest(p.size());
      std::iota(dest.begin(), dest.end(), 0);
      std::swap(dest[node.pos_i - 1], dest[node.pos_j - 1]);
      std::vector<int> sizes(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) sizes[k] = p[k]->atoms;
      std::swap(sizes[node.pos_i - 1], sizes[node.pos_j - 1]);
      std::vector<int> cstarts(p.size() + 1, 0);
      for (std::size_t k = 0; k < p.size(); ++k) cstarts[k + 1] = cstarts[k] + sizes[k];
      std::vector<int> out(n);
      for (std::size_t k = 0; k < p.size(); ++k) {
        for (int a = 0; a < p[k]->atoms; ++a) out[starts[k] + a] = cstarts[dest[k]] + a;
      }
      return out;
    }
  }
  throw Error("rule has no premises");
}

namespace {

const BdtPtr& zero_leaf() {
  static const BdtPtr z = leaf(0);
  return z;
}

BdtPtr at_or_zero(const PairMap& m, OccPair pr) {
  auto it = m.find(pr);
  return it == m.end() ? zero_leaf() : it->second;
}

// occurrence ranges at a with conclusion: Gamma | A | B
struct WithBlocks {
  int g, a, b;
  std::string label;

  bool in_a(int k) const { return k >= g && k < g + a; }
  bool in_b(int k) const { return k >= g + a; }
  int to_left(int k) const { return k; }
  int to_right(int k) const { return k < g ? k : k - a; }
};

WithBlocks with_blocks(const MallProof& p) {
  WithBlocks bl;
  bl.a = p.left->conclusion.back()->atoms;
  bl.b = p.right->conclusion.back()->atoms;
  bl.g = mall_atom_count(p.left->conclusion) - bl.a;
  bl.label = p.name;
  return bl;
}

PairMap mall_bdt_rec(const MallProof& p) {
  switch (p.rule) {
    case MallRule::Ax:
      return {{occ_pair(0, 1), leaf(1)}};
    case MallRule::Par:
    case MallRule::PlusL:
    case MallRule::PlusR:
    case MallRule::Ex: {
      std::vector<int> emb = mall_premise_embedding(p, 0);
      PairMap out;
      for (const auto& [pr, t] : mall_bdt_rec(*p.left)) {
        out.emplace(occ_pair(emb[pr.a], emb[pr.b]), t);
      }
      return out;
    }
    case MallRule::Tensor: {
      std::vector<int> le = mall_premise_embedding(p, 0);
      std::vector<int> re = mall_premise_embedding(p, 1);
      PairMap out;
      for (const auto& [pr, t] : mall_bdt_rec(*p.left)) {
        out.emplace(occ_pair(le[pr.a], le[pr.b]), t);
      }
      for (const auto& [pr, t] : mall_bdt_rec(*p.right)) {
        out.emplace(occ_pair(re[pr.a], re[pr.b]), t);
      }
      return out;
    }
    case MallRule::With: {
      WithBlocks bl = with_blocks(p);
      PairMap lmap = mall_bdt_rec(*p.left);
      PairMap rmap = mall_bdt_rec(*p.right);
      PairMap out;
      int total = bl.g + bl.a + bl.b;
      for (int x = 0; x < total; ++x) {
        for (int y = x + 1; y < total; ++y) {
          bool touch_a = bl.in_a(x) || bl.in_a(y);
          bool touch_b = bl.in_b(x) || bl.in_b(y);
          if (touch_a && touch_b) continue;
          OccPair pr{x, y};
          if (touch_a) {
            out.emplace(pr, node(bl.label, at_or_zero(lmap, occ_pair(x, y)), zero_leaf()));
          } else if (touch_b) {
            out.emplace(pr, node(bl.label, zero_leaf(),
                                 at_or_zero(rmap, occ_pair(bl.to_right(x), bl.to_right(y)))));
          } else {
            out.emplace(pr, node(bl.label, at_or_zero(lmap, occ_pair(x, y)),
                                 at_or_zero(rmap, occ_pair(x, y))));
          }
        }
      }
      return out;
    }
  }
  throw Error("unknown rule");
}

Slice reindex_slice(const Slice& s, const std::vector<int>& emb) {
  Slice out;
  for (OccPair pr : s) out.insert(occ_pair(emb[pr.a], emb[pr.b]));
  return out;
}

std::set<Slice> mall_slicing_rec(const MallProof& p) {
  switch (p.rule) {
    case MallRule::Ax:
      return {Slice{occ_pair(0, 1)}};
    case MallRule::Par:
    case MallRule::PlusL:
    case MallRule::PlusR:
    case MallRule::Ex: {
      std::vector<int> emb = mall_premise_embedding(p, 0);
      std::set<Slice> out;
      for (const Slice& s : mall_slicing_rec(*p.left)) out.insert(reindex_slice(s, emb));
      return out;
    }
    case MallRule::Tensor: {
      std::vector<int> le = mall_premise_embedding(p, 0);
      std::vector<int> re = mall_premise_embedding(p, 1);
      std::set<Slice> out;
      for (const Slice& a : mall_slicing_rec(*p.left)) {
        Slice ra = reindex_slice(a, le);
        for (const Slice& b : mall_slicing_rec(*p.right)) {
          Slice u = ra;
          for (OccPair pr : reindex_slice(b, re)) u.insert(pr);
          out.insert(std::move(u));
          if (out.size() > kMaxSlices) {
            throw BudgetError("explicit slicing exceeds the slice budget");
          }
        }
      }
      return out;
    }
    case MallRule::With: {
      std::vector<int> le = mall_premise_embedding(p, 0);
      std::vector<int> re = mall_premise_embedding(p, 1);
      std::set<Slice> out;
      for (const Slice& s : mall_slicing_rec(*p.left)) out.insert(reindex_slice(s, le));
      for (const Slice& s : mall_slicing_rec(*p.right)) out.insert(reindex_slice(s, re));
      return out;
    }
  }
  throw Error("unknown rule");
}

void require_valid(const MallProofPtr& p, const char* side) {
  CheckResult c = check_mall_proof(p);
  if (!c.ok) throw Error(std::string(side) + " proof is ill-formed: " + c.message);
}

}  // namespace

BdtPtr MallBdtSlicing::at(OccPair pr) const { return at_or_zero(entries, pr); }

MallBdtSlicing mall_bdt_slicing(const MallProofPtr& p) {
  if (!p || !p->has_conclusion) throw Error("proof conclusions not inferred");
  return {p->conclusion, mall_bdt_rec(*p)};
}

MallSlicing mall_slicing(const MallProofPtr& p) {
  if (!p || !p->has_conclusion) throw Error("proof conclusions not inferred");
  return {p->conclusion, mall_slicing_rec(*p)};
}

MallSlicing mall_expand(const MallBdtSlicing& bs, int budget) {
  if (budget < 0) budget = oracle_budget();
  std::set<std::string> vars = pair_map_vars(bs.entries);
  if (static_cast<int>(vars.size()) > budget) {
    throw BudgetError("expanding over " + std::to_string(vars.size()) +
                      " variables exceeds the budget of " + std::to_string(budget));
  }
  std::vector<std::string> order(vars.begin(), vars.end());
  MallSlicing out{bs.sequent, {}};
  Valuation v;
  for (std::uint64_t mask = 0; mask < (1ull << order.size()); ++mask) {
    for (std::size_t i = 0; i < order.size(); ++i) v[order[i]] = (mask >> i) & 1;
    Slice sl;
    for (const auto& [pr, t] : bs.entries) {
      if (eval(*t, v)) sl.insert(pr);
    }
    out.slices.insert(std::move(sl));
  }
  return out;
}

EquivVerdict mall_equiv(const MallProofPtr& p, const MallProofPtr& q) {
  require_valid(p, "left");
  require_valid(q, "right");
  if (!mall_sequent_equal(p->conclusion, q->conclusion)) {
    throw Error("proofs conclude different sequents: '" + show_mall_sequent(p->conclusion) +
                "' vs '" + show_mall_sequent(q->conclusion) + "'");
  }
  MallBdtSlicing bp = mall_bdt_slicing(p);
  MallBdtSlicing bq = mall_bdt_slicing(q);
  std::set<OccPair> pairs;
  for (const auto& [pr, t] : bp.entries) pairs.insert(pr);
  for (const auto& [pr, t] : bq.entries) pairs.insert(pr);
  for (OccPair pr : pairs) {
    BdtEquivResult r = equiv(bp.at(pr), bq.at(pr));
    if (!r.equivalent) {
      return {false, EquivWitness{pr, r.witness->first, r.witness->second}};
    }
  }
  return {true, std::nullopt};
}

bool mall_equiv_oracle(const MallProofPtr& p, const MallProofPtr& q) {
  require_valid(p, "left");
  require_valid(q, "right");
  if (!mall_sequent_equal(p->conclusion, q->conclusion)) {
    throw Error("proofs conclude different sequents: '" + show_mall_sequent(p->conclusion) +
                "' vs '" + show_mall_sequent(q->conclusion) + "'");
  }
  return mall_slicing(p).slices == mall_slicing(q).slices;
}

namespace {

MallFormulaPtr parse_mall_formula_at(detail::Cursor& c) {
  if (c.try_consume('~')) {
    std::size_t at = c.pos;
    std::string name = c.ident();
    if (!valid_atom_name(name)) throw ParseError("invalid atom name '" + name + "'", at);
    return mdual(name);
  }
  if (c.try_consume('(')) {
    MallFormulaPtr l = parse_mall_formula_at(c);
    MallFormulaPtr out;
    if (c.try_consume('*')) {
      out = mtensor(std::move(l), parse_mall_formula_at(c));
    } else if (c.try_consume('@')) {
      out = mpar(std::move(l), parse_mall_formula_at(c));
    } else if (c.try_consume('+') || c.try_consume('&')) {
      bool is_plus = c.text[c.pos - 1] == '+';
      c.expect('[');
      std::string label = c.label();
      c.expect(']');
      MallFormulaPtr r = parse_mall_formula_at(c);
      out = is_plus ? mplus(label, std::move(l), std::move(r))
                    : mwith(label, std::move(l), std::move(r));
    } else {
      c.fail("expected '*', '@', '+[' or '&['");
    }
    c.expect(')');
    return out;
  }
  std::size_t at = c.pos;
  std::string name = c.ident();
  if (!valid_atom_name(name)) throw ParseError("invalid atom name '" + name + "'", at);
  return matom(name);
}

MallProofPtr raw_node(MallRule rule, std::string name, int i, int j, MallFormulaPtr formula,
                      MallProofPtr left, MallProofPtr right) {
  return std::make_shared<MallProof>(MallProof{rule, std::move(name), i, j, std::move(formula),
                                               std::move(left), std::move(right), {}, false});
}

MallProofPtr parse_mall_proof_at(detail::Cursor& c) {
  c.expect('(');
  std::size_t at = c.pos;
  std::string head = c.ident();
  MallProofPtr out;
  if (head == "ax") {
    out = raw_node(MallRule::Ax, c.ident(), 0, 0, nullptr, nullptr, nullptr);
  } else if (head == "tensor") {
    MallProofPtr l = parse_mall_proof_at(c);
    MallProofPtr r = parse_mall_proof_at(c);
    out = raw_node(MallRule::Tensor, "", 0, 0, nullptr, std::move(l), std::move(r));
  } else if (head == "par") {
    out = raw_node(MallRule::Par, "", 0, 0, nullptr, parse_mall_proof_at(c), nullptr);
  } else if (head == "plusL" || head == "plusR") {
    MallFormulaPtr f = parse_mall_formula_at(c);
    MallProofPtr l = parse_mall_proof_at(c);
    out = raw_node(head == "plusL" ? MallRule::PlusL : MallRule::PlusR, "", 0, 0, std::move(f),
                   std::move(l), nullptr);
  } else if (head == "with") {
    std::string label = c.label();
    MallProofPtr l = parse_mall_proof_at(c);
    MallProofPtr r = parse_mall_proof_at(c);
    out = raw_node(MallRule::With, label, 0, 0, nullptr, std::move(l), std::move(r));
  } else if (head == "ex") {
    int i = c.integer();
    int j = c.integer();
    out = raw_node(MallRule::Ex, "", i, j, nullptr, parse_mall_proof_at(c), nullptr);
  } else {
    throw ParseError("unknown rule '" + head + "'", at);
  }
  c.expect(')');
  return out;
}

void show_mall_formula_to(const MallFormula& f, std::ostringstream& out) {
  switch (f.kind) {
    case MallFormula::Kind::Atom:
      out << f.name;
      return;
    case MallFormula::Kind::DualAtom:
      out << '~' << f.name;
      return;
    default:
      break;
  }
  out << '(';
  show_mall_formula_to(*f.left, out);
  switch (f.kind) {
    case MallFormula::Kind::Tensor: out << " * "; break;
    case MallFormula::Kind::Par: out << " @ "; break;
    case MallFormula::Kind::Plus: out << " +[" << f.name << "] "; break;
    case MallFormula::Kind::With: out << " &[" << f.name << "] "; break;
    default: break;
  }
  show_mall_formula_to(*f.right, out);
  out << ')';
}

void show_mall_proof_to(const MallProof& p, std::ostringstream& out) {
  out << '(';
  switch (p.rule) {
    case MallRule::Ax:
      out << "ax " << p.name;
      break;
    case MallRule::Tensor:
      out << "tensor ";
      show_mall_proof_to(*p.left, out);
      out << ' ';
      show_mall_proof_to(*p.right, out);
      break;
    case MallRule::Par:
      out << "par ";
      show_mall_proof_to(*p.left, out);
      break;
    case MallRule::PlusL:
    case MallRule::PlusR:
      out << (p.rule == MallRule::PlusL ? "plusL " : "plusR ") << show_mall_formula(p.formula)
          << ' ';
      show_mall_proof_to(*p.left, out);
      break;
    case MallRule::With:
      out << "with " << p.name << ' ';
      show_mall_proof_to(*p.left, out);
      out << ' ';
      show_mall_proof_to(*p.right, out);
      break;
    case MallRule::Ex:
      out << "ex " << p.pos_i << ' ' << p.pos_j << ' ';
      show_mall_proof_to(*p.left, out);
      break;
  }
  out << ')';
}

}  // namespace

MallFormulaPtr parse_mall_formula(std::string_view text) {
  detail::Cursor c(text);
  MallFormulaPtr f = parse_mall_formula_at(c);
  c.expect_end();
  return f;
}

MallSequent parse_mall_sequent(std::string_view text) {
  detail::Cursor c(text);
  c.expect("|-");
  MallSequent s;
  s.push_back(parse_mall_formula_at(c));
  while (c.try_consume(',')) s.push_back(parse_mall_formula_at(c));
  c.expect_end();
  std::string dup = find_duplicate_mall_label(s);
  if (!dup.empty()) throw Error("duplicate label '" + dup + "' in sequent");
  return s;
}

MallProofPtr parse_mall_proof(std::string_view text) {
  detail::Cursor c(text);
  MallProofPtr p = parse_mall_proof_at(c);
  c.expect_end();
  return p;
}

std::string show_mall_formula(const MallFormula& f) {
  std::ostringstream out;
  show_mall_formula_to(f, out);
  return out.str();
}

std::string show_mall_sequent(const MallSequent& s) {
  std::ostringstream out;
  out << "|- ";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ", ";
    show_mall_formula_to(*s[i], out);
  }
  return out.str();
}

std::string show_mall_proof(const MallProof& p) {
  std::ostringstream out;
  show_mall_proof_to(p, out);
  return out.str();
}

}  // namespace malleq
