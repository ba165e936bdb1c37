#include "malleq/encode.hpp"

#include <algorithm>
#include <map>

namespace malleq {

namespace {

const char* kBaseAtom = "b";
const char* kBaseLabel = "b0";

std::string index_atom(int i) { return "a" + std::to_string(i); }

FormulaPtr base_sum() { return plus(kBaseLabel, atom(kBaseAtom), atom(kBaseAtom)); }

FormulaPtr tower(int k) {
  FormulaPtr f = atom(kBaseAtom);
  for (int i = 1; i <= k; ++i) f = imp(atom(index_atom(i)), f);
  return f;
}

struct Encoder {
  int n;
  std::vector<std::string> vars;
  std::map<std::string, int> index;  // variable name -> 1-based index

  Encoder(int n_, std::vector<std::string> vars_) : n(n_), vars(std::move(vars_)) {
    for (int i = 1; i <= n; ++i) {
      if (!index.emplace(vars[i - 1], i).second) {
        throw Error("duplicate variable '" + vars[i - 1] + "' in the universe");
      }
    }
  }

  ProofPtr leaf_tower(int bit, const std::set<int>& tested) const {
    ProofPtr cur = bit ? plus_l(base_sum(), ax(kBaseAtom)) : plus_r(base_sum(), ax(kBaseAtom));
    for (int k = 1; k <= n; ++k) {
      // bring the tower from the end of the context to the front
      for (int p = k - 1; p >= 1; --p) cur = ex(p, p + 1, cur);
      ProofPtr nu = tested.count(k)
                        ? ax(index_atom(k))
                        : dplus(vars[k - 1], ax(index_atom(k)), ax(index_atom(k)));
      cur = imp_l(std::move(nu), std::move(cur));
      // the grown tower went to position 2, send it back to the end
      for (int p = 2; p <= k; ++p) cur = ex(p, p + 1, cur);
      // file the new formula into its canonical slot
      int before = static_cast<int>(
          std::count_if(tested.begin(), tested.end(), [&](int i) { return i < k; }));
      int slot = tested.count(k) ? before + 1 : k;
      for (int p = 1; p < slot; ++p) cur = ex(p, p + 1, cur);
    }
    return cur;
  }

  ProofPtr encode(const BdtPtr& t, const std::set<int>& tested) const {
    if (t->is_leaf()) return leaf_tower(t->bit, tested);
    auto it = index.find(t->var);
    if (it == index.end()) throw Error("variable '" + t->var + "' is not in the universe");
    int k = it->second;
    std::set<int> inner = tested;
    inner.insert(k);
    ProofPtr q = encode(t->lo, inner);
    ProofPtr r = encode(t->hi, inner);
    // a_k sits among the tested atoms; move it past the tower to the end
    int tslot = static_cast<int>(
        std::count_if(inner.begin(), inner.end(), [&](int i) { return i <= k; }));
    for (int p = tslot; p <= n; ++p) {
      q = ex(p, p + 1, std::move(q));
      r = ex(p, p + 1, std::move(r));
    }
    ProofPtr cur = dplus(vars[k - 1], std::move(q), std::move(r));
    // the fresh sum returns from the end to its untested slot
    int slot = static_cast<int>(tested.size());
    for (int j = 1; j <= k; ++j) {
      if (!tested.count(j)) ++slot;
    }
    for (int p = n; p >= slot; --p) cur = ex(p, p + 1, std::move(cur));
    return cur;
  }
};

}  // namespace

Sequent cont_sequent(const EncodingContext& ctx) {
  Sequent s;
  for (int i = 1; i <= ctx.n; ++i) {
    if (ctx.tested.count(i)) s.context.push_back(atom(index_atom(i)));
  }
  for (int i = 1; i <= ctx.n; ++i) {
    if (!ctx.tested.count(i)) {
      s.context.push_back(plus(ctx.vars[i - 1], atom(index_atom(i)), atom(index_atom(i))));
    }
  }
  s.context.push_back(tower(ctx.n));
  s.succedent = base_sum();
  return s;
}

std::vector<std::string> free_vars_at(const BdtPtr& t, const NodePath& path) {
  std::vector<std::string> out;
  const Bdt* cur = t.get();
  for (int step : path) {
    if (cur->is_leaf() || (step != 0 && step != 1)) {
      throw Error("no tree node at path " + show_node_path(path));
    }
    out.push_back(cur->var);
    cur = step == 0 ? cur->lo.get() : cur->hi.get();
  }
  return out;
}

namespace {

void preorder_vars(const Bdt& t, std::vector<std::string>& order, std::set<std::string>& seen) {
  if (t.is_leaf()) return;
  if (seen.insert(t.var).second) order.push_back(t.var);
  preorder_vars(*t.lo, order, seen);
  preorder_vars(*t.hi, order, seen);
}

}  // namespace

std::vector<std::string> default_universe(int n, const BdtPtr& t) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  preorder_vars(*t, order, seen);
  if (static_cast<int>(order.size()) > n) {
    throw Error("tree uses " + std::to_string(order.size()) + " variables, universe holds " +
                std::to_string(n));
  }
  int next = 1;
  while (static_cast<int>(order.size()) < n) {
    std::string candidate = "x" + std::to_string(next++);
    if (candidate != kBaseLabel && !seen.count(candidate)) {
      order.push_back(candidate);
      seen.insert(candidate);
    }
  }
  return order;
}

namespace {

void validate_universe(const BdtPtr& t, const std::vector<std::string>& vars) {
  if (!is_free(*t)) throw Error("encoding needs a free decision tree");
  std::set<std::string> universe(vars.begin(), vars.end());
  if (universe.size() != vars.size()) throw Error("universe has duplicate variables");
  if (universe.count(kBaseLabel)) {
    throw Error(std::string("'") + kBaseLabel + "' is reserved and cannot name a variable");
  }
  for (const auto& v : vars) {
    if (!valid_label(v)) throw Error("invalid variable name '" + v + "'");
  }
  for (const auto& v : bdt_vars(*t)) {
    if (!universe.count(v)) throw Error("variable '" + v + "' is not in the universe");
  }
}

}  // namespace

ProofPtr encode_bdt(const BdtPtr& t, const std::vector<std::string>& vars) {
  validate_universe(t, vars);
  Encoder enc(static_cast<int>(vars.size()), vars);
  return enc.encode(t, {});
}

ProofPtr encode_bdt(int n, const BdtPtr& t) { return encode_bdt(t, default_universe(n, t)); }

int occ_alpha_left(int n, int i) {
  if (i < 1 || i > n) throw Error("index out of range");
  return 2 * (i - 1);
}

int occ_alpha_right(int n, int i) {
  if (i < 1 || i > n) throw Error("index out of range");
  return 2 * i - 1;
}

int occ_alpha_imp(int n, int i) {
  if (i < 1 || i > n) throw Error("index out of range");
  return 3 * n - i;
}

int occ_beta_imp(int n) { return 3 * n; }
int occ_beta_left(int n) { return 3 * n + 1; }
int occ_beta_right(int n) { return 3 * n + 2; }

RepresentationReport check_representation(const BdtPtr& t, const std::vector<std::string>& vars) {
  int n = static_cast<int>(vars.size());
  ProofPtr p = encode_bdt(t, vars);
  BdtSlicing bs = bdt_slicing(p);
  RepresentationReport report{true, {}};
  auto add = [&](std::string what, bool ok) {
    report.ok = report.ok && ok;
    report.checks.push_back({std::move(what), ok});
  };
  add("tree at the base pair (structural)",
      bdt_equal(bs.at(occ_pair(occ_beta_imp(n), occ_beta_left(n))), t));
  add("negated tree at the twin pair (structural)",
      bdt_equal(bs.at(occ_pair(occ_beta_imp(n), occ_beta_right(n))), negate(t)));
  for (int i = 1; i <= n; ++i) {
    BdtPtr test1 = node(vars[i - 1], leaf(0), leaf(1));
    BdtPtr test0 = node(vars[i - 1], leaf(1), leaf(0));
    add("variable " + vars[i - 1] + " left pair (equivalence)",
        equiv(bs.at(occ_pair(occ_alpha_left(n, i), occ_alpha_imp(n, i))), test0).equivalent);
    add("variable " + vars[i - 1] + " right pair (equivalence)",
        equiv(bs.at(occ_pair(occ_alpha_right(n, i), occ_alpha_imp(n, i))), test1).equivalent);
  }
  return report;
}

RepresentationReport check_representation(int n, const BdtPtr& t) {
  return check_representation(t, default_universe(n, t));
}

}  // namespace malleq
