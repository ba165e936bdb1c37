#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "malleq/formula.hpp"

namespace malleq {

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

// Sequent rules: axioms on atoms, right and left implication, exchange,
// the two sum introductions on the right, and the labeled sum rule on
// the left (dplus). No cut, axioms are atomic.
enum class Rule { Ax, ImpR, ImpL, Ex, PlusL, PlusR, DPlus };

struct Proof {
  Rule rule;
  std::string name;     // Ax atom or DPlus label
  int pos_i = 0, pos_j = 0;  // Ex positions, 1-based
  FormulaPtr formula;   // PlusL / PlusR result formula
  ProofPtr left, right; // unary rules use left only
  Sequent conclusion;   // null succedent until inferred

  bool inferred() const { return conclusion.succedent != nullptr; }
};

// Rule constructors. Premises must already carry conclusions; each
// constructor checks its side conditions and throws ProofError.
ProofPtr ax(const std::string& atom_name);
ProofPtr imp_r(ProofPtr premise);
ProofPtr imp_l(ProofPtr left, ProofPtr right);
ProofPtr ex(int i, int j, ProofPtr premise);
ProofPtr plus_l(FormulaPtr result, ProofPtr premise);
ProofPtr plus_r(FormulaPtr result, ProofPtr premise);
ProofPtr dplus(const std::string& label, ProofPtr left, ProofPtr right);

int premise_count(Rule r);
int proof_size(const Proof& p);

// Fills in (and validates) every conclusion of a raw parsed tree.
ProofPtr infer_conclusion(const ProofPtr& raw);

struct CheckResult {
  bool ok;
  std::string message;  // empty when ok
};

// Re-derives every stored conclusion and compares. Accepts exactly the
// trees built by the rule constructors / infer_conclusion.
CheckResult check_proof(const ProofPtr& p);

// Nodes are addressed by the list of premise slots from the root
// (0 = left/only premise, 1 = right premise).
using NodePath = std::vector<int>;
ProofPtr node_at(const ProofPtr& root, const NodePath& path);
ProofPtr replace_at(const ProofPtr& root, const NodePath& path, ProofPtr subtree);

// Maps each atom occurrence of premise `slot` to its occurrence in the
// node's conclusion.
std::vector<int> premise_embedding(const Proof& node, int slot);
std::vector<int> premise_embedding(const ProofPtr& root, const NodePath& path, int slot);

// Rewrites an ImpR over an exchange over a dplus into a dplus of two
// ImpR proofs with the same conclusion. The argument must have shape
// ImpR(Ex(1,2, DPlus(x, _, _))) with a two-formula context at the dplus.
ProofPtr permute_impR_over_dplus(const ProofPtr& p);

// Rewrites ImpL(nu, DPlus(x, pi, mu)) into
// DPlus(x, ImpL(nu, pi), ImpL(nu, mu)), duplicating nu.
ProofPtr distribute_impL_over_dplus(const ProofPtr& p);

// Splices Ex(i,j, Ex(i,j, .)) above the node at `path`.
ProofPtr insert_identity_exchange(const ProofPtr& root, const NodePath& path, int i, int j);

// Swaps the two premises of the dplus at `path`; only allowed when the
// two disjuncts are syntactically equal, so the conclusion is unchanged.
ProofPtr swap_dplus_branches(const ProofPtr& root, const NodePath& path);

ProofPtr parse_proof(std::string_view text);  // raw, conclusions not inferred
std::string show_proof(const Proof& p);
inline std::string show_proof(const ProofPtr& p) { return show_proof(*p); }
std::string show_node_path(const NodePath& path);

}  // namespace malleq
