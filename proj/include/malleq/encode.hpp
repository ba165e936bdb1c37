#pragma once

#include <set>
#include <string>
#include <vector>

#include "malleq/bdt.hpp"
#include "malleq/proof.hpp"
#include "malleq/slicing.hpp"

namespace malleq {

// Context shape shared by every stage of an encoding over n variables:
// atoms a_i for the already-tested indices (ascending), labeled sums
// (a_j +[var_j] a_j) for the untested ones (ascending), then the
// implication tower F_n, proving the succedent sum (b +[b0] b).
struct EncodingContext {
  int n;
  std::vector<std::string> vars;  // vars[i-1] is the label of index i
  std::set<int> tested;           // subset of 1..n
};

Sequent cont_sequent(const EncodingContext& ctx);

// Variables tested on the way from the root to `path` (branch steps,
// 0 = low, 1 = high), root first; the node's own variable excluded.
std::vector<std::string> free_vars_at(const BdtPtr& t, const NodePath& path);

// Maps the tree's variables to indices 1..n in first-occurrence
// preorder order, padding with fresh names up to n entries.
std::vector<std::string> default_universe(int n, const BdtPtr& t);

// Turns a free decision tree into a proof of cont(n, {}) |- (b +[b0] b).
ProofPtr encode_bdt(int n, const BdtPtr& t);
ProofPtr encode_bdt(const BdtPtr& t, const std::vector<std::string>& vars);

// Atom occurrence indices in cont(n, {}) |- (b +[b0] b), 1 <= i <= n.
int occ_alpha_left(int n, int i);
int occ_alpha_right(int n, int i);
int occ_alpha_imp(int n, int i);
int occ_beta_imp(int n);
int occ_beta_left(int n);
int occ_beta_right(int n);

struct RepresentationCheck {
  std::string what;
  bool ok;
};

struct RepresentationReport {
  bool ok;
  std::vector<RepresentationCheck> checks;
};

// Confirms that the encoding's tree slicing stores the input tree at
// the base pair (and its negation at the twin pair) structurally, and
// one-variable tests at the tower pairs up to equivalence.
RepresentationReport check_representation(int n, const BdtPtr& t);
RepresentationReport check_representation(const BdtPtr& t, const std::vector<std::string>& vars);

}  // namespace malleq
