#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "malleq/equiv.hpp"
#include "malleq/slicing.hpp"

namespace malleq {

struct MallFormula;
using MallFormulaPtr = std::shared_ptr<const MallFormula>;

// One-sided formulas in negation normal form: duals live on atoms only,
// and both additive connectives carry labels (unique per sequent). The
// labels of the with connective act as the decision-tree variables.
struct MallFormula {
  enum class Kind { Atom, DualAtom, Tensor, Par, Plus, With };
  Kind kind;
  std::string name;  // atom name, or label for Plus / With
  MallFormulaPtr left, right;
  int atoms;
};

MallFormulaPtr matom(const std::string& name);
MallFormulaPtr mdual(const std::string& name);
MallFormulaPtr mtensor(MallFormulaPtr l, MallFormulaPtr r);
MallFormulaPtr mpar(MallFormulaPtr l, MallFormulaPtr r);
MallFormulaPtr mplus(const std::string& label, MallFormulaPtr l, MallFormulaPtr r);
MallFormulaPtr mwith(const std::string& label, MallFormulaPtr l, MallFormulaPtr r);

bool operator==(const MallFormula& a, const MallFormula& b);
inline bool operator!=(const MallFormula& a, const MallFormula& b) { return !(a == b); }
bool mall_formula_equal(const MallFormulaPtr& a, const MallFormulaPtr& b);

using MallSequent = std::vector<MallFormulaPtr>;

bool mall_sequent_equal(const MallSequent& a, const MallSequent& b);
int mall_atom_count(const MallSequent& s);
std::string find_duplicate_mall_label(const MallSequent& s);

enum class MallRule { Ax, Tensor, Par, PlusL, PlusR, With, Ex };

struct MallProof;
using MallProofPtr = std::shared_ptr<const MallProof>;

struct MallProof {
  MallRule rule;
  std::string name;  // Ax atom or With label
  int pos_i = 0, pos_j = 0;
  MallFormulaPtr formula;  // PlusL / PlusR result
  MallProofPtr left, right;
  MallSequent conclusion;
  bool has_conclusion = false;
};

// Rule constructors, mirroring the two-sided ones. Ax concludes
// |- ~a, a; par fuses the last two formulas; tensor joins the last
// formulas of its premises; with needs premises sharing their context.
MallProofPtr mall_ax(const std::string& atom_name);
MallProofPtr mall_tensor(MallProofPtr left, MallProofPtr right);
MallProofPtr mall_par(MallProofPtr premise);
MallProofPtr mall_plus_l(MallFormulaPtr result, MallProofPtr premise);
MallProofPtr mall_plus_r(MallFormulaPtr result, MallProofPtr premise);
MallProofPtr mall_with(const std::string& label, MallProofPtr left, MallProofPtr right);
MallProofPtr mall_ex(int i, int j, MallProofPtr premise);

MallProofPtr infer_mall_conclusion(const MallProofPtr& raw);
CheckResult check_mall_proof(const MallProofPtr& p);

std::vector<int> mall_premise_embedding(const MallProof& node, int slot);

struct MallBdtSlicing {
  MallSequent sequent;
  PairMap entries;

  BdtPtr at(OccPair pr) const;
};

struct MallSlicing {
  MallSequent sequent;
  std::set<Slice> slices;
};

MallBdtSlicing mall_bdt_slicing(const MallProofPtr& p);

// Explicit route, used as the oracle for the one-sided calculus.
MallSlicing mall_slicing(const MallProofPtr& p);

MallSlicing mall_expand(const MallBdtSlicing& bs, int budget = -1);

EquivVerdict mall_equiv(const MallProofPtr& p, const MallProofPtr& q);
bool mall_equiv_oracle(const MallProofPtr& p, const MallProofPtr& q);

MallFormulaPtr parse_mall_formula(std::string_view text);
MallSequent parse_mall_sequent(std::string_view text);
MallProofPtr parse_mall_proof(std::string_view text);  // raw

std::string show_mall_formula(const MallFormula& f);
inline std::string show_mall_formula(const MallFormulaPtr& f) { return show_mall_formula(*f); }
std::string show_mall_sequent(const MallSequent& s);
std::string show_mall_proof(const MallProof& p);
inline std::string show_mall_proof(const MallProofPtr& p) { return show_mall_proof(*p); }

}  // namespace malleq
