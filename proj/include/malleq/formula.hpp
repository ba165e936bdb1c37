#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "malleq/error.hpp"

namespace malleq {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Formulas of the implication/sum fragment. Atoms are lowercase
// identifiers; every sum carries a label that is unique within a sequent.
struct Formula {
  enum class Kind { Atom, Imp, Plus };
  Kind kind;
  std::string name;  // atom name (Atom) or label (Plus)
  FormulaPtr left, right;
  int atoms;  // cached leaf count
};

FormulaPtr atom(const std::string& name);
FormulaPtr imp(FormulaPtr l, FormulaPtr r);
FormulaPtr plus(const std::string& label, FormulaPtr l, FormulaPtr r);

bool operator==(const Formula& a, const Formula& b);
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

bool valid_atom_name(std::string_view s);
bool valid_label(std::string_view s);

// Context formulas in order, then one succedent. A default-constructed
// Sequent (null succedent) stands for "not yet inferred".
struct Sequent {
  std::vector<FormulaPtr> context;
  FormulaPtr succedent;
};

bool sequent_equal(const Sequent& a, const Sequent& b);

int atom_count(const Formula& f);
int atom_count(const Sequent& s);

// One atom occurrence. Indices are global and 0-based: context formulas
// left to right, then the succedent, leaves in-order within each formula.
// `place` is the 1-based context position, 0 for the succedent.
struct Occurrence {
  int index;
  std::string name;
  int place;
  std::vector<int> path;  // 0 = left branch, 1 = right branch
};

std::vector<Occurrence> occurrences(const Sequent& s);

// Index range [begin, end) of the atoms of context formula `place`
// (1-based; 0 = succedent).
std::pair<int, int> occurrence_block(const Sequent& s, int place);

// One sum subformula of a sequent, with the occurrence ranges of its
// two disjuncts and its antecedent/succedent polarity.
struct PlusSite {
  std::string label;
  bool negative;
  int left_begin, left_end;
  int right_begin, right_end;
};

std::vector<PlusSite> plus_sites(const Sequent& s);
std::set<std::string> sequent_labels(const Sequent& s);
std::set<std::string> negative_plus_labels(const Sequent& s);

// Empty when all sum labels are distinct, else one duplicated label.
std::string find_duplicate_label(const Sequent& s);
void validate_sequent(const Sequent& s);

FormulaPtr parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);

namespace detail {
struct Cursor;
}
// Consumes one formula off a shared cursor (used by the proof parser).
FormulaPtr parse_formula_prefix(detail::Cursor& c);

std::string show_formula(const Formula& f);
inline std::string show_formula(const FormulaPtr& f) { return show_formula(*f); }
std::string show_sequent(const Sequent& s);

}  // namespace malleq
