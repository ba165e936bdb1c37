#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "malleq/error.hpp"

namespace malleq {

struct Bdt;
using BdtPtr = std::shared_ptr<const Bdt>;

// Binary decision tree. Leaves hold a bit; inner nodes test a variable,
// `lo` is the branch taken when the variable is 0, `hi` when it is 1.
struct Bdt {
  std::string var;  // empty at leaves
  int bit = 0;
  BdtPtr lo, hi;

  bool is_leaf() const { return !lo; }
};

BdtPtr leaf(int bit);
BdtPtr node(const std::string& var, BdtPtr lo, BdtPtr hi);

bool operator==(const Bdt& a, const Bdt& b);
inline bool operator!=(const Bdt& a, const Bdt& b) { return !(a == b); }
bool bdt_equal(const BdtPtr& a, const BdtPtr& b);

using Valuation = std::map<std::string, int>;

int eval(const Bdt& t, const Valuation& v);
BdtPtr negate(const BdtPtr& t);

// A tree is free when no root-to-leaf path tests a variable twice.
bool is_free(const Bdt& t);

std::set<std::string> bdt_vars(const Bdt& t);
int bdt_size(const Bdt& t);  // node count, leaves included
int bdt_depth(const Bdt& t);

// A leaf together with the branch decisions leading to it, root first.
struct LeafPath {
  int value;
  std::vector<std::pair<std::string, int>> steps;
};

std::vector<LeafPath> leaves(const BdtPtr& t);

// Paths are compatible when no variable is tested with opposite
// branches in the two of them.
bool compatible(const LeafPath& a, const LeafPath& b);

struct BdtEquivResult {
  bool equivalent;
  // on inequivalence, a compatible pair of leaves with opposite values
  std::optional<std::pair<LeafPath, LeafPath>> witness;
};

// Leaf-scanning equivalence decision; both trees must be free.
BdtEquivResult equiv(const BdtPtr& a, const BdtPtr& b);

// Truth-table comparison over the union of the variables; refuses to
// enumerate more than `budget` variables (default oracle_budget()).
bool equiv_oracle(const BdtPtr& a, const BdtPtr& b, int budget = -1);

// 24 unless the MALLEQ_ORACLE_BUDGET environment variable overrides it.
int oracle_budget();

BdtPtr parse_bdt(std::string_view text);
std::string show_bdt(const Bdt& t);
inline std::string show_bdt(const BdtPtr& t) { return show_bdt(*t); }
std::string show_leaf_path(const LeafPath& p);

}  // namespace malleq
