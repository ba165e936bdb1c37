#pragma once

#include <map>
#include <set>
#include <string>

#include "malleq/bdt.hpp"
#include "malleq/proof.hpp"

namespace malleq {

// Unordered pair of atom occurrence indices, stored with a < b.
struct OccPair {
  int a, b;
  auto operator<=>(const OccPair&) const = default;
};

OccPair occ_pair(int i, int j);

using Slice = std::set<OccPair>;

// Explicit slicing: a set of slices over a fixed conclusion.
struct Slicing {
  Sequent sequent;
  std::set<Slice> slices;
};

// Sparse map from occurrence pairs to decision trees; pairs that are
// (structurally) the 0 leaf are not stored.
using PairMap = std::map<OccPair, BdtPtr>;

struct BdtSlicing {
  Sequent sequent;
  PairMap entries;

  BdtPtr at(OccPair pr) const;
};

// Intermediate explicit slicings larger than this raise BudgetError.
inline constexpr std::size_t kMaxSlices = 1u << 20;

Slicing slicing(const ProofPtr& p);
BdtSlicing bdt_slicing(const ProofPtr& p);

// Computes one entry of bdt_slicing(p) without materializing the map.
BdtPtr bdt_slicing_pair(const ProofPtr& p, OccPair pr);

// The pairs whose tree evaluates to 1 under v.
Slice valuation_slice(const BdtSlicing& bs, const Valuation& v);

std::set<std::string> pair_map_vars(const PairMap& entries);

// Every valuation slice, as an explicit slicing. Variable count is
// guarded like the truth-table oracle (budget < 0 uses oracle_budget()).
Slicing expand(const BdtSlicing& bs, int budget = -1);

std::string show_slice(const Slice& s);
std::string show_slicing(const Slicing& s);
std::string show_bdt_slicing(const BdtSlicing& bs);

}  // namespace malleq
