#pragma once

#include <optional>

#include "malleq/slicing.hpp"

namespace malleq {

// First occurrence pair (in ascending order) whose two trees differ,
// with the compatible opposite-value leaves that separate them.
struct EquivWitness {
  OccPair pair;
  LeafPath left_leaf, right_leaf;
};

struct EquivVerdict {
  bool equivalent;
  std::optional<EquivWitness> witness;
};

// Decides proof equivalence by comparing the two decision-tree
// slicings pair by pair. Conclusions must match syntactically.
EquivVerdict proof_equiv(const ProofPtr& p, const ProofPtr& q);

// Brute-force route: computes and compares the explicit slicings.
bool proof_equiv_oracle(const ProofPtr& p, const ProofPtr& q);

std::string show_witness(const EquivWitness& w);

}  // namespace malleq
