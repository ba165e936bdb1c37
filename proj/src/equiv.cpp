#include "malleq/equiv.hpp"

#include <sstream>

namespace malleq {

namespace {

void require_comparable(const ProofPtr& p, const ProofPtr& q) {
  CheckResult cp = check_proof(p);
  if (!cp.ok) throw Error("left proof is ill-formed: " + cp.message);
  CheckResult cq = check_proof(q);
  if (!cq.ok) throw Error("right proof is ill-formed: " + cq.message);
  if (!sequent_equal(p->conclusion, q->conclusion)) {
    throw Error("proofs conclude different sequents: '" + show_sequent(p->conclusion) +
                "' vs '" + show_sequent(q->conclusion) + "'");
  }
}

}  // namespace

EquivVerdict proof_equiv(const ProofPtr& p, const ProofPtr& q) {
  require_comparable(p, q);
  BdtSlicing bp = bdt_slicing(p);
  BdtSlicing bq = bdt_slicing(q);
  // walk the union of the stored pairs in ascending order
  auto ip = bp.entries.begin();
  auto iq = bq.entries.begin();
  while (ip != bp.entries.end() || iq != bq.entries.end()) {
    OccPair pr;
    if (iq == bq.entries.end() || (ip != bp.entries.end() && ip->first < iq->first)) {
      pr = ip->first;
    } else if (ip == bp.entries.end() || iq->first < ip->first) {
      pr = iq->first;
    } else {
      pr = ip->first;
    }
    BdtEquivResult r = equiv(bp.at(pr), bq.at(pr));
    if (!r.equivalent) {
      return {false, EquivWitness{pr, r.witness->first, r.witness->second}};
    }
    if (ip != bp.entries.end() && ip->first == pr) ++ip;
    if (iq != bq.entries.end() && iq->first == pr) ++iq;
  }
  return {true, std::nullopt};
}

bool proof_equiv_oracle(const ProofPtr& p, const ProofPtr& q) {
  require_comparable(p, q);
  return slicing(p).slices == slicing(q).slices;
}

std::string show_witness(const EquivWitness& w) {
  std::ostringstream out;
  out << "pair (" << w.pair.a << ',' << w.pair.b << "): left leaf " << show_leaf_path(w.left_leaf)
      << ", right leaf " << show_leaf_path(w.right_leaf);
  return out.str();
}

}  // namespace malleq
