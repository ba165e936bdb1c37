#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "malleq/bdt.hpp"
#include "malleq/proof.hpp"

namespace malleq {

// Directed graph given by its edge list; a valid instance is a single
// line: one begin vertex (in 0, out 1), one exit (in 1, out 0), and
// in/out degree 1 everywhere else.
struct LineGraph {
  std::vector<std::pair<std::string, std::string>> edges;
};

LineGraph parse_line_graph(std::string_view text);
std::string show_line_graph(const LineGraph& g);

// Vertices from begin to exit; throws when the graph is not a line.
std::vector<std::string> line_order(const LineGraph& g);

// Order decision problem: does f come strictly before s on the line?
struct OrdInstance {
  LineGraph graph;
  std::string f, s;
};

bool ord_solve(const OrdInstance& inst);

// Two proofs of a fixed 8-atom sequent that are equivalent exactly when
// f precedes s. Requires the begin vertex to be neither f nor s.
std::pair<ProofPtr, ProofPtr> ord_to_proof_pair(const OrdInstance& inst);

// Two free decision trees (three rewired copies of the line under a
// two-variable selector) equivalent exactly when f precedes s.
// Requires begin and exit to be neither f nor s, and rejects vertex
// sets containing the reserved selector names "x" and "y".
std::pair<BdtPtr, BdtPtr> ord_to_bdt_pair(const OrdInstance& inst);

}  // namespace malleq
