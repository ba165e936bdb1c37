#pragma once

#include <cstdint>
#include <optional>

#include "malleq/bdt.hpp"
#include "malleq/proof.hpp"
#include "malleq/reductions.hpp"

namespace malleq {

// xoshiro256** with splitmix64 seeding; identical streams on every
// platform for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  // uniform in [0, n), n > 0
  std::uint64_t below(std::uint64_t n);
  int bit() { return static_cast<int>(next() >> 63); }

 private:
  std::uint64_t s_[4];
};

struct GenConfig {
  std::uint64_t seed = 42;
  int var_budget = 4;
  int depth_budget = 4;
  int mutation_count = 3;
};

// A free tree over variables x1..x<var_budget>, freeness by
// construction: each path draws from the still-unused variables.
BdtPtr random_free_bdt(const GenConfig& cfg);

struct GeneratedPair {
  ProofPtr first, second;
  bool expected;  // equivalent?
};

// Builds a base proof, then either applies mutation_count
// equivalence-preserving rewrites (expected = true) or one verified
// inequivalence-injecting branch swap (expected = false). Unless
// forced, an rng draw picks the mode.
GeneratedPair equivalent_pair(const GenConfig& cfg, std::optional<bool> force = std::nullopt);

// A line over var_budget vertices (at least 4) with f and s sampled
// away from both endpoints, so both gadget reductions accept it.
OrdInstance random_line(const GenConfig& cfg);

}  // namespace malleq
