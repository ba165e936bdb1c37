#include "malleq/generators.hpp"

#include <algorithm>
#include <functional>

#include "malleq/encode.hpp"
#include "malleq/equiv.hpp"

namespace malleq {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Rng::next() {
  std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("empty range");
  return next() % n;
}

namespace {

BdtPtr random_tree_rec(Rng& rng, std::vector<std::string> avail, int depth_left) {
  if (depth_left <= 0 || avail.empty() || rng.below(4) == 0) {
    return leaf(rng.bit());
  }
  std::size_t pick = rng.below(avail.size());
  std::string var = avail[pick];
  avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(pick));
  BdtPtr lo = random_tree_rec(rng, avail, depth_left - 1);
  BdtPtr hi = random_tree_rec(rng, std::move(avail), depth_left - 1);
  return node(var, std::move(lo), std::move(hi));
}

}  // namespace

BdtPtr random_free_bdt(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  std::vector<std::string> avail;
  for (int i = 1; i <= cfg.var_budget; ++i) avail.push_back("x" + std::to_string(i));
  return random_tree_rec(rng, std::move(avail), cfg.depth_budget);
}

namespace {

// (a +[x] a) |- (a +[y] a) proved left-then-right; its branch swap is
// inequivalent, which makes it the fallback inequivalent pair
ProofPtr sum_template() {
  FormulaPtr goal = plus("y", atom("a"), atom("a"));
  return dplus("x", plus_l(goal, ax("a")), plus_r(goal, ax("a")));
}

// (a -o e) +[x] (a -o e) |- (a -o e), an ImpR over the sum rule
ProofPtr intro_template() {
  ProofPtr pi = imp_l(ax("a"), ax("e"));
  return imp_r(ex(1, 2, dplus("x", pi, pi)));
}

// e, (e -o e), ((e -o c) +[x] (e -o c)) |- c, an ImpL over the sum rule
ProofPtr chain_template() {
  ProofPtr pi = imp_l(ax("e"), ax("c"));
  return imp_l(ax("e"), dplus("x", pi, pi));
}

ProofPtr build_base(Rng& rng, const GenConfig& cfg) {
  switch (rng.below(4)) {
    case 0: {
      GenConfig sub = cfg;
      sub.seed = rng.next();
      sub.var_budget = std::min(cfg.var_budget, 5);
      sub.depth_budget = std::min(cfg.depth_budget, sub.var_budget);
      BdtPtr tree = random_free_bdt(sub);
      return encode_bdt(sub.var_budget, tree);
    }
    case 1: return sum_template();
    case 2: return intro_template();
    default: return chain_template();
  }
}

struct MutationSite {
  NodePath path;
  enum class Op { Insert, Permute, Distribute } op;
};

void collect_sites(const ProofPtr& node, NodePath& path, std::vector<MutationSite>& out) {
  if (node->conclusion.context.size() >= 2) {
    out.push_back({path, MutationSite::Op::Insert});
  }
  if (node->rule == Rule::ImpR && node->left->rule == Rule::Ex &&
      node->left->pos_i + node->left->pos_j == 3 && node->left->left->rule == Rule::DPlus &&
      node->left->left->conclusion.context.size() == 2) {
    out.push_back({path, MutationSite::Op::Permute});
  }
  if (node->rule == Rule::ImpL && node->right->rule == Rule::DPlus &&
      node->right->left->conclusion.context.size() >= 2) {
    out.push_back({path, MutationSite::Op::Distribute});
  }
  if (node->left) {
    path.push_back(0);
    collect_sites(node->left, path, out);
    path.pop_back();
  }
  if (node->right) {
    path.push_back(1);
    collect_sites(node->right, path, out);
    path.pop_back();
  }
}

ProofPtr apply_random_mutation(const ProofPtr& p, Rng& rng) {
  std::vector<MutationSite> sites;
  NodePath path;
  collect_sites(p, path, sites);
  if (sites.empty()) return p;
  const MutationSite& site = sites[rng.below(sites.size())];
  ProofPtr target = node_at(p, site.path);
  switch (site.op) {
    case MutationSite::Op::Insert: {
      int n = static_cast<int>(target->conclusion.context.size());
      int i = 1 + static_cast<int>(rng.below(n));
      int j = 1 + static_cast<int>(rng.below(n - 1));
      if (j >= i) ++j;
      return insert_identity_exchange(p, site.path, i, j);
    }
    case MutationSite::Op::Permute:
      return replace_at(p, site.path, permute_impR_over_dplus(target));
    case MutationSite::Op::Distribute:
      return replace_at(p, site.path, distribute_impL_over_dplus(target));
  }
  return p;
}

void collect_swap_sites(const ProofPtr& node, NodePath& path, std::vector<NodePath>& out) {
  if (node->rule == Rule::DPlus &&
      formula_equal(node->left->conclusion.context.back(),
                    node->right->conclusion.context.back())) {
    out.push_back(path);
  }
  if (node->left) {
    path.push_back(0);
    collect_swap_sites(node->left, path, out);
    path.pop_back();
  }
  if (node->right) {
    path.push_back(1);
    collect_swap_sites(node->right, path, out);
    path.pop_back();
  }
}

}  // namespace

GeneratedPair equivalent_pair(const GenConfig& cfg, std::optional<bool> force) {
  Rng rng(cfg.seed);
  bool want_equivalent = force ? *force : rng.below(2) == 0;
  ProofPtr base = build_base(rng, cfg);
  if (want_equivalent) {
    ProofPtr mutated = base;
    for (int k = 0; k < cfg.mutation_count; ++k) mutated = apply_random_mutation(mutated, rng);
    return {base, mutated, true};
  }
  std::vector<NodePath> sites;
  NodePath path;
  collect_swap_sites(base, path, sites);
  // visit candidate sites in rng order until a swap changes the slicing
  std::vector<std::size_t> order(sites.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  for (std::size_t k = order.size(); k > 1; --k) {
    std::swap(order[k - 1], order[rng.below(k)]);
  }
  for (std::size_t k : order) {
    ProofPtr swapped = swap_dplus_branches(base, sites[k]);
    if (!proof_equiv_oracle(base, swapped)) return {base, swapped, false};
  }
  ProofPtr fallback = sum_template();
  return {fallback, swap_dplus_branches(fallback, {}), false};
}

OrdInstance random_line(const GenConfig& cfg) {
  if (cfg.var_budget < 4) throw Error("a line instance needs at least 4 vertices");
  Rng rng(cfg.seed);
  int m = cfg.var_budget;
  std::vector<std::string> order;
  for (int i = 1; i <= m; ++i) order.push_back("v" + std::to_string(i));
  for (int i = m - 1; i > 0; --i) {
    std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  LineGraph g;
  for (int i = 0; i + 1 < m; ++i) g.edges.emplace_back(order[i], order[i + 1]);
  for (std::size_t i = g.edges.size() - 1; i > 0; --i) {
    std::swap(g.edges[i], g.edges[rng.below(i + 1)]);
  }
  // f and s land strictly between the endpoints
  int pf = 1 + static_cast<int>(rng.below(m - 2));
  int ps = 1 + static_cast<int>(rng.below(m - 3));
  if (ps >= pf) ++ps;
  return {std::move(g), order[pf], order[ps]};
}

}  // namespace malleq
