#include "malleq/slicing.hpp"

#include <sstream>

namespace malleq {

OccPair occ_pair(int i, int j) {
  if (i == j || i < 0 || j < 0) {
    throw Error("occurrence pair needs two distinct indices, got (" + std::to_string(i) + ", " +
                std::to_string(j) + ")");
  }
  return i < j ? OccPair{i, j} : OccPair{j, i};
}

namespace {

const BdtPtr& zero_leaf() {
  static const BdtPtr z = leaf(0);
  return z;
}

BdtPtr at_or_zero(const PairMap& m, OccPair pr) {
  auto it = m.find(pr);
  return it == m.end() ? zero_leaf() : it->second;
}

int context_atoms(const Sequent& s) {
  int n = 0;
  for (const auto& f : s.context) n += f->atoms;
  return n;
}

Slice reindex_slice(const Slice& s, const std::vector<int>& emb) {
  Slice out;
  for (OccPair pr : s) out.insert(occ_pair(emb[pr.a], emb[pr.b]));
  return out;
}

// occurrence ranges at a dplus conclusion: Gamma | A | B | C
struct DPlusBlocks {
  int g, a, b, c;
  std::string label;

  bool in_a(int k) const { return k >= g && k < g + a; }
  bool in_b(int k) const { return k >= g + a && k < g + a + b; }
  int to_left(int k) const { return k < g + a ? k : k - b; }   // undefined on B
  int to_right(int k) const { return k < g ? k : k - a; }      // undefined on A
  int total() const { return g + a + b + c; }
};

DPlusBlocks dplus_blocks(const Proof& p) {
  const Sequent& l = p.left->conclusion;
  const Sequent& r = p.right->conclusion;
  DPlusBlocks bl;
  bl.a = l.context.back()->atoms;
  bl.b = r.context.back()->atoms;
  bl.g = context_atoms(l) - bl.a;
  bl.c = l.succedent->atoms;
  bl.label = p.name;
  return bl;
}

std::set<Slice> slicing_rec(const Proof& p) {
  switch (p.rule) {
    case Rule::Ax:
      return {Slice{occ_pair(0, 1)}};
    case Rule::ImpR:
    case Rule::Ex:
    case Rule::PlusL:
    case Rule::PlusR: {
      std::vector<int> emb = premise_embedding(p, 0);
      std::set<Slice> out;
      for (const Slice& s : slicing_rec(*p.left)) out.insert(reindex_slice(s, emb));
      return out;
    }
    case Rule::ImpL: {
      std::vector<int> le = premise_embedding(p, 0);
      std::vector<int> re = premise_embedding(p, 1);
      std::set<Slice> ls = slicing_rec(*p.left);
      std::set<Slice> rs = slicing_rec(*p.right);
      std::set<Slice> out;
      for (const Slice& a : ls) {
        Slice ra = reindex_slice(a, le);
        for (const Slice& b : rs) {
          Slice u = ra;
          for (OccPair pr : reindex_slice(b, re)) u.insert(pr);
          out.insert(std::move(u));
          if (out.size() > kMaxSlices) throw BudgetError("explicit slicing exceeds the slice budget");
        }
      }
      return out;
    }
    case Rule::DPlus: {
      std::vector<int> le = premise_embedding(p, 0);
      std::vector<int> re = premise_embedding(p, 1);
      std::set<Slice> out;
      for (const Slice& s : slicing_rec(*p.left)) out.insert(reindex_slice(s, le));
      for (const Slice& s : slicing_rec(*p.right)) out.insert(reindex_slice(s, re));
      if (out.size() > kMaxSlices) throw BudgetError("explicit slicing exceeds the slice budget");
      return out;
    }
  }
  throw Error("unknown rule");
}

PairMap bdt_slicing_rec(const Proof& p) {
  switch (p.rule) {
    case Rule::Ax:
      return {{occ_pair(0, 1), leaf(1)}};
    case Rule::ImpR:
    case Rule::Ex:
    case Rule::PlusL:
    case Rule::PlusR: {
      std::vector<int> emb = premise_embedding(p, 0);
      PairMap out;
      for (const auto& [pr, t] : bdt_slicing_rec(*p.left)) {
        out.emplace(occ_pair(emb[pr.a], emb[pr.b]), t);
      }
      return out;
    }
    case Rule::ImpL: {
      std::vector<int> le = premise_embedding(p, 0);
      std::vector<int> re = premise_embedding(p, 1);
      PairMap out;
      for (const auto& [pr, t] : bdt_slicing_rec(*p.left)) {
        out.emplace(occ_pair(le[pr.a], le[pr.b]), t);
      }
      for (const auto& [pr, t] : bdt_slicing_rec(*p.right)) {
        out.emplace(occ_pair(re[pr.a], re[pr.b]), t);
      }
      return out;
    }
    case Rule::DPlus: {
      DPlusBlocks bl = dplus_blocks(p);
      PairMap lmap = bdt_slicing_rec(*p.left);
      PairMap rmap = bdt_slicing_rec(*p.right);
      PairMap out;
      for (int x = 0; x < bl.total(); ++x) {
        for (int y = x + 1; y < bl.total(); ++y) {
          bool touch_a = bl.in_a(x) || bl.in_a(y);
          bool touch_b = bl.in_b(x) || bl.in_b(y);
          if (touch_a && touch_b) continue;  // a cross pair stays 0
          OccPair pr{x, y};
          if (touch_a) {
            out.emplace(pr, node(bl.label, at_or_zero(lmap, occ_pair(bl.to_left(x), bl.to_left(y))),
                                 zero_leaf()));
          } else if (touch_b) {
            out.emplace(pr, node(bl.label, zero_leaf(),
                                 at_or_zero(rmap, occ_pair(bl.to_right(x), bl.to_right(y)))));
          } else {
            out.emplace(pr, node(bl.label, at_or_zero(lmap, occ_pair(bl.to_left(x), bl.to_left(y))),
                                 at_or_zero(rmap, occ_pair(bl.to_right(x), bl.to_right(y)))));
          }
        }
      }
      return out;
    }
  }
  throw Error("unknown rule");
}

BdtPtr bdt_slicing_pair_rec(const Proof& p, OccPair pr) {
  switch (p.rule) {
    case Rule::Ax:
      return leaf(1);  // (0,1) is the only pair of an axiom
    case Rule::ImpR:
      return bdt_slicing_pair_rec(*p.left, pr);
    case Rule::Ex: {
      std::vector<int> emb = premise_embedding(p, 0);
      std::vector<int> inv(emb.size());
      for (std::size_t k = 0; k < emb.size(); ++k) inv[emb[k]] = static_cast<int>(k);
      return bdt_slicing_pair_rec(*p.left, occ_pair(inv[pr.a], inv[pr.b]));
    }
    case Rule::PlusL: {
      int mapped = atom_count(p.left->conclusion);
      if (pr.a >= mapped || pr.b >= mapped) return zero_leaf();
      return bdt_slicing_pair_rec(*p.left, pr);
    }
    case Rule::PlusR: {
      int g = context_atoms(p.left->conclusion);
      int a = p.formula->left->atoms;
      auto back = [&](int k) { return k < g ? k : k - a; };
      bool dropped = (pr.a >= g && pr.a < g + a) || (pr.b >= g && pr.b < g + a);
      if (dropped) return zero_leaf();
      return bdt_slicing_pair_rec(*p.left, occ_pair(back(pr.a), back(pr.b)));
    }
    case Rule::ImpL: {
      int ga = atom_count(p.left->conclusion);
      if (pr.b < ga) return bdt_slicing_pair_rec(*p.left, pr);
      if (pr.a >= ga) return bdt_slicing_pair_rec(*p.right, occ_pair(pr.a - ga, pr.b - ga));
      return zero_leaf();
    }
    case Rule::DPlus: {
      DPlusBlocks bl = dplus_blocks(p);
      bool touch_a = bl.in_a(pr.a) || bl.in_a(pr.b);
      bool touch_b = bl.in_b(pr.a) || bl.in_b(pr.b);
      if (touch_a && touch_b) return zero_leaf();
      if (touch_a) {
        return node(bl.label,
                    bdt_slicing_pair_rec(*p.left, occ_pair(bl.to_left(pr.a), bl.to_left(pr.b))),
                    zero_leaf());
      }
      if (touch_b) {
        return node(bl.label, zero_leaf(),
                    bdt_slicing_pair_rec(*p.right, occ_pair(bl.to_right(pr.a), bl.to_right(pr.b))));
      }
      return node(bl.label,
                  bdt_slicing_pair_rec(*p.left, occ_pair(bl.to_left(pr.a), bl.to_left(pr.b))),
                  bdt_slicing_pair_rec(*p.right, occ_pair(bl.to_right(pr.a), bl.to_right(pr.b))));
    }
  }
  throw Error("unknown rule");
}

void require_checked(const ProofPtr& p) {
  if (!p || !p->inferred()) throw Error("proof conclusions not inferred");
}

}  // namespace

BdtPtr BdtSlicing::at(OccPair pr) const { return at_or_zero(entries, pr); }

Slicing slicing(const ProofPtr& p) {
  require_checked(p);
  return {p->conclusion, slicing_rec(*p)};
}

BdtSlicing bdt_slicing(const ProofPtr& p) {
  require_checked(p);
  return {p->conclusion, bdt_slicing_rec(*p)};
}

BdtPtr bdt_slicing_pair(const ProofPtr& p, OccPair pr) {
  require_checked(p);
  int n = atom_count(p->conclusion);
  if (pr.a < 0 || pr.b >= n || pr.a >= pr.b) {
    throw Error("occurrence pair (" + std::to_string(pr.a) + ", " + std::to_string(pr.b) +
                ") out of range for a sequent with " + std::to_string(n) + " atoms");
  }
  return bdt_slicing_pair_rec(*p, pr);
}

Slice valuation_slice(const BdtSlicing& bs, const Valuation& v) {
  Slice out;
  for (const auto& [pr, t] : bs.entries) {
    if (eval(*t, v)) out.insert(pr);
  }
  return out;
}

std::set<std::string> pair_map_vars(const PairMap& entries) {
  std::set<std::string> out;
  for (const auto& [pr, t] : entries) {
    for (const auto& v : bdt_vars(*t)) out.insert(v);
  }
  return out;
}

Slicing expand(const BdtSlicing& bs, int budget) {
  if (budget < 0) budget = oracle_budget();
  std::set<std::string> vars = pair_map_vars(bs.entries);
  if (static_cast<int>(vars.size()) > budget) {
    throw BudgetError("expanding over " + std::to_string(vars.size()) +
                      " variables exceeds the budget of " + std::to_string(budget));
  }
  std::vector<std::string> order(vars.begin(), vars.end());
  Slicing out{bs.sequent, {}};
  Valuation v;
  for (std::uint64_t mask = 0; mask < (1ull << order.size()); ++mask) {
    for (std::size_t i = 0; i < order.size(); ++i) v[order[i]] = (mask >> i) & 1;
    out.slices.insert(valuation_slice(bs, v));
  }
  return out;
}

std::string show_slice(const Slice& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (OccPair pr : s) {
    if (!first) out << ',';
    first = false;
    out << '(' << pr.a << ',' << pr.b << ')';
  }
  out << '}';
  return out.str();
}

std::string show_slicing(const Slicing& s) {
  std::ostringstream out;
  for (const Slice& sl : s.slices) out << show_slice(sl) << '\n';
  return out.str();
}

std::string show_bdt_slicing(const BdtSlicing& bs) {
  std::ostringstream out;
  for (const auto& [pr, t] : bs.entries) {
    out << '(' << pr.a << ',' << pr.b << "): " << show_bdt(*t) << '\n';
  }
  return out.str();
}

}  // namespace malleq
