#include "malleq/bdt.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "malleq/parse_util.hpp"

namespace malleq {

BdtPtr leaf(int bit) {
  if (bit != 0 && bit != 1) throw Error("leaf value must be 0 or 1");
  return std::make_shared<Bdt>(Bdt{"", bit, nullptr, nullptr});
}

BdtPtr node(const std::string& var, BdtPtr lo, BdtPtr hi) {
  if (var.empty() || !detail::Cursor::ident_start(var[0]) ||
      !std::all_of(var.begin(), var.end(), detail::Cursor::ident_char)) {
    throw Error("invalid variable name '" + var + "'");
  }
  if (!lo || !hi) throw Error("node needs two branches");
  return std::make_shared<Bdt>(Bdt{var, 0, std::move(lo), std::move(hi)});
}

bool operator==(const Bdt& a, const Bdt& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.bit == b.bit;
  return a.var == b.var && *a.lo == *b.lo && *a.hi == *b.hi;
}

bool bdt_equal(const BdtPtr& a, const BdtPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

int eval(const Bdt& t, const Valuation& v) {
  if (t.is_leaf()) return t.bit;
  auto it = v.find(t.var);
  if (it == v.end()) throw Error("unbound variable '" + t.var + "'");
  if (it->second != 0 && it->second != 1) throw Error("valuation of '" + t.var + "' must be 0 or 1");
  return it->second ? eval(*t.hi, v) : eval(*t.lo, v);
}

BdtPtr negate(const BdtPtr& t) {
  if (t->is_leaf()) return leaf(1 - t->bit);
  return node(t->var, negate(t->lo), negate(t->hi));
}

namespace {

bool is_free_rec(const Bdt& t, std::set<std::string>& on_path) {
  if (t.is_leaf()) return true;
  if (!on_path.insert(t.var).second) return false;
  bool ok = is_free_rec(*t.lo, on_path) && is_free_rec(*t.hi, on_path);
  on_path.erase(t.var);
  return ok;
}

void vars_rec(const Bdt& t, std::set<std::string>& out) {
  if (t.is_leaf()) return;
  out.insert(t.var);
  vars_rec(*t.lo, out);
  vars_rec(*t.hi, out);
}

void leaves_rec(const Bdt& t, std::vector<std::pair<std::string, int>>& steps,
                std::vector<LeafPath>& out) {
  if (t.is_leaf()) {
    out.push_back({t.bit, steps});
    return;
  }
  steps.emplace_back(t.var, 0);
  leaves_rec(*t.lo, steps, out);
  steps.back().second = 1;
  leaves_rec(*t.hi, steps, out);
  steps.pop_back();
}

}  // namespace

bool is_free(const Bdt& t) {
  std::set<std::string> on_path;
  return is_free_rec(t, on_path);
}

std::set<std::string> bdt_vars(const Bdt& t) {
  std::set<std::string> out;
  vars_rec(t, out);
  return out;
}

int bdt_size(const Bdt& t) {
  if (t.is_leaf()) return 1;
  return 1 + bdt_size(*t.lo) + bdt_size(*t.hi);
}

int bdt_depth(const Bdt& t) {
  if (t.is_leaf()) return 0;
  return 1 + std::max(bdt_depth(*t.lo), bdt_depth(*t.hi));
}

std::vector<LeafPath> leaves(const BdtPtr& t) {
  std::vector<LeafPath> out;
  std::vector<std::pair<std::string, int>> steps;
  leaves_rec(*t, steps, out);
  return out;
}

bool compatible(const LeafPath& a, const LeafPath& b) {
  for (const auto& [var, bit] : a.steps) {
    for (const auto& [var2, bit2] : b.steps) {
      if (var == var2 && bit != bit2) return false;
    }
  }
  return true;
}

BdtEquivResult equiv(const BdtPtr& a, const BdtPtr& b) {
  if (!is_free(*a) || !is_free(*b)) throw Error("equiv requires free decision trees");
  std::vector<LeafPath> la = leaves(a);
  std::vector<LeafPath> lb = leaves(b);
  for (const auto& pa : la) {
    for (const auto& pb : lb) {
      if (pa.value != pb.value && compatible(pa, pb)) {
        return {false, std::make_pair(pa, pb)};
      }
    }
  }
  return {true, std::nullopt};
}

int oracle_budget() {
  if (const char* env = std::getenv("MALLEQ_ORACLE_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= 62) return static_cast<int>(v);
    throw Error("MALLEQ_ORACLE_BUDGET must be a number in 1..62");
  }
  return 24;
}

bool equiv_oracle(const BdtPtr& a, const BdtPtr& b, int budget) {
  if (budget < 0) budget = oracle_budget();
  std::set<std::string> vars = bdt_vars(*a);
  vars_rec(*b, vars);
  if (static_cast<int>(vars.size()) > budget) {
    throw BudgetError("truth table over " + std::to_string(vars.size()) +
                      " variables exceeds the budget of " + std::to_string(budget));
  }
  std::vector<std::string> order(vars.begin(), vars.end());
  Valuation v;
  for (std::uint64_t mask = 0; mask < (1ull << order.size()); ++mask) {
    for (std::size_t i = 0; i < order.size(); ++i) v[order[i]] = (mask >> i) & 1;
    if (eval(*a, v) != eval(*b, v)) return false;
  }
  return true;
}

namespace {

BdtPtr parse_bdt_at(detail::Cursor& c) {
  if (c.try_consume('0')) return leaf(0);
  if (c.try_consume('1')) return leaf(1);
  c.expect('(');
  std::string var = c.ident();
  c.expect('?');
  BdtPtr lo = parse_bdt_at(c);
  c.expect(':');
  BdtPtr hi = parse_bdt_at(c);
  c.expect(')');
  return node(var, std::move(lo), std::move(hi));
}

void show_bdt_to(const Bdt& t, std::ostringstream& out) {
  if (t.is_leaf()) {
    out << t.bit;
    return;
  }
  out << '(' << t.var << " ? ";
  show_bdt_to(*t.lo, out);
  out << " : ";
  show_bdt_to(*t.hi, out);
  out << ')';
}

}  // namespace

BdtPtr parse_bdt(std::string_view text) {
  detail::Cursor c(text);
  BdtPtr t = parse_bdt_at(c);
  c.expect_end();
  return t;
}

std::string show_bdt(const Bdt& t) {
  std::ostringstream out;
  show_bdt_to(t, out);
  return out.str();
}

std::string show_leaf_path(const LeafPath& p) {
  std::ostringstream out;
  for (const auto& [var, bit] : p.steps) out << var << '=' << bit << ' ';
  out << "-> " << p.value;
  return out.str();
}

}  // namespace malleq
