#include "malleq/reductions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "malleq/parse_util.hpp"

namespace malleq {

LineGraph parse_line_graph(std::string_view text) {
  LineGraph g;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t eol = text.find('\n', offset);
    std::string_view line =
        text.substr(offset, eol == std::string_view::npos ? eol : eol - offset);
    std::size_t base = offset;
    offset = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    detail::Cursor c(line);
    if (c.eof() || c.peek() == '#') continue;
    try {
      std::string u = c.ident();
      c.expect("->");
      std::string v = c.ident();
      c.expect_end();
      g.edges.emplace_back(std::move(u), std::move(v));
    } catch (const ParseError& e) {
      throw ParseError("bad edge line", base + e.offset);
    }
  }
  return g;
}

std::string show_line_graph(const LineGraph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges) out << u << " -> " << v << '\n';
  return out.str();
}

std::vector<std::string> line_order(const LineGraph& g) {
  if (g.edges.empty()) throw Error("not a line: no edges");
  std::map<std::string, std::string> succ;
  std::map<std::string, int> indeg;
  for (const auto& [u, v] : g.edges) {
    if (!succ.emplace(u, v).second) throw Error("not a line: '" + u + "' has two outgoing edges");
    indeg[u];  // ensure present
    if (++indeg[v] > 1) throw Error("not a line: '" + v + "' has two incoming edges");
  }
  std::string begin;
  for (const auto& [v, d] : indeg) {
    if (d == 0) {
      if (!begin.empty()) throw Error("not a line: several begin vertices");
      begin = v;
    }
  }
  if (begin.empty()) throw Error("not a line: no begin vertex");
  std::vector<std::string> order{begin};
  std::string cur = begin;
  while (true) {
    auto it = succ.find(cur);
    if (it == succ.end()) break;
    cur = it->second;
    order.push_back(cur);
  }
  if (order.size() != indeg.size()) throw Error("not a line: disconnected vertices");
  return order;
}

namespace {

std::size_t position_of(const std::vector<std::string>& order, const std::string& v,
                        const char* role) {
  auto it = std::find(order.begin(), order.end(), v);
  if (it == order.end()) throw Error(std::string(role) + " vertex '" + v + "' is not in the graph");
  return static_cast<std::size_t>(it - order.begin());
}

}  // namespace

bool ord_solve(const OrdInstance& inst) {
  std::vector<std::string> order = line_order(inst.graph);
  if (inst.f == inst.s) throw Error("f and s must be distinct vertices");
  return position_of(order, inst.f, "f") < position_of(order, inst.s, "s");
}

std::pair<ProofPtr, ProofPtr> ord_to_proof_pair(const OrdInstance& inst) {
  std::vector<std::string> order = line_order(inst.graph);
  if (inst.f == inst.s) throw Error("f and s must be distinct vertices");
  position_of(order, inst.f, "f");
  position_of(order, inst.s, "s");
  if (order.front() == inst.f || order.front() == inst.s) {
    throw Error("the begin vertex cannot play f or s");
  }
  // nested axiom chain proving  a, (a -o a), (a -o a), (a -o a) |- a
  ProofPtr base = imp_l(imp_l(imp_l(ax("a"), ax("a")), ax("a")), ax("a"));
  ProofPtr walked = base;
  for (std::size_t k = 1; k < order.size(); ++k) {
    const std::string& v = order[k];
    if (v == inst.f) {
      walked = ex(2, 3, std::move(walked));
    } else if (v == inst.s) {
      walked = ex(3, 4, std::move(walked));
    } else {
      walked = ex(1, 2, ex(1, 2, std::move(walked)));
    }
  }
  ProofPtr reference = ex(3, 4, ex(2, 3, base));
  return {std::move(walked), std::move(reference)};
}

std::pair<BdtPtr, BdtPtr> ord_to_bdt_pair(const OrdInstance& inst) {
  std::vector<std::string> order = line_order(inst.graph);
  if (inst.f == inst.s) throw Error("f and s must be distinct vertices");
  position_of(order, inst.f, "f");
  position_of(order, inst.s, "s");
  if (order.front() == inst.f || order.front() == inst.s) {
    throw Error("the begin vertex cannot play f or s");
  }
  if (order.back() == inst.f || order.back() == inst.s) {
    throw Error("the exit vertex cannot play f or s");
  }
  for (const auto& v : order) {
    if (v == "x" || v == "y") {
      throw Error("vertex name '" + v + "' collides with a reserved selector variable");
    }
  }
  // copy exits carry 1, 0, 0; crossing f or s in the rewired tree
  // forwards the walk to another copy
  const int exit_value[4] = {0, 1, 0, 0};  // 1-based copies
  auto sigma_f = [](int c) { return c == 1 ? 2 : c == 2 ? 3 : 1; };
  auto sigma_s = [](int c) { return c == 1 ? 2 : c == 2 ? 1 : 3; };
  auto chain = [&](int copy, bool rewired) {
    // variable names are shared across copies, so only the walk's final
    // copy (hence the exit leaf) depends on the rewiring
    int c = copy;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      if (rewired && order[k] == inst.f) c = sigma_f(c);
      if (rewired && order[k] == inst.s) c = sigma_s(c);
    }
    BdtPtr acc = leaf(exit_value[c]);
    for (std::size_t k = order.size() - 1; k-- > 0;) {
      acc = node(order[k], std::move(acc), leaf(1));
    }
    return acc;
  };
  auto top = [&](bool rewired) {
    return node("x", chain(3, rewired), node("y", chain(2, rewired), chain(1, rewired)));
  };
  return {top(true), top(false)};
}

}  // namespace malleq
