#include <doctest.h>

#include "malleq/slicing.hpp"

using namespace malleq;

namespace {

Slice mk(std::initializer_list<std::pair<int, int>> prs) {
  Slice s;
  for (auto [i, j] : prs) s.insert(occ_pair(i, j));
  return s;
}

ProofPtr case_proof(const std::string& x, const std::string& y) {
  auto sum = plus(y, atom("a"), atom("b"));
  return dplus(x, plus_l(sum, ax("a")), plus_r(sum, ax("b")));
}

ProofPtr ladder() {
  return imp_l(imp_l(imp_l(ax("a"), ax("a")), ax("a")), ax("a"));
}

// three case proofs glued by left implications; slices multiply
ProofPtr chain3() {
  auto q = imp_l(case_proof("x1", "y1"), case_proof("x2", "y2"));
  return imp_l(q, case_proof("x3", "y3"));
}

}  // namespace

TEST_CASE("occurrence pairs are unordered and irreflexive") {
  CHECK(occ_pair(3, 1) == occ_pair(1, 3));
  CHECK(occ_pair(1, 3).a == 1);
  CHECK_THROWS_AS(occ_pair(2, 2), Error);
  CHECK_THROWS_AS(occ_pair(-1, 0), Error);
}

TEST_CASE("axiom slicing links its two occurrences") {
  auto p = ax("a");
  auto s = slicing(p);
  CHECK(s.slices == std::set<Slice>{mk({{0, 1}})});
  auto bs = bdt_slicing(p);
  REQUIRE(bs.entries.size() == 1);
  CHECK(bdt_equal(bs.at(occ_pair(0, 1)), leaf(1)));
}

TEST_CASE("case proof has one slice per branch") {
  auto p = case_proof("x", "y");
  auto s = slicing(p);
  CHECK(s.slices == std::set<Slice>{mk({{0, 2}}), mk({{1, 3}})});
  CHECK(show_slicing(s) == "{(0,2)}\n{(1,3)}\n");
}

TEST_CASE("case proof decision trees") {
  auto bs = bdt_slicing(case_proof("x", "y"));
  CHECK(show_bdt(bs.at(occ_pair(0, 2))) == "(x ? 1 : 0)");
  CHECK(show_bdt(bs.at(occ_pair(1, 3))) == "(x ? 0 : 1)");
  CHECK(show_bdt(bs.at(occ_pair(0, 3))) == "(x ? 0 : 0)");
  CHECK(show_bdt(bs.at(occ_pair(1, 2))) == "(x ? 0 : 0)");
  CHECK(show_bdt(bs.at(occ_pair(2, 3))) == "(x ? 0 : 0)");
  // occurrences split by the case are never linked
  CHECK(bs.entries.find(occ_pair(0, 1)) == bs.entries.end());
  CHECK(bdt_equal(bs.at(occ_pair(0, 1)), leaf(0)));
}

TEST_CASE("ladder proof axiom linking") {
  auto s = slicing(ladder());
  CHECK(s.slices ==
        std::set<Slice>{mk({{0, 1}, {2, 3}, {4, 5}, {6, 7}})});
}

TEST_CASE("exchange order changes the linking") {
  auto a = ex(3, 4, ex(2, 3, ladder()));
  auto b = ex(2, 3, ex(3, 4, ladder()));
  CHECK(sequent_equal(a->conclusion, b->conclusion));
  CHECK(slicing(a).slices ==
        std::set<Slice>{mk({{0, 5}, {1, 6}, {2, 3}, {4, 7}})});
  CHECK(slicing(b).slices ==
        std::set<Slice>{mk({{0, 3}, {1, 6}, {2, 7}, {4, 5}})});
}

TEST_CASE("chained cases multiply the slices") {
  auto p = chain3();
  auto s = slicing(p);
  CHECK(s.slices.size() == 8);
  auto bs = bdt_slicing(p);
  CHECK(pair_map_vars(bs.entries) ==
        std::set<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("single pair route matches the full map") {
  for (const ProofPtr& p : {case_proof("x", "y"), chain3(),
                            ex(3, 4, ex(2, 3, ladder())),
                            imp_r(ex(1, 2, dplus("x", imp_l(ax("a"), ax("e")),
                                                 imp_l(ax("a"), ax("e")))))}) {
    auto bs = bdt_slicing(p);
    int n = atom_count(p->conclusion);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        CHECK(bdt_equal(bdt_slicing_pair(p, occ_pair(i, j)),
                        bs.at(occ_pair(i, j))));
      }
  }
}

TEST_CASE("valuation slices of the case proof") {
  auto bs = bdt_slicing(case_proof("x", "y"));
  CHECK(valuation_slice(bs, {{"x", 0}}) == mk({{0, 2}}));
  CHECK(valuation_slice(bs, {{"x", 1}}) == mk({{1, 3}}));
}

TEST_CASE("expansion recovers the explicit slicing") {
  for (const ProofPtr& p :
       {ax("a"), case_proof("x", "y"), ladder(), chain3(),
        ex(2, 3, ex(3, 4, ladder())),
        dplus("x", plus_l(plus("y", atom("a"), atom("a")), ax("a")),
              plus_r(plus("y", atom("a"), atom("a")), ax("a")))}) {
    auto bs = bdt_slicing(p);
    auto expanded = expand(bs);
    auto direct = slicing(p);
    CHECK(expanded.slices == direct.slices);
    CHECK(sequent_equal(expanded.sequent, direct.sequent));
  }
}

TEST_CASE("stored trees are free and use only case labels") {
  auto p = chain3();
  auto bs = bdt_slicing(p);
  auto allowed = negative_plus_labels(p->conclusion);
  for (const auto& [pr, t] : bs.entries) {
    CHECK(is_free(*t));
    for (const auto& v : bdt_vars(*t)) CHECK(allowed.count(v) == 1);
  }
}

TEST_CASE("expansion respects the variable budget") {
  auto bs = bdt_slicing(chain3());  // three decision variables
  CHECK_THROWS_AS(expand(bs, 2), BudgetError);
  CHECK_NOTHROW(expand(bs, 3));
}

TEST_CASE("slice printing") {
  CHECK(show_slice(mk({{0, 2}})) == "{(0,2)}");
  CHECK(show_slice(mk({{2, 3}, {0, 1}})) == "{(0,1),(2,3)}");
  CHECK(show_slice(Slice{}) == "{}");
}
