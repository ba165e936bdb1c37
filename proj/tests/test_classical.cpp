#include <doctest.h>

#include "malleq/classical.hpp"

using namespace malleq;

namespace {

// mirrors the two-sided case proof: the sum moves into the shared
// context so the combined formula can sit last
MallProofPtr one_sided_case(const std::string& x, const std::string& y) {
  auto sum = mplus(y, matom("a"), matom("a"));
  return mall_with(x, mall_ex(1, 2, mall_plus_l(sum, mall_ax("a"))),
                   mall_ex(1, 2, mall_plus_r(sum, mall_ax("a"))));
}

}  // namespace

TEST_CASE("one sided formulas parse and print") {
  for (const char* s : {"a", "~a", "(a * b)", "(a @ b)", "(a +[x] b)",
                        "(~a &[w] (b * c))"}) {
    CHECK(show_mall_formula(parse_mall_formula(s)) == s);
  }
  CHECK_THROWS_AS(parse_mall_formula("~(a * b)"), ParseError);
  CHECK_THROWS_AS(parse_mall_formula("(a -o b)"), ParseError);
  CHECK(parse_mall_formula("~a")->kind == MallFormula::Kind::DualAtom);
}

TEST_CASE("one sided sequents") {
  auto s = parse_mall_sequent("|- ~a, (a @ b)");
  CHECK(s.size() == 2);
  CHECK(show_mall_sequent(s) == "|- ~a, (a @ b)");
  CHECK(mall_atom_count(s) == 3);
  CHECK_THROWS_AS(parse_mall_sequent("|-"), ParseError);
  CHECK_THROWS_AS(parse_mall_sequent("~a, a"), ParseError);

  // labels are shared between the two additive connectives
  CHECK_THROWS_AS(parse_mall_sequent("|- (a +[x] b), (c &[x] d)"), Error);
  MallSequent dup{parse_mall_formula("(a +[x] b)"),
                  parse_mall_formula("(c &[x] d)")};
  CHECK(find_duplicate_mall_label(dup) == "x");
}

TEST_CASE("axiom concludes the dual pair") {
  auto p = mall_ax("a");
  CHECK(show_mall_sequent(p->conclusion) == "|- ~a, a");
  CHECK_THROWS_AS(mall_ax("B"), Error);
}

TEST_CASE("par fuses the last two formulas") {
  auto p = mall_par(mall_ax("a"));
  CHECK(show_mall_sequent(p->conclusion) == "|- (~a @ a)");
  // a single formula cannot be fused
  CHECK_THROWS_AS(mall_par(p), ProofError);
}

TEST_CASE("tensor joins the premises' last formulas") {
  auto p = mall_tensor(mall_ax("a"), mall_ax("b"));
  CHECK(show_mall_sequent(p->conclusion) == "|- ~a, ~b, (a * b)");
  auto e0 = mall_premise_embedding(*p, 0);
  CHECK(e0 == std::vector<int>{0, 2});
  auto e1 = mall_premise_embedding(*p, 1);
  CHECK(e1 == std::vector<int>{1, 3});
}

TEST_CASE("additive rules") {
  auto sum = mplus("y", matom("a"), matom("b"));
  auto l = mall_plus_l(sum, mall_ax("a"));
  CHECK(show_mall_sequent(l->conclusion) == "|- ~a, (a +[y] b)");
  CHECK_THROWS_AS(mall_plus_r(sum, mall_ax("a")), ProofError);

  auto w = one_sided_case("x", "y");
  CHECK(show_mall_sequent(w->conclusion) == "|- (a +[y] a), (~a &[x] ~a)");
  // contexts must agree
  CHECK_THROWS_AS(mall_with("x", mall_ax("a"), mall_ax("b")), ProofError);
  // label freshness
  CHECK_THROWS_AS(one_sided_case("y", "y"), ProofError);
  // both copies of the sum ending up in the conclusion is rejected
  auto even = mplus("z", matom("a"), matom("a"));
  CHECK_THROWS_AS(mall_with("x", mall_plus_l(even, mall_ax("a")),
                            mall_plus_r(even, mall_ax("a"))),
                  ProofError);
}

TEST_CASE("one sided exchange") {
  auto p = mall_ex(1, 2, mall_ax("a"));
  CHECK(show_mall_sequent(p->conclusion) == "|- a, ~a");
  CHECK_THROWS_AS(mall_ex(1, 1, mall_ax("a")), ProofError);
  CHECK_THROWS_AS(mall_ex(2, 3, mall_ax("a")), ProofError);
}

TEST_CASE("one sided proof parse round trip") {
  const char* text =
      "(with x (ex 1 2 (plusL (a +[y] a) (ax a))) "
      "(ex 1 2 (plusR (a +[y] a) (ax a))))";
  auto raw = parse_mall_proof(text);
  CHECK(!raw->has_conclusion);
  auto p = infer_mall_conclusion(raw);
  CHECK(show_mall_proof(p) == text);
  CHECK(check_mall_proof(p).ok);

  const char* t2 = "(par (tensor (ax a) (ax b)))";
  auto q = infer_mall_conclusion(parse_mall_proof(t2));
  CHECK(show_mall_sequent(q->conclusion) == "|- ~a, (~b @ (a * b))");
  CHECK_THROWS_AS(parse_mall_proof("(impR (ax a))"), ParseError);
}

TEST_CASE("axiom and tensor slicings") {
  auto bs = mall_bdt_slicing(mall_ax("a"));
  CHECK(bdt_equal(bs.at(occ_pair(0, 1)), leaf(1)));

  auto t = mall_tensor(mall_ax("a"), mall_ax("b"));
  auto ts = mall_slicing(t);
  CHECK(ts.slices ==
        std::set<Slice>{{occ_pair(0, 2), occ_pair(1, 3)}});
  auto tb = mall_bdt_slicing(t);
  CHECK(bdt_equal(tb.at(occ_pair(0, 2)), leaf(1)));
  CHECK(bdt_equal(tb.at(occ_pair(1, 3)), leaf(1)));
  CHECK(tb.entries.find(occ_pair(0, 1)) == tb.entries.end());
}

TEST_CASE("with splits into labeled branches") {
  auto p = one_sided_case("x", "y");
  auto s = mall_slicing(p);
  CHECK(s.slices == std::set<Slice>{{occ_pair(0, 2)}, {occ_pair(1, 3)}});
  auto bs = mall_bdt_slicing(p);
  CHECK(show_bdt(bs.at(occ_pair(0, 2))) == "(x ? 1 : 0)");
  CHECK(show_bdt(bs.at(occ_pair(1, 3))) == "(x ? 0 : 1)");
  // both context occurrences, linked in neither branch
  CHECK(bdt_equal(bs.at(occ_pair(0, 1)), node("x", leaf(0), leaf(0))));
  // occurrences split by the with are never linked
  CHECK(bs.entries.find(occ_pair(2, 3)) == bs.entries.end());
}

TEST_CASE("expansion matches the explicit route") {
  std::vector<MallProofPtr> ps = {
      mall_ax("a"),
      mall_par(mall_ax("a")),
      mall_tensor(mall_ax("a"), mall_ax("b")),
      one_sided_case("x", "y"),
      mall_ex(1, 2, one_sided_case("x", "y")),
      mall_with("w", one_sided_case("x", "y"), one_sided_case("u", "y"))};
  for (const auto& p : ps) {
    auto bs = mall_bdt_slicing(p);
    auto expanded = mall_expand(bs);
    auto direct = mall_slicing(p);
    CHECK(expanded.slices == direct.slices);
    CHECK(mall_sequent_equal(expanded.sequent, direct.sequent));
    for (const auto& [pr, t] : bs.entries) CHECK(is_free(*t));
  }
}

TEST_CASE("one sided equivalence") {
  auto p = one_sided_case("x", "y");
  CHECK(mall_equiv(p, p).equivalent);
  CHECK(mall_equiv_oracle(p, p));

  // swapping the two branches flips the linking
  auto sum = mplus("y", matom("a"), matom("a"));
  auto q = mall_with("x", mall_ex(1, 2, mall_plus_r(sum, mall_ax("a"))),
                     mall_ex(1, 2, mall_plus_l(sum, mall_ax("a"))));
  auto v = mall_equiv(p, q);
  REQUIRE(!v.equivalent);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->pair == occ_pair(0, 2));
  CHECK(!mall_equiv_oracle(p, q));

  // a doubled exchange is invisible
  auto r = mall_ex(1, 2, mall_ex(1, 2, p));
  CHECK(mall_equiv(p, r).equivalent);
  CHECK(mall_equiv_oracle(p, r));

  CHECK_THROWS_AS(mall_equiv(mall_ax("a"), mall_ax("b")), Error);
}
