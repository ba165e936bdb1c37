#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "malleq/cli.hpp"
#include "malleq/reductions.hpp"

using namespace malleq;

namespace {

namespace fs = std::filesystem;

fs::path io_dir() {
  auto d = fs::temp_directory_path() / "malleq_cli_tests";
  fs::create_directories(d);
  return d;
}

std::string put(const std::string& name, const std::string& content) {
  auto p = io_dir() / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  int c = run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

const char* kCase =
    "(dplus x (plusL (a +[y] b) (ax a)) (plusR (a +[y] b) (ax b)))";
const char* kEvenCase =
    "(dplus x (plusL (a +[y] a) (ax a)) (plusR (a +[y] a) (ax a)))";
const char* kEvenSwapped =
    "(dplus x (plusR (a +[y] a) (ax a)) (plusL (a +[y] a) (ax a)))";

}  // namespace

TEST_CASE("cli check") {
  auto good = put("good.proof", kCase);
  auto r = run({"check", good});
  CHECK(r.code == 0);
  CHECK(r.out == "ok\n(a +[x] b) |- (a +[y] b)\n");

  auto bad = run({"check", put("bad.proof", "(dplus x (ax a))")});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(bad.err.find("bad.proof") != std::string::npos);

  auto missing = run({"check", (io_dir() / "no_such_file").string()});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("no_such_file") != std::string::npos);
}

TEST_CASE("cli equiv verdicts and exit codes") {
  auto p = put("p.proof", kEvenCase);
  auto q = put("q.proof", kEvenSwapped);
  auto same = run({"equiv", p, p});
  CHECK(same.code == 0);
  CHECK(same.out == "equivalent\n");

  auto diff = run({"equiv", p, q});
  CHECK(diff.code == 1);
  CHECK(diff.out == "inequivalent\n");

  auto wit = run({"equiv", p, q, "--witness"});
  CHECK(wit.code == 1);
  CHECK(wit.out ==
        "inequivalent\npair (0,2): left leaf x=0 -> 1, right leaf x=0 -> 0\n");

  auto oracle = run({"equiv", p, q, "--oracle"});
  CHECK(oracle.code == 1);
  CHECK(oracle.out == "inequivalent\n");

  auto mismatch = run({"equiv", p, put("other.proof", "(ax a)")});
  CHECK(mismatch.code == 2);
}

TEST_CASE("cli slice") {
  auto p = put("case.proof", kCase);
  auto r = run({"slice", p});
  CHECK(r.code == 0);
  CHECK(r.out == "{(0,2)}\n{(1,3)}\n");
  auto e = run({"slice", p, "--explicit"});
  CHECK(e.code == 0);
  CHECK(e.out == r.out);
}

TEST_CASE("cli bdt-slice") {
  auto p = put("case.proof", kCase);
  auto all = run({"bdt-slice", p});
  CHECK(all.code == 0);
  CHECK(all.out.find("(0,2): (x ? 1 : 0)\n") != std::string::npos);
  CHECK(all.out.find("(1,3): (x ? 0 : 1)\n") != std::string::npos);
  CHECK(all.out.find("(0,1)") == std::string::npos);

  auto one = run({"bdt-slice", p, "--pair", "0,2"});
  CHECK(one.code == 0);
  CHECK(one.out == "(x ? 1 : 0)\n");
  CHECK(run({"bdt-slice", p, "--pair", "nope"}).code == 2);
  CHECK(run({"bdt-slice", p, "--pair", "2,2"}).code == 2);
}

TEST_CASE("cli bdt equiv and eval") {
  auto a = put("a.bdt", "(x ? (y ? 1 : 0) : 1)");
  auto b = put("b.bdt", "(y ? 1 : (x ? 0 : 1))");
  auto c = put("c.bdt", "(x ? (y ? 1 : 0) : 0)");
  CHECK(run({"bdt", "equiv", a, b}).code == 0);
  auto diff = run({"bdt", "equiv", a, c, "--witness"});
  CHECK(diff.code == 1);
  CHECK(diff.out.find("left leaf ") != std::string::npos);
  CHECK(diff.out.find("right leaf ") != std::string::npos);
  CHECK(run({"bdt", "equiv", a, c, "--oracle"}).code == 1);

  auto t = put("t.bdt", "(x ? 0 : 1)");
  auto hi = run({"bdt", "eval", t, "x=1"});
  CHECK(hi.code == 0);
  CHECK(hi.out == "1\n");
  auto lo = run({"bdt", "eval", t, "x=0"});
  CHECK(lo.code == 1);
  CHECK(lo.out == "0\n");
  CHECK(run({"bdt", "eval", t}).code == 2);
  CHECK(run({"bdt", "eval", t, "x=2"}).code == 2);
}

TEST_CASE("cli encode") {
  auto one = put("one.bdt", "1");
  auto r = run({"encode", one});
  CHECK(r.code == 0);
  CHECK(r.out == "(plusL (b +[b0] b) (ax b))\n");

  auto x = put("x.bdt", "(y ? (x ? 0 : 1) : (x ? 1 : 0))");
  auto rep = run({"encode", x, "--check-representation"});
  CHECK(rep.code == 0);
  CHECK(rep.out.rfind("ok\n", 0) == 0);
  CHECK(rep.out.find("  ok   tree at the base pair (structural)\n") !=
        std::string::npos);
  CHECK(rep.out.find("FAIL") == std::string::npos);

  // a universe too small for the tree
  CHECK(run({"encode", x, "--vars", "1"}).code == 2);
  CHECK(run({"encode", put("dup.bdt", "(x ? (x ? 0 : 1) : 0)")}).code == 2);
}

TEST_CASE("cli reduce writes the pair when asked") {
  auto line = put("line.txt", "b -> f\nf -> s\ns -> e\n");
  auto prefix = (io_dir() / "ordp").string();
  auto r = run({"reduce", "ord-proof", line, "--f", "f", "--s", "s",
                "--out", prefix});
  CHECK(r.code == 0);
  CHECK(r.out == "equivalent\n");
  CHECK(fs::exists(prefix + ".1"));
  CHECK(fs::exists(prefix + ".2"));
  CHECK(run({"check", prefix + ".1"}).code == 0);
  CHECK(run({"equiv", prefix + ".1", prefix + ".2"}).code == 0);

  auto rev = run({"reduce", "ord-proof", line, "--f", "s", "--s", "f"});
  CHECK(rev.code == 1);
  CHECK(rev.out == "inequivalent\n");

  auto bprefix = (io_dir() / "ordb").string();
  auto rb = run({"reduce", "ord-bdt", line, "--f", "s", "--s", "f",
                 "--out", bprefix});
  CHECK(rb.code == 1);
  CHECK(run({"bdt", "equiv", bprefix + ".1", bprefix + ".2"}).code == 1);

  CHECK(run({"reduce", "ord-bdt", line, "--f", "f", "--s", "e"}).code == 2);
  CHECK(run({"reduce", "ord-proof", line, "--f", "b", "--s", "s"}).code == 2);
}

TEST_CASE("cli generators are reproducible") {
  auto a = run({"gen", "bdt", "--seed", "11", "--vars", "4", "--depth", "3"});
  auto b = run({"gen", "bdt", "--seed", "11", "--vars", "4", "--depth", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run({"gen", "bdt", "--seed", "12"}).out);

  auto pair = run({"gen", "proof-pair", "--seed", "7", "--inequivalent"});
  CHECK(pair.code == 0);
  CHECK(pair.out.find("expected: inequivalent\n") != std::string::npos);
  auto eq = run({"gen", "proof-pair", "--seed", "7", "--equivalent"});
  CHECK(eq.out.find("expected: equivalent\n") != std::string::npos);
  CHECK(run({"gen", "proof-pair", "--equivalent", "--inequivalent"}).code == 2);

  auto line = run({"gen", "line", "--seed", "5", "--vars", "5"});
  CHECK(line.code == 0);
  // the emitted edges form a valid line, comments carry f and s
  CHECK_NOTHROW(line_order(parse_line_graph(line.out)));
  CHECK(line.out.find("# f = ") != std::string::npos);
  CHECK(line.out.find("# s = ") != std::string::npos);
}

TEST_CASE("cli generated pairs round trip through equiv") {
  auto pair = run({"gen", "proof-pair", "--seed", "3"});
  REQUIRE(pair.code == 0);
  std::istringstream lines(pair.out);
  std::string l1, l2, verdict_line;
  std::getline(lines, l1);
  std::getline(lines, l2);
  std::getline(lines, verdict_line);
  auto p1 = put("gen1.proof", l1);
  auto p2 = put("gen2.proof", l2);
  auto v = run({"equiv", p1, p2});
  CHECK((verdict_line == "expected: equivalent") == (v.code == 0));
}

TEST_CASE("cli one sided commands") {
  auto p = put("m.proof",
               "(with x (ex 1 2 (plusL (a +[y] a) (ax a))) "
               "(ex 1 2 (plusR (a +[y] a) (ax a))))");
  auto q = put("m2.proof",
               "(with x (ex 1 2 (plusR (a +[y] a) (ax a))) "
               "(ex 1 2 (plusL (a +[y] a) (ax a))))");
  auto c = run({"mall", "check", p});
  CHECK(c.code == 0);
  CHECK(c.out == "ok\n|- (a +[y] a), (~a &[x] ~a)\n");
  CHECK(run({"mall", "equiv", p, p}).code == 0);
  auto d = run({"mall", "equiv", p, q, "--witness"});
  CHECK(d.code == 1);
  CHECK(d.out.find("pair (0,2)") != std::string::npos);
  CHECK(run({"mall", "equiv", p, q, "--oracle"}).code == 1);
  CHECK(run({"mall", "check", put("m3.proof", "(par (ax a) (ax b))")}).code ==
        2);
}

TEST_CASE("cli usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"equiv", "only_one"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("encode") != std::string::npos);
  CHECK(help.out.find("equiv") != std::string::npos);
}
