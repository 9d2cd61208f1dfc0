#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "qbforge/catalog.hpp"
#include "qbforge/commands.hpp"
#include "qbforge/forge.hpp"
#include "qbforge/io.hpp"

namespace qbforge {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << text;
  return path.string();
}

const char* const kRoundTripNames[] = {
    "chain:2",       "godel:3",
    "godel:4",       "godel:6",
    "lukasiewicz:3", "lukasiewicz:4",
    "lukasiewicz:6", "heyting-d5",
    "prod(godel:2,godel:2)", "prod(godel:3,godel:2)",
    "prod(lukasiewicz:3,godel:3)", "prod(chain:2,chain:2)"};

TEST_CASE("the interchange form is pinned byte for byte") {
  CHECK(serialize_algebra(catalog("godel:3")) ==
        "algebra godel:3\n"
        "elements 0 a 1\n"
        "leq\n"
        "  1 1 1\n"
        "  0 1 1\n"
        "  0 0 1\n"
        "to\n"
        "  1 1 1\n"
        "  0 1 1\n"
        "  0 a 1\n"
        "lto\n"
        "  1 1 1\n"
        "  0 1 1\n"
        "  0 a 1\n"
        "mul\n"
        "  0 0 0\n"
        "  0 a a\n"
        "  0 a 1\n"
        "unit 1\n"
        "bottom 0\n"
        "end\n");
}

TEST_CASE("catalog entries round-trip through text unchanged") {
  for (const char* name : kRoundTripNames) {
    FiniteAlgebra a = catalog(name);
    std::string first = serialize_algebra(a);
    FiniteAlgebra b = ingest_algebra(first);
    CHECK_MESSAGE(serialize_algebra(b) == first, name);
    CHECK(b.data().labels == a.data().labels);
    CHECK(b.data().leq == a.data().leq);
    CHECK(b.data().to == a.data().to);
    CHECK(b.data().lto == a.data().lto);
    CHECK(b.data().mul == a.data().mul);
    CHECK(b.data().unit == a.data().unit);
    CHECK(b.data().bottom == a.data().bottom);
  }
}

TEST_CASE("searched members round-trip through text unchanged") {
  for (TargetClass target :
       {TargetClass::integral_qb, TargetClass::integral_residuated,
        TargetClass::integral_residuated_vee, TargetClass::pseudo_hoop,
        TargetClass::two_sided_residuated_vee}) {
    SearchSpec spec;
    spec.max_size = 3;
    spec.target = target;
    for (const FiniteAlgebra& a : enumerate_algebras(spec)) {
      std::string first = serialize_algebra(a);
      CHECK_MESSAGE(serialize_algebra(ingest_algebra(first)) == first,
                    a.name());
    }
  }
}

TEST_CASE("hasse pairs close to the full order") {
  FiniteAlgebra d5 = catalog("heyting-d5");
  auto rows = [&](const std::vector<int>& t) {
    std::string s;
    for (int x = 0; x < 5; ++x) {
      s += " ";
      for (int y = 0; y < 5; ++y) s += " " + d5.label(t[x * 5 + y]);
      s += "\n";
    }
    return s;
  };
  std::string text =
      "# the diamond, cover pairs only\n"
      "algebra demo\n"
      "elements 0 a b c 1\n"
      "leq pairs\n"
      "  0 a\n"
      "  0 b\n"
      "  a c\n"
      "  b c\n"
      "  c 1\n"
      "to\n" + rows(d5.data().to) +
      "lto\n" + rows(d5.data().lto) +
      "mul\n" + rows(*d5.data().mul) +
      "unit 1\nbottom 0\nclass pseudo_hoop\nend\n";
  FiniteAlgebra demo = ingest_algebra(text);
  CHECK(demo.data().leq == d5.data().leq);
  CHECK(demo.data().to == d5.data().to);

  auto blocks = ingest_algebras(serialize_algebra(d5) + text);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].name() == "heyting-d5");
  CHECK(blocks[1].name() == "demo");
}

TEST_CASE("ingest rejects malformed blocks with sharp messages") {
  const std::string two_chain_head =
      "algebra x\nelements 0 1\nleq\n  1 1\n  0 1\nto\n  1 1\n  0 1\n"
      "lto\n  1 1\n  0 1\n";
  CHECK_THROWS_WITH_AS(ingest_algebra("hello world\n"),
                       doctest::Contains("opens with"), Error);
  CHECK_THROWS_WITH_AS(ingest_algebra(""),
                       doctest::Contains("unexpected end"), Error);
  CHECK_THROWS_WITH_AS(
      ingest_algebra("algebra x\nelements 0 1\nleq\n  1 1\n  0 1\nend\n"),
      doctest::Contains("missing field 'to'"), Error);
  CHECK_THROWS_WITH_AS(
      ingest_algebra("algebra x\nelements 0 1\nleq\n  1 1\n  0 1\nto\n"
                     "  1 1\n  z 1\nlto\n  1 1\n  0 1\nend\n"),
      doctest::Contains("unknown label 'z'"), Error);
  CHECK_THROWS_WITH_AS(ingest_algebra("algebra x\nelements end 1\n"),
                       doctest::Contains("format keyword"), Error);
  CHECK_THROWS_WITH_AS(
      ingest_algebra("algebra x\nelements 0 1\nelements 0 1\n"),
      doctest::Contains("duplicate field"), Error);
  CHECK_THROWS_WITH_AS(ingest_algebra(two_chain_head + "end\njunk\n"),
                       doctest::Contains("trailing content"), Error);
  CHECK_THROWS_WITH_AS(
      ingest_algebra("algebra x\nelements 0 1\nleq\n  1\nto\n  1 1\n  0 1\n"
                     "lto\n  1 1\n  0 1\nend\n"),
      doctest::Contains("leq row 0 wants 2 entries"), Error);
  CHECK_THROWS_WITH_AS(ingest_algebra(two_chain_head + "class boolean\nend\n"),
                       doctest::Contains("unknown_class"), Error);
  // the two-chain with x -> y = 1 everywhere is a quantum B-algebra but
  // carries no product, so a hoop declaration must bounce
  CHECK_THROWS_WITH_AS(
      ingest_algebra(two_chain_head + "class pseudo_hoop\nend\n"),
      doctest::Contains("does not satisfy"), Error);
  CHECK_THROWS_WITH_AS(
      ingest_algebra("algebra x\nelements 0 1\nleq pairs\n  0 1\n  1 0\n"
                     "to\n  1 1\n  0 1\nlto\n  1 1\n  0 1\nend\n"),
      doctest::Contains("not_antisymmetric"), Error);
  CHECK_THROWS_WITH_AS(ingest_algebras("# only commentary\n"),
                       doctest::Contains("no algebra blocks"), Error);
}

TEST_CASE("cli validate prints the lattice position") {
  CliRun good = cli({"validate", "godel:3"});
  CHECK(good.code == 0);
  CHECK(good.err.empty());
  CHECK(good.out ==
        "algebra godel:3: 3 elements\n"
        "  quantum B-algebra  yes\n"
        "  unital             yes, unit 1\n"
        "  integral           yes\n"
        "  join semilattice   yes\n"
        "  residuated         yes\n"
        "  two-sided          yes\n"
        "  pseudo-hoop        yes\n"
        "  bounded            yes, bottom 0\n"
        "  prelinear          to yes, lto yes, pseudo-MTL yes\n"
        "  hoop extras        cancellative no, pseudo-BL yes, pseudo-MV no\n"
        "verdict: holds\n");

  std::string path = temp_file("qbforge_corrupted.qb",
                               serialize_algebra(fixtures::corrupted_g3()));
  CliRun bad = cli({"validate", path});
  CHECK(bad.code == 1);
  CHECK(bad.out ==
        "algebra corrupted: 3 elements\n"
        "  quantum B-algebra  no\n"
        "  unital             no\n"
        "  integral           no\n"
        "  join semilattice   yes\n"
        "  residuated         no\n"
        "  two-sided          yes\n"
        "  pseudo-hoop        no\n"
        "  bounded            yes, bottom 0\n"
        "  prelinear          to yes, lto yes, pseudo-MTL yes\n"
        "violations\n"
        "  exchange: a 1 0\n"
        "  to_composition: 1 0 a\n"
        "  to_isotone: 1 0 a\n"
        "  residuation: a 1 0\n"
        "verdict: violated\n");

  CliRun tiny = cli({"validate", "godel:1"});
  CHECK(tiny.code == 0);
}

TEST_CASE("cli filters matches the known lattices") {
  CliRun g3 = cli({"filters", "godel:3", "--primes"});
  CHECK(g3.code == 0);
  CHECK(g3.out ==
        "algebra godel:3: 3 filters\n"
        "  {1}\n"
        "  {a,1}\n"
        "  {0,a,1}\n"
        "mu suite: holds\n"
        "prime classification\n"
        "  {1} to=yes lto=yes vee=yes prime=yes\n"
        "  {a,1} to=yes lto=yes vee=yes prime=yes\n"
        "  {0,a,1} to=yes lto=yes vee=yes prime=yes\n"
        "inclusions: hold\n"
        "verdict: holds\n");

  CliRun l3 = cli({"filters", "lukasiewicz:3"});
  CHECK(l3.code == 0);
  CHECK(l3.out ==
        "algebra lukasiewicz:3: 2 filters\n"
        "  {1}\n"
        "  {0,a,1}\n"
        "mu suite: holds\n"
        "verdict: holds\n");
}

TEST_CASE("cli quantale applies the upper set operations") {
  CliRun mul = cli({"quantale", "chain:2", "--op", "umul", "--x", "{1}",
                    "--y", "{1}"});
  CHECK(mul.code == 0);
  CHECK(mul.out == "x = {1}\ny = {1}\numul = {1}\n");

  CliRun empty = cli({"quantale", "chain:2", "--op", "umul", "--x", "*",
                      "--y", "-"});
  CHECK(empty.out == "x = {0,1}\ny = {}\numul = {}\n");

  CliRun resl = cli({"quantale", "chain:2", "--op", "resl", "--x", "{0,1}",
                     "--y", "*"});
  CHECK(resl.out == "x = {0,1}\ny = {0,1}\nresl = {0,1}\n");

  CliRun inv = cli({"quantale", "godel:3", "--op", "invres", "--x", "{1}",
                    "--y", "{a,1}", "--side", "right"});
  CHECK(inv.out == "x = {1}\ny = {a,1}\ninvres_right = {a,1}\n");

  CliRun laws = cli({"quantale", "godel:3"});
  CHECK(laws.code == 0);
  CHECK(laws.out ==
        "algebra godel:3: 4 upper sets\n"
        "quantale laws: hold\n"
        "verdict: holds\n");
}

TEST_CASE("cli primes reads the diamond separation off") {
  CliRun d5 = cli({"primes", "heyting-d5"});
  CHECK(d5.code == 0);
  CHECK(d5.out ==
        "algebra heyting-d5: 5 filters\n"
        "prime classification\n"
        "  {1} to=no lto=no vee=yes prime=no\n"
        "  {c,1} to=no lto=no vee=no prime=no\n"
        "  {a,c,1} to=yes lto=yes vee=yes prime=yes\n"
        "  {b,c,1} to=yes lto=yes vee=yes prime=yes\n"
        "  {0,a,b,c,1} to=yes lto=yes vee=yes prime=yes\n"
        "inclusions: hold\n"
        "mtl iff: holds, to=no lto=no pseudo=no\n"
        "vee-prime meets recover 5 of 5 filters\n"
        "prime meets recover 4 of 5 filters\n"
        "join distribution: holds\n"
        "verdict: holds\n");
}

TEST_CASE("cli polar walks the diamond") {
  CliRun run = cli({"polar", "heyting-d5", "--set", "{a}"});
  CHECK(run.code == 0);
  CHECK(run.out ==
        "algebra heyting-d5\n"
        "polar({a}) = {1}\n"
        "double polar = {0,a,b,c,1}\n"
        "polar laws: hold\n"
        "coprime laws: hold\n"
        "embedding: holds (5 pairs)\n"
        "verdict: holds\n");
}

TEST_CASE("cli witness decomposes the fenced fixture and says none honestly") {
  std::string path = temp_file("qbforge_bp4.qb",
                               serialize_algebra(fixtures::bottomed_p4()));
  CliRun pinned = cli({"witness", path, "--set", "{p}"});
  CHECK(pinned.code == 0);
  CHECK(pinned.out ==
        "algebra bp4\n"
        "witness: m={p} x=B y=o y1=q y2=p f1={q,1} f2={p,1}\n");

  // the scan stops at the first base set that yields one
  CliRun scanned = cli({"witness", path});
  CHECK(scanned.out == pinned.out);

  CliRun none = cli({"witness", "godel:3"});
  CHECK(none.code == 0);
  CHECK(none.out == "algebra godel:3\nwitness: none\n");

  CliRun one = cli({"witness", "godel:1"});
  CHECK(one.code == 0);
  CHECK(one.out == "algebra godel:1\nwitness: none\n");
}

TEST_CASE("cli search emits re-ingestible witnesses") {
  CliRun found = cli({"search", "--size", "3", "--class",
                      "two_sided_residuated_vee", "--where",
                      "noncommutative"});
  CHECK(found.code == 1);  // the hunt found counterexamples
  auto blocks = ingest_algebras(found.out);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].name() == "two_sided_residuated_vee:3:3");
  CHECK(blocks[1].name() == "two_sided_residuated_vee:3:4");
  for (const auto& w : blocks) {
    bool commutes = true;
    for (int x = 0; x < w.size(); ++x)
      for (int y = 0; y < w.size(); ++y)
        commutes = commutes && w.mul(x, y) == w.mul(y, x);
    CHECK_FALSE(commutes);
  }
  CHECK(found.out.find("# search class=two_sided_residuated_vee size<=3 "
                       "where=noncommutative\n") != std::string::npos);
  CHECK(found.out.find("# posets=23 leaves=53 members=53 emitted=2\n") !=
        std::string::npos);

  CliRun hollow = cli({"search", "--size", "4", "--class", "pseudo_hoop",
                       "--where", "noncommutative"});
  CHECK(hollow.code == 0);  // no noncommutative pseudo-hoops this small
  CHECK(hollow.out ==
        "# search class=pseudo_hoop size<=4 where=noncommutative\n"
        "# posets=242 leaves=219 members=123 emitted=0\n");

  CliRun plain = cli({"search", "--size", "2", "--class", "pseudo_hoop"});
  CHECK(plain.code == 0);  // enumeration is not a counterexample hunt
  CHECK(ingest_algebras(plain.out).size() == 2);
}

TEST_CASE("cli catalog lists and prints") {
  CliRun list = cli({"catalog"});
  CHECK(list.code == 0);
  CHECK(list.out ==
        "chain:2\ngodel:n\nlukasiewicz:n\nheyting-d5\nprod(e1,e2)\n");

  CliRun file = cli({"catalog", "godel:3"});
  CHECK(file.code == 0);
  CHECK(file.out == serialize_algebra(catalog("godel:3")));
}

TEST_CASE("cli exit codes separate violations from input errors") {
  CHECK(cli({"validate", "nosuchthing"}).code == 2);
  CHECK(cli({"search", "--size", "9"}).code == 2);
  CHECK(cli({"filters", "godel:3", "--cap", "2"}).code == 2);
  CHECK(cli({"polar", "godel:3", "--set", "{z}"}).code == 2);
  CHECK(cli({"search", "--where", "prime-desert"}).code == 2);
  CHECK(cli({"search", "--class", "boolean"}).code == 2);
  CHECK(cli({"quantale", "godel:3", "--op", "junk"}).code == 2);
  CHECK(cli({"validate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);

  // a law violation in the input algebra is 1, not 2
  std::string path = temp_file("qbforge_corrupted2.qb",
                               serialize_algebra(fixtures::corrupted_g3()));
  CHECK(cli({"validate", path}).code == 1);
}

TEST_CASE("cli honors the cap environment override") {
  setenv("QBFORGE_CAP", "2", 1);
  CliRun capped = cli({"filters", "godel:3"});
  CHECK(capped.code == 2);
  CHECK(capped.err.find("cap_exceeded") != std::string::npos);

  setenv("QBFORGE_CAP", "banana", 1);
  CliRun garbage = cli({"filters", "godel:3"});
  CHECK(garbage.code == 2);
  CHECK(garbage.err.find("QBFORGE_CAP") != std::string::npos);

  unsetenv("QBFORGE_CAP");
  CHECK(cli({"filters", "godel:3"}).code == 0);
}

TEST_CASE("cli json mode emits one parseable document") {
  CliRun run = cli({"--format", "json", "validate", "lukasiewicz:3"});
  CHECK(run.code == 0);
  auto doc = nlohmann::json::parse(run.out);
  CHECK(doc["command"] == "validate");
  CHECK(doc["holds"] == true);
  CHECK(doc["position"]["pseudo_hoop"] == true);
  CHECK(doc["position"]["pseudo_mv"] == true);
  CHECK(doc["position"]["cancellative"] == false);

  CliRun mul = cli({"--format", "json", "quantale", "chain:2", "--op", "umul",
                    "--x", "{1}", "--y", "{1}"});
  auto mdoc = nlohmann::json::parse(mul.out);
  CHECK(mdoc["result"] == nlohmann::json::array({"1"}));

  CliRun timed = cli({"--format", "json", "--timing", "catalog", "chain:2"});
  CHECK(nlohmann::json::parse(timed.out).contains("elapsed_ms"));

  CliRun search = cli({"--format", "json", "search", "--size", "2",
                       "--class", "pseudo_hoop"});
  auto sdoc = nlohmann::json::parse(search.out);
  CHECK(sdoc["stats"]["members"] == 3);
  CHECK(sdoc["witnesses"].size() == 2);
}

TEST_CASE("cli runs are byte deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"primes", "heyting-d5"},
           {"search", "--size", "3", "--class", "integral_qb"},
           {"--format", "json", "filters", "godel:4", "--primes"}}) {
    CliRun first = cli(args);
    CliRun second = cli(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

}  // namespace
}  // namespace qbforge
