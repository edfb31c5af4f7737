#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "opensets/cli.hpp"
#include "opensets/errors.hpp"
#include "opensets/setexpr.hpp"
#include "support.hpp"

using namespace opensets;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json doc_of(const Run& r) { return nlohmann::json::parse(r.out); }

SetExpr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 8 : 5);
  SetExpr e;
  switch (pick(rng)) {
    case 0:
      e.kind = SetExpr::Kind::Interval;
      e.numbers = {testsupport::grid_rational(rng, 12, -3, 15), testsupport::grid_rational(rng, 12, -3, 15)};
      break;
    case 1:
      e.kind = SetExpr::Kind::CInterval;
      e.numbers = {testsupport::grid_rational(rng, 12, 0, 12), testsupport::grid_rational(rng, 12, 0, 12)};
      break;
    case 2:
      e.kind = SetExpr::Kind::Punctured;
      for (int i = static_cast<int>(rng() % 3); i > 0; --i) e.numbers.push_back(testsupport::grid_rational(rng, 7, 0, 7));
      break;
    case 3: e.kind = SetExpr::Kind::Full; break;
    case 4: e.kind = SetExpr::Kind::Empty; break;
    case 5: e.kind = SetExpr::Kind::TailCover; break;
    case 6: e.kind = SetExpr::Kind::RationalComplements; break;
    case 7:
      e.kind = SetExpr::Kind::ComplementClosed;
      e.children.push_back(random_expr(rng, depth - 1));
      break;
    default:
      e.kind = SetExpr::Kind::Union;
      for (int i = static_cast<int>(rng() % 4); i > 0; --i) e.children.push_back(random_expr(rng, depth - 1));
      break;
  }
  return e;
}

}  // namespace

TEST_CASE("parse examples") {
  const SetExpr a = parse_set("(interval 1/4 3/4)");
  CHECK(a.kind == SetExpr::Kind::Interval);
  CHECK(to_open(a) == FinOpen({RatInterval::open(Rational(1, 4), Rational(3, 4))}));

  const SetExpr b = parse_set("(union (interval 0 1/3) (cinterval 1/2 1))");
  CHECK(b.kind == SetExpr::Kind::Union);
  REQUIRE(b.children.size() == 2);
  CHECK(b.children[1].kind == SetExpr::Kind::CInterval);

  CHECK(to_open(parse_set("(interval 3/4 1/4)")).empty());
  CHECK(parse_set("tail-cover") == parse_set("(tail-cover)"));
  CHECK(to_closed(parse_set("(complement-closed (interval 1/4 3/4))")) ==
        FinClosed({RatInterval::closed(0, Rational(1, 4)), RatInterval::closed(Rational(3, 4), 1)}));
}

TEST_CASE("parse errors carry positions") {
  auto position = [](const std::string& text) {
    try {
      parse_set(text);
    } catch (const ParseError& e) {
      return std::pair<std::size_t, std::size_t>{e.line, e.column};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  CHECK(position("(interval 1/4 x)") == std::pair<std::size_t, std::size_t>{1, 15});
  CHECK(position("(bogus 1)") == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(position("(union\n  (interval 0 1/0))") == std::pair<std::size_t, std::size_t>{2, 15});
  CHECK(position("(full") == std::pair<std::size_t, std::size_t>{1, 6});
  CHECK(position("(full) extra") == std::pair<std::size_t, std::size_t>{1, 8});
  CHECK(position("interval") == std::pair<std::size_t, std::size_t>{1, 1});
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    const SetExpr e = random_expr(rng, 3);
    const std::string text = print_set(e);
    CHECK(parse_set(text) == e);
    CHECK(print_set(parse_set(text)) == text);
  }
}

TEST_CASE("evaluation rejects the wrong kind") {
  CHECK_THROWS_AS(to_open(parse_set("(cinterval 0 1)")), std::invalid_argument);
  CHECK_THROWS_AS(to_closed(parse_set("(interval 0 1)")), std::invalid_argument);
}

TEST_CASE("cli subcover") {
  const Run r = run({"subcover", "--set", "(cinterval 1/3 2/3)", "--cover", "tail-cover"});
  CHECK(r.code == kExitOk);
  const auto d = doc_of(r);
  CHECK(d["n0"] == 2);
  CHECK(d["verified"] == true);
  CHECK(d["used_pieces"][2]["lo"] == "1/4");

  const Run none = run({"--fuel", "500", "subcover", "--set", "(cinterval 1/3 2/3)", "--cover", "(interval 0 1/3)"});
  CHECK(none.code == kExitExhausted);
}

TEST_CASE("cli whbc") {
  const Run r = run({"whbc", "--set", "(cinterval 1/3 2/3)", "--cover", "(interval 2/5 3/5)", "--epsilon", "1/4"});
  CHECK(r.code == kExitOk);
  CHECK(doc_of(r)["verified"] == true);
  CHECK(run({"--fuel", "300", "whbc", "--set", "(cinterval 1/3 2/3)", "--cover", "(interval 2/5 3/5)", "--epsilon", "1/10"}).code ==
        kExitExhausted);
}

TEST_CASE("cli baire") {
  const Run r = run({"baire", "--sets", "rational-complements", "--precision", "10"});
  CHECK(r.code == kExitOk);
  const auto d = doc_of(r);
  CHECK(d["verified"] == true);
  CHECK(d["nest"].size() >= 12);
  CHECK(d["audit"]["pass"] == true);
}

TEST_CASE("cli gamma writes a trace") {
  const std::string path = "gamma_trace_test.tsv";
  const Run r = run({"--trace", path, "gamma", "--steps", "10"});
  CHECK(r.code == kExitOk);
  std::ifstream in(path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    CHECK(std::count(line.begin(), line.end(), '\t') == 2);
    ++lines;
  }
  CHECK(lines == 10);
  std::remove(path.c_str());
}

TEST_CASE("cli urysohn, tietze, components, distance, convert") {
  Run r = run({"urysohn", "--c0", "(cinterval 0 1/4)", "--c1", "(cinterval 3/4 1)"});
  CHECK(r.code == kExitOk);
  CHECK(doc_of(r)["verified"] == true);
  CHECK(run({"urysohn", "--c0", "(cinterval 0 1/2)", "--c1", "(cinterval 1/2 1)"}).code == kExitUnsound);

  r = run({"tietze", "--domain", "(union (cinterval 0 1/4) (cinterval 3/4 1))", "--function", "0:0 1/4:0 3/4:1 1:1"});
  CHECK(r.code == kExitOk);
  CHECK(doc_of(r)["verified"] == true);

  r = run({"components", "--set", "(union (interval 0 1/2) (interval 1/4 3/4))"});
  CHECK(r.code == kExitOk);
  CHECK(doc_of(r)["components"].size() == 1);

  r = run({"distance", "--set", "(union (cinterval 1/3 2/3) (cinterval 3/4 3/4))", "--at", "0"});
  CHECK(r.code == kExitOk);
  CHECK(doc_of(r)["distance"] == "1/3");
  CHECK(run({"distance", "--set", "(empty)", "--at", "0"}).code == kExitUnsound);

  r = run({"convert", "--from", "r2", "--to", "r3", "--set", "(punctured 1/2)"});
  CHECK(r.code == kExitOk);
  CHECK(doc_of(r)["verified"] == true);
  r = run({"convert", "--from", "r4", "--to", "r4", "--set", "(interval 1/4 3/4)"});
  CHECK(r.code == kExitOk);
  CHECK(doc_of(r)["verified"] == true);
}

TEST_CASE("cli adversaries") {
  Run r = run({"adversary", "hbc", "--beta", "naive-grid"});
  CHECK(r.code == kExitRefuted);
  CHECK(doc_of(r)["verified"] == true);
  CHECK(doc_of(r)["witness"]["x"].is_string());
  CHECK(run({"adversary", "hbc", "--beta", "refuse"}).code == kExitOk);
  CHECK(run({"adversary", "cover", "--beta", "naive-grid"}).code == kExitRefuted);
  CHECK(run({"adversary", "cover", "--beta", "psi"}).code == kExitOk);
  r = run({"adversary", "lemma73", "--queries", "500"});
  CHECK(r.code == kExitRefuted);
  CHECK(doc_of(r)["probe_measure_at_most_half"] == true);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({"subcover", "--set", "(cinterval 1/3"}).code == kExitUsage);
  CHECK(run({"subcover", "--set", "(cinterval 1/3 2/3)", "--cover", "(bogus)"}).code == kExitUsage);
  CHECK(run({"subcover", "--set", "(interval 0 1)", "--cover", "tail-cover"}).code == kExitUsage);
  CHECK(run({"adversary", "other"}).code == kExitUsage);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"baire", "--precision", "6"};
  CHECK(run(args).out == run(args).out);
}
