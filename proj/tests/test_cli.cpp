#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "lrs/config.hpp"
#include "lrs/error.hpp"
#include "lrs/format.hpp"
#include "lrs/verify.hpp"
#include "support.hpp"

using namespace lrs;
using lrs::test::at;
using lrs::test::group;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("weight wire format") {
  auto ws = parse_weights("1,0;0,1;1,1", 2);
  REQUIRE(ws.size() == 3);
  CHECK(ws[2] == Weight{1, 1});
  CHECK(format_weights(ws) == "1,0;0,1;1,1");
  CHECK(parse_weights("0;0;0", 1).size() == 3);
  CHECK(parse_weights("-2,3", 2)[0] == Weight{-2, 3});
  for (const char* bad : {"", "1,0;0", "1,0;;0,1", "1, 0", "a,b", "1,0,", "1.0"})
    CHECK(kind_of([&] { parse_weights(bad, 2); }) == ErrorKind::Parse);
}

TEST_CASE("element tuple wire format") {
  auto g = group("A2");
  auto t = parse_tuple("e;e;1.2.1", *g);
  CHECK(t == ElementTuple{0, 0, g->longest_index()});
  CHECK(parse_tuple("e,e,1.2.1", *g) == t);
  CHECK(parse_tuple("2.1.2;1;e", *g) == ElementTuple{g->longest_index(), at(*g, "1"), 0});
  CHECK(format_tuple(*g, t) == "e,e,1.2.1");
  CHECK(format_tuple(*g, t, ';') == "e;e;1.2.1");
  CHECK(kind_of([&] { parse_tuple("e;3", *g); }) == ErrorKind::Parse);
}

TEST_CASE("stable status text") {
  CHECK(to_string(StableMultOne{StableStatus::RefutedAtK, 1, 2}) == "RefutedAtK(1, dim=2)");
  CHECK(to_string(StableMultOne{StableStatus::ProvenTrue, 0, 1}) == "ProvenTrue");
  CHECK(to_string(StableMultOne{StableStatus::UnknownUpTo, 3, 0}) == "UnknownUpTo(3)");
}

TEST_CASE("digest") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("run config round trip") {
  RunConfig c;
  CHECK(config_from_json(to_json(c)) == c);
  c.group = "G2";
  c.scaling_depth = 5;
  c.weight_bound = 1;
  c.budget.max_dim = 1234;
  c.format = OutputFormat::Csv;
  c.verify.cup = true;
  c.verify.seed = 99;
  auto j = to_json(c);
  CHECK(config_from_json(j) == c);
  CHECK(config_from_json(nlohmann::json::parse(j.dump())) == c);
  CHECK(to_json(config_from_json(j)) == j);
}

TEST_CASE("run config validation") {
  using nlohmann::json;
  CHECK(config_from_json(json::object()) == RunConfig{});
  CHECK(config_from_json(json{{"group", "B3"}}).group == "B3");
  CHECK(kind_of([] { config_from_json(json{{"grup", "B3"}}); }) == ErrorKind::Parse);
  CHECK(kind_of([] { config_from_json(json{{"scaling_depth", "three"}}); }) == ErrorKind::Parse);
  CHECK(kind_of([] { config_from_json(json{{"scaling_depth", 0}}); }) == ErrorKind::Parse);
  CHECK(kind_of([] { config_from_json(json{{"format", "xml"}}); }) == ErrorKind::Parse);
  CHECK(kind_of([] { config_from_json(json{{"group", "A"}}); }) == ErrorKind::Parse);
  CHECK(kind_of([] { load_config("/nonexistent/lrs.json"); }) == ErrorKind::Parse);
}

TEST_CASE("run config from a file") {
  const char* path = "lrs_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"group": "B2", "verify": {"samples": 7}})";
  }
  auto c = load_config(path);
  CHECK(c.group == "B2");
  CHECK(c.verify.samples == 7);
  CHECK(c.scaling_depth == 3);
  std::remove(path);
}

TEST_CASE("verify suites on small groups") {
  RunConfig c;
  c.group = "A2";
  auto ctx = VerifyContext::make(c);
  auto t3 = run_suite("theorem3", ctx);
  CHECK(t3.passed);
  CHECK(t3.summary.rfind("15/15 Levi-movable", 0) == 0);

  c.group = "B2";
  auto ring = run_suite("ring-axioms", VerifyContext::make(c));
  CHECK(ring.passed);
  CHECK(ring.counterexample.is_null());

  c.group = "A1";
  for (const auto& r : run_suites({"all"}, VerifyContext::make(c))) {
    CAPTURE(r.name);
    CHECK(r.passed);
  }
  CHECK(run_suites({"all"}, VerifyContext::make(c)).size() == suite_names().size());
  CHECK(kind_of([&] { run_suites({"nonsense"}, VerifyContext::make(c)); }) == ErrorKind::Parse);
}

TEST_CASE("verify output is deterministic") {
  RunConfig c;
  c.group = "B2";
  c.verify.samples = 10;
  auto a = run_suite("oracle-consistency", VerifyContext::make(c));
  auto b = run_suite("oracle-consistency", VerifyContext::make(c));
  CHECK(a.summary == b.summary);
  CHECK(a.checked == 10);
}

TEST_CASE("dominant box") {
  CHECK(dominant_box(2, 2).size() == 9);
  CHECK(dominant_box(3, 1).size() == 8);
  CHECK(dominant_box(1, 0).size() == 1);
}
