#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cli.hpp"
#include "doctest.h"

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = hopfint::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string golden_path(const std::string& file) {
  return std::string(HOPFINT_GOLDEN_DIR) + "/" + file;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  std::string file;
  std::vector<std::string> args;
};

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"integrate-dqs-ab.json", {"integrate", "builtin:dqs", "--elem", "a*b"}},
      {"integrate-dqs-left.json", {"integrate", "builtin:dqs", "--elem", "a*b", "--side", "left"}},
      {"integrate-dqs-xy.json", {"integrate", "builtin:dqs", "--elem", "x*y", "--member", "H"}},
      {"integrate-dqs-trace.json", {"integrate", "builtin:dqs", "--elem", "a*b", "--method", "trace"}},
      {"integrate-fermionic.json", {"integrate", "builtin:fermionic-line", "--elem", "xi"}},
      {"integrate-q-plane-2.json", {"integrate", "builtin:q-plane:2", "--elem", "xi1*xi2"}},
      {"tensors-dqs.json", {"tensors", "builtin:dqs"}},
      {"projectors-dqs.json", {"projectors", "builtin:dqs"}},
      {"smash-dqs.json", {"smash", "builtin:dqs"}},
      {"delta-cyclic-3.json", {"delta", "builtin:cyclic-group:3", "--method", "modified"}},
      {"check-dqs.json", {"check", "builtin:dqs"}},
      {"dual-dqs.json", {"dual", "builtin:dqs"}},
      {"identities.json", {"identities", "builtin:dqs"}},
      {"builtin-list.json", {"builtin"}},
      {"error-unknown-builtin.json", {"check", "builtin:nope"}},
  };
  return cases;
}

// Every scalar field of every result appears as a "key: value" line, and
// matrix cells appear in order.
void check_text_agrees(const Json& doc, const std::string& text) {
  std::vector<std::string> tokens;
  {
    std::istringstream in(text);
    for (std::string t; in >> t;) tokens.push_back(t);
  }
  std::size_t at = 0;
  auto expect_token = [&](const std::string& t) {
    while (at < tokens.size() && tokens[at] != t) ++at;
    CHECK_MESSAGE(at < tokens.size(), "missing token " << t);
    if (at < tokens.size()) ++at;
  };
  for (const auto& res : doc["results"]) {
    for (const auto& [key, v] : res.items()) {
      auto cell = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
      if (v.is_array() && !v.empty() && v[0].is_array()) {
        for (const auto& row : v)
          for (const auto& x : row) expect_token(cell(x));
      } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
        CHECK(text.find(v.get<std::string>()) != std::string::npos);
      } else if (!v.is_array()) {
        CHECK_MESSAGE(text.find(key + ": " + cell(v) + "\n") != std::string::npos,
                      "missing " << key);
      }
    }
  }
}

}  // namespace

TEST_CASE("json golden files") {
  for (const GoldenCase& g : golden_cases()) {
    CAPTURE(g.file);
    std::vector<std::string> args = g.args;
    args.push_back("--json");
    Run r = run(args);
    if (std::getenv("HOPFINT_UPDATE_GOLDEN")) {
      std::ofstream(golden_path(g.file)) << r.out;
      continue;
    }
    std::string expected = slurp(golden_path(g.file));
    REQUIRE_FALSE(expected.empty());
    CHECK(r.out == expected);
  }
}

TEST_CASE("json schema") {
  for (const GoldenCase& g : golden_cases()) {
    CAPTURE(g.file);
    std::vector<std::string> args = g.args;
    args.push_back("--json");
    Json doc = Json::parse(run(args).out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "input", "results", "warnings", "errors"});
    CHECK(doc["results"].is_array());
    CHECK(doc["warnings"].is_array());
    CHECK(doc["errors"].is_array());
  }
}

TEST_CASE("text and json agree") {
  for (const GoldenCase& g : golden_cases()) {
    CAPTURE(g.file);
    Run text = run(g.args);
    std::vector<std::string> args = g.args;
    args.push_back("--json");
    Run json = run(args);
    CHECK(text.code == json.code);
    check_text_agrees(Json::parse(json.out), text.out);
  }
}

TEST_CASE("integrate values") {
  Json doc = Json::parse(run({"integrate", "builtin:dqs", "--elem", "a*b", "--json"}).out);
  CHECK(doc["results"][0]["value"] == "1");
  CHECK(doc["results"][0]["delta"] == "a*b");
  doc = Json::parse(run({"integrate", "builtin:fermionic-line", "--elem", "xi", "--json"}).out);
  CHECK(doc["results"][0]["value"] == "1");
}

TEST_CASE("tensors note the W deviation") {
  Json doc = Json::parse(run({"tensors", "builtin:dqs", "--json"}).out);
  bool noted = false;
  for (const auto& r : doc["results"]) noted = noted || r.contains("note");
  CHECK(noted);
}

TEST_CASE("exit codes") {
  CHECK(run({"check", "builtin:dqs"}).code == 0);
  CHECK(run({"integrate", "builtin:cyclic-group", "--n", "3", "--elem", "1"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"integrate", "builtin:dqs"}).code == 2);
  CHECK(run({"integrate", "builtin:dqs", "--elem", "zz"}).code == 2);
  CHECK(run({"integrate", "builtin:dqs", "--elem", "a", "--side", "up"}).code == 2);
  CHECK(run({"check", "builtin:nope"}).code == 2);
  CHECK(run({"check", "builtin:q-plane:9"}).code == 2);
  CHECK(run({"check", "/nonexistent/file.hopf"}).code == 2);
  CHECK(run({"integrate", "builtin:fermionic-line", "--elem", "xi", "--method", "trace"}).code == 2);
}

TEST_CASE("domain errors exit 1") {
  std::string path = std::string(HOPFINT_GOLDEN_DIR) + "/../bad-counit.hopf.tmp";
  std::ofstream(path) << "algebra z2\ngenerators g\nrelations\n  g*g = 1\nbasis 1 g\n"
                         "coproduct\n  g -> g(*)g\ncounit\n  g -> 0\nantipode\n  g -> g\n";
  Run r = run({"check", path, "--json"});
  std::remove(path.c_str());
  CHECK(r.code == 1);
  Json doc = Json::parse(r.out);
  REQUIRE(doc["errors"].size() == 1);
  CHECK(doc["errors"][0]["name"] == "AxiomViolation");
}

TEST_CASE("q evaluation") {
  Json doc = Json::parse(
      run({"integrate", "builtin:q-plane:2", "--elem", "xi1*xi2", "--q-eval", "2", "--json"}).out);
  CHECK(doc["errors"].empty());
  CHECK(doc["results"][0]["value"].is_string());
}
