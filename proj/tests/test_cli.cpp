#include "affbraid/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = affbraid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Result r = run(args);
  return json::parse(r.out);
}

} // namespace

TEST_CASE("eq") {
  const Result r = run({"eq", "A:n=2: s1 s2 s1", "A:n=2: s2 s1 s2"});
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");
  const Result f = run({"eq", "A:n=2: s1", "A:n=2: s2"});
  CHECK(f.code == 1);
  CHECK(f.out == "not equal\n");
  const json j = run_json({"eq", "A:n=2: s1 s2 s1", "A:n=2: s2 s1 s2"});
  CHECK(j["verb"] == "eq");
  CHECK(j["result"]["equal"] == true);
  CHECK(j["inputs"]["x"] == "A:n=2: s1 s2 s1");
}

TEST_CASE("member") {
  CHECK(run({"member", "B:n=2: t s1 t^-1"}).out == "affine (t-sum 0)\n");
  const Result r = run({"member", "B:n=2: phi"});
  CHECK(r.code == 1);
  CHECK(r.out == "not affine (t-sum 1)\n");
  CHECK(run({"member", "A:n=2: s1"}).code == 2);
}

TEST_CASE("map and dynkin and dominating") {
  const Result r = run({"map", "--m", "beta", "--n", "2", "AT:n=2: a3"});
  CHECK(r.code == 0);
  CHECK(r.out == "A:n=2: s2^-1 s1 s2\n");
  CHECK(run({"map", "--m", "dynkin", "--n", "2", "--e", "1", "AT:n=2: s1 s2 a3"}).out ==
        "AT:n=2: s2 a3 s1\n");
  CHECK(run({"dynkin", "--e", "-1", "AT:n=2: s1"}).out == "AT:n=2: a3\n");
  CHECK(run({"dominating", "--n", "3"}).out == "AT:n=3: s3 s2 s1 a4\n");
  CHECK(run({"map", "--m", "nope", "--n", "2", "AT:n=2: a3"}).code == 2);
  CHECK(run({"map", "--m", "beta", "--n", "3", "AT:n=2: a3"}).code == 2);
}

TEST_CASE("decompose, parabolic, kernel, schreier, ne") {
  CHECK(run({"decompose", "B:n=2: t"}).out == "lambda AT:n=2: a3^-1 s2^-1\nk 1\n");
  CHECK(run({"parabolic", "--to", "AT:n=3: a4"}).out == "AT:n=3: s3^-1 a3 s3\n");
  CHECK(run({"parabolic", "--from", "AT:n=3: a3"}).out == "AT:n=3: s3 a4 s3^-1\n");
  CHECK(run({"parabolic", "AT:n=3: a3"}).code == 2);
  CHECK(run({"kernel", "B:n=2: s1 t s1^-1"}).out == "F1\n");
  CHECK(run({"kernel", "B:n=2: s1"}).code == 2);
  CHECK(run({"schreier", "--n", "2", "F0^2 F1 F0^-3"}).out == "g[2,1]\n");
  CHECK(run({"schreier", "--n", "2", "F1"}).code == 2);
  CHECK(run({"ne", "AT:n=2: s1"}).out == "nu 1\nu A:n=2: s1\n");
}

TEST_CASE("closure verbs") {
  CHECK(run({"close", "A:n=2: s1 s2"}).out ==
        "strands 3\ncomponents 1\nexponent_sum 2\nnormalized_bracket 1\n");
  CHECK(run({"bracket", "A:n=1: s1^3"}).out ==
        "bracket -A^5 - A^-3 + A^-7\nnormalized A^-4 + A^-12 - A^-16\n");
  CHECK(run({"--max-strands", "2", "bracket", "A:n=2: s1"}).code == 3);
  CHECK(run({"close", "--max-strands", "2", "A:n=2: s1"}).out ==
        "strands 3\ncomponents 2\nexponent_sum 1\nnormalized_bracket absent\n");
  const json j = run_json({"affine-close", "AT:n=2:"});
  CHECK(j["result"]["components"] == 4);
}

TEST_CASE("moves, search and replay") {
  const Result m = run({"moves", "--which", "append_a", "AT:n=1: s1"});
  CHECK(m.code == 0);
  CHECK(m.out.rfind("start A:n=3:", 0) == 0);
  const json mj = run_json({"moves", "--which", "dynkin", "AT:n=1: s1"});
  CHECK(mj["result"]["valid"] == true);
  CHECK(mj["certificate"].is_string());

  const Result s = run({"search", "A:n=2: s1 s2", "A:n=0:"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("found 2 steps\n", 0) == 0);
  const Result nf = run({"--max-depth", "2", "search", "--max-rank", "2", "A:n=1: s1^3", "A:n=1: s1"});
  CHECK(nf.code == 1);
  CHECK(nf.out == "not found\n");

  const std::string path = "affbraid_cli_replay_test.txt";
  {
    std::ofstream f(path);
    f << "start A:n=1: s1\ndestab +1 A:n=0:\nend A:n=0:\n";
  }
  CHECK(run({"replay", path}).out == "valid (1 steps)\n");
  {
    std::ofstream f(path);
    f << "start A:n=1: s1\ndestab -1 A:n=0:\nend A:n=0:\n";
  }
  const Result bad = run({"replay", path});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("invalid: ", 0) == 0);
  std::remove(path.c_str());
  CHECK(run({"replay", "does-not-exist.txt"}).code == 2);
}

TEST_CASE("relations") {
  const Result r = run({"relations", "--kind", "A", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(1) s1 s3 = s3 s1") != std::string::npos);
  CHECK(r.out.find("(2) s1 s2 s1 = s2 s1 s2") != std::string::npos);
  CHECK(run({"relations", "--kind", "AT", "--n", "2", "--presentation", "parabolic"}).code == 2);
  const json j = run_json({"relations", "--kind", "AT", "--n", "4", "--presentation", "parabolic"});
  CHECK(j["result"]["relations"].size() > 0);
}

TEST_CASE("diagram") {
  CHECK(run({"diagram", "--name", "alpha∘iota=beta", "--n", "2", "AT:n=2: a3"}).out == "commutes\n");
}

TEST_CASE("usage and parse errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Result p = run({"eq", "B:n=2: t s9", "B:n=2: t"});
  CHECK(p.code == 2);
  CHECK(p.err.find("byte 9") != std::string::npos);
  CHECK(run({"eq", "A:n=2: s1", "A:n=3: s1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("resource errors") {
  // Same exponent sum and permutation, so the Artin images must be compared.
  std::string x = "A:n=3:";
  std::string y = "A:n=3:";
  for (int i = 0; i < 30; ++i) {
    x += " s1 s2^-1 s3";
    y += " s3 s2^-1 s1";
  }
  CHECK(run({"--max-endo-len", "20", "eq", x, y}).code == 3);
}

TEST_CASE("json and text agree") {
  const json j = run_json({"decompose", "B:n=2: t s1 t^-1"});
  CHECK(j["result"]["lambda"] == "AT:n=2: a3^-1 s2 a3");
  CHECK(j["result"]["k"] == 0);
  CHECK(run({"decompose", "B:n=2: t s1 t^-1"}).out == "lambda AT:n=2: a3^-1 s2 a3\nk 0\n");
  const json b = run_json({"bracket", "A:n=1: s1^3"});
  CHECK(b["result"]["normalized"] == "A^-4 + A^-12 - A^-16");
}
