#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <nlohmann/json.hpp>

#include "lmg/cli.hpp"
#include "lmg/group.hpp"
#include "random_elements.hpp"

using namespace lmg;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = run(args, out, err);
    return {code, out.str(), err.str()};
  }
}  // namespace

TEST_CASE("cli normalize and eq", "[cli]") {
  auto r = call({"normalize", "-n", "3", "y[20] x1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "x1 y[220]\n");
  CHECK(call({"normalize", "n=3 y[20] x1"}).out == r.out);

  auto eq = call({"eq", "-n", "2", "y[10]", "x0[10] y[100] y[1010]^-1 y[1011]"});
  CHECK(eq.out == "equal\n");
  CHECK(call({"eq", "-n", "2", "y[10]", "y[10]^2"}).out == "different\n");
}

TEST_CASE("cli json output", "[cli]") {
  auto r = call({"normalize", "--json", "-n", "2", "y[10]^-2 x0"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["arity"] == 2);
  CHECK(j["ys"].size() == 1);
  CHECK(j["ys"][0][1] == -2);
  CHECK(j["f"].is_array());

  auto e = call({"exponent", "--json", "-n", "3", "y[20]", "2(0)*"});
  REQUIRE(e.code == kExitOk);
  CHECK(nlohmann::json::parse(e.out)["exponent"] == 1);
}

TEST_CASE("cli eval, transduce, embed, abelianize, draw", "[cli]") {
  auto ev = call({"eval", "-n", "2", "y[001]", "00101101(0)*"});
  CHECK(ev.out.rfind("0011001", 0) == 0);
  auto tr = call({"transduce", "-n", "2", "0 0 1 y 0 1 1 0"});
  CHECK(tr.out.rfind("0 0 1 1 0 0 1 y\n", 0) == 0);
  CHECK(call({"embed", "--from", "2", "--to", "3", "y[10] x0"}).out == "x0 y[220]\n");
  CHECK(call({"abelianize", "-n", "2", "y[10] x0 x0[1]^-1"}).out == "(1, -1, 1)\n");
  auto d = call({"draw", "-n", "3", "y[20]^-1 x1"});
  CHECK(d.code == kExitOk);
  CHECK(d.out.find("digraph") != std::string::npos);
  CHECK(d.out.find("cluster_y") != std::string::npos);
  CHECK(d.out.find("fillcolor=white") != std::string::npos);
}

TEST_CASE("cli exit codes", "[cli]") {
  auto bad_y = call({"normalize", "-n", "3", "y[1]"});
  CHECK(bad_y.code == kExitDomain);
  CHECK(bad_y.err.find("digit sum") != std::string::npos);
  CHECK(call({"normalize", "-n", "3", "x0 w"}).code == kExitParse);
  CHECK(call({"normalize", "x0"}).code == kExitParse);
  CHECK(call({"frobnicate"}).code == kExitParse);
  CHECK(call({"embed", "--from", "3", "--to", "4", "x0"}).code == kExitDomain);
  CHECK(call({"eval", "-n", "2", "x0", "(0"}).code == kExitParse);
  auto j = call({"normalize", "--json", "-n", "3", "x0 w"});
  CHECK(nlohmann::json::parse(j.out)["error"] == "parse");
  CHECK(call({"--help"}).code == kExitOk);
}

TEST_CASE("cli selftest", "[cli]") {
  auto r = call({"selftest"});
  INFO(r.out);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("printing and parsing normal forms round trips", "[cli]") {
  std::mt19937 rng(31);
  for (int k = 0; k < 500; ++k) {
    int const                          n = 2 + k % 4;
    std::bernoulli_distribution        coin;
    std::uniform_int_distribution<int> gen(0, n - 2);
    GroupWord                          w(n);
    for (int j = 0; j < 6; ++j) {
      YSign const s = coin(rng) ? YSign::plus() : YSign::minus();
      if (coin(rng)) {
        Word idx(n);
        do {
          idx = testing_support::random_word(rng, n, 1, 4);
        } while (!is_y_index(idx));
        w.push_back(GroupLetter::y(idx, s));
      } else {
        w.push_back(GroupLetter::x(gen(rng), testing_support::random_word(rng, n, 0, 2), s));
      }
    }
    auto const g = normalize(w);
    CHECK(normalize(parse_group_word(to_string(g), n)) == g);
    CHECK(to_group_word(g) == parse_group_word(to_string(g), n));
  }
}
