#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "orbitgr/cli.hpp"

using namespace orbitgr;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("cli basic commands") {
  CHECK(trimmed(run({"orbit", "dual", "B2:3,1,1"}).out) == "C2:2,2");
  CHECK(trimmed(run({"kl", "poly", "A2", "e", "w0"}).out) == "1");
  CHECK(trimmed(run({"kl", "poly", "A3", "s2", "s2s1s3s2"}).out) == "1+q");
  CHECK(trimmed(run({"char", "verma", "--mu0", "0", "--dim", "1", "--den", " -a", "--truncate", "3"}).out) ==
        "1,1,1,1");
  CHECK(trimmed(run({"partition", "transpose", "3,1,1"}).out) == "3,1,1");
  CHECK(trimmed(run({"partition", "collapse", "B", "4,3"}).out) == "3,3,1");
  CHECK(trimmed(run({"partition", "dominance", "2,2", "3,1"}).out) == "below");
  CHECK(trimmed(run({"orbit", "dim", "B2:5"}).out) == "8");
  CHECK(trimmed(run({"weyl", "length", "B2", "s1s2s1"}).out) == "3");
  CHECK(trimmed(run({"goldie", "scale", "--Ay", "4", "--Axy", "2"}).out) == "2");
  CHECK(trimmed(run({"goldie", "mult", "--Abar", "2", "--Axy", "1"}).out) == "2");
  CHECK(trimmed(run({"char", "dim", "--type", "A1", "--levi", "1|1", "--w", "e"}).out) == "1");
  CHECK(trimmed(run({"char", "dim", "--type", "A1", "--levi", "1|1", "--w", "s1"}).out) == "infinite");
}

TEST_CASE("cli exit codes") {
  CHECK(run({"orbit", "dual", "B2:3,1,1"}).code == 0);
  CHECK(run({"kl", "poly", "A2", "x", "e"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"orbit", "dual", "B2:2,2,1"}).code == 2);
  CHECK(run({"goldie", "report", "--type", "A1", "--levi", "1|1", "--w", "s1"}).code == 2);
  CHECK(run({"oracle", "kl", "A3", "--check"}).code == 0);
  CHECK(run({"oracle", "collapse", "C", "3,1", "--check"}).code == 0);
}

TEST_CASE("cli json output") {
  const auto j = nlohmann::json::parse(run({"--json", "orbit", "dual", "B2:3,1,1"}).out);
  CHECK(j["command"] == "orbit dual");
  CHECK(j["result"] == "C2:2,2");
  const auto k = nlohmann::json::parse(run({"--json", "kl", "poly", "A3", "e", "s2s1s3s2"}).out);
  CHECK(k["result"]["coefficients"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("character json round trip") {
  const auto j = nlohmann::json::parse(
      run({"--json", "char", "simple", "--type", "B2", "--levi", "1,1|0", "--w", "s1"}).out);
  const FormalCharacter ch = character_from_json(j["result"]);
  CHECK(character_to_json(ch) == j["result"]);
  FormalCharacter c({1, 0}, {Weight::integral({-1, 1})});
  c.add_term(Weight::parse("1/2,-1/2"), Rational(3, 2));
  const FormalCharacter back = character_from_json(character_to_json(c));
  CHECK(same_character(back, c));
  CHECK(back.numerator() == c.numerator());
}

TEST_CASE("weights and argument splitting") {
  CHECK(parse_symbolic_weight("a") == Weight::integral({1}));
  CHECK(parse_symbolic_weight("-a") == Weight::integral({-1}));
  CHECK(parse_symbolic_weight("2a") == Weight::integral({2}));
  CHECK(parse_symbolic_weight("1/2,3/2") == Weight::parse("1/2,3/2"));
  CHECK(weight_text(Weight::parse("1/2,-3")) == "1/2,-3");
  CHECK(split_command_line(R"(char verma --den " -a" --mu0 0)") ==
        std::vector<std::string>{"char", "verma", "--den", " -a", "--mu0", "0"});
}

TEST_CASE("batch mode") {
  const std::string path = "orbitgr_cli_batch_test.txt";
  {
    std::ofstream f(path);
    f << "# comment\n"
      << "orbit dual B2:3,1,1\n"
      << "\n"
      << "kl poly A2 e w0\n"
      << "orbit dual B2:2,2,1\n";
  }
  const Result r = run({"--batch", path});
  CHECK(r.code == 2);
  CHECK(r.out.find("C2:2,2") != std::string::npos);
  CHECK(r.out.find("\n1\n") != std::string::npos);
  const Result j = run({"--json", "--batch", path});
  std::istringstream lines(j.out);
  std::string line;
  int parsed = 0;
  while (std::getline(lines, line))
    if (!line.empty()) {
      CHECK(nlohmann::json::accept(line));
      ++parsed;
    }
  CHECK(parsed >= 2);
  std::remove(path.c_str());
}
