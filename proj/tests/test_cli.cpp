#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "arbor/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = arbor::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Splits "a + 2*b - c" into {"a", "2*b", "-c"}.
std::multiset<std::string> terms(std::string text) {
  while (!text.empty() && text.back() == '\n') text.pop_back();
  std::multiset<std::string> out;
  std::string sign;
  std::size_t start = 0;
  for (;;) {
    const auto plus = text.find(" + ", start);
    const auto minus = text.find(" - ", start);
    const auto at = std::min(plus, minus);
    out.insert(sign + text.substr(start, at - start));
    if (at == std::string::npos) break;
    sign = at == minus ? "-" : "";
    start = at + 3;
  }
  return out;
}

}  // namespace

TEST_CASE("product command") {
  auto r = run({"product", "insert", "[[]]", "[[][]]"});
  CHECK(r.code == 0);
  CHECK(terms(r.out) == terms("2*[[][[]]] + [[[][]]] + 3*[[][][]]"));

  r = run({"product", "graft", "[]", "[[]]"});
  CHECK(r.code == 0);
  CHECK(terms(r.out) == terms("[[[]]] + 2*[[][]]"));

  r = run({"product", "graft-sigma", "[]", "[[][]]"});
  CHECK(terms(r.out) == terms("2*[[][[]]] + [[][][]]"));

  r = run({"product", "insert-sigma", "[[]]", "[[][]]"});
  CHECK(terms(r.out) == terms("4*[[][[]]] + [[[][]]] + [[][][]]"));
}

TEST_CASE("product errors") {
  auto r = run({"product", "insert", "[]", "[[]]"});
  CHECK(r.code == 3);
  CHECK(r.err.find("left operand of ▷ must have ≥ 1 edge") != std::string::npos);
  CHECK(r.out.empty());

  CHECK(run({"product", "graft", "[[]", "[]"}).code == 2);
  CHECK(run({"product", "frobnicate", "[]", "[]"}).code == 2);
  CHECK(run({"product", "graft", "[]"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"enumerate", "9"}).code == 3);
}

TEST_CASE("coproduct command") {
  auto r = run({"coproduct", "ck", "[[][[]]]"});
  CHECK(r.code == 0);
  CHECK(terms(r.out) == terms("1 (x) [[][[]]] + [[][[]]] (x) 1 + [] (x) [[[]]] + [[]] (x) [[]] + "
                              "[] (x) [[][]] + [] [[]] (x) [] + [] [] (x) [[]]"));

  r = run({"coproduct", "cem", "[[][[]]]"});
  CHECK(r.code == 0);
  CHECK(terms(r.out) == terms("[] (x) [[][[]]] + [[][[]]] (x) [] + 2*[[]] (x) [[][]] + [[]] (x) [[[]]] + "
                              "[[[]]] (x) [[]] + [[][]] (x) [[]] + [[]] [[]] (x) [[]]"));

  r = run({"coproduct", "cem", "[]"});
  CHECK(r.out == "[] (x) []\n");
  CHECK(run({"coproduct", "cem", "[] [[]]"}).code == 3);
  CHECK(run({"coproduct", "ck", "1"}).out == "1 (x) 1\n");
}

TEST_CASE("json output matches text") {
  const auto text = run({"product", "insert", "[[]]", "[[][]]"});
  const auto js = run({"--format", "json", "product", "insert", "[[]]", "[[][]]"});
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  std::multiset<std::string> from_json;
  for (const auto& item : j) {
    const auto c = item.at("coeff").get<std::string>();
    const auto t = item.at("term").get<std::string>();
    from_json.insert(c == "1/1" ? t : c.substr(0, c.find('/')) + "*" + t);
  }
  CHECK(from_json == terms(text.out));
  CHECK(run({"product", "insert", "[[]]", "[[][]]", "--format", "json"}).out == js.out);
}

TEST_CASE("verify command") {
  auto r = run({"verify", "prelie-insert", "--bound", "1"});
  CHECK(r.code == 4);
  CHECK(r.out.find("INCONCLUSIVE") != std::string::npos);

  r = run({"verify", "derivation", "--max-t-edges", "1", "--max-u-v", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS derivation", 0) == 0);

  r = run({"--format", "json", "verify", "prelie-graft", "--bound", "5"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["identity"] == "prelie-graft");
  CHECK(j[0]["failures"].empty());

  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "prelie-graft", "--bound", "0"}).code == 2);
}

TEST_CASE("enumerate and sigma commands") {
  auto r = run({"enumerate", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "[[[[]]]]\n[[[][]]]\n[[][[]]]\n[[][][]]\n");
  CHECK(run({"enumerate", "1"}).out == "[]\n");
  CHECK(run({"sigma", "[[][][]]"}).out == "6\n");
  CHECK(run({"--format", "json", "sigma", "[[][]]"}).out == "{\"sigma\":2,\"tree\":\"[[][]]\"}\n");
  CHECK(run({"sigma", "[[]"}).code == 2);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "arbor_cli_out.txt";
  std::filesystem::remove(path);
  auto r = run({"--out", path.string(), "sigma", "[[][]]"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "2\n");
  std::filesystem::remove(path);
}
