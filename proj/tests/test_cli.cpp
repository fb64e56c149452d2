#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "fintop/covers.hpp"
#include "fintop/set_class.hpp"
#include "json.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FINTOP_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t got; (got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), got);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

const std::string kParticularPoint = std::string(FINTOP_TEST_DATA) + "/particular_point.json";

}  // namespace

TEST_CASE("cli: verify") {
  const Run r = run("verify --n 3 --suite lemma-2.1");
  CHECK(r.status == 0);
  CHECK(r.out == "lemma-2.1: 29 checked, 0 violations, 0 vacuous\n");
  const Run j = run("verify --n 2 --suite lemma-2.1,prop-p1 --format json");
  CHECK(j.status == 0);
  int lines = 0;
  for (std::size_t pos = 0; (pos = j.out.find('\n', pos)) != std::string::npos; ++pos) ++lines;
  CHECK(lines == 2);
  CHECK(nlohmann::json::parse(j.out.substr(0, j.out.find('\n')))["suite"] == "lemma-2.1");
  CHECK(run("verify --n 3 --suite nope").status == 2);
  CHECK(run("verify").status == 2);
}

TEST_CASE("cli: verify from a census file") {
  const std::string tmp = "/tmp/fintop_cli_census_n3.jsonl";
  REQUIRE(run("census --n 3 --out " + tmp).status == 0);
  const Run r = run("verify --census " + tmp + " --suite all");
  CHECK(r.status == 0);
  CHECK(r.out.find("lemma-2.1: 29 checked, 0 violations") != std::string::npos);
  CHECK(run("verify --census /nonexistent/file --suite all").status == 2);
}

TEST_CASE("cli: inspect the three-point example") {
  const Run r = run("inspect --space " + kParticularPoint + " --facets alpha,gc");
  CHECK(r.status == 0);
  CHECK(r.out.find("T^α = {∅,{a},{a,b},{a,c},X}\n") != std::string::npos);
  CHECK(r.out.find("gc_mismatch=true") != std::string::npos);
  CHECK(run("inspect --space " + std::string(FINTOP_TEST_DATA) + "/not_closed.json").status == 2);
  CHECK(run("inspect --space " + std::string(FINTOP_TEST_DATA) + "/not_closed.json --complete").status == 0);
  CHECK(run("inspect --space " + kParticularPoint + " --facets bogus").status == 2);
  CHECK(run("inspect --space /nonexistent.json").status == 2);
}

TEST_CASE("cli: inspect facets compose") {
  for (const std::string fmt : {"text", "json"}) {
    const Run all = run("inspect --space " + kParticularPoint + " --facets all --format " + fmt);
    REQUIRE(all.status == 0);
    std::vector<std::string> facets{"opens", "closed", "min-nbhd", "alpha", "gc", "canonical-alpha-cover", "profile"};
    for (auto k : fintop::kAllClassKinds) facets.emplace_back(fintop::to_string(k));
    for (auto p : fintop::kAllProperties) facets.emplace_back(fintop::to_string(p));
    std::string joined;
    for (const auto& f : facets) {
      const Run one = run("inspect --space " + kParticularPoint + " --facets " + f + " --format " + fmt);
      CHECK(one.status == 0);
      joined += one.out;
    }
    CHECK(all.out == joined);
  }
}

TEST_CASE("cli: census") {
  const Run r = run("census --n 1 --out -");
  CHECK(r.status == 0);
  const auto nl = r.out.find('\n');
  REQUIRE(nl != std::string::npos);
  CHECK(nlohmann::json::parse(r.out.substr(0, nl))["count"] == 1);
  CHECK(r.out.find('\n', nl + 1) == r.out.size() - 1);
  CHECK(run("census --n 9 --out -").status == 2);
  CHECK(run("census --out -").status == 2);
}

TEST_CASE("cli: search") {
  const Run r = run("search gc-mismatch --max-n 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("A = {a,b} is g-closed in T = {∅,{a},X} but not g-closed in T^α = {∅,{a},{a,b},{a,c},X}") !=
        std::string::npos);
  CHECK(r.out.find("none for n <= 2") != std::string::npos);
  CHECK(run("search gc-mismatch --max-n 3 --format json").status == 0);
  CHECK(run("search not-a-predicate --max-n 3").status == 2);
  CHECK(run("search gc-mismatch --max-n 12").status == 2);
}

TEST_CASE("cli: identical invocations give identical output") {
  for (const std::string& args : std::vector<std::string>{"verify --n 3 --suite all", "census --n 3 --out -", "search non-nodec --max-n 3",
                                 "inspect --space " + kParticularPoint + " --facets all --format json"})
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("cli: usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("--help").status == 0);
}
