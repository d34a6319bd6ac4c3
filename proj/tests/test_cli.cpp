#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "osborn/autotopy.hpp"
#include "osborn/catalog.hpp"
#include "osborn/enumerator.hpp"
#include "osborn/verifier.hpp"
#include "osborn/loop_io.hpp"
#include "osborn/nuclei.hpp"
#include "osborn/report.hpp"

using namespace osborn;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("osborn-cli-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string save(const std::string& name, const LoopTable& L) { return write(name, loop_to_string(L)); }

}  // namespace

TEST_CASE("cli: validate, props, nuclei") {
  const std::string z4 = save("z4.txt", catalog::cyclic(4));
  Run r = run({"validate", z4});
  CHECK(r.code == 0);
  r = run({"props", z4, "--json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["associative"] == true);
  r = run({"nuclei", z4, "--json"});
  CHECK(Json::parse(r.out)["nucleus"].size() == 4);

  const std::string bad = write("bad.txt", "3\n1 2 3\n2 3 1\n3 1 1\n");
  r = run({"validate", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("row 3") != std::string::npos);
  CHECK(run({"validate", (scratch() / "missing.txt").string()}).code == 2);
  CHECK(run({"validate", z4, "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("cli: order-5 witness props match the library") {
  const std::string dir = (scratch() / "w5").string();
  Run r = run({"enumerate", "--order", "5", "--filter", "nonassociative", "--limit", "1", "--out", dir});
  REQUIRE(r.code == 0);
  const std::string f = (fs::path(dir) / "loop-00001.txt").string();
  const LoopTable L = read_loop_file(f);
  r = run({"nuclei", f, "--json"});
  CHECK(Json::parse(r.out) == Json::parse(dump(to_json(nuclei_report(L)))));
}

TEST_CASE("cli: aut") {
  const std::string z3 = save("z3.txt", catalog::cyclic(3));
  Run r = run({"--json", "aut", z3, "--automorphisms"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["order"] == 2);
  r = run({"aut", save("z4r.txt", catalog::cyclic(4)), "--regular", "--json"});
  CHECK(Json::parse(r.out)["P"]["order"] == 4);
  CHECK(run({"aut", z3, "--triples", "--regular"}).code == 2);
  CHECK(run({"aut", z3}).code == 2);

  EnumSpec s;
  s.order = 5;
  r = run({"aut", save("l5.txt", enumerate_loops(s).back()), "--triples", "--oracle", "--json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["oracleAgrees"] == true);

  CHECK(run({"aut", save("z7.txt", catalog::cyclic(7)), "--regular", "--oracle"}).code == 3);
}

TEST_CASE("cli: holomorph") {
  const std::string z3 = save("hz3.txt", catalog::cyclic(3));
  Run r = run({"holomorph", z3, "--aum", "full"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# ", 0) == 0);
  CHECK(read_loop_string(r.out).order() == 6);

  const std::string out = (scratch() / "triv.txt").string();
  CHECK(run({"holomorph", z3, "--aum", "trivial", "--out", out}).code == 0);
  CHECK(loops_isomorphic(read_loop_file(out), catalog::cyclic(3)));

  const std::string z5 = save("hz5.txt", catalog::cyclic(5));
  r = run({"holomorph", z5, "--gens", "1,3,5,2,4"});
  CHECK(read_loop_string(r.out).order() == 20);
  r = run({"holomorph", z5, "--gens", "1,3,5,2,4", "--gens", "1,3,2,4,5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("generator 2") != std::string::npos);
  CHECK(run({"holomorph", z5, "--aum", "full", "--gens", "1,3,5,2,4"}).code == 2);
}

TEST_CASE("cli: verify") {
  EnumSpec s;
  s.order = 5;
  const auto loops = enumerate_loops(s);
  // first non-Osborn loop
  std::string non;
  for (const auto& L : loops)
    if (!osborn_check(L, OsbornVariant::eq1)[0].holds()) {
      non = save("non.txt", L);
      break;
    }
  Run r = run({"verify", non, "--aum", "trivial"});
  CHECK(r.code == 1);
  CHECK(r.out.find("osborn.eq1: fails --") != std::string::npos);

  const std::string z4 = save("vz4.txt", catalog::cyclic(4));
  r = run({"verify", z4, "--checks", "eq4,thm34", "--json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["passed"] == true);

  CHECK(run({"verify", z4, "--budget", "4"}).code == 3);
  CHECK(run({"verify", z4, "--checks", "bogus"}).code == 2);

  // the full suite on Z3: thm39 and thm310.c fail, so the exit code is 1
  r = run({"verify", save("vz3.txt", catalog::cyclic(3)), "--aum", "full", "--checks", "all"});
  CHECK(r.code == 1);
  CHECK(r.out.find("thm39.equality: fails") != std::string::npos);
}

TEST_CASE("cli: enumerate") {
  const fs::path dir = scratch() / "e5";
  Run r = run({"enumerate", "--order", "5", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 56);
  CHECK(Json::parse(r.out)["emitted"] == 56);

  const fs::path d1 = scratch() / "e1";
  CHECK(run({"enumerate", "--order", "1", "--out", d1.string()}).code == 0);
  CHECK(std::distance(fs::directory_iterator(d1), fs::directory_iterator{}) == 1);

  r = run({"enumerate", "--order", "4", "--stream", "-"});
  std::istringstream in(r.out);
  CHECK(read_loop_stream(in).size() == 4);
  CHECK(Json::parse(r.err)["emitted"] == 4);

  r = run({"enumerate", "--order", "5", "--filter", "osborn", "--limit", "1"});
  const Json j = Json::parse(r.out);
  CHECK(j["emitted"] == 1);
  EnumSpec five;
  five.order = 5;
  const auto all5 = enumerate_loops(five);
  std::size_t first = 0;
  while (!osborn_check(all5.at(first), OsbornVariant::eq1)[0].holds()) ++first;
  CHECK(j["filters"][0]["firstIndex"] == first + 1);

  CHECK(run({"enumerate", "--order", "9"}).code == 3);
  CHECK(run({"enumerate", "--order", "7"}).code == 3);
  CHECK(run({"enumerate", "--order", "4", "--filter", "moufang"}).code == 2);
}

TEST_CASE("cli: sweep output is independent of the worker count") {
  Run a = run({"sweep", "--max-order", "4", "--jobs", "1"});
  Run b = run({"sweep", "--max-order", "4", "--jobs", "4"});
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["summary"]["pairs"] == 16);
}
