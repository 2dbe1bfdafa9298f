#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "strata/io.hpp"
#include "strata/kappa.hpp"
#include "strata/slide.hpp"

using namespace strata;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string command = env + (env.empty() ? "" : " ") + std::string(STRATA_CLI) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

}  // namespace

TEST_CASE("slide") {
  const Run psi = run("slide --flavor psi --k 1,0,2 --format json");
  REQUIRE(psi.status == 0);
  const StrataSum parsed = sum_from_json(Json::parse(psi.out));
  CHECK(parsed.size() == 3);
  CHECK(parsed == slide_set_psi({1, 0, 2}));

  const Run empty = run("slide --flavor omega --k 2,1,0 --format json");
  CHECK(empty.status == 0);
  CHECK(sum_from_json(Json::parse(empty.out)).empty());

  const Run text = run("slide --k 0,0,2");
  CHECK(text.status == 0);
  CHECK(text.out.find("(ab)-(c)-(123)") != std::string::npos);
  CHECK(run("slide --k 1,0,2 --format dot").out.rfind("graph S {", 0) == 0);
}

TEST_CASE("usage and bound errors") {
  CHECK(run("slide --k 2,1").status == 2);
  CHECK(run("slide --k x,1").status == 2);
  CHECK(run("slide").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("slide --k 1,0,2 --format yaml").status == 2);
  CHECK(run("slide --k 0,0,0,0,0,0,0,8").status == 3);
  CHECK(run("slide --k 0,0,3 --max-n 2").status == 3);
  CHECK(run("slide --k 0,0,3", "STRATA_MAX_N=2").status == 3);
  CHECK(run("slide --k 0,0,3", "STRATA_MAX_N=3").status == 0);
  CHECK(run("kappa --n 2 --i 1 --r 2").status == 2);
  CHECK(run("kappa --n 2 --i 5").status == 2);
  CHECK(run("patterns tree --word 2431").status == 2);
}

TEST_CASE("tour") {
  const Run tour = run("tour --k 0,0,2,2 --format json");
  REQUIRE(tour.status == 0);
  const Json j = Json::parse(tour.out);
  CHECK(j.at("size") == 6);
  const Run csv = run("tour --k 0,0,2,2 --format csv");
  CHECK(csv.status == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 7);
}

TEST_CASE("kappa") {
  const Run json = run("kappa --n 2 --i 1 --format json");
  REQUIRE(json.status == 0);
  CHECK(sum_from_json(Json::parse(json.out)) == kappa_expansion(2, 1));
  const Run text = run("kappa --n 2 --i 1");
  CHECK(text.out.find("2  D(ab|c12)") != std::string::npos);
  const Run degrees = run("kappa --n 2 --i 1 --route degrees --format json");
  CHECK(degrees.out == json.out);
  const Run r = run("kappa --n 2 --r 2,2 --format json");
  CHECK(r.status == 0);
  CHECK(sum_from_json(Json::parse(r.out)) == generalized_kappa(2, {2, 2}));
}

TEST_CASE("oracle") {
  CHECK(run("oracle --check slides --n 4").status == 0);
  CHECK(run("oracle --check main --k 1,0,2 --flavor psi").status == 0);
  CHECK(run("oracle --check properties --n 4 --seed 3 --cases 200").status == 0);
  CHECK(run("oracle --check all --n 3").status == 0);
  CHECK(run("oracle --check nonsense").status == 2);
}

TEST_CASE("patterns") {
  const Run avoiders = run("patterns avoiders --n 4");
  CHECK(avoiders.status == 0);
  CHECK(std::count(avoiders.out.begin(), avoiders.out.end(), '\n') == 15);
  const Run tree = run("patterns tree --word 2143");
  CHECK(tree.status == 0);
  CHECK(parse_tree_text(4, tree.out.substr(0, tree.out.find('\n'))) ==
        parse_tree_text(4, "{ab|c1234, ab2|c134, abc24|13, abc2|134}"));
  const Run word = run("patterns word --n 4 --tree \"{ab|c1234, ab2|c134, abc24|13, abc2|134}\"");
  CHECK(word.out == "2143\n");
  CHECK(run("patterns bell --n 5").status == 0);
}

TEST_CASE("counts") {
  const Run csv = run("counts --n 3 --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out.find("1,0,2") != std::string::npos);
  const Run json = run("counts --n 3 --format json");
  CHECK(json.status == 0);
  CHECK_FALSE(Json::parse(json.out).is_null());
}

TEST_CASE("export") {
  const Run dot = run("export --n 2 --tree \"D(ab|c12)\" --format dot");
  CHECK(dot.status == 0);
  CHECK(dot.out == to_dot(parse_tree_text(2, "D(ab|c12)")));
  const Run json = run("export --n 2 --tree \"D(ab|c12)\" --format json");
  CHECK(tree_from_json(Json::parse(json.out)) == parse_tree_text(2, "D(ab|c12)"));

  const auto path = std::filesystem::temp_directory_path() / "strata_cli_sum.json";
  {
    std::ofstream file(path);
    file << to_json(kappa_expansion(2, 1)).dump();
  }
  const Run back = run("export --input " + path.string() + " --format json");
  CHECK(back.status == 0);
  CHECK(sum_from_json(Json::parse(back.out)) == kappa_expansion(2, 1));
  std::filesystem::remove(path);
  CHECK(run("export --input /nonexistent/file.json").status == 2);
}

TEST_CASE("identical invocations give identical bytes") {
  for (const char* args : {"slide --k 1,1,1,1 --format json", "tour --k 0,1,1,2 --format json",
                           "kappa --n 3 --i 2 --format dot", "counts --n 4 --format csv"}) {
    const Run first = run(args);
    const Run second = run(args);
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
  }
}
