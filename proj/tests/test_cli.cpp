#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(STSD_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expected_code) {
  const auto r = run("--json " + args);
  CHECK(r.code == expected_code);
  const auto j = json::parse(r.out);
  CHECK(j["schema"] == "stsd-report/1");
  CHECK(j["exit_code"] == expected_code);
  return j;
}

std::string work(const std::string& name) {
  std::filesystem::create_directories(STSD_EXAMPLE_DIR);
  return std::string(STSD_EXAMPLE_DIR) + "/" + name;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("construct wilson-schreiber").code == 2);
  CHECK(run("construct wilson-schreiber --n 11").code == 2);
  CHECK(run("verify --in /nonexistent/file.sts").code == 2);
  CHECK(run("numtheory scan --limit 1").code == 2);
  CHECK(run("analyze chi --in x.sts --exact --heuristic --target 3").code == 2);
}

TEST_CASE("construct then verify") {
  const auto path = work("ws19.sts");
  auto r = run("construct wilson-schreiber --n 19 --out " + path);
  CHECK(r.code == 0);
  r = run("verify --in " + path);
  CHECK(r.code == 0);
  const auto j = run_json("verify --in " + path, 0);
  CHECK(j["command"] == "verify");
  CHECK(j["result"]["ok"] == true);
  CHECK(j["result"]["system"]["v"] == 21);

  const auto bose = work("bose15.sts");
  CHECK(run("construct bose --n 5 --out " + bose).code == 0);
  CHECK(run("construct bose --n 11 --square conjugate --seed 3 --out " + work("bose33c.sts")).code == 0);
  CHECK(run("verify --in " + work("bose33c.sts")).code == 0);
  CHECK(run("analyze cyclic --in " + bose).code == 0);
}

TEST_CASE("invalid system exits 1") {
  const auto path = work("broken.sts");
  write(path, "STS v=7\n0 1 3\n1 2 4\n2 3 5\n3 4 6\n0 4 5\n1 5 6\n0 2 5\n");
  const auto j = run_json("verify --in " + path, 1);
  CHECK(j["result"]["ok"] == false);
  CHECK(j["result"]["system"]["violation_count"].get<int>() > 0);

  write(path, "STS v=7\n0 1\n");
  CHECK(run("verify --in " + path).code == 2);
}

TEST_CASE("fixture and exact chromatic index") {
  const auto sts = work("sts33.sts"), col = work("sts33.col");
  CHECK(run("fixture sts33 --out " + sts + " --colouring-out " + col).code == 0);
  CHECK(run("verify --in " + sts + " --colouring " + col).code == 0);
  const auto j = run_json("analyze chi --in " + sts + " --exact --witness " + col, 0);
  CHECK(j["result"]["chromatic_index"] == 18);

  const auto b = run_json("analyze bound --in " + sts + " --method mod3", 0);
  CHECK(b["result"]["bound"] == 5);
}

TEST_CASE("Fano plane") {
  const auto path = work("fano.sts");
  write(path, "STS v=7\n0 1 3\n1 2 4\n2 3 5\n3 4 6\n0 4 5\n1 5 6\n0 2 6\n");
  auto j = run_json("analyze chi --in " + path + " --exact", 0);
  CHECK(j["result"]["chromatic_index"] == 7);
  CHECK(run("analyze chi --in " + path + " --heuristic --target 6 --restarts 2").code == 1);
  CHECK(run("analyze chi --in " + path + " --heuristic --target 7").code == 0);
}

TEST_CASE("exhausted budget exits 3") {
  const auto path = work("ws19b.sts");
  CHECK(run("construct wilson-schreiber --n 19 --out " + path).code == 0);
  const auto j = run_json("--budget-nodes 2 analyze pcs --in " + path + " --max-disjoint", 3);
  CHECK(j["result"]["status"] == "inconclusive");
}

TEST_CASE("theorem1") {
  auto r = run("theorem1 --v 15");
  CHECK(r.code == 0);
  CHECK(r.out.find("chromatic index >= 9") != std::string::npos);
  auto j = run_json("theorem1 --v 45", 1);
  CHECK(j["result"]["verdict"] == "possible-exception");
  j = run_json("theorem1 --v 21", 0);
  CHECK(j["result"]["verdict"] == "external");
}

TEST_CASE("number theory commands") {
  auto r = run("numtheory scan --limit 600");
  CHECK(r.code == 0);
  CHECK(r.out.find("7 11 19 31 43 73 127 511") != std::string::npos);
  r = run("numtheory scan --limit 200 --negative-psi");
  CHECK(r.out == "n\tpsi\n7\t-12\n11\t-8\n31\t-24\n43\t-12\n127\t-36\n");
  r = run("numtheory profile --n 49");
  CHECK(r.out.find("f=2\n") != std::string::npos);
  CHECK(r.out.find("psi_star=12\n") != std::string::npos);
  CHECK(run("numtheory profile --n 15").code == 2);
  CHECK(run("factorise --n 13").code == 0);
}

TEST_CASE("generate is reproducible") {
  const auto a = run("generate --v 15 --seed 9");
  const auto b = run("generate --v 15 --seed 9");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto dir = work("gen");
  CHECK(run("generate --v 13 --count 3 --seed 1 --out-dir " + dir).code == 0);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 3);
  const auto j = run_json("survey colouring --v 9 --count 3 --seed 2", 0);
  CHECK(j["result"]["histogram"]["m"] == 3);
}
