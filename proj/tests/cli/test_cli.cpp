#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/stat.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

using nlohmann::json;

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
};

CmdResult run_raw(const std::string& cmd) {
  CmdResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

CmdResult run(const std::string& args) {
  return run_raw(std::string(BDHD_CLI_PATH) + " " + args);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const char* kT1 = "/tmp/bdhd_cli_t1.json";

void write_t1() {
  std::ofstream out(kT1);
  out << R"({"space":{"kind":"interval"},
"defenders":[{"speed":1.0,"loc":[0.0]},{"speed":0.5,"loc":[1.0]}],
"events":[{"loc":[0.9],"t":0.5},{"loc":[0.5],"t":0.6},{"loc":[0.1],"t":1.2}],
"meta":{}})";
}

}  // namespace

TEST_CASE("generate is deterministic and schema-complete") {
  const std::string a = "/tmp/bdhd_cli_gen_a.json";
  const std::string b = "/tmp/bdhd_cli_gen_b.json";
  const std::string flags =
      "generate --topology circle --size 6.2831853 --lambda 5 --events 50 "
      "--defenders 5 --vmax 5 --seed 7 -o ";
  CHECK(run(flags + a).code == 0);
  CHECK(run(flags + b).code == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  const json j = json::parse(text);
  CHECK(j["space"]["kind"] == "circle");
  CHECK(j["events"].size() == 50);
  CHECK(j["defenders"].size() == 5);
  CHECK(j["meta"]["seed"] == 7);
}

TEST_CASE("generate without a topology is a usage error") {
  CHECK(run("generate --lambda 5 --events 3 2>&1").code == 2);
  CHECK(run("generate --topology interval --size 2 --events 3 2>&1").code == 2);
  CHECK(run("nonsense-subcommand 2>&1").code == 2);
}

TEST_CASE("solve reports counts per algorithm") {
  write_t1();
  for (const char* algo : {"dp", "edp", "bnb", "oracle"}) {
    const auto res = run(std::string("solve --algo ") + algo + " " + kT1 + " 2>/dev/null");
    CHECK(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j["report"]["count"] == 3);
    CHECK(j["report"]["algo"] == algo);
    CHECK(j["report"]["rate"] == doctest::Approx(1.0));
    if (std::string(algo) == "oracle") {
      CHECK(j["plan"].is_null());
    } else {
      CHECK(j["plan"]["count"] == 3);
      CHECK(j["plan"]["assignments"].size() == 2);
    }
  }
}

TEST_CASE("solve writes wall time to stderr, not the payload") {
  write_t1();
  const auto res = run(std::string("solve --algo dp ") + kT1 + " 2>/dev/null");
  CHECK(res.out.find("wall_ms") == std::string::npos);
  const auto with_err = run(std::string("solve --algo dp ") + kT1 + " 2>&1 1>/dev/null");
  CHECK(with_err.out.find("wall_ms") != std::string::npos);
}

TEST_CASE("oracle refuses large instances with exit 1") {
  const std::string big = "/tmp/bdhd_cli_big.json";
  REQUIRE(run("generate --topology circle --size 6.2831853 --lambda 5 --events 100 "
              "--defenders 3 --vmax 5 --seed 1 -o " + big).code == 0);
  const auto res = run("solve --algo oracle " + big + " 2>&1");
  CHECK(res.code == 1);
  CHECK(res.out.find("error") != std::string::npos);
}

TEST_CASE("dp refusal points at edp") {
  const std::string big = "/tmp/bdhd_cli_big5.json";
  REQUIRE(run("generate --topology circle --size 6.2831853 --lambda 4 --events 64 "
              "--defenders 5 --vmax 5 --seed 1 -o " + big).code == 0);
  const auto res = run("solve --algo dp " + big + " 2>&1");
  CHECK(res.code == 1);
  CHECK(res.out.find("edp") != std::string::npos);
}

TEST_CASE("export-lp emits the model") {
  write_t1();
  const auto res = run(std::string("export-lp ") + kT1);
  CHECK(res.code == 0);
  CHECK(res.out.substr(0, 9) == "Maximize\n");
  CHECK(res.out.find("x_1 + x_2 + x_3") != std::string::npos);
  CHECK(res.out.find("e_0_2_1") != std::string::npos);

  const std::string path = "/tmp/bdhd_cli_model.lp";
  CHECK(run(std::string("export-lp ") + kT1 + " -o " + path).code == 0);
  CHECK(slurp(path) == res.out);
}

TEST_CASE("simulate respects the horizon flag") {
  write_t1();
  const auto inf = run(std::string("simulate --horizon inf ") + kT1 + " 2>/dev/null");
  CHECK(inf.code == 0);
  CHECK(json::parse(inf.out)["count"] == 3);

  const auto tight = run(std::string("simulate --horizon 0.01 ") + kT1 + " 2>/dev/null");
  CHECK(json::parse(tight.out)["count"] == 0);

  CHECK(run(std::string("simulate --horizon 0 ") + kT1 + " 2>&1").code == 2);
  CHECK(run(std::string("simulate --horizon -2 ") + kT1 + " 2>&1").code == 2);
}

TEST_CASE("simulate can dump trajectories as csv") {
  write_t1();
  const std::string traj = "/tmp/bdhd_cli_traj.csv";
  const auto res = run(std::string("simulate --horizon inf --traj-csv ") + traj + " " +
                       kT1 + " 2>/dev/null");
  CHECK(res.code == 0);
  const std::string csv = slurp(traj);
  CHECK(csv.substr(0, 13) == "defender,t,x\n");
  CHECK(csv.find("\n1,0,0") != std::string::npos);
  CHECK(csv.find("\n2,") != std::string::npos);
}

TEST_CASE("experiment writes primary and timing csv") {
  const std::string out = "/tmp/bdhd_cli_exp.csv";
  const auto res =
      run("experiment --preset heterogeneity --runs 1 --seed 9 -o " + out + " 2>&1");
  CHECK(res.code == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("preset,topology,size,k,", 0) == 0);
  CHECK(csv.find("heterogeneity,square") != std::string::npos);
  CHECK(csv.find("wall_ms") == std::string::npos);
  const std::string timing = slurp(out + ".timing");
  CHECK(timing.find("wall_ms") != std::string::npos);

  // Identical invocation reproduces the primary csv byte for byte.
  const std::string out2 = "/tmp/bdhd_cli_exp2.csv";
  REQUIRE(run("experiment --preset heterogeneity --runs 1 --seed 9 -o " + out2 + " 2>&1").code ==
          0);
  CHECK(slurp(out2) == csv);

  CHECK(run("experiment --preset sideways 2>&1").code == 2);
}

TEST_CASE("bad input files fail with the right codes") {
  // A missing path is caught by flag validation (usage), malformed content at runtime.
  CHECK(run("solve --algo dp /tmp/bdhd_no_such_file.json 2>&1").code == 2);
  const std::string junk = "/tmp/bdhd_cli_junk.json";
  {
    std::ofstream out(junk);
    out << "{\"events\": 7}";
  }
  const auto res = run("solve --algo dp " + junk + " 2>&1");
  CHECK(res.code == 1);
}

TEST_CASE("external algo without a solver command fails cleanly") {
  write_t1();
  const auto res = run_raw(std::string("env -u BDHD_EXTERNAL_SOLVER ") + BDHD_CLI_PATH +
                           " solve --algo external " + kT1 + " 2>&1");
  CHECK(res.code == 1);
}

TEST_CASE("external algo runs a stub solver end to end") {
  write_t1();
  const std::string stub = "/tmp/bdhd_cli_stub.sh";
  {
    std::ofstream out(stub);
    out << "#!/bin/sh\n"
        << "printf 'x_1 1\\nx_2 1\\nx_3 1\\ne_0_1_2 1\\ne_0_2_1 1\\ne_2_3_1 1\\n' > \"$5\"\n";
  }
  ::chmod(stub.c_str(), 0755);
  const auto res = run_raw(std::string("env BDHD_EXTERNAL_SOLVER=") + stub + " " + BDHD_CLI_PATH +
                           " solve --algo external " + kT1 + " 2>/dev/null");
  CHECK(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j["report"]["count"] == 3);
  CHECK(j["report"]["status"] == "external");
}
