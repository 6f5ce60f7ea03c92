#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "qppc/code_io.hpp"
#include "qppc/montecarlo.hpp"

using namespace qppc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QPPC_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(QPPC_DATA_DIR) + "/" + name; }

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("qppc_cli_" + std::to_string(::getpid()))) { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string strip_seconds(const std::string& csv) {
  std::string out;
  std::size_t start = 0;
  while (start < csv.size()) {
    const std::size_t end = csv.find('\n', start);
    const std::string line = csv.substr(start, end - start);
    out += line.substr(0, line.rfind(',')) + "\n";
    start = end == std::string::npos ? csv.size() : end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("construct then validate") {
  TempDir tmp;
  CHECK(run("construct --n 6 --p 0.05 -o " + (tmp / "c.json")).status == 0);
  const Run v = run("validate " + (tmp / "c.json"));
  CHECK(v.status == 0);
  CHECK(v.out.find("PASS") != std::string::npos);
  const CodeFile f = parse_code_file(read_text_file(tmp / "c.json"));
  CHECK(f.code().logical_set().size() == 2);
  CHECK(f.info_set.size() == 33);

  CHECK(run("construct --n 1 -o " + (tmp / "one.json")).status == 0);
  const CodeFile one = parse_code_file(read_text_file(tmp / "one.json"));
  CHECK(one.spec().frozen_set().empty());
  CHECK(run("validate " + (tmp / "one.json")).status == 0);
}

TEST_CASE("shipped examples validate") {
  for (const char* name : {"n64_identity.json", "n64_precoded.json", "n256_precoded.json"}) {
    const Run v = run(std::string("validate --json ") + data(name));
    CHECK(v.status == 0);
    CHECK(Json::parse(v.out)["valid"] == true);
  }
}

TEST_CASE("validate reports the failing pair and orphan entry") {
  TempDir tmp;
  write_text_file(tmp / "pair.json", R"({"version":1,"n_exp":3,"info_set":[0,1,2,7],"precoder_offdiag":[]})");
  const Run pair = run("validate " + (tmp / "pair.json"));
  CHECK(pair.status == 1);
  CHECK(pair.out.find("(3,4)") != std::string::npos);

  // (0,3) is a base position of A = {0,1,2,4,7}; its mirror (4,7) is missing.
  write_text_file(tmp / "orphan.json",
                  R"({"version":1,"n_exp":3,"info_set":[0,1,2,4,7],"precoder_offdiag":[[0,3]]})");
  const Run orphan = run("validate " + (tmp / "orphan.json"));
  CHECK(orphan.status == 1);
  CHECK(orphan.out.find("orphan entry (0,3)") != std::string::npos);

  write_text_file(tmp / "bad.json", R"({"version":1,"n_exp":3,"info_set":[0,1,2,4,7],"precoder_offdiag":[],"x":1})");
  const Run bad = run("validate " + (tmp / "bad.json"));
  CHECK(bad.status == 1);
  CHECK(bad.out.find("'x'") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("simulate " + data("n64_identity.json")).status == 2);
  CHECK(run("simulate " + data("n64_identity.json") + " --p 0.9").status == 2);
  CHECK(run("validate /nonexistent/code.json").status == 3);
  CHECK(run("simulate " + data("n64_identity.json") + " --p 0.1 --trials 10 -o /nonexistent/dir/x.csv").status == 3);
}

TEST_CASE("simulate") {
  TempDir tmp;
  const std::string code = data("n64_identity.json");
  const Run zero = run("simulate " + code + " --p 0 --trials 200 --threads 2");
  CHECK(zero.status == 0);
  const auto pts = parse_csv(zero.out);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].failures == 0);

  const std::string flags = " --p 0.03,0.06 --L 4 --trials 800 --seed 5 --min-failures 0";
  CHECK(run("simulate " + code + flags + " --threads 1 -o " + (tmp / "a.csv")).status == 0);
  CHECK(run("simulate " + code + flags + " --threads 8 -o " + (tmp / "b.csv") + " --json " + (tmp / "b.json")).status ==
        0);
  CHECK(run("simulate " + code + flags + " --threads 1 -o " + (tmp / "c.csv")).status == 0);
  const std::string a = read_text_file(tmp / "a.csv");
  CHECK(strip_seconds(a) == strip_seconds(read_text_file(tmp / "b.csv")));
  CHECK(strip_seconds(a) == strip_seconds(read_text_file(tmp / "c.csv")));

  const Json doc = Json::parse(read_text_file(tmp / "b.json"));
  CHECK(doc["points"].size() == 2);
  CHECK(code_file_from_json(doc["code"]).code().spec() == parse_code_file(read_text_file(code)).spec());

  SweepOptions opts;
  opts.trials_per_point = 800;
  opts.min_failures = 0;
  const auto mem = run_sweep(parse_code_file(read_text_file(code)).code(), {0.03, 0.06}, 4, 5, opts);
  const auto parsed = parse_csv(a);
  REQUIRE(parsed.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(parsed[i].same_result(mem[i]));

  write_text_file(tmp / "pair.json", R"({"version":1,"n_exp":3,"info_set":[0,1,2,7],"precoder_offdiag":[]})");
  const Run refused = run("simulate " + (tmp / "pair.json") + " --p 0.1");
  CHECK(refused.status == 1);
  CHECK(refused.out.find("(3,4)") != std::string::npos);
}

TEST_CASE("optimize") {
  TempDir tmp;
  write_text_file(tmp / "cfg.json",
                  R"({"version":1,"population_size":1,"offspring_count":0,"outer_iters":0,"list_size":2,)"
                  R"("p":0.08,"fitness_trials":100,"seed":3,"threads":1})");
  const Run r = run("optimize " + (tmp / "cfg.json") + " -o " + (tmp / "best.json") + " --n 4");
  CHECK(r.status == 0);
  CHECK(run("validate " + (tmp / "best.json")).status == 0);
  CHECK(fs::exists(tmp / "best.json.log"));
  // No set evolution: the output keeps the seed information set.
  const CodeFile best = parse_code_file(read_text_file(tmp / "best.json"));
  CHECK(best.spec() == initial_info_set(4, 0.08));

  write_text_file(tmp / "inf.json", R"({"version":1,"forced_info":[1],"forced_frozen":[1]})");
  const Run inf = run("optimize " + (tmp / "inf.json") + " -o " + (tmp / "x.json") + " --n 4");
  CHECK(inf.status == 1);
  CHECK(inf.out.find("forced") != std::string::npos);
}

TEST_CASE("gatecount") {
  const Run id = run("gatecount --json " + data("n64_identity.json"));
  CHECK(id.status == 0);
  CHECK(Json::parse(id.out)["delta_vs_unprecoded"] == 0);
  const Json pre = Json::parse(run("gatecount --json " + data("n64_precoded.json")).out);
  CHECK(pre["encoder_extra_gates"] == 36);
  CHECK(pre["delta_vs_unprecoded"] == 26);
  CHECK(pre["surface_code_reference_gates"] == 4704);
  const Json big = Json::parse(run("gatecount --json " + data("n256_precoded.json")).out);
  CHECK(big["stab_nnz"] == 5550);
  CHECK(big["total_gates"] == 11100);
  CHECK(run("gatecount " + data("n64_identity.json")).out.find("4704") != std::string::npos);
}
