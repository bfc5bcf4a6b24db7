#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const char* tag) {
  std::string tmpl = std::string("/tmp/iceq_cli_") + tag + "_XXXXXX";
  std::vector<char> buf(tmpl.begin(), tmpl.end());
  buf.push_back('\0');
  int fd = mkstemp(buf.data());
  if (fd >= 0) close(fd);
  return std::string(buf.data());
}

RunResult run_cli(const std::string& args) {
  std::string out_path = temp_path("out");
  std::string err_path = temp_path("err");
  std::string cmd = std::string(ICEQ_CLI_PATH) + " " + args + " > " + out_path + " 2> " +
                    err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::string data(const std::string& name) { return std::string(ICEQ_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("concentration verdicts and exit codes") {
  RunResult r2 = run_cli("concentration " + data("example2.iqp"));
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("CONCENTRATED") != std::string::npos);

  RunResult r1 = run_cli("concentration " + data("example1.iqp"));
  CHECK(r1.exit_code == 0);  // verdicts are data, not errors
  CHECK(r1.out.find("NOT_CONCENTRATED") != std::string::npos);
  CHECK(r1.out.find("witness vertex 3") != std::string::npos);

  RunResult expect_ok = run_cli("concentration --expect concentrated " + data("example2.iqp"));
  CHECK(expect_ok.exit_code == 0);
  RunResult expect_bad = run_cli("concentration --expect concentrated " + data("example1.iqp"));
  CHECK(expect_bad.exit_code == 1);
  RunResult expect_not = run_cli("concentration --expect not-concentrated " + data("example1.iqp"));
  CHECK(expect_not.exit_code == 0);
}

TEST_CASE("machine reports are byte-identical across runs") {
  for (const std::string cmd :
       {std::string("concentration --json "), std::string("jacobian --json "),
        std::string("ginzburg --json ")}) {
    RunResult a = run_cli(cmd + data("example2.iqp"));
    RunResult b = run_cli(cmd + data("example2.iqp"));
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"input_digest\"") != std::string::npos);
    CHECK(a.out.find("elapsed") == std::string::npos);
  }
}

TEST_CASE("ginzburg reports the canonical generator table") {
  RunResult r = run_cli("ginzburg " + data("example1.iqp"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("t_3  -2  3  3  -b*b") != std::string::npos);
  CHECK(r.out.find("d^2 = 0: pass") != std::string::npos);
}

TEST_CASE("jacobian report carries certificate, dimension, basis") {
  RunResult r = run_cli("jacobian " + data("example2.iqp"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("JacobiFinite{dim=7}") != std::string::npos);
  CHECK(r.out.find("c'b'") != std::string::npos);

  RunResult rj = run_cli("jacobian --json " + data("example2.iqp"));
  CHECK(rj.out.find("\"structure_constants\"") != std::string::npos);
  CHECK(rj.out.find("\"idempotents\"") != std::string::npos);
}

TEST_CASE("jacobian honors a user arrow order") {
  RunResult r = run_cli("jacobian --order \"c',b',a'\" " + data("example2.iqp"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("dimension: 7") != std::string::npos);
  RunResult bad = run_cli("jacobian --order \"c',b'\" " + data("example2.iqp"));
  CHECK(bad.exit_code == 2);
}

TEST_CASE("preprojective and auslander commands") {
  RunResult p = run_cli("preprojective --dynkin A2");
  CHECK(p.exit_code == 0);
  CHECK(p.out.find("classical presentation dimension: 4") != std::string::npos);
  CHECK(p.out.find("verified isomorphism: yes") != std::string::npos);

  RunResult pf = run_cli("preprojective " + data("example1.iqp"));
  CHECK(pf.exit_code == 0);
  // double quiver of the A3-shaped underlying quiver: dim 10
  CHECK(pf.out.find("dimension: 10") != std::string::npos);

  RunResult a = run_cli("auslander --dynkin A2");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("dim 5, gldim 2") != std::string::npos);
  CHECK(a.out.find("dim 7, gldim 3") != std::string::npos);

  RunResult n2 = run_cli("auslander --dynkin A2 -n 2");
  CHECK(n2.exit_code == 2);
  CHECK(n2.err.find("n = 1") != std::string::npos);
}

TEST_CASE("every malformed input exits 2 with a one-line diagnostic") {
  const char* files[] = {
      "bad_duplicate_vertex.iqp",  "bad_duplicate_arrow.iqp",  "bad_dangling_source.iqp",
      "bad_frozen_vertex_unknown.iqp", "bad_frozen_arrow_endpoint.iqp", "bad_loop.iqp",
      "bad_noncycle_potential.iqp", "bad_malformed_rational.iqp", "bad_broken_json.iqp",
      "bad_unknown_key.iqp", "bad_noncomposable_cycle.iqp"};
  for (const char* f : files) {
    RunResult r = run_cli("jacobian " + data(std::string("bad/") + f));
    CHECK(r.exit_code == 2);
    // one line, naming the offending file
    CHECK(r.err.find(f) != std::string::npos);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
}

TEST_CASE("check runs the paper-examples suite") {
  RunResult r = run_cli("check --suite paper-examples");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("10/10 criteria passed") != std::string::npos);
  RunResult bad = run_cli("check --suite nope");
  CHECK(bad.exit_code == 2);
}
