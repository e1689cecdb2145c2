// Drives the installed command-line binary end to end through a shell.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(JSCCX_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string("/tmp/jsccx_test_") + name;
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("bounds subcommand classifies a BSC problem") {
  const std::string input = write_temp(
      "ok.json",
      R"({"source": {"probs": [0.1, 0.9]}, "channel": {"matrix": [[0.9, 0.1], [0.1, 0.9]]}, "t": 1})");
  const RunResult r = run("bounds --input " + input);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"tightness\": \"Exact\"") != std::string::npos);
  CHECK(r.out.find("\"capacity\"") != std::string::npos);
}

TEST_CASE("validation failures exit with code 2") {
  const std::string uniform = write_temp(
      "uniform.json",
      R"({"source": {"probs": [0.5, 0.5]}, "channel": {"matrix": [[0.9, 0.1], [0.1, 0.9]]}, "t": 1})");
  CHECK(run("bounds --input " + uniform).exit_code == 2);

  const std::string bad_number = write_temp(
      "badnum.json",
      R"({"source": {"probs": [0.1, "0.9"]}, "channel": {"matrix": [[0.9, 0.1], [0.1, 0.9]]}, "t": 1})");
  CHECK(run("bounds --input " + bad_number).exit_code == 2);

  const std::string bad_row = write_temp(
      "badrow.json",
      R"({"source": {"probs": [0.1, 0.9]}, "channel": {"matrix": [[0.9, 0.2], [0.1, 0.9]]}, "t": 1})");
  CHECK(run("bounds --input " + bad_row).exit_code == 2);

  const std::string missing = "/tmp/jsccx_no_such_file.json";
  CHECK(run("bounds --input " + missing).exit_code == 2);
}

TEST_CASE("tandem subcommand reports the ratio") {
  const std::string input = write_temp(
      "tandem.json",
      R"({"source": {"probs": [0.05, 0.95]}, "channel": {"matrix": [[0.96, 0.04], [0.04, 0.96]]}, "t": 1})");
  const RunResult r = run("tandem --input " + input);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"ratio\": 1.99") != std::string::npos);  // ~2.0 at these parameters
}

TEST_CASE("region subcommand emits deterministic CSV") {
  const RunResult a = run("region --channel bsc --kind regions --t 1 --grid 5 --param-lo 0.05 "
                          "--param-hi 0.3 --q-lo 0.05 --q-hi 0.45");
  CHECK(a.exit_code == 0);
  const RunResult b = run("region --channel bsc --kind regions --t 1 --grid 5 --param-lo 0.05 "
                          "--param-hi 0.3 --q-lo 0.05 --q-hi 0.45");
  CHECK(a.out == b.out);
  CHECK(a.out.find("channel_param,q,label") != std::string::npos);
  CHECK(a.out.size() > 200);
}

TEST_CASE("ratio-table subcommand reproduces spot cells") {
  const RunResult r =
      run("ratio-table --t-list 0.75,1.0 --q-list 0.15,0.05 --eps-list 0.12,0.2");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line, row012, row02;
  while (std::getline(in, line)) {
    if (line.rfind("0.12,", 0) == 0) row012 = line;
    if (line.rfind("0.2,", 0) == 0) row02 = line;
  }
  CHECK(row012.find("2.0") != std::string::npos);
  CHECK(row02.find("N/A") != std::string::npos);
}

TEST_CASE("lossy-bounds subcommand") {
  const std::string input = write_temp(
      "lossy.json",
      R"({"source": {"probs": [0.2, 0.8]}, "channel": {"matrix": [[0.9, 0.1], [0.1, 0.9]]}, "t": 1})");
  const RunResult r = run("lossy-bounds --delta 0.05 --input " + input);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"tightness\"") != std::string::npos);
  CHECK(r.out.find("\"rho_zero\": 0.0") != std::string::npos);
}

TEST_CASE("channel-export produces a loadable matrix") {
  const RunResult r = run("channel-export --channel awgn --m 2 --snr-db 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"matrix\"") != std::string::npos);
  const std::string path = write_temp("exported.json", r.out);
  // splice the exported channel into a problem document and classify it
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::string doc = buf.str();
  const auto pos = doc.find('{');
  std::string problem = R"({"source": {"probs": [0.1, 0.9]}, "t": 0.75, )" + doc.substr(pos + 1);
  const std::string pp = write_temp("exported_problem.json", problem);
  CHECK(run("bounds --input " + pp).exit_code == 0);
}

TEST_CASE("power-gain subcommand emits the shift column") {
  const RunResult r = run(
      "power-gain --kind awgn --m-list 1 --t 0.75 --q 0.1 --snr-lo 4 --snr-hi 8 --snr-step 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("db_shift") != std::string::npos);
  CHECK(r.out.find("\n1,4,") != std::string::npos);
}
