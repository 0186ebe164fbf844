// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

const std::string cli = MATUSITA_CLI;
const std::string data_dir = MATUSITA_TEST_DATA;

struct Run {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "matusita_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

Run run(const std::string& args) {
  const auto err_path = scratch("stderr.txt");
  const std::string cmd = cli + " " + args + " 2>" + err_path.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out, slurp(err_path)};
}

}  // namespace

TEST_CASE("exact") {
  const Run r = run("exact --mu1 0 --sigma1 1 --mu2 3 --sigma2 1");
  CHECK(r.status == 0);
  CHECK(r.out == "0.324652\n");
  CHECK(r.err.find("seed: 20240001") != std::string::npos);

  const Run q = run("exact --mu1 0 --sigma1 1 --mu2 0 --sigma2 10 --quadrature --tol 1e-9");
  CHECK(q.status == 0);
  CHECK(q.out == "0.444994\n");

  CHECK(run("exact --mu1 0 --sigma1 -1 --mu2 3 --sigma2 1").status == 1);
  CHECK(run("exact --mu1 0 --sigma1 1 --mu2 3").status == 1);
}

TEST_CASE("estimate") {
  const std::string files = "--x " + data_dir + "/x_fixture.txt --y " + data_dir + "/y_fixture.txt";
  const Run r = run("estimate " + files);
  CHECK(r.status == 0);
  CHECK(r.out.rfind("estimator,value\n", 0) == 0);
  CHECK(r.out.find("rho1_equal_variance,0.882497\n") != std::string::npos);
  CHECK(r.out.find("proposed_avg,0.878196\n") != std::string::npos);
  CHECK(r.out.find("kernel,") != std::string::npos);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 7);

  const Run one = run("estimate " + files + " --estimator rho2_equal_means");
  CHECK(one.out == "estimator,value\nrho2_equal_means,1.000000\n");

  const auto out = scratch("estimate.csv");
  const Run to_file = run("estimate " + files + " --out " + out.string());
  CHECK(to_file.status == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(out) == r.out);

  const Run bad = run("estimate --x " + data_dir + "/bad_line3.txt --y " + data_dir +
                      "/y_fixture.txt");
  CHECK(bad.status == 1);
  CHECK(bad.err.find("bad_line3.txt:3:") != std::string::npos);
  CHECK(run("estimate " + files + " --estimator rho9").status == 1);
  CHECK(run("estimate --x " + data_dir + "/single.txt --y " + data_dir + "/y_fixture.txt")
            .status == 1);
}

TEST_CASE("simulate") {
  const std::string cfg = "simulate --config " + data_dir + "/scenario.cfg";
  const Run a = run(cfg + " --workers 1");
  const Run b = run(cfg + " --workers 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.err.find("seed: 7") != std::string::npos);
  CHECK(a.out.rfind("table_id,scenario,", 0) == 0);

  const Run reseeded = run(cfg + " --workers 1 --seed 8");
  CHECK(reseeded.err.find("seed: 8") != std::string::npos);
  CHECK(reseeded.out != a.out);

  const Run text = run(cfg + " --format text");
  CHECK(text.status == 0);
  CHECK(text.out.find("(20,30)") != std::string::npos);

  CHECK(run("simulate --config " + data_dir + "/x_fixture.txt").status == 1);
  CHECK(run("simulate --config /nonexistent.cfg").status == 1);
}

TEST_CASE("reproduce at small R") {
  const auto csv1 = scratch("rep1.csv");
  const auto csv2 = scratch("rep2.csv");
  const auto diff = scratch("diff.csv");
  const Run a = run("reproduce --seed 7 --r 20 --workers 1 --out " + csv1.string() +
                    " --full-csv " + diff.string());
  const Run b = run("reproduce --seed 7 --r 20 --workers 4 --out " + csv2.string());
  CHECK((a.status == 0 || a.status == 2));
  CHECK(a.status == b.status);
  CHECK(a.out == b.out);
  CHECK(slurp(csv1) == slurp(csv2));
  CHECK(!slurp(diff).empty());
  CHECK(a.err.find("seed: 7") != std::string::npos);
  CHECK(a.out.find("checked cells") != std::string::npos);
  const bool failing = a.out.find("Failing cells") != std::string::npos;
  CHECK(failing == (a.status == 2));

  CHECK(run("reproduce --r 0").status == 1);
}

TEST_CASE("profile") {
  const Run r = run("profile --mu1 0 --sigma1 1 --mu2 3 --sigma2 1 --points 3");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("x,f1,f2,sqrt_f1f2\n", 0) == 0);
  CHECK(run("profile --mu1 0 --sigma1 1 --mu2 3 --sigma2 1 --points 1").status == 1);
}

TEST_CASE("usage") {
  CHECK(run("").status == 1);
  CHECK(run("exact --mu1 0 --sigma1 1 --mu2 3 --sigma2 1 --colour").status == 1);
  CHECK(run("frobnicate").status == 1);
  for (const char* sub : {"exact", "estimate", "simulate", "reproduce", "profile"}) {
    const Run h = run(std::string(sub) + " --help");
    INFO(sub);
    CHECK(h.status == 0);
    CHECK(h.out.find("20240001") != std::string::npos);
  }
  const Run h = run("simulate --help");
  for (const char* flag : {"--config", "--workers", "--seed", "--format", "--out"}) {
    CHECK(h.out.find(flag) != std::string::npos);
  }
}

TEST_CASE("repeated runs are byte identical") {
  const std::string args = "profile --mu1 0 --sigma1 1 --mu2 2.5 --sigma2 4 --points 64";
  CHECK(run(args).out == run(args).out);
  const std::string est =
      "estimate --x " + data_dir + "/x_fixture.txt --y " + data_dir + "/y_fixture.txt";
  CHECK(run(est).out == run(est).out);
}
