#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef TPPFORGE_CLI_PATH
#error "TPPFORGE_CLI_PATH must point at the tppforge binary"
#endif

namespace {

struct CmdResult {
  int exit_code;
  std::string output;
};

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + std::string(TPPFORGE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> result_lines(const std::string& text) {
  std::vector<std::string> out;
  for (const std::string& line : lines_of(text))
    if (line.rfind("RESULT ", 0) == 0) out.push_back(line);
  return out;
}

std::string field(const std::string& line, const std::string& key) {
  std::size_t at = line.find(" " + key + "=");
  REQUIRE(at != std::string::npos);
  std::size_t start = at + key.size() + 2;
  std::size_t end = line.find(' ', start);
  return line.substr(start, end == std::string::npos ? end : end - start);
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

std::string csv_to_literal(std::string csv) {
  for (char& ch : csv)
    if (ch == ',') ch = ' ';
  return csv;
}

}  // namespace

TEST_CASE("cli check exit codes and report") {
  std::string trivial = write_temp("cli_trivial.triple", "0\n0\n0\n");
  CmdResult ok = run_cli("check cyclic:1 " + trivial);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("tpp: true") != std::string::npos);

  std::string bad = write_temp("cli_z2.triple", "0 1\n0 1\n0\n");
  CmdResult fail = run_cli("check cyclic:2 " + bad);
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("tpp: false") != std::string::npos);
  CHECK(fail.output.find("q_intersections_trivial: false") != std::string::npos);

  std::string two_lines = write_temp("cli_two.triple", "0\n0\n");
  CHECK(run_cli("check cyclic:2 " + two_lines).exit_code == 2);

  CHECK(run_cli("check nosuchfamily:3 " + trivial).exit_code == 2);
  CHECK(run_cli("check cyclic:2 /nonexistent.triple").exit_code == 2);
}

TEST_CASE("cli normalize") {
  std::string normalized = write_temp("cli_norm.triple", "0 1\n0\n0\n");
  CmdResult same = run_cli("--quiet normalize cyclic:6 " + normalized);
  CHECK(same.exit_code == 0);
  CHECK(same.output == "0 1\n0\n0\n");

  std::string shifted = write_temp("cli_shift.triple", "2 3\n0\n0\n");
  CmdResult moved = run_cli("--quiet normalize cyclic:6 " + shifted);
  CHECK(moved.exit_code == 0);
  CHECK(moved.output == "0 1\n0\n0\n");

  std::string bad = write_temp("cli_badnorm.triple", "0 1\n0 1\n0\n");
  CmdResult rejected = run_cli("normalize cyclic:2 " + bad);
  CHECK(rejected.exit_code == 1);
  CHECK(rejected.output.find("TPP") != std::string::npos);
}

TEST_CASE("cli search flags and round trip") {
  CHECK(run_cli("search cyclic:4 --prune bogus").exit_code == 2);
  CHECK(run_cli("search cyclic:4 --workers 0").exit_code == 2);
  CHECK(run_cli("search").exit_code == 2);

  CmdResult timed = run_cli("search cyclic:6 --time-limit 0");
  CHECK(timed.exit_code == 3);
  CHECK(timed.output.find("completed: false") != std::string::npos);

  CmdResult found = run_cli("search cyclic:4 --prune all");
  CHECK(found.exit_code == 0);
  auto results = result_lines(found.output);
  REQUIRE(!results.empty());

  // A printed best triple feeds back into check with the same verdict.
  std::string triple_text = csv_to_literal(field(results[0], "S")) + "\n" +
                            csv_to_literal(field(results[0], "T")) + "\n" +
                            csv_to_literal(field(results[0], "U")) + "\n";
  std::string path = write_temp("cli_roundtrip.triple", triple_text);
  CmdResult checked = run_cli("check cyclic:4 " + path);
  CHECK(checked.exit_code == 0);
  auto check_results = result_lines(checked.output);
  REQUIRE(check_results.size() == 1);
  CHECK(field(check_results[0], "tpp") == "true");
}

TEST_CASE("cli search workers agree with single worker") {
  CmdResult one = run_cli("search dihedral:4 --workers 1");
  CmdResult four = run_cli("search dihedral:4 --workers 4");
  REQUIRE(one.exit_code == 0);
  REQUIRE(four.exit_code == 0);
  CHECK(result_lines(one.output) == result_lines(four.output));
}

TEST_CASE("cli realize") {
  std::string triple = write_temp("cli_s3.triple", "0 1\n0 2\n0 5\n");
  std::string a = write_temp("cli_a.matrix",
                             "2 2\n"
                             "0 1\n"
                             "0 2\n"
                             "3 -1\n"
                             "7 2\n");
  std::string b = write_temp("cli_b.matrix",
                             "2 2\n"
                             "0 2\n"
                             "0 5\n"
                             "1 4\n"
                             "-2 6\n");
  CmdResult ok = run_cli("realize symmetric:3 " + triple + " " + a + " " + b);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("MATCH") != std::string::npos);
  CHECK(ok.output.find("5 6\n3 40\n") != std::string::npos);

  std::string b_bad_labels = write_temp("cli_bbad.matrix",
                                        "2 2\n"
                                        "2 0\n"
                                        "0 5\n"
                                        "1 4\n"
                                        "-2 6\n");
  CHECK(run_cli("realize symmetric:3 " + triple + " " + a + " " + b_bad_labels).exit_code == 2);

  std::string bad_triple = write_temp("cli_badreal.triple", "0 1\n0 1\n0\n");
  std::string a2 = write_temp("cli_a2.matrix", "2 2\n0 1\n0 1\n1 2\n3 4\n");
  std::string b2 = write_temp("cli_b2.matrix", "2 1\n0 1\n0\n5\n6\n");
  CHECK(run_cli("realize cyclic:2 " + bad_triple + " " + a2 + " " + b2).exit_code == 1);
}

TEST_CASE("cli sweep") {
  CmdResult small = run_cli("sweep --max-order 1");
  CHECK(small.exit_code == 0);
  CHECK(small.output.find("1 groups verified") != std::string::npos);
  CHECK(result_lines(small.output).size() == 1);

  CHECK(run_cli("sweep --max-order 1000").exit_code == 2);
  CHECK(run_cli("sweep --max-order 8", "TPPFORGE_ENUM_CAP=4 ").exit_code == 2);
  CHECK(run_cli("sweep --max-order 1", "TPPFORGE_ENUM_CAP=banana ").exit_code == 2);

  CmdResult quiet = run_cli("--quiet sweep --max-order 4");
  CHECK(quiet.exit_code == 0);
  CHECK(result_lines(quiet.output).empty());

  // The realization spot checks pass for any seed; the summary fields
  // do not depend on it.
  CmdResult reseeded = run_cli("sweep --max-order 4 --seed 99");
  CHECK(reseeded.exit_code == 0);
  CmdResult default_seed = run_cli("sweep --max-order 4");
  CHECK(result_lines(reseeded.output) == result_lines(default_seed.output));
}

TEST_CASE("cli help and missing subcommand") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}
