#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(LCF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect_golden(const std::string& name, const std::string& args) {
  const CliRun r = run(args);
  EXPECT_EQ(r.code, 0) << args;
  const auto path = std::filesystem::path(LCF_GOLDEN_DIR) / (name + ".json");
  ASSERT_TRUE(std::filesystem::exists(path)) << path;
  EXPECT_EQ(r.out, slurp(path)) << name;
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--field 3 expand --rational 't/(t^2+1)'").code, 0);
  EXPECT_EQ(run("--field 3 expand --rational 't/(t^2+'").code, 2);
  EXPECT_EQ(run("--field 4 expand --rational '1/t'").code, 2);
  EXPECT_EQ(run("expand").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("--field 2 decompose --mode hall --series '0 ; 1 0 0 @3'").code, 2);
  EXPECT_EQ(run("--field 2 example --rounds 5 --precision 50").code, 2);
  EXPECT_EQ(run("--field 3 verify --series '0 ; 1 0 0 @3' --beta '0 ; 2 0 1 @3' "
                "--gamma '0 ; 2 1 2 @3'")
                .code,
            1);
  EXPECT_EQ(run("--field 3 verify --series '0 ; 1 0 0 @3' --beta '0 ; 2 0 1 @3' "
                "--gamma '0 ; 2 0 2 @3'")
                .code,
            0);
}

TEST(Cli, OutputIsDeterministic) {
  const std::string args = "--field 5 --seed 11 fuzz --suite hall --trials 30";
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);

  const auto file = std::filesystem::temp_directory_path() / "lcf_cli_test_output.json";
  std::filesystem::remove(file);
  const CliRun c = run("--output " + file.string() + " " + args);
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "");
  EXPECT_EQ(slurp(file), a.out);
  std::filesystem::remove(file);
}

TEST(Cli, PrettyDiffersOnlyInWhitespace) {
  const CliRun compact = run("--field 3 expand --rational 't/(t^2+1)'");
  const CliRun pretty = run("--pretty --field 3 expand --rational 't/(t^2+1)'");
  std::string squeezed;
  bool in_string = false;
  for (char ch : pretty.out) {
    if (ch == '"') in_string = !in_string;
    if (!in_string && (ch == ' ' || ch == '\n')) continue;
    squeezed += ch;
  }
  std::string compact_trimmed = compact.out;
  while (!compact_trimmed.empty() && compact_trimmed.back() == '\n') compact_trimmed.pop_back();
  EXPECT_EQ(squeezed, compact_trimmed);
}

TEST(Cli, Golden) {
  expect_golden("expand_rational_f3", "--field 3 expand --rational 't/(t^2+1)'");
  expect_golden("expand_series_f2", "--field 2 expand --series '0 ; 1 0 0 @3'");
  expect_golden("decompose_hall_f3", "--field 3 decompose --series '0 ; 1 0 0 @3'");
  expect_golden("decompose_f2", "--field 2 decompose --mode f2 --series '0 ; 1 0 0 @3'");
  expect_golden("decompose_shulga_f3",
                "--field 3 decompose --mode shulga --rational '(t^2+1)/t^3'");
  expect_golden("example_f2_5", "--field 2 example --rounds 5");
  expect_golden("fuzz_detlem_f3", "--field 3 --seed 1 fuzz --suite detlem --trials 20");
}
