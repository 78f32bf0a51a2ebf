#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + ALTCOH_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  FILE* f = ::popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
  const int status = ::pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, DimTables) {
  auto r = run("dim --n 9 --p 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["dims"].dump(), "[1,0,0,1]");
  r = run("dim --n 11 --p 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["dims"].dump(), "[1,0,0,0]");
  r = run("dim --n 8 --p 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["dims"].dump(), "[1,0,1,1,1,1,1,1,1,1]");
  r = run("--format csv dim --n 9 --p 3 --max-degree 4");
  EXPECT_EQ(r.out, "n,p,d,dim\n9,3,0,1\n9,3,1,0\n9,3,2,0\n9,3,3,1\n9,3,4,0\n");
}

TEST(Cli, ByteIdenticalJson) {
  for (const char* args : {"dim --n 12 --p 3", "subgroups --kind sylow --n 9 --p 3",
                           "--seed 5 fuzz --group cyclic:3 --m 2 --samples 20"}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, Verify) {
  auto r = run("verify ore --m 3 --group cyclic:3");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(parse(r)["passed"].get<bool>());
  r = run("verify ore --m 2 --group sym:3");
  EXPECT_EQ(r.code, 0);
  r = run("verify theorem --n 9 --p 3");
  EXPECT_EQ(r.code, 0) << r.out;
  r = run("verify closed-system --n 9 --p 3");
  EXPECT_EQ(r.code, 0) << r.out;
  r = run("verify weyl --n 9 --p 3");
  EXPECT_EQ(r.code, 0) << r.out;
  r = run("verify kunneth --n 6 --p 3");
  EXPECT_EQ(r.code, 0);
  r = run("--format text verify kunneth --n 12 --p 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, GroupTableFile) {
  const std::string path = ::testing::TempDir() + "c2.json";
  std::ofstream(path) << R"({"size": 2, "mul": [[0, 1], [1, 0]], "identity": 0})";
  EXPECT_EQ(run("verify ore --m 3 --group " + path).code, 0);
  EXPECT_EQ(run("verify ore --m 3 --group /nonexistent/table.json").code, 2);
}

TEST(Cli, Subgroups) {
  auto r = run("subgroups --kind index-vectors --m 2 --p 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["vectors"].dump(), "[[0,1],[3,0]]");
  r = run("subgroups --kind E --n 12 --p 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["rank"], 4);
  EXPECT_EQ(parse(r)["generators"].size(), 4u);
  r = run("subgroups --kind sylow --n 9 --p 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["order"], 81);
  r = run("subgroups --kind T --m 2 --p 3 --index 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["rank"], 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("dim --n 9").code, 2);
  EXPECT_EQ(run("dim --n 9 --p 4").code, 2);
  EXPECT_EQ(run("--format xml dim --n 9 --p 3").code, 2);
  EXPECT_EQ(run("subgroups --kind Q --n 9 --p 3").code, 2);
  EXPECT_EQ(run("verify ore --m 2 --group dihedral:4").code, 2);
  EXPECT_EQ(run("--cap 100 verify closed-system --n 9 --p 3").code, 3);
  EXPECT_EQ(run("verify closed-system --n 9 --p 3", "ALTCOH_ENUMERATION_CAP=100").code, 3);
  EXPECT_EQ(run("--timeout 0.01 verify closed-system --n 9 --p 3").code, 3);
  EXPECT_EQ(run("verify theorem --n 8 --p 2").code, 3);
}
