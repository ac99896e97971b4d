#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SKEWHOOK_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string last_line(const std::string& s) {
  auto end = s.find_last_not_of('\n');
  auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, EnumerateExcited) {
  auto r = run("enumerate excited --outer 5,5,3,3,2 --inner 2,2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "count: 6");
  auto first = r.out.substr(0, r.out.find('\n'));
  auto j = nlohmann::json::parse(first);
  EXPECT_EQ(j["cells"].size(), 4u);
}

TEST(Cli, EnumerateOthers) {
  EXPECT_EQ(last_line(run("enumerate ssyt-min --outer 2,2 --inner 1").out), "count: 2");
  EXPECT_EQ(last_line(run("enumerate oot --outer 2,1 --inner 1").out), "count: 2");
  EXPECT_EQ(last_line(run("enumerate sf --outer 2,2 --inner 1").out), "count: 2");
  EXPECT_EQ(last_line(run("enumerate broken --outer 2,2 --inner 1").out), "count: 2");
  auto ascii = run("enumerate ssyt-min --outer 2,2 --inner 1 --format ascii --limit 1");
  EXPECT_EQ(ascii.out, ". 0\n0 1\n\ncount: 2\n");
}

TEST(Cli, EnumerateErrors) {
  EXPECT_EQ(run("enumerate excited --outer 1,2").code, 2);
  EXPECT_EQ(run("enumerate ssyt-min --outer 2,1 --inner 1").code, 2);
  EXPECT_EQ(run("enumerate nothing --outer 2").code, 2);
  EXPECT_EQ(run("enumerate excited").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, Count) {
  auto all = run("count --outer 2,2 --inner 1 --method all");
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.out, "brute 2\nnhlf 2\noof 2\nminimal 2\n");
  EXPECT_EQ(run("count --outer 3,3 --inner 2 --method oof").out, "3\n");
  EXPECT_EQ(run("count --outer 1 --method hlf").out, "1\n");
  EXPECT_EQ(run("count --outer 2,2 --inner 1 --method hlf").code, 2);
  EXPECT_EQ(run("count --outer 2,1 --inner 1 --method minimal").code, 2);
  EXPECT_EQ(run("count --outer 2,1 --inner 1 --method all").code, 0);
  EXPECT_EQ(run("count --outer 2,2 --method fast").code, 2);
}

TEST(Cli, Verify) {
  auto r = run("verify phi-hg --outer 5,5,3,3,2 --inner 2,2");
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "phi-hg");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["checked"], 6);
  EXPECT_EQ(run("verify qnhlf --outer 2,2 --inner 1 --degree 12").code, 0);
  EXPECT_EQ(run("verify term-counts --sweep-max-size 8").code, 0);
  auto skipped = nlohmann::json::parse(run("verify commutation --outer 2,1 --inner 1").out);
  EXPECT_EQ(skipped["skipped"], 1);
  EXPECT_EQ(run("verify bogus --outer 2").code, 2);
  EXPECT_EQ(run("verify qnhlf").code, 2);
  EXPECT_EQ(run("verify qnhlf --outer 2 --sweep-max-size 3").code, 2);
}

TEST(Cli, MapRoundTrip) {
  auto diagram = write_temp("diagram.json", R"({"cells":[[2,2]],"broken":[[2,1]]})");
  auto r = run("map --outer 2,2 --inner 1 --input " + diagram);
  EXPECT_EQ(r.code, 0);
  auto t = nlohmann::json::parse(r.out);
  EXPECT_EQ(t["rows"].dump(), "[[null,0],[1,1]]");
  auto tableau = write_temp("tableau.json", r.out);
  auto back = run("map --input " + tableau);
  EXPECT_EQ(back.code, 0);
  EXPECT_EQ(nlohmann::ordered_json::parse(back.out).dump(), R"({"cells":[[2,2]],"broken":[[2,1]]})");
  auto bad = write_temp("bad.json", R"({"cells":[[1,2]]})");
  EXPECT_EQ(run("map --outer 2,2 --inner 1 --input " + bad).code, 2);
  EXPECT_EQ(run("map --input /nonexistent/file.json").code, 2);
}

TEST(Cli, HillmanGrassl) {
  auto rpp = write_temp("rpp.json", R"({"outer":[2,2],"values":[[1,1],[1,1]]})");
  auto a = run("hg apply --input " + rpp);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(nlohmann::json::parse(a.out)["values"].dump(), "[[1,0],[0,1]]");
  auto arr = write_temp("arr.json", a.out);
  auto b = run("hg invert --input " + arr);
  EXPECT_EQ(nlohmann::json::parse(b.out)["values"].dump(), "[[1,1],[1,1]]");
  auto bad = write_temp("notrpp.json", R"({"outer":[2],"values":[[1,0]]})");
  EXPECT_EQ(run("hg apply --input " + bad).code, 2);
  auto junk = write_temp("junk.json", "not json");
  EXPECT_EQ(run("hg apply --input " + junk).code, 2);
}
