#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Run cli(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd;
  if (!stdin_text.empty()) cmd = "printf '%s' '" + stdin_text + "' | ";
  cmd += std::string(CSR_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), got);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json first_json(const std::string& out) { return nlohmann::json::parse(out.substr(0, out.find('\n'))); }

}  // namespace

TEST(Cli, ConstructGolden) {
  auto r = cli("construct h1 --ell 3 --n 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "I~{?GKF@w\n");
  auto h2 = cli("construct h2 --ell 10 --n 36");
  EXPECT_EQ(h2.code, 0);
  EXPECT_EQ(h2.out.substr(0, 2), "t~");  // order 53 = 63 + 53 = 't'
  EXPECT_EQ(cli("construct h1 --ell 1 --n 5").code, 2);
  EXPECT_EQ(cli("construct h1 --ell 2 --n 50").code, 0);
  EXPECT_EQ(cli("construct h3 --ell 2 --n 5").code, 2);
}

TEST(Cli, ConstructThenCheck) {
  auto g = cli("construct h2 --ell 3 --n 6").out;
  auto r = cli("check --ell 3 --n 6", g);
  EXPECT_EQ(r.code, 0);
  auto env = first_json(r.out);
  EXPECT_EQ(env["kind"], "freeness");
  EXPECT_TRUE(env["verified"].get<bool>());
}

TEST(Cli, CheckRefutes) {
  auto k6 = cli("check --ell 3 --n 6", "E~~w\n");
  EXPECT_EQ(k6.code, 1);
  EXPECT_EQ(first_json(k6.out)["kind"], "even_cycle");
  auto empty = cli("check --ell 3 --n 3", "E???\n");
  EXPECT_EQ(empty.code, 1);
  EXPECT_EQ(first_json(empty.out)["kind"], "star");
}

TEST(Cli, CheckParseErrorPerLine) {
  auto r = cli("check --ell 3 --n 6", "I~{?GKF@w\nnot-graph6\n");
  EXPECT_EQ(r.code, 2);
  auto second = nlohmann::json::parse(r.out.substr(r.out.find('\n') + 1));
  EXPECT_EQ(second["kind"], "error");
  EXPECT_EQ(second["line"], 2);
}

TEST(Cli, CheckBudgetExhausted) {
  auto r = cli("check --ell 5 --n 7 --node-budget 2", "IheA@GUAo\n");
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, Formula) {
  auto r = cli("formula --ell 10 --n 36");
  EXPECT_EQ(r.code, 0);
  auto env = first_json(r.out);
  EXPECT_EQ(env["payload"]["t"], 2);
  EXPECT_EQ(env["payload"]["f"], 53);
  EXPECT_EQ(env["payload"]["regime"], "star_dominated");
}

TEST(Cli, Ramsey) {
  auto r = cli("ramsey --ell 2 --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_json(r.out)["payload"]["value"], 4);
  auto b = cli("ramsey --ell 4 --n 8");
  EXPECT_EQ(b.code, 3);
  auto env = first_json(b.out);
  EXPECT_FALSE(env["payload"]["final"].get<bool>());
  EXPECT_EQ(env["payload"]["lo"], 15);
  EXPECT_TRUE(env["payload"]["hi"].is_null());
}

TEST(Cli, RamseyDeterministicAcrossWorkers) {
  auto a = cli("ramsey --ell 3 --n 4 --workers 1"), b = cli("ramsey --ell 3 --n 4 --workers 8");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(first_json(a.out)["payload"]["value"], 8);
}

TEST(Cli, Verify) {
  auto r = cli("verify vz --max-order 6");
  EXPECT_EQ(r.code, 0);
  auto env = first_json(r.out);
  EXPECT_EQ(env["kind"], "lemma_report");
  EXPECT_TRUE(env["payload"]["failures"].empty());
  EXPECT_EQ(cli("verify nonsense").code, 2);
  auto t = cli("verify set_system --max-v 6 --max-s 3 --table");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("failures 0"), std::string::npos);
}

TEST(Cli, GraphFilters) {
  const std::string petersen = "IheA@GUAo\n";
  auto ec = cli("ec", petersen);
  EXPECT_EQ(ec.code, 0);
  EXPECT_EQ(first_json(ec.out)["payload"]["length"], 8);
  EXPECT_EQ(cli("blocks", petersen).code, 0);
  EXPECT_EQ(cli("closure", petersen).code, 0);
  EXPECT_EQ(cli("decompose --k 2", "DqK\n").code, 2);  // C5 misses the hypothesis
  EXPECT_EQ(cli("decompose --k 2 --unchecked", "DqK\n").code, 0);
}

TEST(Cli, RevalidateRoundTrip) {
  auto env = cli("ec", "IheA@GUAo\n").out;
  auto r = cli("revalidate", env);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(first_json(r.out)["revalidated"].get<bool>());
  auto bad = cli("revalidate", "{not json}\n");
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, Turan) {
  auto r = cli("turan --order 7 --ell 2 --mode at-least");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_json(r.out)["payload"]["max_edges"], 9);
  EXPECT_EQ(cli("turan --order 11 --ell 2").code, 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("ramsey --ell 3").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}
