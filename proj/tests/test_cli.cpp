#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + GENSHIFT_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t k = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), k);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(GENSHIFT_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, AnalyzeCollapse) {
  const CliRun r = run("--output json analyze --phi " + data("phi_collapse.json") + " --p 1,2,inf");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["fibers"]["bound"], 2);
  EXPECT_EQ(j["fibers"]["empty_fibers"], nlohmann::json::array({2}));
  EXPECT_NEAR(j["norms"][0]["norm"].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(j["norms"][1]["norm"].get<double>(), 1.41421356, 1e-8);
  EXPECT_NEAR(j["norms"][2]["norm"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["norms"][2]["p"], "inf");
}

TEST(Cli, AnalyzeTrivialMaps) {
  for (const char* f : {"phi_identity4.json", "phi_one.json"}) {
    const CliRun r = run("--output json analyze --phi " + data(f) + " --p 1 --p 2.5 --p inf");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["fibers"]["bound"], 1);
    for (const auto& e : j["norms"]) EXPECT_DOUBLE_EQ(e["norm"].get<double>(), 1.0);
  }
  const CliRun text = run("analyze --phi " + data("phi_collapse.json"));
  EXPECT_NE(text.out.find("bound N: 2"), std::string::npos);
}

TEST(Cli, CheckExamples) {
  EXPECT_EQ(run("check --flavor derivation --d " + data("zero3.json")).code, 0);
  const CliRun j = run("--output json check --flavor jordan --d " + data("shift_cycle.json"));
  EXPECT_EQ(j.code, 1);
  EXPECT_FALSE(nlohmann::json::parse(j.out)["witness"].is_null());
  EXPECT_EQ(run("check --flavor psi-lambda --d " + data("shift_cycle.json") + " --psi " +
                data("half_shift_cycle.json") + " --lambda " + data("half_shift_cycle.json"))
                .code,
            0);
  EXPECT_EQ(run("check --flavor psi --d " + data("shift_cycle.json") + " --psi " +
                data("half_shift_cycle.json"))
                .code,
            0);
  EXPECT_EQ(run("check --flavor generalized --D " + data("identity2.json") + " --d " +
                data("identity2.json"))
                .code,
            3);
  EXPECT_EQ(run("check --flavor higher --ds " + data("higher_tail.json")).code, 0);
}

TEST(Cli, ExitCodeContract) {
  EXPECT_EQ(run("analyze --phi " + data("malformed.json")).code, 2);
  EXPECT_EQ(run("analyze --phi " + data("does_not_exist.json")).code, 2);
  EXPECT_EQ(run("analyze --phi " + data("phi_out_of_range.json")).code, 3);
  EXPECT_EQ(run("analyze --phi " + data("phi_collapse.json") + " --p 0.5").code, 3);
  EXPECT_EQ(run("check --flavor jordan --d " + data("zero3.json") + " --psi " + data("zero3.json")).code, 3);
  EXPECT_EQ(run("check --flavor psi-lambda --d " + data("zero3.json")).code, 3);
  EXPECT_EQ(run("check --flavor nonsense --d " + data("zero3.json")).code, 3);
  EXPECT_EQ(run("check --flavor derivation --d " + data("zero3.json") + " --bogus").code, 2);
  EXPECT_EQ(run("check --flavor psi --d " + data("zero3.json") + " --psi " + data("identity2.json")).code, 3);
}

TEST(Cli, SynthAndClassify) {
  const CliRun s = run("--output json synth --phi " + data("phi_cycle.json") + " --r " + data("r3.json"));
  ASSERT_EQ(s.code, 0);
  const auto j = nlohmann::json::parse(s.out);
  EXPECT_TRUE(j["check"]["holds"].get<bool>());
  EXPECT_EQ(j["lambda"]["r"][0], nlohmann::json::parse("[-1.0, 0.0]"));

  EXPECT_EQ(run("classify --phi " + data("phi_cycle.json") + " --psi " + data("half_shift_cycle.json") +
                " --lambda " + data("half_shift_cycle.json"))
                .code,
            0);
  EXPECT_EQ(run("classify --phi " + data("phi_swap.json") + " --psi " + data("identity2.json") +
                " --lambda " + data("identity2.json"))
                .code,
            1);
}

TEST(Cli, Solve) {
  const CliRun t = run("--output json solve --mode twisted --phi " + data("phi_collapse.json"));
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(nlohmann::json::parse(t.out)["dimension"], 0);

  const CliRun g = run("--output json solve --mode generalized --phi " + data("phi_identity4.json") +
                    " --flavor jordan-triple");
  ASSERT_EQ(g.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(g.out)["feasible"].get<bool>());

  const CliRun gs = run("--output json solve --mode generalized --phi " + data("phi_swap.json"));
  EXPECT_FALSE(nlohmann::json::parse(gs.out)["feasible"].get<bool>());

  const CliRun h = run("--output json solve --mode higher --phi " + data("phi_cycle.json") + " --depth 3");
  ASSERT_EQ(h.code, 0);
  const auto levels = nlohmann::json::parse(h.out)["levels"];
  ASSERT_EQ(levels.size(), 3u);
  for (const auto& l : levels) EXPECT_EQ(l["dimension"], 0);

  EXPECT_EQ(run("solve --mode twisted").code, 3);
  EXPECT_EQ(run("solve --mode generalized --phi " + data("phi_swap.json") + " --flavor odd").code, 3);
}

TEST(Cli, VerifySmallAndDeterministic) {
  EXPECT_EQ(run("verify --n-max 1").code, 0);
  const CliRun a = run("verify --n-max 3 --seed 0");
  const CliRun b = run("verify --n-max 3 --seed 0");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("overall: PASS"), std::string::npos);

  // The environment seed overrides --seed.
  const CliRun env = run("--output json verify --n-max 2 --seed 0", "GENSHIFT_SEED=77");
  EXPECT_EQ(nlohmann::json::parse(env.out)["seed"], 77);
  EXPECT_EQ(run("verify --n-max 2", "GENSHIFT_SEED=abc").code, 3);
  EXPECT_EQ(run("verify --n-max 11").code, 3);
}

TEST(Cli, VerifySampledSizes) {
  const CliRun r = run("--output json verify --n-max 5 --seed 3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["sizes"][4]["exhaustive"].get<bool>());
  EXPECT_TRUE(j["sizes"][3]["exhaustive"].get<bool>());
  EXPECT_TRUE(j["passed"].get<bool>());
}
