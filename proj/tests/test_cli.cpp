// Drives the kleinjac executable end to end: exit codes, report schema, determinism.

#include <json.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(KLEINJAC_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::path(KLEINJAC_TEST_TMP);
    fs::create_directories(dir);
    return dir / name;
}

json load(const fs::path& p) {
    std::ifstream in(p);
    return json::parse(in);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void expect_schema(const json& report) {
    ASSERT_TRUE(report.contains("checks"));
    EXPECT_EQ(report.at("tool"), "kleinjac");
    EXPECT_FALSE(report.at("version").get<std::string>().empty());
    for (const auto& c : report.at("checks")) {
        EXPECT_FALSE(c.at("name").get<std::string>().empty());
        EXPECT_FALSE(c.at("anchor").get<std::string>().empty());
        EXPECT_TRUE(c.at("status") == "pass" || c.at("status") == "fail");
        EXPECT_TRUE(c.contains("witness"));
    }
}

}  // namespace

TEST(Cli, SigmaActionGenusTwo) {
    const auto path = scratch("sigma2.json");
    const auto r = run("sigma-action --genus 2 --json " + path.string());
    EXPECT_EQ(r.exit_code, 0) << r.out;
    const json j = load(path);
    expect_schema(j);
    EXPECT_TRUE(j.at("passed").get<bool>());
    bool found = false;
    for (const auto& c : j.at("checks"))
        if (c.at("name") == "g2.inv_condition") {
            found = true;
            EXPECT_EQ(c.at("witness").at("transformed").dump(), "[[1,0,-2,-1],[0,1,-1,-2],[0,0,-1,0],[0,0,0,-1]]");
        }
    EXPECT_TRUE(found);
}

TEST(Cli, SigmaActionGenusOne) {
    const auto r = run("sigma-action --genus 1");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_NE(r.out.find("sigma = [[1,0],[0,-1]]"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("sigma-action --genus 0").exit_code, 2);
    EXPECT_EQ(run("divisor-suite --torsion 3").exit_code, 2);
    EXPECT_EQ(run("components").exit_code, 2);
    EXPECT_EQ(run("components --genus 2 --oracle grid=x").exit_code, 2);
    EXPECT_EQ(run("nonsense").exit_code, 2);
    EXPECT_EQ(run("verify --genus-range 3..1").exit_code, 2);
    EXPECT_EQ(run("components --re2 /nonexistent/file.json").exit_code, 2);
}

TEST(Cli, ComponentsByGenus) {
    const auto p4 = scratch("comp4.json");
    ASSERT_EQ(run("components --genus 4 --json " + p4.string()).exit_code, 0);
    EXPECT_EQ(load(p4).at("checks").at(0).at("witness").at("count"), 1);

    const auto p5 = scratch("comp5.json");
    ASSERT_EQ(run("components --genus 5 --json " + p5.string()).exit_code, 0);
    const json w = load(p5).at("checks").at(0).at("witness");
    EXPECT_EQ(w.at("count"), 2);
    EXPECT_EQ(w.at("offsets").at(1).dump(), R"(["1/2","0","0","0","0"])");
}

TEST(Cli, ComponentsFromFileWithOracle) {
    const auto in = scratch("zero2.json");
    std::ofstream(in) << R"({"genus": 2, "parity": "even", "re2": [[0, 0], [0, 0]]})";
    const auto out = scratch("zero2_report.json");
    const auto r = run("components --re2 " + in.string() + " --oracle grid=4 --json " + out.string());
    EXPECT_EQ(r.exit_code, 0) << r.out;
    const json j = load(out);
    EXPECT_EQ(j.at("checks").at(0).at("witness").at("count"), 4);
    EXPECT_EQ(j.at("checks").at(1).at("witness").at("oracle"), 4);
}

TEST(Cli, DivisorSuite) {
    const auto out = scratch("div4.json");
    const auto r = run("divisor-suite --torsion 4 --max-support 2 --json " + out.string());
    EXPECT_EQ(r.exit_code, 0) << r.out;
    const json w = load(out).at("checks").at(0).at("witness");
    EXPECT_EQ(w.at("T1"), 4);
    EXPECT_EQ(w.at("T2"), 4);

    const auto r2 = run("divisor-suite --torsion 2 --max-support 2");
    EXPECT_EQ(r2.exit_code, 0);
    EXPECT_NE(r2.out.find("T1 2, T2 2"), std::string::npos) << r2.out;
}

TEST(Cli, VerifyIsDeterministicAndComplete) {
    const auto a = scratch("verify.json");
    ASSERT_EQ(run("verify --seed 7 --json " + a.string()).exit_code, 0);
    const std::string first = slurp(a);
    ASSERT_EQ(run("verify --seed 7 --json " + a.string()).exit_code, 0);
    EXPECT_TRUE(first == slurp(a)) << "reports differ between identical runs";

    const json j = load(a);
    expect_schema(j);
    EXPECT_GE(j.at("checks").size(), 12U);
    EXPECT_TRUE(j.at("passed").get<bool>());
    for (const auto& c : j.at("checks"))
        if (c.at("name") == "component_counts")
            EXPECT_EQ(c.at("witness").at("counts").dump(), R"({"1":2,"2":1,"3":2,"4":1,"5":2,"6":1})");
}
