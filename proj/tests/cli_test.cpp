// Copyright 2026 The qsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "qsd/qsd.hpp"

#ifndef QSD_CLI_PATH
#error "QSD_CLI_PATH must name the qsd executable"
#endif

namespace qsd {
namespace {

namespace fs = std::filesystem;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(QSD_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("qsd_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(CliTest, ReproduceNeedsAKnownTable) {
    EXPECT_EQ(run("reproduce ''").status, 2);
    EXPECT_EQ(run("reproduce T7").status, 2);
    EXPECT_EQ(run("reproduce").status, 2);
}

TEST_F(CliTest, UnknownVerbIsAUsageError) { EXPECT_EQ(run("frobnicate").status, 2); }

TEST_F(CliTest, GleasonPrintsCsv) {
    const auto r = run("gleason --n 56 --d 16 --params alpha,beta");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, solve_possible_enumerator(56, 16, {"alpha", "beta"}).to_csv());
    EXPECT_EQ(run("gleason --n 24 --d 12").status, 1);
}

TEST_F(CliTest, VerifyWritesJsonReport) {
    const std::string file = write("c24.txt", known_code("C_{24,1,1}").record_text + "\n");
    const std::string json = path("report.json");
    const auto r = run("--json " + json + " verify " + file);
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("self-dual=true d=8"), std::string::npos);
    std::ifstream in(json);
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["command"], "verify " + file);
    EXPECT_EQ(j["failed"], 0);
    EXPECT_EQ(j["claims"].size(), 2u);
}

TEST_F(CliTest, CountWordsOnCodeFile) {
    const LinearCode c = known_code("C_{24,1,2}").record().build();
    const std::string file = write("c.txt", to_code_text(c));
    const auto r = run("count-words " + file + " --weights 8,10");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("A8=594"), std::string::npos);
}

TEST_F(CliTest, EquivPrintsVerifiedMap) {
    const std::string a = write("a.txt", known_code("C_{24,w,1}").record_text + "\n");
    const std::string b = write("b.txt", known_code("C_{24,v,1}").record_text + "\n");
    const auto r = run("equiv " + a + " " + b);
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("equivalent\n", 0), 0u);
    const std::string c = write("c.txt", known_code("C_{24,1,2}").record_text + "\n");
    EXPECT_EQ(run("equiv " + a + " " + c).out, "inequivalent\n");
}

TEST_F(CliTest, ClassifyLength24) {
    const auto r = run("--threads 2 classify --n 6 --mu 1 --dmin 8");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("classes=7 "), std::string::npos);
    EXPECT_EQ(run("classify --n 10 --mu 1 --dmin 14").status, 2);
    EXPECT_EQ(run("classify --n 6 --mu 0 --dmin 8").status, 2);
}

TEST_F(CliTest, QuantumFromCodeFile) {
    const std::string file = write("hex.txt", "n=6 k=3\n1001wv\n0101vw\n001111\n");
    const auto r = run("quantum --code " + file);
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("[[6,0,4]]\n", 0), 0u);
}

TEST_F(CliTest, MalformedInputIsRejected) {
    EXPECT_EQ(run("verify " + write("bad.txt", "n=4 k=1\n10x0\n")).status, 2);
    EXPECT_EQ(run("verify " + write("bad2.txt", "type=m4c mu=1 rA=10\n")).status, 2);
    EXPECT_EQ(run("verify " + path("missing.txt")).status, 2);
}

TEST_F(CliTest, SearchIsSeeded) {
    const auto a = run("search --n 6 --mu 1 --dmin 8 --seed 3 --trials 500");
    const auto b = run("search --n 6 --mu 1 --dmin 8 --seed 3 --trials 500");
    ASSERT_EQ(a.status, 0);
    auto strip = [](std::string s) {
        // Drop the timing lines.
        std::string out, line;
        std::istringstream in(s);
        while (std::getline(in, line))
            if (line.find(" s)") == std::string::npos) out += line + "\n";
        return out;
    };
    EXPECT_EQ(strip(a.out), strip(b.out));
}

}  // namespace
}  // namespace qsd
