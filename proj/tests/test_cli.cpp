#include "wh3/cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using wh3::cli::run;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("wh3-test-" + name);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

}  // namespace

TEST(Cli, Normalize) {
    const auto r = call({"normalize", "--algebra", "x", "--expr", "x2*x1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(1/q)*x1*x2 - (s/q)*x3*x3\n");
}

TEST(Cli, NormalizeWithSpecialization) {
    const auto r = call({"normalize", "--algebra", "x", "--expr", "x2*x1", "--spec", "s=0"});
    EXPECT_EQ(r.out, "(1/q)*x1*x2\n");
    const auto v = call({"normalize", "--algebra", "x", "--expr", "x2*x1", "--set", "q=3/2,u=5/7,s=2"});
    EXPECT_EQ(v.out, "(2/3)*x1*x2 - (4/3)*x3*x3\n");
}

TEST(Cli, VerifyAllJson) {
    const auto r = call({"verify", "--all", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 12u);
    EXPECT_EQ(j[0]["check"], "ybe");
    EXPECT_EQ(j[11]["check"], "specializations");
    // Byte-stable for fixed prime and seed.
    EXPECT_EQ(call({"verify", "--all", "--format", "json", "--jobs", "1"}).out, r.out);
}

TEST(Cli, MutationFailsWithCell) {
    const auto r = call({"verify", "--check", "ybe", "--mutate", "omega:11,11=1", "--format", "json"});
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j[0]["status"], "fail");
    EXPECT_EQ(j[0]["counterexample"].get<std::string>().rfind("cell (", 0), 0u);
}

TEST(Cli, StrictExact) {
    EXPECT_EQ(call({"verify", "--check", "determinant"}).code, 0);
    EXPECT_EQ(call({"verify", "--check", "determinant", "--strict-exact"}).code, 1);
    EXPECT_EQ(call({"verify", "--check", "determinant", "--strict-exact", "--mode", "exact"}).code, 0);
}

TEST(Cli, ErrataOff) {
    const auto r = call({"verify", "--check", "rtt,ybe", "--errata", "off"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("[pass] ybe"), std::string::npos);
    EXPECT_NE(r.out.find("[fail] rtt"), std::string::npos);
    // Suite order, not argument order.
    EXPECT_LT(r.out.find("ybe"), r.out.find("rtt"));
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({"verify"}).code, 2);
    EXPECT_EQ(call({"verify", "--check", "nope"}).code, 2);
    EXPECT_EQ(call({"verify", "--all", "--format", "yaml"}).code, 2);
    EXPECT_EQ(call({"verify", "--all", "--mode", "fast"}).code, 2);
    EXPECT_EQ(call({"verify", "--check", "ybe", "--mutate", "omega:99,11=1"}).code, 2);
    const auto bad = call({"normalize", "--algebra", "x", "--expr", "x4"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("x4"), std::string::npos);
    EXPECT_EQ(call({"normalize", "--algebra", "y", "--expr", "x1"}).code, 2);
}

TEST(Cli, Member) {
    EXPECT_EQ(call({"member", "--algebra", "x", "--expr", "x1*x2 - q*x2*x1 - s*x3^2"}).code, 0);
    const auto no = call({"member", "--algebra", "x", "--expr", "x1*x2 - x2*x1", "--format", "json"});
    EXPECT_EQ(no.code, 1);
    EXPECT_FALSE(nlohmann::json::parse(no.out)["member"].get<bool>());
    EXPECT_EQ(call({"member", "--algebra", "t", "--spec", "t31=0,t32=0", "--expr", "(u^2-q)*t12*t33"}).code, 0);
    EXPECT_EQ(call({"member", "--algebra", "x", "--expr", "x1*x2*x3*x1*x2", "--max-degree", "4"}).code, 1);
}

TEST(Cli, Matrix) {
    const auto r = call({"matrix", "--name", "omega", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["order"].size(), 9u);
    EXPECT_EQ(j["entries"][1][3], "q^2/u^2");
    EXPECT_NE(call({"matrix", "--name", "omega-inv"}).out.find("omega-inv[11,11]"), std::string::npos);
}

TEST(Cli, ExportAndReimportGiveIdenticalResults) {
    const auto dir = temp_dir("export");
    ASSERT_EQ(call({"export", "--dir", dir.string()}).code, 0);
    const std::string baseline = call({"verify", "--all", "--format", "json"}).out;
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        ++files;
        const auto r = call({"verify", "--all", "--format", "json", "--algebra-file", entry.path().string()});
        EXPECT_EQ(r.code, 0) << entry.path();
        EXPECT_EQ(r.out, baseline) << entry.path();
    }
    EXPECT_EQ(files, 11);
    std::filesystem::remove_all(dir);
}

TEST(Cli, ImportedFileFeedsNormalize) {
    const auto dir = temp_dir("xx");
    const auto file = dir / "x.json";
    ASSERT_EQ(call({"export", "--algebra", "x", "--out", file.string()}).code, 0);
    const auto r = call({"normalize", "--algebra-file", file.string(), "--expr", "x3*x2"});
    EXPECT_EQ(r.out, "u*x2*x3\n");
    std::filesystem::remove_all(dir);
}
