#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "alphalab/cli.hpp"

using namespace alphalab;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int status;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int s = runCli(args, out, err);
    return {s, out.str(), err.str()};
}

bool hasLine(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

}  // namespace

TEST(Cli, TableB2) {
    const CliRun r = run({"table", "B2", "121", "--format", "text"});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(hasLine(r.out, "1.1: -(10)")) << r.out;
    EXPECT_TRUE(hasLine(r.out, "# CharTable: computed")) << r.out;
    EXPECT_TRUE(hasLine(run({"table", "B2", "w0"}).out, "2.: (10202)"));
}

TEST(Cli, NonCrystallographicIsCapabilityError) {
    const CliRun r = run({"table", "H3", "1"});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("non-crystallographic types unsupported"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"table", "B2"}).status, 2);
    EXPECT_EQ(run({"table", "B2", "1", "--format", "xml"}).status, 2);
    EXPECT_EQ(run({"table", "B2", "13"}).status, 2);  // no generator 3
    EXPECT_EQ(run({"survey", "B2", "--max-length", "3"}).status, 2);
    EXPECT_EQ(run({"export", "B2", "--kind", "Nope"}).status, 2);
    EXPECT_EQ(run({"table", "F4", "1"}).status, 2);
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, ConjectureG2NotesExemption) {
    const CliRun r = run({"conjecture", "G2"});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(hasLine(r.out, "PASS conjecture G2")) << r.out;
    EXPECT_NE(r.out.find("phi2,2 fails positivity"), std::string::npos);
    EXPECT_NE(r.out.find("G2-to-A2"), std::string::npos);
}

TEST(Cli, VerifyB3) {
    const CliRun r = run({"verify", "B3"});
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"survey", "B3", "--format", "json"},
             {"survey", "C3", "--jobs", "3", "--format", "csv"},
             {"table", "G2", "121", "--format", "json"},
             {"export", "B3", "--kind", "GreenTable"}}) {
        const CliRun a = run(args), b = run(args);
        EXPECT_EQ(a.status, 0);
        EXPECT_EQ(a.out, b.out) << args[0];
    }
    auto serial = run({"survey", "C3", "--format", "csv"}).out;
    EXPECT_EQ(serial, run({"survey", "C3", "--jobs", "3", "--format", "csv"}).out);
}

TEST(Cli, CacheNeverChangesOutput) {
    const fs::path d = fs::temp_directory_path() / ("alphalab_cli_cache_" + std::to_string(::getpid()));
    fs::remove_all(d);
    const std::vector<std::string> args{"survey", "B3", "--format", "json"};
    ::unsetenv("ALPHALAB_CACHE_DIR");
    const std::string plain = run(args).out;
    ::setenv("ALPHALAB_CACHE_DIR", d.c_str(), 1);
    const std::string fill = run(args).out;
    const std::string hit = run(args).out;
    EXPECT_TRUE(hasLine(run({"cache", "status"}).out, "table cache enabled: 2 entries"));
    EXPECT_EQ(run({"cache", "clear"}).status, 0);
    ::unsetenv("ALPHALAB_CACHE_DIR");
    EXPECT_EQ(plain, fill);
    EXPECT_EQ(plain, hit);
    fs::remove_all(d);
}

TEST(Cli, ExportIngestDataBackend) {
    const fs::path d = fs::temp_directory_path() / ("alphalab_cli_data_" + std::to_string(::getpid()));
    fs::remove_all(d);
    for (const char* k : {"CharTable", "HeckeValues", "FourierBlocks", "SpringerData", "GreenTable"}) {
        const std::string f = (d / (std::string(k) + ".json")).string();
        ASSERT_EQ(run({"export", "C3", "--kind", k, "-o", f}).status, 0);
        ASSERT_EQ(run({"--data-dir", (d / "store").string(), "ingest", f}).status, 0);
    }
    const std::string dir = (d / "store").string();
    const CliRun a = run({"survey", "C3", "--format", "csv"});
    const CliRun b = run({"survey", "C3", "--format", "csv", "--backend", "data", "--data-dir", dir});
    EXPECT_EQ(b.status, 0) << b.err;
    EXPECT_EQ(a.out, b.out);
    const CliRun t = run({"table", "C3", "3212", "--backend", "data", "--data-dir", dir});
    EXPECT_TRUE(hasLine(t.out, "2.1: -(102)")) << t.out;
    EXPECT_NE(t.out.find("# GreenTable: data: "), std::string::npos);
    fs::remove_all(d);
}
