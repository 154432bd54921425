#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(ALTPATHS_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() / ("altpaths-cli-" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    fs::path dir;
};

}  // namespace

TEST_F(Cli, GenIsReproducible) {
    const auto a = dir / "a.txt";
    const auto b = dir / "b.txt";
    ASSERT_EQ(run("gen random 5 6 3 --seed 9 --out " + a.string()).code, 0);
    ASSERT_EQ(run("gen random 5 6 3 --seed 9 --out " + b.string()).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_TRUE(fs::exists(a.string() + ".json"));
    EXPECT_NE(slurp(a), run("gen random 5 6 3 --seed 10").out);
}

TEST_F(Cli, McIsReproducible) {
    const auto x = run("mc concentration-2path --m 100 --n 8 --trials 3 --seed 4");
    const auto y = run("mc concentration-2path --m 100 --n 8 --trials 3 --seed 4 --threads 2");
    EXPECT_EQ(x.code, 0);
    EXPECT_NE(x.out.find("# schema"), std::string::npos);
    // rows and aggregates agree; only the recorded thread count differs
    EXPECT_EQ(x.out.substr(x.out.find("trial,")), y.out.substr(y.out.find("trial,")));
}

TEST_F(Cli, CountPackSearchVerify) {
    const auto f = dir / "c.txt";
    ASSERT_EQ(run("gen block 4 4 --out " + f.string()).code, 0);
    EXPECT_EQ(run("count " + f.string()).code, 0);
    EXPECT_EQ(run("count " + f.string() + " --length 3 --flavor path").code, 0);
    EXPECT_EQ(run("pack " + f.string() + " --length 3").code, 0);
    const auto s = run("search kappa --m 2 --n 2 --length 2");
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("2"), std::string::npos);
    EXPECT_EQ(run("search alpha --m 3 --t 2").code, 0);
    const auto v = run("verify p3-total --m 2 --n 2");
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("holds"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("count " + (dir / "missing.txt").string()).code, 2);
    const auto bad = dir / "bad.txt";
    std::ofstream(bad) << "bipartite 2 2 2\n1 9\n1 1\n";
    EXPECT_EQ(run("count " + bad.string()).code, 2);
    EXPECT_EQ(run("gen shared-tail 5 10 2").code, 3);
    EXPECT_EQ(run("mc chain-yield --m 300 --n 300").code, 3);
    EXPECT_EQ(run("search kappa --m 6 --n 6 --length 2 --symmetry off").code, 4);
}
