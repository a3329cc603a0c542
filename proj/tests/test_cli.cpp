#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(GCOLOR_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), got);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path()
              / ("gcolor_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text)
    {
        auto p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }

    static std::string slurp(const std::string& path)
    {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir;
};

const std::string data_dir = GCOLOR_DATA_DIR;

} // namespace

TEST_F(Cli, GenCycle)
{
    auto r = run("gen --family cycle -n 8 --out " + (dir / "c8.edges").string());
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "n=8 m=8\n");
    EXPECT_NE(slurp((dir / "c8.edges").string()).find("# n=8 base=0"), std::string::npos);
}

TEST_F(Cli, GenMaxPlanar)
{
    auto r = run("gen --family max-planar -n 200 --seed 3");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "n=200 m=594\n");
}

TEST_F(Cli, GenErrors)
{
    EXPECT_EQ(run("gen --family regular -n 5 -r 3 --seed 1").status, 2);
    EXPECT_EQ(run("gen --family moebius -n 5").status, 2);
    EXPECT_EQ(run("gen -n 5").status, 2);
    EXPECT_EQ(run("gen --family cycle -n 2").status, 2);
    EXPECT_EQ(run("gen --family er -n 10 -d 20 --seed 1").status, 2);
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
}

TEST_F(Cli, GenIsReproducible)
{
    auto a = (dir / "a.edges").string(), b = (dir / "b.edges").string();
    ASSERT_EQ(run("gen --family er -n 60 -d 5 --seed 9 --out " + a).status, 0);
    ASSERT_EQ(run("gen --family er -n 60 -d 5 --seed 9 --out " + b).status, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    auto r = run("gen --family replica --degrees-from " + a + " --seed 2 --format col --out "
                 + (dir / "r.col").string());
    EXPECT_EQ(r.status, 0);
}

TEST_F(Cli, SolveMyciel5Triple)
{
    auto r = run("solve " + data_dir + "/myciel5.col --algo triple -k 6 --seed 1");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "loss=0 proper=true k=6 seed=1\n");
}

TEST_F(Cli, SolveEmptyGraph)
{
    auto g = write("empty.col", "p edge 4 0\n");
    auto r = run("solve " + g + " --algo discrete -k 1 --seed 0");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "loss=0 proper=true k=1 seed=0\n");
}

TEST_F(Cli, SolveTriangleFull)
{
    auto g = write("k3.edges", "0 1\n1 2\n0 2\n");
    auto col = (dir / "k3.txt").string();
    auto r = run("solve " + g + " --algo full -k 3 --seed 7 --out " + col);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "loss=0 proper=true k=3 seed=7\n");
    std::istringstream in(slurp(col));
    std::vector<int> colors{std::istream_iterator<int>(in), {}};
    ASSERT_EQ(colors.size(), 3u);
    EXPECT_NE(colors[0], colors[1]);
    EXPECT_NE(colors[1], colors[2]);
    EXPECT_NE(colors[0], colors[2]);
}

TEST_F(Cli, SolveGcnWithOverrides)
{
    auto g = write("c5.edges", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    auto trace = (dir / "trace.csv").string(), soft = (dir / "soft.csv").string();
    auto r = run("solve " + g + " --algo mod-gcn -k 3 --seed 2 --set max_epochs=300 --set features=16 --trace-out "
                 + trace + " --soft-out " + soft);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("loss=", 0), 0u);
    EXPECT_EQ(slurp(trace).rfind("epoch,soft_loss,best_soft_loss,hard_loss\n", 0), 0u);
    EXPECT_FALSE(slurp(soft).empty());
    EXPECT_EQ(run("solve " + g + " --algo mod-gcn -k 3 --set depth=7").status, 2);
    EXPECT_EQ(run("solve " + g + " --algo mod-gcn -k 3 --set colour=7").status, 2);
    EXPECT_EQ(run("solve " + g + " --algo full -k 3 --trace-out " + trace).status, 2);
}

TEST_F(Cli, SolveIsReproducible)
{
    auto a = (dir / "a.txt").string(), b = (dir / "b.txt").string();
    auto g = data_dir + "/queen6_6.col";
    ASSERT_EQ(run("solve " + g + " --algo full -k 7 --seed 11 --out " + a).status, 0);
    ASSERT_EQ(run("solve " + g + " --algo full -k 7 --seed 11 --out " + b).status, 0);
    EXPECT_EQ(slurp(a), slurp(b));
}

TEST_F(Cli, SolveErrors)
{
    auto g = write("k2.edges", "0 1\n");
    EXPECT_EQ(run("solve " + g + " --algo magic -k 2").status, 2);
    EXPECT_EQ(run("solve " + g + " --algo full -k 0").status, 2);
    EXPECT_EQ(run("solve " + (dir / "missing.col").string() + " --algo full -k 2").status, 2);
    auto bad = write("bad.col", "p edge 2 1\ne 1 9\n");
    EXPECT_EQ(run("solve " + bad + " --algo full -k 2").status, 2);
    auto junk = write("junk.edges", "hello world\n");
    EXPECT_EQ(run("solve " + junk + " --algo full -k 2").status, 2);
}

TEST_F(Cli, BenchSingleCell)
{
    auto cfg = write("one.cfg", "# one cell\nfamily = er\nn = 40\nd = 4\nk = 3\nalgos = full\ntrials = 1\nseed = 2\n");
    auto out = (dir / "one.csv").string();
    auto r = run("bench " + cfg + " --out " + out);
    EXPECT_EQ(r.status, 0);
    std::istringstream in(slurp(out));
    std::string header, row, extra;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(header, "algo,family,n,d,k,trial,seed,loss,proper,ms");
    EXPECT_EQ(row.rfind("full,er,40,4,3,0,", 0), 0u);
    EXPECT_FALSE(std::getline(in, extra));
}

TEST_F(Cli, BenchRerunIsByteIdentical)
{
    auto cfg = write("grid.cfg", "n = 30,40\nd = 4\nalgos = discrete,full\ntrials = 4\nseed = 8\n");
    auto a = (dir / "a.csv").string(), b = (dir / "b.csv").string();
    ASSERT_EQ(run("bench " + cfg + " --no-time --out " + a).status, 0);
    ASSERT_EQ(run("bench " + cfg + " --no-time --jobs 3 --out " + b).status, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(slurp(a).empty());
}

TEST_F(Cli, BenchInvalidConfig)
{
    auto cfg = write("bad.cfg", "n = 30\nalgos = full\nwibble = 1\n");
    EXPECT_EQ(run("bench " + cfg).status, 2);
    EXPECT_EQ(run("bench " + (dir / "none.cfg").string()).status, 2);
    auto nokey = write("nokey.cfg", "n 30\n");
    EXPECT_EQ(run("bench " + nokey).status, 2);
}

TEST_F(Cli, CaseStudy)
{
    auto out = (dir / "cs.csv").string();
    auto wit = (dir / "witness").string();
    auto r = run("case-study " + data_dir + "/queen5_5.col --algo triple -k 4-5 --runs 5 --seed 1 --out " + out
                 + " --witness-dir " + wit);
    EXPECT_EQ(r.status, 0);
    auto csv = slurp(out);
    EXPECT_EQ(csv.rfind("graph,order,size,k,best_loss,chi,chi_star\n", 0), 0u);
    EXPECT_NE(csv.find("queen5_5,25,160,5,0,5,"), std::string::npos);
    EXPECT_TRUE(fs::exists(wit + "/queen5_5.k5.txt"));
    EXPECT_EQ(run("case-study " + data_dir + "/queen5_5.col --algo triple -k 5-4").status, 2);
}

TEST_F(Cli, GradCheck)
{
    auto r = run("grad-check -n 10 -k 3 --depth 2 --seed 4");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("ok=true"), std::string::npos);
    EXPECT_EQ(run("grad-check --target warmstart --loss triangle --seed 1").status, 0);
    EXPECT_EQ(run("grad-check --loss cubic").status, 2);
}

TEST_F(Cli, Oversmooth)
{
    auto r = run("oversmooth -n 6 --depth 1 --dropout 0 --seed 1 --set max_epochs=50 --set features=8");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("n,depth,dropout,density\n6,1,0,", 0), 0u);
    EXPECT_EQ(run("oversmooth -n 6 --depth 3").status, 2);
}

TEST_F(Cli, Help)
{
    EXPECT_EQ(run("--help").status, 0);
    EXPECT_EQ(run("solve --help").status, 0);
}
