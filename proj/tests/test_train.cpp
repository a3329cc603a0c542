#include <gtest/gtest.h>

#include <sstream>

#include "gcolor/generators.hpp"
#include "gcolor/train.hpp"

using namespace gcolor;

TEST(StoppingRule, PatienceAndCap)
{
    StoppingRule flat(5, 1000, 1e-4);
    int epoch = 0;
    while (!flat.update(epoch, 1.0))
        ++epoch;
    EXPECT_EQ(epoch, 5);

    StoppingRule capped(1000, 50, 1e-4);
    epoch = 0;
    while (!capped.update(epoch, 100.0 - epoch))
        ++epoch;
    EXPECT_EQ(epoch, 49);

    // improvements smaller than the threshold do not reset patience
    StoppingRule slow(3, 1000, 0.1);
    epoch = 0;
    while (!slow.update(epoch, 1.0 - 0.01 * epoch))
        ++epoch;
    EXPECT_EQ(epoch, 3);
}

TEST(ModGcn, EdgelessGraph)
{
    TrainConfig cfg;
    cfg.seed = 1;
    auto r = mod_gcn(Graph(6, {}), 3, cfg);
    EXPECT_EQ(loss_hard(Graph(6, {}), r.hard), 0u);
}

TEST(ModGcn, TraceInvariants)
{
    Graph g = gen_erdos_renyi(30, 4.0, 2);
    TrainConfig cfg;
    cfg.seed = 3;
    cfg.max_epochs = 3000;
    auto r = mod_gcn(g, 3, cfg);
    ASSERT_FALSE(r.trace.empty());
    EXPECT_LE(r.trace.size(), 3000u);
    double low = r.trace.front().soft_loss;
    for (const auto& row : r.trace) {
        low = std::min(low, row.soft_loss);
        EXPECT_EQ(row.best_soft_loss, low);
    }
    double best_soft = loss_soft(g, r.soft, LossSpec::build(g, cfg.loss));
    EXPECT_NEAR(best_soft, low, 1e-9 * std::max(1.0, low));
    EXPECT_EQ(r.hard, round_soft(r.soft));
    EXPECT_NO_THROW(r.final_soft.validate());
}

TEST(ModGcn, Deterministic)
{
    Graph g = gen_erdos_renyi(25, 4.0, 8);
    TrainConfig cfg;
    cfg.seed = 5;
    cfg.max_epochs = 500;
    auto a = mod_gcn(g, 3, cfg), b = mod_gcn(g, 3, cfg);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i)
        ASSERT_EQ(a.trace[i].soft_loss, b.trace[i].soft_loss);
    EXPECT_EQ(a.hard, b.hard);
}

TEST(ModGcn, SingleEdge)
{
    Graph g(2, {{0, 1}});
    int proper = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        TrainConfig cfg;
        cfg.seed = seed;
        proper += is_proper(g, mod_gcn(g, 2, cfg).hard);
    }
    EXPECT_GE(proper, 99);
}

TEST(ModGcn, OddCycleNine)
{
    Graph g = gen_family(Cycle{9});
    int proper = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        TrainConfig cfg;
        cfg.seed = seed;
        proper += is_proper(g, mod_gcn(g, 3, cfg).hard);
    }
    EXPECT_GE(proper, 95);
}

TEST(ModGcn, WarmParamsWidthChecked)
{
    Graph g = gen_family(Cycle{5});
    TrainConfig cfg;
    SearchRng rng(0);
    auto params = init_params(5, 2, cfg, rng);
    EXPECT_THROW(mod_gcn(g, 3, cfg, params), std::invalid_argument);
}

TEST(WarmStart, TargetRows)
{
    HardColoring phi({3, 0, 9}, 10);
    Matrix t = warmstart_target(phi, 10);
    EXPECT_DOUBLE_EQ(t(0, 3), 0.55);
    EXPECT_DOUBLE_EQ(t(0, 0), 0.05);
    EXPECT_DOUBLE_EQ(t(2, 9), 0.55);
    for (int i = 0; i < 3; ++i)
        EXPECT_NEAR(t.row(i).sum(), 1.0, 1e-12);
    Matrix two = warmstart_target(HardColoring({1, 0}, 2), 2);
    EXPECT_DOUBLE_EQ(two(0, 0), 0.45);
    EXPECT_DOUBLE_EQ(two(0, 1), 0.55);
    EXPECT_THROW(warmstart_target(phi, 5), std::invalid_argument);
}

TEST(WarmStart, PretrainingRecoversColoring)
{
    Graph g = gen_erdos_renyi(20, 4.0, 6);
    SearchRng rng(7);
    std::vector<Color> colors(20);
    for (auto& c : colors)
        c = Color(rng.below(4));
    HardColoring phi(colors, 4);
    TrainConfig cfg;
    cfg.seed = 8;
    auto params = pretrain_warmstart(g, 4, phi, cfg);
    auto p = forward(params, normalize_adjacency(g), cfg, false).p;
    auto back = round_soft(p);
    int agree = 0;
    for (std::size_t i = 0; i < 20; ++i)
        agree += back.colors[i] == phi.colors[i];
    EXPECT_GE(agree, 18);
}

TEST(FullGcn, TrivialCases)
{
    Graph g = gen_erdos_renyi(12, 3.0, 1);
    TrainConfig cfg;
    auto one = full_gcn(g, 1, cfg);
    EXPECT_EQ(one.hard, HardColoring::uniform(12));
    auto edgeless = full_gcn(Graph(8, {}), 3, cfg);
    EXPECT_EQ(loss_hard(Graph(8, {}), edgeless.hard), 0u);
    EXPECT_EQ(edgeless.hard.k, 3u);
}

TEST(FullGcn, NotWorseThanModGcnOnAverage)
{
    // Paired comparison on ER(100, 10), k = 5.
    const int seeds = 10;
    double full = 0, mod = 0;
    for (int s = 0; s < seeds; ++s) {
        Graph g = gen_erdos_renyi(100, 10.0, std::uint64_t(s));
        TrainConfig cfg;
        cfg.seed = std::uint64_t(1000 + s);
        full += double(loss_hard(g, full_gcn(g, 5, cfg).hard));
        mod += double(loss_hard(g, mod_gcn(g, 5, cfg).hard));
    }
    EXPECT_LE(full / seeds, mod / seeds);
}

TEST(Oversmoothing, Detector)
{
    Matrix uni = Matrix::Constant(3, 4, 0.25);
    EXPECT_TRUE(detect_oversmoothing(SoftColoring(uni), 0.01));
    Matrix onehot = uni;
    onehot.row(1) << 1, 0, 0, 0;
    EXPECT_FALSE(detect_oversmoothing(SoftColoring(onehot), 0.01));
    Matrix near(2, 4);
    near << 0.255, 0.245, 0.255, 0.245, 0.245, 0.255, 0.25, 0.25;
    EXPECT_TRUE(detect_oversmoothing(SoftColoring(near), 0.01));
}

TEST(Trace, CsvHeader)
{
    std::ostringstream out;
    write_trace_csv(out, {{0, 2.5, 2.5, 3}, {1, 2.0, 2.0, 1}});
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "epoch,soft_loss,best_soft_loss,hard_loss");
    EXPECT_NE(out.str().find("1,2,2,1"), std::string::npos);
}
