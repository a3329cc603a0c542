#include <gtest/gtest.h>

#include "gcolor/coloring.hpp"
#include "gcolor/generators.hpp"
#include "oracles.hpp"

using namespace gcolor;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// C8 with colors A A B B A B A B
const HardColoring c8_coloring({0, 0, 1, 1, 0, 1, 0, 1}, 2);

} // namespace

TEST(HardColoring, ValidatesBudget)
{
    EXPECT_THROW(HardColoring({0, 3}, 3), std::invalid_argument);
    EXPECT_THROW(HardColoring({}, 0), std::invalid_argument);
    EXPECT_EQ(HardColoring({0, 2, 1}, 5).colors_used(), 3u);
}

TEST(SoftColoring, RejectsNonStochasticRows)
{
    Matrix p(1, 2);
    p << 0.6, 0.6;
    EXPECT_THROW(SoftColoring{p}, std::invalid_argument);
    p << 1.2, -0.2;
    EXPECT_THROW(SoftColoring{p}, std::invalid_argument);
    p << 0.5, 0.5 + 1e-12;
    EXPECT_NO_THROW(SoftColoring{p});
}

TEST(LossHard, Examples)
{
    EXPECT_EQ(loss_hard(triangle(), HardColoring({0, 1, 2}, 3)), 0u);
    EXPECT_EQ(loss_hard(triangle(), HardColoring({0, 0, 0}, 1)), 3u);
    EXPECT_EQ(loss_hard(gen_family(Cycle{8}), c8_coloring), 2u);
    EXPECT_TRUE(is_proper(triangle(), HardColoring({2, 1, 0}, 3)));
    EXPECT_THROW(loss_hard(triangle(), HardColoring({0, 1}, 2)), std::invalid_argument);
}

TEST(LossSoft, Examples)
{
    Graph edge(2, {{0, 1}});
    Matrix half = Matrix::Constant(2, 2, 0.5);
    EXPECT_DOUBLE_EQ(loss_soft(edge, SoftColoring(half), LossSpec::build(edge, LossFamily::standard())), 0.5);

    Graph k5 = gen_family(Complete{5});
    Matrix uni = Matrix::Constant(5, 5, 0.2);
    EXPECT_NEAR(loss_soft(k5, SoftColoring(uni), LossSpec::build(k5, LossFamily::standard())), 2.0, 1e-12);

    Graph path(3, {{0, 1}, {1, 2}});
    auto same = SoftColoring::one_hot(HardColoring({0, 0, 0}, 2));
    EXPECT_DOUBLE_EQ(loss_soft(path, same, LossSpec::build(path, LossFamily::degree_power(3))), 9.0);
}

TEST(LossSoft, ShapeErrors)
{
    Graph edge(2, {{0, 1}});
    Matrix p = Matrix::Constant(3, 2, 0.5);
    EXPECT_THROW(loss_soft(edge, SoftColoring(p), LossSpec::build(edge, LossFamily::standard())),
                 std::invalid_argument);
    Graph other(2, {});
    EXPECT_THROW(loss_soft(edge, SoftColoring(Matrix::Constant(2, 2, 0.5)),
                           LossSpec::build(other, LossFamily::standard())),
                 std::invalid_argument);
}

TEST(LossSpec, Weights)
{
    // star K1,3 plus a leaf edge: center degree 3
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    auto std_spec = LossSpec::build(g, LossFamily::standard());
    for (double w : std_spec.edge_weights)
        EXPECT_EQ(w, 1.0);
    auto p2 = LossSpec::build(g, LossFamily::degree_power(2));
    EXPECT_DOUBLE_EQ(p2.edge_weights[0], (9.0 + 1.0) / 2);  // (0,1)
    EXPECT_DOUBLE_EQ(p2.edge_weights[2], (9.0 + 4.0) / 2);  // (0,3)
    EXPECT_DOUBLE_EQ(p2.edge_weights[3], (4.0 + 1.0) / 2);  // (3,4)
    auto p0 = LossSpec::build(g, LossFamily::degree_power(0));
    EXPECT_EQ(p0.edge_weights, std_spec.edge_weights);

    Graph k4 = gen_family(Complete{4});
    for (double w : LossSpec::build(k4, LossFamily::triangle()).edge_weights)
        EXPECT_EQ(w, 3.0);
}

TEST(LossFamily, Parse)
{
    EXPECT_EQ(LossFamily::parse("standard"), LossFamily::standard());
    EXPECT_EQ(LossFamily::parse("triangle"), LossFamily::triangle());
    EXPECT_EQ(LossFamily::parse("degree-power:3"), LossFamily::degree_power(3));
    EXPECT_EQ(LossFamily::parse("p0"), LossFamily::degree_power(0));
    EXPECT_THROW(LossFamily::parse("p"), InputError);
    EXPECT_THROW(LossFamily::parse("degree-power:x"), InputError);
    EXPECT_THROW(LossFamily::parse("quadratic"), InputError);
    EXPECT_EQ(LossFamily::parse(LossFamily::degree_power(7).name()), LossFamily::degree_power(7));
}

TEST(LossSoft, MatchesBruteForceOnSmallGraphs)
{
    SearchRng rng(5);
    for (std::size_t n = 2; n <= 5; ++n)
        oracle::for_each_connected_graph(n, [&](const Graph& g) {
            for (std::size_t k : {2, 3}) {
                Matrix p = oracle::random_stochastic(n, k, rng);
                double want = oracle::brute_force_soft_loss(g, p);
                double got = loss_soft(g, SoftColoring(p), LossSpec::build(g, LossFamily::standard()));
                ASSERT_NEAR(got, want, 1e-9);
            }
        });
}

TEST(LossSoft, OneHotEqualsHardLoss)
{
    SearchRng rng(11);
    for (int t = 0; t < 50; ++t) {
        Graph g = gen_erdos_renyi(30, 4.0, std::uint64_t(t));
        std::vector<Color> colors(30);
        for (auto& c : colors)
            c = Color(rng.below(4));
        HardColoring c(colors, 4);
        EXPECT_EQ(loss_soft(g, SoftColoring::one_hot(c), LossSpec::build(g, LossFamily::standard())),
                  double(loss_hard(g, c)));
        EXPECT_EQ(loss_hard(g, round_soft(SoftColoring::one_hot(c))), loss_hard(g, c));
    }
}

TEST(LossSoft, DegreePowerZeroIsStandard)
{
    SearchRng rng(12);
    for (int t = 0; t < 100; ++t) {
        Graph g = gen_erdos_renyi(15, 3.0, std::uint64_t(t));
        SoftColoring s(oracle::random_stochastic(15, 3, rng));
        EXPECT_EQ(loss_soft(g, s, LossSpec::build(g, LossFamily::degree_power(0))),
                  loss_soft(g, s, LossSpec::build(g, LossFamily::standard())));
    }
}

TEST(RoundSoft, ArgmaxWithLowIndexTies)
{
    Matrix p(3, 2);
    p << 0.9, 0.1, 0.2, 0.8, 0.5, 0.5;
    EXPECT_EQ(round_soft(SoftColoring(p)).colors, (std::vector<Color>{0, 1, 0}));
}

TEST(KD, Values)
{
    EXPECT_EQ(k_d(10), 4u);
    EXPECT_EQ(k_d(16), 5u);
    EXPECT_EQ(k_d(20), 6u);
    EXPECT_EQ(k_d(1), 2u);
    std::size_t last = 1;
    for (double d = 0.5; d < 200; d += 0.5) {
        EXPECT_GE(k_d(d), last);
        last = k_d(d);
    }
    EXPECT_THROW(k_d(0), std::invalid_argument);
}
