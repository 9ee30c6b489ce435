#include "oracles.hpp"

#include "confpair/geometry.hpp"
#include "confpair/io.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace confpair;

namespace {

TorusPoint torus(const Forest& f, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_torus_point(f, d, rng);
}

TEST(Geometry, FigureForestIdentities) {
    Forest f = parse_forest("[[2,6],[[1,7],3]] ; [4,5]");
    for (int d : {2, 3, 4}) {
        Configuration c = eval_system(f, 0.3, torus(f, d, 1), d);
        IdentityCheck r = check_identities(f, 0.3, c);
        EXPECT_LT(r.center_error, 1e-9);
        EXPECT_LT(r.distance_error, 1e-9);
        EXPECT_GE(r.min_separation, r.separation_bound);
    }
}

TEST(Geometry, SingleVertexByHand) {
    Forest f = parse_forest("[1,2]");
    TorusPoint u{2, {{0.0, 1.0}}};
    Configuration c = eval_system(f, 0.1, u, 2);
    EXPECT_NEAR(c.x[0][0], 1.0, 1e-15);
    EXPECT_NEAR(c.x[0][1], 0.1, 1e-15);
    EXPECT_NEAR(c.x[1][1], -0.1, 1e-15);
}

TEST(Geometry, RejectsBadParameters) {
    Forest f = parse_forest("[1,2]");
    TorusPoint u{2, {{1.0, 0.0}}};
    EXPECT_THROW(eval_system(f, 0.0, u, 2), ValidationError);
    EXPECT_THROW(eval_system(f, 1.0 / 3.0, u, 2), ValidationError);
    EXPECT_THROW(eval_system(f, 0.1, u, 1), ValidationError);
    EXPECT_THROW(eval_system(f, 0.1, TorusPoint{2, {{1.0, 1.0}}}, 2), ValidationError);
    EXPECT_THROW(eval_system(f, 0.1, TorusPoint{2, {}}, 2), ValidationError);
}

TEST(Geometry, Alpha) {
    Configuration c{3, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}};
    EXPECT_EQ(alpha(c, 1, 2), (Point{1, 0, 0}));
    EXPECT_EQ(alpha(c, 2, 1), (Point{-1, 0, 0}));
    EXPECT_THROW(alpha(c, 1, 3), ValidationError);
}

TEST(Geometry, SRatio) {
    Configuration eq{2, {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}};
    EXPECT_NEAR(s_ratio(eq, 1, 2, 3), 1.0, 1e-12);
    Configuration same{2, {{0, 0}, {0, 0}, {1, 0}}};
    EXPECT_EQ(s_ratio(same, 1, 2, 3), 0.0);
    EXPECT_TRUE(std::isinf(s_ratio(same, 1, 3, 2)));
    EXPECT_THROW(s_ratio(eq, 1, 1, 2), ValidationError);
}

TEST(Geometry, SerialAndParallelAgree) {
    std::mt19937_64 rng(2);
    for (int n = 1; n <= 7; ++n) {
        Forest f = oracle::random_forest(n, rng);
        IdentityCheck a = check_identities_serial(f, 0.05, 3, 64, 17);
        IdentityCheck b = check_identities_parallel(f, 0.05, 3, 64, 17);
        EXPECT_EQ(a.center_error, b.center_error);
        EXPECT_EQ(a.distance_error, b.distance_error);
        EXPECT_EQ(a.min_separation, b.min_separation);
        EXPECT_LT(a.distance_error, 1e-9);
    }
}

TEST(Geometry, CrossTreeDirection) {
    Forest f = parse_forest("[1,2] ; 3");
    LimitReport r = limit_check(f, parse_graph("n=3; 1->3"), 2, {0.1, 0.01}, 10, 1);
    ASSERT_EQ(r.per_edge.size(), 1u);
    EXPECT_FALSE(r.per_edge[0].same_tree);
    // x_1 - x_3 points along -e_1, and the deviation shrinks with eps
    Configuration c = eval_system(f, 0.01, torus(f, 2, 3), 2);
    Point dir = alpha(c, 3, 1);
    EXPECT_NEAR(dir[0], -1.0, 1e-3);
    EXPECT_TRUE(r.per_edge[0].converging());
    EXPECT_LT(r.max_deviation[1], 1e-2);
}

TEST(Geometry, LimitsConverge) {
    Forest f = parse_forest("[[2,6],[[1,7],3]] ; [4,5]");
    Graph g = parse_graph("n=7; 1->7, 3->2, 6->1, 4->5, 5->3");
    for (int d : {2, 3}) {
        LimitReport r = limit_check(f, g, d, {1e-1, 1e-2, 1e-3}, 20, 5);
        for (const EdgeLimit& e : r.per_edge) {
            EXPECT_TRUE(e.converging());
            EXPECT_LT(e.deviation.back(), 1e-2);
        }
    }
}

} // namespace
