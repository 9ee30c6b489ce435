#include "oracles.hpp"

#include "confpair/gram.hpp"
#include "confpair/io.hpp"
#include "confpair/pairing.hpp"

#include <gtest/gtest.h>

using namespace confpair;

namespace {

int P(const char* g, const char* f, Parity p) { return pair(parse_graph(g), parse_forest(f), p).value; }

TEST(Pairing, SingleEdge) {
    EXPECT_EQ(P("n=2; 1->2", "[1,2]", Parity::even), 1);
    EXPECT_EQ(P("n=2; 1->2", "[1,2]", Parity::odd), 1);
}

TEST(Pairing, ReferenceExample) {
    EXPECT_EQ(P("n=3; 1->2, 2->3", "[[2,1],3]", Parity::odd), -1);
    EXPECT_EQ(P("n=3; 1->2, 2->3", "[[2,1],3]", Parity::even), 1);
    EXPECT_EQ(P("n=3; 1->2, 2->3", "[[1,3],2]", Parity::odd), 0);
    EXPECT_EQ(P("n=3; 1->2, 2->3", "[[1,3],2]", Parity::even), 0);
}

TEST(Pairing, DifferentComponents) {
    EXPECT_EQ(P("n=4; 1->2", "[3,4] ; 1 ; 2", Parity::even), 0);
    EXPECT_EQ(P("n=4; 1->2", "1 ; 2 ; [3,4]", Parity::odd), 0);
}

TEST(Pairing, ReportsBeta) {
    PairingResult r = pair(parse_graph("n=3; 1->2, 2->3"), parse_forest("[[2,1],3]"), Parity::even);
    ASSERT_TRUE(r.beta.has_value());
    EXPECT_EQ(*r.beta, (std::vector<int>{0, 1}));
    EXPECT_FALSE(pair(parse_graph("n=3; 1->2, 2->1"), parse_forest("[[2,1],3]"), Parity::even).beta.has_value());
}

TEST(Pairing, MismatchedSizesThrow) {
    EXPECT_THROW(pair(parse_graph("n=3; 1->2"), parse_forest("[1,2]"), Parity::even), ValidationError);
}

TEST(Pairing, AgreesWithPathOracle) {
    std::mt19937_64 rng(11);
    for (Parity p : {Parity::even, Parity::odd})
        for (int n = 1; n <= 7; ++n)
            for (int s = 0; s < 400; ++s) {
                Forest f = oracle::random_forest(n, rng, s % 2 == 1);
                int k = f.internal_count();
                // bias towards graphs that can pair nonzero: edges between leaves of one tree
                Graph g = oracle::random_graph(n, k, rng);
                if (s % 3 == 0 && k > 0) {
                    std::vector<Edge> edges;
                    for (const Tree& t : f.trees()) {
                        auto ls = t.leaves();
                        for (std::size_t i = 1; i < ls.size(); ++i)
                            edges.push_back(s % 2 ? Edge{ls[i], ls[i - 1]} : Edge{ls[0], ls[i]});
                    }
                    std::shuffle(edges.begin(), edges.end(), rng);
                    g = Graph(n, edges);
                }
                ASSERT_EQ(pair(g, f, p).value, oracle::pair(g, f, p)) << render(g) << " | " << render(f);
            }
}

TEST(Pairing, Bilinear) {
    auto gs = parse_graph_combo("2 * n=3; 1->2, 2->3\n-3 * n=3; 1->3, 3->2");
    auto fs = parse_forest_combo("5 * [[1,2],3]\n7 * [[1,3],2]\n1 * [[2,1],3]", Parity::odd);
    Coeff expected = 0;
    for (const auto& [g, a] : gs)
        for (const auto& [f, b] : fs) expected += a * b * oracle::pair(g, f, Parity::odd);
    EXPECT_EQ(pair(gs, fs, Parity::odd), expected);
}

TEST(Gram, SmallMatrices) {
    for (Parity p : {Parity::even, Parity::odd}) {
        GramMatrix m = gram_matrix(2, 1, p);
        ASSERT_EQ(m.entries, (std::vector<int>{1}));
        m = gram_matrix(3, 2, p);
        EXPECT_EQ(m.entries, (std::vector<int>{1, 0, 0, 1}));
    }
}

TEST(Gram, TopDegreeAtSix) {
    for (Parity p : {Parity::even, Parity::odd}) {
        GramMatrix m = gram_matrix(6, 5, p);
        ASSERT_EQ(m.rows.size(), 120u);
        EXPECT_TRUE(identity_failures(m).empty());
    }
}

TEST(Gram, SerialAndParallelAgree) {
    for (Parity p : {Parity::even, Parity::odd})
        for (int k = 0; k < 5; ++k) {
            GramMatrix a = gram_matrix_serial(5, k, p), b = gram_matrix_parallel(5, k, p);
            EXPECT_EQ(a.entries, b.entries);
            EXPECT_EQ(a.rows, b.rows);
            EXPECT_EQ(a.cols, b.cols);
        }
}

TEST(Gram, VerifyPerfectSizes) {
    EXPECT_TRUE(verify_perfect(2, Parity::even).pass());
    for (Parity p : {Parity::even, Parity::odd}) {
        PerfectReport r = verify_perfect(5, p);
        EXPECT_TRUE(r.pass());
        std::vector<std::size_t> sizes;
        for (const auto& d : r.degrees) {
            sizes.push_back(d.size);
            EXPECT_TRUE(d.identity);
        }
        EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 10, 35, 50, 24}));
        EXPECT_EQ(r.first_degree_rank, 10u);
    }
}

TEST(Gram, CorruptedSignFails) {
    auto flipped = [](const Graph& g, const Forest& f, Parity p) {
        int v = pair_value(g, f, p);
        return g.edge_count() == 2 ? -v : v;
    };
    PerfectReport r = verify_perfect(3, Parity::even, flipped);
    ASSERT_FALSE(r.pass());
    const GramFailure& bad = r.failures.front();
    EXPECT_EQ(bad.k, 2);
    EXPECT_EQ(bad.value, -1);
    EXPECT_EQ(bad.expected, 1);
    EXPECT_EQ(render(bad.graph), "n=3; 1->2, 2->3");
    EXPECT_EQ(render(bad.forest), "[[1,2],3]");
}

TEST(Gram, FirstDegree) {
    GramMatrix m = first_degree_gram(2, Parity::odd);
    EXPECT_EQ(m.entries, (std::vector<int>{1}));
    for (Parity p : {Parity::even, Parity::odd}) {
        m = first_degree_gram(7, p);
        EXPECT_EQ(m.rows.size(), 21u);
        EXPECT_TRUE(first_degree_failures(m).empty());
    }
}

TEST(Gram, RankTableCsv) {
    EXPECT_EQ(to_csv(rank_table(4, 3)), "degree,rank\n0,1\n2,6\n4,11\n6,6\n");
    EXPECT_EQ(rank_table(4, 2).degree(3), 3);
    EXPECT_THROW(rank_table(4, 1), ValidationError);
}

} // namespace
