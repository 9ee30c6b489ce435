#include "oracles.hpp"

#include "confpair/io.hpp"
#include "confpair/otree.hpp"
#include "confpair/partition.hpp"

#include <gtest/gtest.h>

using namespace confpair;

namespace {

Tree L(int i) { return Tree::leaf(i); }
Tree J(const Tree& a, const Tree& b) { return Tree::join(a, b); }

TEST(Tree, SmallestTree) {
    Tree t = parse_tree("[1,2]");
    EXPECT_EQ(t, J(L(1), L(2)));
    EXPECT_EQ(t.internal_count(), 1);
    EXPECT_EQ(t.leaves(), (std::vector<int>{1, 2}));
}

TEST(Tree, JoinRejectsOverlap) { EXPECT_THROW(J(J(L(1), L(2)), L(2)), ValidationError); }

TEST(Tree, LowestInternalVertexHasHeightOne) {
    Tree t = parse_tree("[[2,1],3]");
    EXPECT_EQ(t.height(0), 1);
    EXPECT_EQ(t.height(t.nodes()[0].left), 2);
    EXPECT_EQ(t.max_height(), 2);
}

TEST(Tree, Tallness) {
    EXPECT_TRUE(parse_tree("[[1,3],2]").is_tall());
    EXPECT_FALSE(parse_tree("[[2,1],3]").is_tall());
    EXPECT_FALSE(parse_tree("[1,[2,3]]").is_tall());
    EXPECT_TRUE(Tree::leaf(4).is_tall());
}

TEST(Forest, FigureForest) {
    Forest f = parse_forest("[[2,6],[[1,7],3]] ; [4,5]");
    ASSERT_EQ(f.trees().size(), 2u);
    EXPECT_EQ(f.trees()[0], J(J(L(2), L(6)), J(J(L(1), L(7)), L(3))));
    EXPECT_EQ(f.trees()[1], J(L(4), L(5)));
    EXPECT_EQ(f.n(), 7);
    EXPECT_EQ(f.internal_count(), 5);
}

TEST(Forest, RequiresPartitionOfLabels) {
    EXPECT_THROW(Forest({J(L(1), L(3))}), ValidationError);
    EXPECT_THROW(Forest({L(2), L(1)}), ValidationError); // not canonical order
    EXPECT_NO_THROW(Forest::arranged({L(2), L(1)}));
}

TEST(Forest, Nadir) {
    Forest one = parse_forest("[1,2]");
    EXPECT_EQ(one.nadir(1, 2), 0);
    Forest f = parse_forest("[[2,1],3]");
    // in-order: the upper vertex [2,1] comes first, then the root
    EXPECT_EQ(f.nadir(1, 2), 0);
    EXPECT_EQ(f.nadir(1, 3), 1);
    EXPECT_EQ(f.vertex(1).node, 0);
    EXPECT_FALSE(parse_forest("[1,2] ; 3").nadir(1, 3).has_value());
}

TEST(Forest, CanonicalizeSign) {
    // swapping two one-vertex trees is an odd permutation of vertices
    CanonicalForest cf = canonicalize(std::vector<Tree>{J(L(3), L(4)), J(L(1), L(2))});
    EXPECT_EQ(cf.forest, parse_forest("[1,2];[3,4]"));
    EXPECT_EQ(cf.sign(Parity::even), -1);
    EXPECT_EQ(cf.sign(Parity::odd), 1);
    EXPECT_EQ(canonicalize(std::vector<Tree>{L(2), J(L(1), L(3))}).sign(Parity::even), 1);
}

TEST(Graph, Validation) {
    EXPECT_THROW(Graph(3, {{1, 1}}), ValidationError);
    EXPECT_THROW(Graph(3, {{1, 4}}), ValidationError);
    Graph g = parse_graph("n=3; 1->2, 2->3");
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
}

TEST(Graph, Longness) {
    EXPECT_TRUE(parse_graph("n=3; 1->3, 3->2").is_long());
    EXPECT_FALSE(parse_graph("n=3; 2->3, 1->2").is_long());
    EXPECT_FALSE(parse_graph("n=3; 3->1").is_long());
    EXPECT_FALSE(parse_graph("n=3; 1->2, 1->3").is_long());
    EXPECT_TRUE(parse_graph("n=4; 1->2, 3->4").is_long());
    EXPECT_TRUE(parse_graph("n=2;").is_long());
}

TEST(Partition, ReadOff) {
    EXPECT_EQ(ordered_partition(parse_forest("[[1,2],3]")).blocks, (std::vector<std::vector<int>>{{1, 2, 3}}));
    EXPECT_EQ(ordered_partition(parse_graph("n=3; 1->3, 3->2")).blocks, (std::vector<std::vector<int>>{{1, 3, 2}}));
    EXPECT_EQ(ordered_partition(parse_forest("[1,2] ; [3]")).blocks, (std::vector<std::vector<int>>{{1, 2}, {3}}));
    EXPECT_THROW(ordered_partition(parse_forest("[2,1]")), ValidationError);
}

TEST(Partition, RoundTrips) {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k < n; ++k)
            for (const auto& p : enumerate_ordered_partitions(n, k)) {
                EXPECT_EQ(ordered_partition(tall_forest(p)), p);
                EXPECT_EQ(ordered_partition(long_graph(p)), p);
            }
}

TEST(Enumerate, SmallCases) {
    auto render_all = [](const auto& xs) {
        std::vector<std::string> out;
        for (const auto& x : xs) out.push_back(render(x));
        return out;
    };
    EXPECT_EQ(render_all(enumerate_tall_forests(2, 1)), (std::vector<std::string>{"[1,2]"}));
    EXPECT_EQ(render_all(enumerate_tall_forests(3, 2)), (std::vector<std::string>{"[[1,2],3]", "[[1,3],2]"}));
    EXPECT_EQ(render_all(enumerate_long_graphs(2, 1)), (std::vector<std::string>{"n=2; 1->2"}));
    auto one_edge = render_all(enumerate_long_graphs(3, 1));
    std::sort(one_edge.begin(), one_edge.end());
    EXPECT_EQ(one_edge, (std::vector<std::string>{"n=3; 1->2", "n=3; 1->3", "n=3; 2->3"}));
    EXPECT_EQ(render_all(enumerate_long_graphs(3, 2)),
              (std::vector<std::string>{"n=3; 1->2, 2->3", "n=3; 1->3, 3->2"}));
}

TEST(Enumerate, CountsMatchPolynomialAndBruteForce) {
    for (int n = 1; n <= 6; ++n) {
        auto poly = oracle::poincare(n);
        auto cycles = oracle::permutations_by_cycles(n);
        auto all = enumerate_forests(n);
        for (int k = 0; k < n; ++k) {
            EXPECT_EQ(static_cast<long long>(enumerate_tall_forests(n, k).size()), poly[k]);
            EXPECT_EQ(static_cast<long long>(enumerate_long_graphs(n, k).size()), poly[k]);
            EXPECT_EQ(cycles[k], poly[k]);
            // brute force: filter every forest for tallness
            long long tall = 0;
            for (const Forest& f : all) tall += f.is_tall() && f.internal_count() == k;
            EXPECT_EQ(tall, poly[k]) << "n=" << n << " k=" << k;
        }
    }
    EXPECT_EQ(oracle::poincare(4), (std::vector<long long>{1, 6, 11, 6}));
}

TEST(Enumerate, ForestCountByExponentialFormula) {
    // planar labeled binary trees on m leaves: m! * Catalan(m - 1)
    auto trees = [](int m) {
        long long cat = 1;
        for (int i = 0; i < m - 1; ++i) cat = cat * 2 * (2 * i + 1) / (i + 2);
        return oracle::factorial(m) * cat;
    };
    auto binom = [](int a, int b) {
        long long r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<long long> forests{1};
    for (int n = 1; n <= 6; ++n) {
        long long s = 0;
        // the block holding label n has j elements
        for (int j = 1; j <= n; ++j) s += binom(n - 1, j - 1) * trees(j) * forests[n - j];
        forests.push_back(s);
        EXPECT_EQ(static_cast<long long>(enumerate_forests(n).size()), s) << n;
    }
}

TEST(Enumerate, StirlingRow) {
    auto row = stirling_row(7);
    auto poly = oracle::poincare(7);
    ASSERT_EQ(row.size(), poly.size());
    for (std::size_t k = 0; k < row.size(); ++k) EXPECT_EQ(row[k], poly[k]);
}

TEST(OTree, ContractSingleEdge) {
    // root arity 2, child over input 1 with arity 2
    OTree t = OTree::two_level({2, 0});
    ASSERT_EQ(t.internal_edges().size(), 1u);
    OTree c = t.contract(t.internal_edges()[0]);
    EXPECT_EQ(c, OTree::corolla(3));
    EXPECT_EQ(c.input_label(0, 3), 3);
}

TEST(OTree, ContractRedundantEdge) {
    OTree t = OTree::two_level({1, 0, 0});
    OTree c = t.contract(t.internal_edges()[0]);
    EXPECT_EQ(c, OTree::corolla(3));
    EXPECT_EQ(c.arity(0), t.arity(0));
}

TEST(OTree, ContractionIsConfluent) {
    OTree t = OTree::two_level({2, 3});
    auto edges = t.internal_edges();
    ASSERT_EQ(edges.size(), 2u);
    OTree a = t.contract(edges[0]);
    a = a.contract(a.internal_edges()[0]);
    OTree b = t.contract(edges[1]);
    b = b.contract(b.internal_edges()[0]);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, OTree::corolla(5));
}

TEST(OTree, InputLabelsAndNadir) {
    OTree t = parse_otree("(*,*,(*,*),*)");
    EXPECT_EQ(t.leaf_count(), 5);
    EXPECT_TRUE(t.is_two_level());
    int inner = t.internal_vertices()[1];
    EXPECT_EQ(t.nadir(3, 4), inner);
    EXPECT_EQ(t.nadir(4, 5), 0);
    EXPECT_EQ(t.input_label(0, 4), 3);
    EXPECT_EQ(t.input_label(0, 5), 4);
    EXPECT_EQ(t.input_label(inner, 4), 2);
}

} // namespace
