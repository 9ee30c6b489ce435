#include "oracles.hpp"

#include "confpair/bracket.hpp"
#include "confpair/io.hpp"
#include "confpair/operad.hpp"
#include "confpair/partition.hpp"
#include "confpair/pois.hpp"

#include <gtest/gtest.h>

using namespace confpair;

namespace {

LinCombo<Forest> B(std::string_view text, Parity p) { return reduce_bracket(parse_bracket(text), p); }

constexpr Parity parities[] = {Parity::even, Parity::odd};

TEST(Compose, Unit) {
    std::mt19937_64 rng(3);
    for (Parity p : parities)
        for (int s = 0; s < 40; ++s) {
            int n = 1 + s % 5;
            LinCombo<Forest> x(oracle::random_forest(n, rng));
            LinCombo<Forest> unit(Forest::singletons(1));
            auto nx = normalize_pois(x, p);
            for (int i = 1; i <= n; ++i) EXPECT_EQ(compose(x, i, unit, p), nx);
            EXPECT_EQ(compose(unit, 1, x, p), nx);
        }
}

TEST(Compose, Grafting) {
    // outer vertices are oriented before inner ones; grafting at input 1 puts
    // the inner vertex first in symmetric order, which costs a sign for even d
    EXPECT_EQ(compose_unreduced(B("[x1,x2]", Parity::odd), 1, B("[x1,x2]", Parity::odd), Parity::odd),
              LinCombo<Forest>(parse_forest("[[1,2],3]")));
    EXPECT_EQ(compose_unreduced(B("[x1,x2]", Parity::even), 1, B("[x1,x2]", Parity::even), Parity::even),
              LinCombo<Forest>(parse_forest("[[1,2],3]"), -1));
    for (Parity p : parities)
        EXPECT_EQ(compose_unreduced(B("[x1,x2]", p), 2, B("[x1,x2]", p), p), LinCombo<Forest>(parse_forest("[1,[2,3]]")));
}

TEST(Compose, LeibnizExample) {
    LinCombo<Forest> expected;
    for (auto t : {"[1,[2,3]];4", "[1,4];[2,3]", "[1,3];[2,4]", "[1,[2,4]];3"}) expected.add(parse_forest(t), 1);
    auto got = compose_unreduced(B("[x₁,[x₂,x₃]]", Parity::even), 3, B("x₁·x₂", Parity::even), Parity::even);
    EXPECT_EQ(got, expected);
    EXPECT_EQ(compose(B("[x₁,[x₂,x₃]]", Parity::even), 3, B("x₁·x₂", Parity::even), Parity::even),
              normalize_pois(expected, Parity::even));
}

TEST(Compose, RejectsBadIndex) {
    EXPECT_THROW(compose(B("[x1,x2]", Parity::even), 3, B("x1", Parity::even), Parity::even), ValidationError);
}

// Sequential and nested composition must agree after normalization:
// (a o_i b) o_{i+j-1} c = a o_i (b o_j c) and, for i < j,
// (a o_j c) o_i b = (-1)^{|b||c|} (a o_i b) o_{j+m-1} c with m the arity of b.
TEST(Compose, Associativity) {
    std::mt19937_64 rng(5);
    for (Parity p : parities)
        for (int s = 0; s < 30; ++s) {
            int na = 2 + s % 2, nb = 1 + s % 3, nc = 1 + (s / 3) % 2;
            LinCombo<Forest> a(oracle::random_forest(na, rng)), b(oracle::random_forest(nb, rng)),
                c(oracle::random_forest(nc, rng));
            for (int i = 1; i <= na; ++i) {
                for (int j = 1; j <= nb; ++j)
                    ASSERT_EQ(compose(compose(a, i, b, p), i + j - 1, c, p), compose(a, i, compose(b, j, c, p), p));
                int kb = b.begin()->first.internal_count(), kc = c.begin()->first.internal_count();
                Coeff koszul = is_even(p) && kb % 2 && kc % 2 ? -1 : 1;
                for (int j = i + 1; j <= na; ++j)
                    ASSERT_EQ(compose(compose(a, j, c, p), i, b, p),
                              koszul * compose(compose(a, i, b, p), j + nb - 1, c, p));
            }
        }
}

TEST(MayCompose, MatchesSequentialWithKoszulSign) {
    std::mt19937_64 rng(9);
    for (Parity p : parities)
        for (int s = 0; s < 30; ++s) {
            LinCombo<Forest> outer(oracle::random_forest(2, rng));
            std::vector<LinCombo<Forest>> inner{LinCombo<Forest>(oracle::random_forest(1 + s % 3, rng)),
                                                LinCombo<Forest>(oracle::random_forest(1 + (s / 3) % 3, rng))};
            int m0 = inner[0].begin()->first.n();
            int k0 = inner[0].begin()->first.internal_count(), k1 = inner[1].begin()->first.internal_count();
            auto seq = compose(compose(outer, 2, inner[1], p), 1, inner[0], p);
            int sign = is_even(p) && (k0 % 2) && (k1 % 2) ? -1 : 1;
            EXPECT_EQ(may_compose(outer, inner, p), Coeff(sign) * seq) << m0;
        }
}

// Independent route: substitute every inner operand into the outer bracket
// word in one pass, then reduce. Blocks end up in natural order, so no
// reordering sign is involved.
TEST(MayCompose, MatchesSimultaneousSubstitution) {
    std::mt19937_64 rng(13);
    for (Parity p : parities)
        for (int s = 0; s < 40; ++s) {
            int r = 1 + s % 3;
            Forest outer = oracle::random_forest(r, rng);
            std::vector<Forest> inner;
            for (int i = 0; i < r; ++i) inner.push_back(oracle::random_forest(1 + (s + i) % 3, rng));

            BracketExpr e = BracketExpr::from_forest(outer).relabel([](int j) { return 1000 + j; });
            int offset = 0;
            for (int i = 0; i < r; ++i) {
                BracketExpr sub = BracketExpr::from_forest(inner[i]).relabel([&](int k) { return k + offset; });
                e = e.substitute(1000 + i + 1, sub);
                offset += inner[i].n();
            }
            std::vector<LinCombo<Forest>> in;
            for (const Forest& f : inner) in.emplace_back(f);
            EXPECT_EQ(may_compose(LinCombo<Forest>(outer), in, p), normalize_pois(reduce_bracket(e, p), p))
                << render(outer);
        }
}

TEST(Cooperad, CorollaIsIdentity) {
    Graph g = parse_graph("n=4; 2->1, 3->4, 1->3");
    for (Parity p : parities) {
        CooperadOutput o = cooperad(g, OTree::corolla(4), p);
        EXPECT_EQ(o.sign, 1);
        ASSERT_EQ(o.factors.size(), 1u);
        EXPECT_EQ(o.factors[0], g);
    }
}

TEST(Cooperad, WorkedExample) {
    OTree tau = parse_otree("(*,*,(*,*),*)");
    CooperadOutput o = cooperad(parse_graph("n=5; 3->4, 5->4"), tau, Parity::even);
    ASSERT_EQ(o.factors.size(), 2u);
    EXPECT_EQ(o.factors[0], parse_graph("n=4; 4->3"));
    EXPECT_EQ(o.factors[1], parse_graph("n=2; 1->2"));
    o = cooperad(parse_graph("n=5; 1->3"), tau, Parity::odd);
    EXPECT_EQ(o.factors[0], parse_graph("n=4; 1->3"));
    o = cooperad(parse_graph("n=5; 1->4"), tau, Parity::odd);
    EXPECT_EQ(o.factors[0], parse_graph("n=4; 1->3"));
    EXPECT_EQ(o.factors[1], parse_graph("n=2;"));
}

TEST(Cooperad, SignFollowsEdgeReordering) {
    OTree tau = parse_otree("((*,*),(*,*))");
    // one edge per child factor; listing the second child's edge first
    // reorders them
    CooperadOutput a = cooperad(parse_graph("n=4; 1->2, 3->4"), tau, Parity::even);
    CooperadOutput b = cooperad(parse_graph("n=4; 3->4, 1->2"), tau, Parity::even);
    EXPECT_EQ(a.factors, b.factors);
    EXPECT_EQ(a.sign, -b.sign);
    EXPECT_EQ(cooperad(parse_graph("n=4; 3->4, 1->2"), tau, Parity::odd).sign, 1);
}

TEST(Cooperad, RejectsSizeMismatch) {
    EXPECT_THROW(cooperad(parse_graph("n=3; 1->2"), OTree::corolla(4), Parity::even), ValidationError);
}

TEST(Duality, CorollaReducesToPairing) {
    for (Parity p : parities)
        for (int n = 1; n <= 5; ++n) EXPECT_TRUE(check_duality(std::vector<int>(n, 0), p).pass());
}

TEST(Duality, SerialAndParallelAgree) {
    for (Parity p : parities) {
        DualityReport a = check_duality_serial(OTree::two_level({2, 0, 2}), p);
        DualityReport b = check_duality_parallel(OTree::two_level({2, 0, 2}), p);
        EXPECT_TRUE(a.pass());
        EXPECT_EQ(a.cases_checked, b.cases_checked);
        EXPECT_EQ(a.failures.size(), b.failures.size());
    }
}

TEST(Duality, SampledAboveLimit) {
    DualityOptions opt;
    opt.samples = 200;
    opt.seed = 4;
    DualityReport r = check_duality(std::vector<int>{3, 0, 3}, Parity::even, opt);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.cases_checked, 200u);
}

TEST(Duality, ShapesPartitionLeafCount) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& shape : two_level_shapes(n)) {
            int leaves = 0;
            for (int a : shape) leaves += std::max(a, 1);
            EXPECT_EQ(leaves, n);
        }
    // (*,*) (*,(*)) ((*),*) ((*),(*)) ((*,*))
    EXPECT_EQ(two_level_shapes(2).size(), 5u);
}

TEST(Duality, RequiresTwoLevel) {
    EXPECT_THROW(check_duality(parse_otree("(((*,*),*),*)"), Parity::even), ValidationError);
}

} // namespace
