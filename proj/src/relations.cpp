#include "confpair/relations.hpp"

#include "confpair/partition.hpp"
#include "confpair/pois.hpp"
#include "confpair/siop.hpp"

#include <algorithm>
#include <numeric>

namespace confpair {

const char* to_string(RelationKind k) {
    switch (k) {
    case RelationKind::antisymmetry: return "antisymmetry";
    case RelationKind::jacobi: return "jacobi";
    case RelationKind::commutativity: return "commutativity";
    case RelationKind::arrow_reversal: return "arrow_reversal";
    case RelationKind::edge_swap: return "edge_swap";
    case RelationKind::arnold: return "arnold";
    case RelationKind::double_edge: return "double_edge";
    }
    return "?";
}

void for_each_pois_relation(int n, Parity p, const std::function<void(RelationKind, const LinCombo<Forest>&)>& f) {
    auto odd = [p](const Tree& t) { return shifted_odd(t, p); };
    for (const Forest& forest : enumerate_forests(n)) {
        const auto& trees = forest.trees();
        auto with = [&](std::size_t t, int node, const Tree& sub) {
            auto copy = trees;
            copy[t] = trees[t].replace(node, sub);
            return Forest(std::move(copy));
        };
        for (std::size_t t = 0; t < trees.size(); ++t) {
            const Tree& tree = trees[t];
            for (int v = 0; v < static_cast<int>(tree.nodes().size()); ++v) {
                const auto& node = tree.nodes()[v];
                if (node.leaf()) continue;
                Tree a = tree.subtree(node.left), r = tree.subtree(node.right);

                LinCombo<Forest> anti(forest);
                anti.add(with(t, v, Tree::join(r, a)), sign_of(odd(a) && odd(r)));
                f(RelationKind::antisymmetry, anti);

                if (r.is_leaf()) continue;
                Tree b = r.left(), c = r.right();
                LinCombo<Forest> jac;
                jac.add(with(t, v, Tree::join(a, Tree::join(b, c))), sign_of(odd(a) && odd(c)));
                jac.add(with(t, v, Tree::join(b, Tree::join(c, a))), sign_of(odd(b) && odd(a)));
                jac.add(with(t, v, Tree::join(c, Tree::join(a, b))), sign_of(odd(c) && odd(b)));
                f(RelationKind::jacobi, jac);
            }
        }
        if (trees.size() < 2) continue;
        std::vector<int> perm(trees.size());
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<Tree> arranged;
            for (int i : perm) arranged.push_back(trees[i]);
            CanonicalForest cf = canonicalize(arranged);
            LinCombo<Forest> rel(Forest::arranged(std::move(arranged)));
            rel.add(forest, -cf.sign(p));
            f(RelationKind::commutativity, rel);
        }
    }
}

std::vector<Graph> enumerate_simple_graphs(int n, int k) {
    std::vector<Graph> out;
    std::vector<Edge> cur;
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.emplace_back(n, cur);
            return;
        }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                bool used = std::any_of(cur.begin(), cur.end(), [&](const Edge& e) {
                    return (e.from == i && e.to == j) || (e.from == j && e.to == i);
                });
                if (used) continue;
                cur.push_back(Edge{i, j});
                self(self);
                cur.pop_back();
            }
    };
    extend(extend);
    return out;
}

void for_each_siop_relation(int n, Parity p, const std::function<void(RelationKind, const LinCombo<Graph>&)>& f) {
    const int reverse_sign = is_even(p) ? 1 : -1; // (-1)^d
    for (int k = 1; k < n; ++k) {
        for (const Graph& g : enumerate_simple_graphs(n, k)) {
            const auto& edges = g.edges();
            for (int e = 0; e < k; ++e) {
                auto rev = edges;
                std::swap(rev[e].from, rev[e].to);
                LinCombo<Graph> rel(g);
                rel.add(Graph(n, rev), -reverse_sign);
                f(RelationKind::arrow_reversal, rel);

                if (e + 1 < k) {
                    auto swapped = edges;
                    std::swap(swapped[e], swapped[e + 1]);
                    LinCombo<Graph> sw(g);
                    sw.add(Graph(n, swapped), reverse_sign); // -(-1)^{d-1}
                    f(RelationKind::edge_swap, sw);
                }

                // a repeated pair inserted after position e, in both orientations
                for (bool flip : {false, true}) {
                    auto doubled = edges;
                    Edge copy = flip ? Edge{edges[e].to, edges[e].from} : edges[e];
                    doubled.insert(doubled.begin() + e + 1, copy);
                    if (static_cast<int>(doubled.size()) < n) f(RelationKind::double_edge, LinCombo<Graph>(Graph(n, doubled)));
                }
            }
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) {
                    if (a == b || edges[a].to != edges[b].from || edges[a].from == edges[b].to) continue;
                    ArnoldTerms t = arnold_terms(g, a, b, p);
                    LinCombo<Graph> rel(t.oriented);
                    rel.add(t.second, 1);
                    rel.add(t.third, 1);
                    f(RelationKind::arnold, rel);
                }
        }
    }
}

} // namespace confpair
