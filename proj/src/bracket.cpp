#include "confpair/bracket.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace confpair {

BracketExpr BracketExpr::var(int label) {
    if (label <= 0) throw ValidationError("variable index must be positive");
    BracketExpr e;
    e.nodes_.push_back(Node{Kind::var, label, -1, -1, -1});
    return e;
}

BracketExpr BracketExpr::combine(Kind kind, const BracketExpr& a, const BracketExpr& b, int token, int shift_b) {
    BracketExpr e;
    const int na = static_cast<int>(a.nodes_.size());
    e.nodes_.reserve(1 + a.nodes_.size() + b.nodes_.size());
    e.nodes_.push_back(Node{kind, 0, 1, 1 + na, token});
    for (Node n : a.nodes_) {
        if (n.kind != Kind::var) {
            n.left += 1;
            n.right += 1;
        }
        e.nodes_.push_back(n);
    }
    for (Node n : b.nodes_) {
        if (n.kind != Kind::var) {
            n.left += 1 + na;
            n.right += 1 + na;
        }
        if (n.kind == Kind::bracket) n.token += shift_b;
        e.nodes_.push_back(n);
    }
    return e;
}

BracketExpr BracketExpr::dot(const BracketExpr& a, const BracketExpr& b) {
    return combine(Kind::dot, a, b, -1, a.bracket_count());
}

BracketExpr BracketExpr::bracket(const BracketExpr& a, const BracketExpr& b) {
    int k = a.bracket_count();
    return combine(Kind::bracket, a, b, k, k + 1);
}

BracketExpr BracketExpr::from_tree(const Tree& t) {
    if (t.is_leaf()) return var(t.label());
    return bracket(from_tree(t.left()), from_tree(t.right()));
}

BracketExpr BracketExpr::from_forest(const Forest& f) {
    if (f.trees().empty()) throw ValidationError("empty forest has no bracket expression");
    BracketExpr e = from_tree(f.trees().front());
    for (std::size_t t = 1; t < f.trees().size(); ++t) e = dot(e, from_tree(f.trees()[t]));
    return e;
}

int BracketExpr::bracket_count() const {
    return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(),
                                          [](const Node& n) { return n.kind == Kind::bracket; }));
}

std::vector<int> BracketExpr::variables() const {
    std::vector<int> out;
    for (const Node& n : nodes_)
        if (n.kind == Kind::var) out.push_back(n.label);
    return out;
}

BracketExpr BracketExpr::relabel(const std::function<int(int)>& f) const {
    BracketExpr e = *this;
    for (Node& n : e.nodes_)
        if (n.kind == Kind::var) n.label = f(n.label);
    return e;
}

BracketExpr BracketExpr::substitute(int label, const BracketExpr& e) const {
    BracketExpr inner = e;
    const int shift = bracket_count();
    for (Node& n : inner.nodes_)
        if (n.kind == Kind::bracket) n.token += shift;
    auto copy = [&](auto&& self, int v) -> BracketExpr {
        const Node& n = nodes_[v];
        if (n.kind == Kind::var) return n.label == label ? inner : var(n.label);
        return combine(n.kind, self(self, n.left), self(self, n.right), n.token, 0);
    };
    return copy(copy, 0);
}

namespace {

using Monomial = std::vector<BracketExpr>;

Tree strip(const BracketExpr& e, int v, std::vector<int>& tokens) {
    const auto& n = e.nodes()[v];
    if (n.kind == BracketExpr::Kind::var) return Tree::leaf(n.label);
    Tree l = strip(e, n.left, tokens);
    tokens.push_back(n.token);
    Tree r = strip(e, n.right, tokens);
    return Tree::join(l, r);
}

} // namespace

LinCombo<Forest> reduce_bracket(const BracketExpr& e, Parity p) {
    auto vars = e.variables();
    std::sort(vars.begin(), vars.end());
    for (int i = 0; i < static_cast<int>(vars.size()); ++i)
        if (vars[i] != i + 1)
            throw ValidationError("bracket expression must use x1..x" + std::to_string(vars.size()) + " once each");

    using Expansion = std::map<Monomial, Coeff>;
    auto expand = [&](auto&& self, int v) -> Expansion {
        const auto& n = e.nodes_[v];
        Expansion out;
        if (n.kind == BracketExpr::Kind::var) {
            out[{BracketExpr::var(n.label)}] = 1;
            return out;
        }
        Expansion a = self(self, n.left), b = self(self, n.right);
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                if (n.kind == BracketExpr::Kind::dot) {
                    Monomial m = ma;
                    m.insert(m.end(), mb.begin(), mb.end());
                    out[m] += ca * cb;
                    continue;
                }
                // Leibniz in each slot; orientation travels with the token
                for (std::size_t i = 0; i < ma.size(); ++i)
                    for (std::size_t j = 0; j < mb.size(); ++j) {
                        Monomial m;
                        for (std::size_t x = 0; x < ma.size(); ++x)
                            if (x != i) m.push_back(ma[x]);
                        for (std::size_t y = 0; y < mb.size(); ++y)
                            if (y != j) m.push_back(mb[y]);
                        m.push_back(BracketExpr::combine(BracketExpr::Kind::bracket, ma[i], mb[j], n.token, 0));
                        out[m] += ca * cb;
                    }
            }
        return out;
    };

    LinCombo<Forest> result;
    for (const auto& [mono, c] : expand(expand, 0)) {
        if (c == 0) continue;
        std::vector<std::pair<int, Tree>> factors;
        std::vector<std::vector<int>> toks;
        for (const BracketExpr& w : mono) {
            std::vector<int> t;
            Tree tree = strip(w, 0, t);
            factors.emplace_back(tree.min_label(), std::move(tree));
            toks.push_back(std::move(t));
        }
        std::vector<int> order(factors.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return factors[a].first < factors[b].first; });
        std::vector<Tree> trees;
        std::vector<int> inorder_tokens;
        for (int i : order) {
            trees.push_back(factors[i].second);
            inorder_tokens.insert(inorder_tokens.end(), toks[i].begin(), toks[i].end());
        }
        int sign = is_even(p) ? sign_of(odd_permutation(inorder_tokens)) : 1;
        result.add(Forest(std::move(trees)), c * sign);
    }
    return result;
}

LinCombo<Forest> reduce_bracket(const LinCombo<BracketExpr>& x, Parity p) {
    LinCombo<Forest> out;
    for (const auto& [e, c] : x) out += c * reduce_bracket(e, p);
    return out;
}

} // namespace confpair
