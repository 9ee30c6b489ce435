#include "confpair/partition.hpp"

#include <algorithm>

namespace confpair {

namespace {

void sort_blocks(OrderedPartition& p) {
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

void check_blocks(const OrderedPartition& p, int n) {
    std::vector<bool> seen(n + 1, false);
    for (const auto& b : p.blocks) {
        if (b.empty()) throw ValidationError("empty block");
        if (*std::min_element(b.begin(), b.end()) != b.front())
            throw ValidationError("block does not start with its minimum");
        for (int x : b) {
            if (x < 1 || x > n || seen[x]) throw ValidationError("blocks do not partition 1..n");
            seen[x] = true;
        }
    }
    for (int i = 1; i <= n; ++i)
        if (!seen[i]) throw ValidationError("blocks do not partition 1..n");
}

int label_count(const OrderedPartition& p) {
    int n = 0;
    for (const auto& b : p.blocks) n += static_cast<int>(b.size());
    return n;
}

// Set partitions of {1..n} into exactly `parts` blocks, blocks sorted by minimum.
void set_partitions(int n, int parts, int next, std::vector<std::vector<int>>& cur,
                    std::vector<std::vector<std::vector<int>>>& out) {
    if (next > n) {
        if (static_cast<int>(cur.size()) == parts) out.push_back(cur);
        return;
    }
    int remaining = n - next + 1;
    if (static_cast<int>(cur.size()) + remaining < parts) return;
    // by index: the recursion may grow cur and invalidate iterators
    for (std::size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(next);
        set_partitions(n, parts, next + 1, cur, out);
        cur[b].pop_back();
    }
    if (static_cast<int>(cur.size()) < parts) {
        cur.push_back({next});
        set_partitions(n, parts, next + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

OrderedPartition ordered_partition(const Forest& f) {
    OrderedPartition p;
    for (const Tree& t : f.trees()) {
        if (!t.is_tall()) throw ValidationError("forest is not tall");
        p.blocks.push_back(t.leaves());
    }
    return p;
}

OrderedPartition ordered_partition(const Graph& g) {
    std::vector<std::vector<int>> chains;
    for (const Edge& e : g.edges()) {
        if (!chains.empty() && chains.back().back() == e.from)
            chains.back().push_back(e.to);
        else
            chains.push_back({e.from, e.to});
    }
    std::vector<bool> used(g.n() + 1, false);
    for (const auto& c : chains)
        for (int x : c) {
            if (used[x]) throw ValidationError("graph is not long");
            used[x] = true;
        }
    OrderedPartition p{chains};
    for (int i = 1; i <= g.n(); ++i)
        if (!used[i]) p.blocks.push_back({i});
    for (const auto& b : p.blocks)
        if (*std::min_element(b.begin(), b.end()) != b.front()) throw ValidationError("graph is not long");
    sort_blocks(p);
    if (long_graph(p).edges() != g.edges()) throw ValidationError("graph is not long");
    return p;
}

Forest tall_forest(const OrderedPartition& p) {
    check_blocks(p, label_count(p));
    std::vector<Tree> trees;
    for (const auto& b : p.blocks) {
        Tree t = Tree::leaf(b.front());
        for (std::size_t k = 1; k < b.size(); ++k) t = Tree::join(t, Tree::leaf(b[k]));
        trees.push_back(std::move(t));
    }
    return Forest(std::move(trees));
}

Graph long_graph(const OrderedPartition& p) {
    int n = label_count(p);
    check_blocks(p, n);
    std::vector<Edge> edges;
    for (const auto& b : p.blocks)
        for (std::size_t k = 1; k < b.size(); ++k) edges.push_back(Edge{b[k - 1], b[k]});
    return Graph(n, std::move(edges));
}

std::vector<OrderedPartition> enumerate_ordered_partitions(int n, int k) {
    std::vector<OrderedPartition> out;
    if (n < 0 || k < 0 || k >= std::max(n, 1)) {
        if (n == 0 && k == 0) out.push_back(OrderedPartition{});
        return out;
    }
    std::vector<std::vector<std::vector<int>>> parts;
    std::vector<std::vector<int>> cur;
    set_partitions(n, n - k, 1, cur, parts);
    for (auto& blocks : parts) {
        // every order of the non-minimal elements of every block
        std::vector<std::vector<int>> b = blocks;
        for (auto& x : b) std::sort(x.begin() + 1, x.end());
        auto advance = [&b]() {
            for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i) {
                if (std::next_permutation(b[i].begin() + 1, b[i].end())) return true;
            }
            return false;
        };
        do {
            out.push_back(OrderedPartition{b});
        } while (advance());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Forest> enumerate_tall_forests(int n, int k) {
    std::vector<Forest> out;
    for (const auto& p : enumerate_ordered_partitions(n, k)) out.push_back(tall_forest(p));
    return out;
}

std::vector<Graph> enumerate_long_graphs(int n, int k) {
    std::vector<Graph> out;
    for (const auto& p : enumerate_ordered_partitions(n, k)) out.push_back(long_graph(p));
    return out;
}

std::vector<Tree> enumerate_trees(const std::vector<int>& labels) {
    std::vector<Tree> out;
    const int n = static_cast<int>(labels.size());
    if (n == 1) {
        out.push_back(Tree::leaf(labels[0]));
        return out;
    }
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> l, r;
        for (int i = 0; i < n; ++i) (mask >> i & 1u ? l : r).push_back(labels[i]);
        auto ls = enumerate_trees(l);
        auto rs = enumerate_trees(r);
        for (const Tree& a : ls)
            for (const Tree& b : rs) out.push_back(Tree::join(a, b));
    }
    return out;
}

std::vector<Forest> enumerate_forests(int n) {
    std::vector<Forest> out;
    for (int k = 0; k < std::max(n, 1); ++k) {
        std::vector<std::vector<std::vector<int>>> parts;
        std::vector<std::vector<int>> cur;
        set_partitions(n, n - k, 1, cur, parts);
        for (const auto& blocks : parts) {
            std::vector<std::vector<Tree>> options;
            for (const auto& b : blocks) options.push_back(enumerate_trees(b));
            std::vector<std::size_t> pick(blocks.size(), 0);
            while (true) {
                std::vector<Tree> trees;
                for (std::size_t i = 0; i < blocks.size(); ++i) trees.push_back(options[i][pick[i]]);
                out.emplace_back(std::move(trees));
                std::size_t i = 0;
                while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
                if (i == pick.size()) break;
            }
        }
    }
    return out;
}

std::vector<Coeff> stirling_row(int n) {
    std::vector<Coeff> q{1};
    for (int i = 1; i < n; ++i) {
        q.push_back(0);
        for (std::size_t k = q.size() - 1; k >= 1; --k) q[k] += q[k - 1] * i;
    }
    return q;
}

} // namespace confpair
