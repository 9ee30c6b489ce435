#include "confpair/siop.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>

namespace confpair {

int reorientation_sign(int reversals, bool odd_perm, Parity p) {
    if (is_even(p)) return sign_of(odd_perm);
    return sign_of(reversals % 2 == 1);
}

ArnoldTerms arnold_terms(const Graph& g, int pa, int pb, Parity p) {
    const Edge ea = g.edges().at(pa), eb = g.edges().at(pb);
    int k = 0;
    for (int x : {ea.from, ea.to})
        if (x == eb.from || x == eb.to) k = x;
    if (k == 0 || pa == pb) throw ValidationError("Arnold move needs two edges sharing one vertex");
    int j = ea.from == k ? ea.to : ea.from;
    int l = eb.from == k ? eb.to : eb.from;
    if (j == l) throw ValidationError("Arnold move needs three distinct vertices");

    int reversals = (ea.from != j) + (eb.from != k);
    auto with = [&](Edge a, Edge b) {
        auto edges = g.edges();
        edges[pa] = a;
        edges[pb] = b;
        return Graph(g.n(), std::move(edges));
    };
    return ArnoldTerms{reorientation_sign(reversals, false, p), with({j, k}, {k, l}), with({k, l}, {l, j}),
                       with({l, j}, {j, k})};
}

namespace {

int position(const Graph& g, int a, int b) {
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) return i;
    }
    return -1;
}

bool has_double_edge(const Graph& g) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges())
        if (!seen.insert({std::min(e.from, e.to), std::max(e.from, e.to)}).second) return true;
    return false;
}

std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n() + 1);
    for (const Edge& e : g.edges()) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

// Vertices of a shortest cycle, consecutive ones adjacent.
std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
    auto adj = adjacency(g);
    std::optional<std::vector<int>> best;
    for (const Edge& e : g.edges()) {
        // shortest path from e.from to e.to avoiding this edge
        std::vector<int> prev(g.n() + 1, 0);
        std::deque<int> queue{e.from};
        prev[e.from] = e.from;
        while (!queue.empty() && prev[e.to] == 0) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj[v]) {
                if (prev[w] != 0) continue;
                if ((v == e.from && w == e.to) || (v == e.to && w == e.from)) continue;
                prev[w] = v;
                queue.push_back(w);
            }
        }
        if (prev[e.to] == 0) continue;
        std::vector<int> path{e.to};
        while (path.back() != e.from) path.push_back(prev[path.back()]);
        if (!best || path.size() < best->size()) best = path;
    }
    return best;
}

// For an acyclic simple graph: a vertex with two children when each component
// is rooted at its minimum, as (child, vertex, child).
std::optional<std::array<int, 3>> branching(const Graph& g) {
    auto adj = adjacency(g);
    std::vector<int> parent(g.n() + 1, -1);
    for (int root = 1; root <= g.n(); ++root) {
        if (parent[root] != -1) continue;
        parent[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            std::vector<int> kids;
            for (int w : adj[v])
                if (w != parent[v]) {
                    parent[w] = v;
                    kids.push_back(w);
                    queue.push_back(w);
                }
            if (kids.size() >= 2) return std::array<int, 3>{kids[0], v, kids[1]};
        }
    }
    return std::nullopt;
}

// Acyclic, simple, every vertex has at most one child: reorder into long form.
std::pair<Graph, int> to_long(const Graph& g, Parity p) {
    auto adj = adjacency(g);
    std::vector<bool> seen(g.n() + 1, false);
    std::vector<Edge> edges;
    std::vector<int> order;
    int reversals = 0;
    for (int root = 1; root <= g.n(); ++root) {
        if (seen[root]) continue;
        int prev = 0, v = root;
        seen[root] = true;
        while (true) {
            int next = 0;
            for (int w : adj[v])
                if (w != prev) next = w;
            if (next == 0) break;
            int pos = position(g, v, next);
            order.push_back(pos);
            if (g.edges()[pos].from != v) ++reversals;
            edges.push_back(Edge{v, next});
            seen[next] = true;
            prev = v;
            v = next;
        }
    }
    return {Graph(g.n(), std::move(edges)), reorientation_sign(reversals, odd_permutation(order), p)};
}

} // namespace

LinCombo<Graph> normalize_siop(const LinCombo<Graph>& x, Parity p) {
    std::optional<int> n;
    for (const auto& [g, c] : x) {
        if (n && *n != g.n()) throw ValidationError("terms have different numbers of vertices");
        n = g.n();
    }

    std::map<Graph, Coeff> pending(x.terms().begin(), x.terms().end());
    LinCombo<Graph> out;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Graph& g = node.key();
        const Coeff c = node.mapped();
        if (c == 0 || has_double_edge(g)) continue;

        auto rewrite = [&](int pa, int pb) {
            ArnoldTerms t = arnold_terms(g, pa, pb, p);
            pending[t.second] -= c * t.sign;
            pending[t.third] -= c * t.sign;
        };
        if (auto cycle = shortest_cycle(g)) {
            const auto& v = *cycle;
            rewrite(position(g, v[0], v[1]), position(g, v[1], v[2]));
        } else if (auto b = branching(g)) {
            rewrite(position(g, (*b)[0], (*b)[1]), position(g, (*b)[1], (*b)[2]));
        } else {
            auto [lg, s] = to_long(g, p);
            out.add(lg, c * s);
        }
    }
    return out;
}

} // namespace confpair
