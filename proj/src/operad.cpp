#include "confpair/operad.hpp"

#include "confpair/bracket.hpp"
#include "confpair/io.hpp"
#include "confpair/pairing.hpp"
#include "confpair/partition.hpp"
#include "confpair/pois.hpp"

#include <map>
#include <random>

namespace confpair {

std::optional<int> arity(const LinCombo<Forest>& x) {
    std::optional<int> n;
    for (const auto& [f, c] : x) {
        if (n && *n != f.n()) throw ValidationError("terms have different arities");
        n = f.n();
    }
    return n;
}

LinCombo<Forest> compose_unreduced(const LinCombo<Forest>& b1, int i, const LinCombo<Forest>& b2, Parity p) {
    auto n = arity(b1), m = arity(b2);
    LinCombo<Forest> out;
    if (!n || !m) return out;
    if (i < 1 || i > *n)
        throw ValidationError("composition index " + std::to_string(i) + " outside 1.." + std::to_string(*n));
    const int shift = *m - 1;
    for (const auto& [f1, c1] : b1) {
        BracketExpr outer = BracketExpr::from_forest(f1).relabel([&](int j) { return j > i ? j + shift : j; });
        for (const auto& [f2, c2] : b2) {
            BracketExpr inner = BracketExpr::from_forest(f2).relabel([&](int k) { return k + i - 1; });
            out += (c1 * c2) * reduce_bracket(outer.substitute(i, inner), p);
        }
    }
    return out;
}

LinCombo<Forest> compose(const LinCombo<Forest>& b1, int i, const LinCombo<Forest>& b2, Parity p) {
    return normalize_pois(compose_unreduced(b1, i, b2, p), p);
}

LinCombo<Forest> may_compose(const LinCombo<Forest>& outer, const std::vector<LinCombo<Forest>>& inner, Parity p) {
    auto r = arity(outer);
    LinCombo<Forest> out;
    if (!r) return out;
    if (static_cast<int>(inner.size()) != *r)
        throw ValidationError("need one inner element per input of the outer element");
    for (const auto& x : inner) {
        if (x.empty()) return out;
        arity(x);
    }

    std::vector<std::vector<std::pair<Forest, Coeff>>> terms;
    for (const auto& x : inner) terms.emplace_back(x.begin(), x.end());
    std::vector<std::size_t> pick(inner.size(), 0);
    while (true) {
        bool odd = false;
        for (std::size_t a = 0; a < pick.size(); ++a)
            for (std::size_t b = a + 1; b < pick.size(); ++b)
                odd ^= terms[a][pick[a]].first.internal_count() % 2 == 1 &&
                       terms[b][pick[b]].first.internal_count() % 2 == 1;
        Coeff coeff = is_even(p) ? sign_of(odd) : 1;
        for (std::size_t s = 0; s < pick.size(); ++s) coeff *= terms[s][pick[s]].second;

        LinCombo<Forest> cur = outer;
        for (int s = *r; s >= 1; --s)
            cur = compose_unreduced(cur, s, LinCombo<Forest>(terms[s - 1][pick[s - 1]].first), p);
        out += coeff * cur;

        std::size_t s = 0;
        while (s < pick.size() && ++pick[s] == terms[s].size()) pick[s++] = 0;
        if (s == pick.size()) break;
    }
    return normalize_pois(out, p);
}

CooperadOutput cooperad(const Graph& g, const OTree& tau, Parity p) {
    if (g.n() != tau.leaf_count())
        throw ValidationError("graph has " + std::to_string(g.n()) + " vertices but the o-tree has " +
                              std::to_string(tau.leaf_count()) + " leaves");
    CooperadOutput out;
    out.vertices = tau.internal_vertices();
    std::map<int, std::size_t> factor_of;
    for (std::size_t f = 0; f < out.vertices.size(); ++f) factor_of[out.vertices[f]] = f;

    std::vector<std::vector<Edge>> edges(out.vertices.size());
    std::vector<std::vector<int>> origin(out.vertices.size());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edges()[e];
        int v = tau.nadir(edge.from, edge.to);
        std::size_t f = factor_of.at(v);
        edges[f].push_back(Edge{tau.input_label(v, edge.from), tau.input_label(v, edge.to)});
        origin[f].push_back(e);
    }
    std::vector<int> order;
    for (std::size_t f = 0; f < out.vertices.size(); ++f) {
        out.factors.emplace_back(tau.arity(out.vertices[f]), std::move(edges[f]));
        order.insert(order.end(), origin[f].begin(), origin[f].end());
    }
    out.sign = is_even(p) ? sign_of(odd_permutation(order)) : 1;
    return out;
}

LinCombo<std::vector<Graph>> cooperad(const LinCombo<Graph>& g, const OTree& tau, Parity p) {
    LinCombo<std::vector<Graph>> out;
    for (const auto& [graph, c] : g) {
        CooperadOutput o = cooperad(graph, tau, p);
        out.add(o.factors, c * o.sign);
    }
    return out;
}

Coeff pair_tensor(const LinCombo<std::vector<Graph>>& x, const std::vector<Forest>& factors, Parity p) {
    Coeff total = 0;
    for (const auto& [gs, c] : x) {
        if (gs.size() != factors.size()) throw ValidationError("tensor factor counts differ");
        int v = 1;
        for (std::size_t i = 0; i < gs.size() && v != 0; ++i) v *= pair(gs[i], factors[i], p).value;
        total += c * v;
    }
    return total;
}

namespace {

struct DualitySetup {
    std::vector<int> children;                 // child vertex of each root input, -1 for a leaf
    std::vector<std::vector<Forest>> options;  // outer forests, then one list per child vertex
    std::vector<std::vector<Graph>> graphs_by_degree;
    std::uint64_t tuples = 1;
};

DualitySetup setup(const OTree& tau) {
    if (!tau.is_two_level()) throw ValidationError("duality check needs a two-level o-tree");
    if (tau.leaf_count() < 1) throw ValidationError("duality check needs at least one leaf");
    DualitySetup s;
    const auto& root = tau.nodes()[0];
    std::vector<Forest> outer;
    for (int k = 0; k < tau.arity(0); ++k)
        for (Forest& f : enumerate_tall_forests(tau.arity(0), k)) outer.push_back(std::move(f));
    s.options.push_back(std::move(outer));
    for (int c : root.inputs) {
        if (tau.nodes()[c].leaf) {
            s.children.push_back(-1);
            continue;
        }
        s.children.push_back(c);
        std::vector<Forest> fs;
        for (int k = 0; k < tau.arity(c); ++k)
            for (Forest& f : enumerate_tall_forests(tau.arity(c), k)) fs.push_back(std::move(f));
        s.options.push_back(std::move(fs));
    }
    for (const auto& o : s.options) s.tuples *= o.size();
    const int n = tau.leaf_count();
    for (int k = 0; k < n; ++k) s.graphs_by_degree.push_back(enumerate_long_graphs(n, k));
    return s;
}

std::vector<Forest> decode(const DualitySetup& s, std::uint64_t index) {
    std::vector<Forest> out;
    for (const auto& o : s.options) {
        out.push_back(o[index % o.size()]);
        index /= o.size();
    }
    return out;
}

LinCombo<Forest> composed(const DualitySetup& s, const std::vector<Forest>& forests, Parity p) {
    std::vector<LinCombo<Forest>> inner;
    std::size_t next = 1;
    for (int c : s.children)
        inner.emplace_back(c < 0 ? Forest::singletons(1) : forests[next++]);
    return may_compose(LinCombo<Forest>(forests[0]), inner, p);
}

// Checks one basis tuple against the given graphs; appends failures.
std::uint64_t check_tuple(const DualitySetup& s, const OTree& tau, const std::vector<Forest>& forests,
                          const std::vector<const Graph*>& graphs, Parity p, std::vector<DualityFailure>& out) {
    LinCombo<Forest> lhs_forest = composed(s, forests, p);
    for (const Graph* g : graphs) {
        Coeff lhs = pair(*g, lhs_forest, p);
        CooperadOutput co = cooperad(*g, tau, p);
        Coeff rhs = co.sign;
        for (std::size_t i = 0; i < forests.size() && rhs != 0; ++i) rhs *= pair(co.factors[i], forests[i], p).value;
        if (lhs != rhs) out.push_back(DualityFailure{*g, forests, lhs, rhs});
    }
    return graphs.size();
}

std::vector<const Graph*> matching_graphs(const DualitySetup& s, const std::vector<Forest>& forests) {
    int degree = 0;
    for (const Forest& f : forests) degree += f.internal_count();
    std::vector<const Graph*> out;
    if (degree < static_cast<int>(s.graphs_by_degree.size()))
        for (const Graph& g : s.graphs_by_degree[degree]) out.push_back(&g);
    return out;
}

DualityReport run_duality(const OTree& tau, Parity p, const DualityOptions& opt, bool parallel) {
    DualitySetup s = setup(tau);
    DualityReport rep;
    rep.tau = render(tau);
    rep.parity = p;

    if (tau.leaf_count() > opt.exhaustive_limit) {
        // seeded sample of (tuple, graph) cases; drawn up front so the
        // outcome does not depend on scheduling
        std::mt19937_64 rng(opt.seed);
        std::vector<std::pair<std::uint64_t, std::size_t>> cases;
        while (cases.size() < opt.samples) {
            std::uint64_t t = std::uniform_int_distribution<std::uint64_t>(0, s.tuples - 1)(rng);
            auto gs = matching_graphs(s, decode(s, t));
            if (gs.empty()) continue;
            cases.emplace_back(t, std::uniform_int_distribution<std::size_t>(0, gs.size() - 1)(rng));
        }
        std::vector<std::vector<DualityFailure>> found(cases.size());
        const long long total = static_cast<long long>(cases.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long long c = 0; c < total; ++c) {
            auto forests = decode(s, cases[c].first);
            auto gs = matching_graphs(s, forests);
            check_tuple(s, tau, forests, {gs[cases[c].second]}, p, found[c]);
        }
        rep.cases_checked = cases.size();
        for (auto& f : found) rep.failures.insert(rep.failures.end(), f.begin(), f.end());
        return rep;
    }

    std::vector<std::vector<DualityFailure>> found(s.tuples);
    std::vector<std::uint64_t> counts(s.tuples, 0);
    const long long total = static_cast<long long>(s.tuples);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long t = 0; t < total; ++t) {
        auto forests = decode(s, static_cast<std::uint64_t>(t));
        counts[t] = check_tuple(s, tau, forests, matching_graphs(s, forests), p, found[t]);
    }
    for (long long t = 0; t < total; ++t) {
        rep.cases_checked += counts[t];
        rep.failures.insert(rep.failures.end(), found[t].begin(), found[t].end());
    }
    return rep;
}

} // namespace

DualityReport check_duality_serial(const OTree& tau, Parity p, const DualityOptions& opt) {
    return run_duality(tau, p, opt, false);
}

DualityReport check_duality_parallel(const OTree& tau, Parity p, const DualityOptions& opt) {
    return run_duality(tau, p, opt, true);
}

DualityReport check_duality(const OTree& tau, Parity p, const DualityOptions& opt) {
    return check_duality_parallel(tau, p, opt);
}

DualityReport check_duality(const std::vector<int>& arities, Parity p, const DualityOptions& opt) {
    return check_duality(OTree::two_level(arities), p, opt);
}

std::vector<std::vector<int>> two_level_shapes(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto extend = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            int used = std::max(a, 1);
            if (used > remaining) break;
            cur.push_back(a);
            self(self, remaining - used);
            cur.pop_back();
        }
    };
    extend(extend, n);
    return out;
}

} // namespace confpair
