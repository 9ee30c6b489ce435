#include "confpair/gram.hpp"

#include <map>
#include <sstream>

namespace confpair {

namespace {

GramMatrix shape(int n, int k, Parity p) {
    GramMatrix m;
    m.n = n;
    m.k = k;
    m.parity = p;
    m.rows = enumerate_long_graphs(n, k);
    m.cols = enumerate_tall_forests(n, k);
    m.entries.assign(m.rows.size() * m.cols.size(), 0);
    return m;
}

} // namespace

GramMatrix gram_matrix_serial(int n, int k, Parity p, const PairFn& pair) {
    GramMatrix m = shape(n, k, p);
    const std::size_t cols = m.cols.size();
    for (std::size_t i = 0; i < m.entries.size(); ++i) m.entries[i] = pair(m.rows[i / cols], m.cols[i % cols], p);
    return m;
}

GramMatrix gram_matrix_parallel(int n, int k, Parity p, const PairFn& pair) {
    GramMatrix m = shape(n, k, p);
    const long long total = static_cast<long long>(m.entries.size());
    const std::size_t cols = m.cols.size();
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < total; ++i) m.entries[i] = pair(m.rows[i / cols], m.cols[i % cols], p);
    return m;
}

GramMatrix gram_matrix(int n, int k, Parity p) { return gram_matrix_parallel(n, k, p); }

GramMatrix first_degree_gram(int n, Parity p, const PairFn& pair) {
    GramMatrix m;
    m.n = n;
    m.k = 1;
    m.parity = p;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            m.rows.emplace_back(n, std::vector<Edge>{{i, j}});
            std::vector<Tree> trees;
            for (int x = 1; x <= n; ++x) {
                if (x == j) continue;
                trees.push_back(x == i ? Tree::join(Tree::leaf(i), Tree::leaf(j)) : Tree::leaf(x));
            }
            m.cols.emplace_back(std::move(trees));
        }
    for (const Graph& g : m.rows)
        for (const Forest& f : m.cols) m.entries.push_back(pair(g, f, p));
    return m;
}

std::vector<GramFailure> identity_failures(const GramMatrix& m) {
    std::map<OrderedPartition, std::size_t> col_of;
    for (std::size_t c = 0; c < m.cols.size(); ++c) col_of[ordered_partition(m.cols[c])] = c;
    std::vector<GramFailure> out;
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        auto it = col_of.find(ordered_partition(m.rows[r]));
        for (std::size_t c = 0; c < m.cols.size(); ++c) {
            int expected = it != col_of.end() && it->second == c ? 1 : 0;
            if (m.at(r, c) != expected) out.push_back(GramFailure{m.k, r, c, m.rows[r], m.cols[c], m.at(r, c), expected});
        }
    }
    return out;
}

std::vector<GramFailure> first_degree_failures(const GramMatrix& m) {
    std::vector<GramFailure> out;
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols.size(); ++c) {
            int expected = r == c ? 1 : 0;
            if (m.at(r, c) != expected) out.push_back(GramFailure{1, r, c, m.rows[r], m.cols[c], m.at(r, c), expected});
        }
    return out;
}

PerfectReport verify_perfect(int n, Parity p, const PairFn& pair) {
    PerfectReport rep;
    rep.n = n;
    rep.parity = p;
    for (int k = 0; k < std::max(n, 1); ++k) {
        GramMatrix m = gram_matrix_parallel(n, k, p, pair);
        auto bad = identity_failures(m);
        bool square = m.rows.size() == m.cols.size();
        rep.degrees.push_back(DegreeCheck{k, m.rows.size(), bad.empty() && square});
        rep.failures.insert(rep.failures.end(), bad.begin(), bad.end());
    }
    GramMatrix first = first_degree_gram(n, p, pair);
    auto bad = first_degree_failures(first);
    rep.first_degree_rank = first.rows.size();
    rep.first_degree_identity = bad.empty();
    rep.failures.insert(rep.failures.end(), bad.begin(), bad.end());
    return rep;
}

RankTable rank_table(int n, int d) {
    if (n < 1) throw ValidationError("rank table needs n >= 1");
    if (d < 2) throw ValidationError("dimension must be at least 2");
    return RankTable{n, d, stirling_row(n)};
}

std::string to_csv(const RankTable& t) {
    std::ostringstream out;
    out << "degree,rank\n";
    for (std::size_t k = 0; k < t.q.size(); ++k) out << t.degree(k) << ',' << t.q[k] << '\n';
    return out.str();
}

} // namespace confpair
