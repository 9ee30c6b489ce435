#include "confpair/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace confpair {

namespace {

double norm(const Point& a) {
    double s = 0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

Point midpoint(const Point& a, const Point& b) {
    Point m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = 0.5 * (a[i] + b[i]);
    return m;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t sample) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32)};
    return std::mt19937_64(seq);
}

void merge(IdentityCheck& into, const IdentityCheck& c) {
    into.center_error = std::max(into.center_error, c.center_error);
    into.distance_error = std::max(into.distance_error, c.distance_error);
    into.min_separation = std::min(into.min_separation, c.min_separation);
    into.separation_bound = c.separation_bound;
}

} // namespace

double distance(const Point& a, const Point& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

TorusPoint random_torus_point(const Forest& f, int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    TorusPoint t{d, {}};
    for (int v = 0; v < f.internal_count(); ++v) {
        Point u(d);
        double len = 0;
        while (len < 1e-6) {
            for (double& x : u) x = gauss(rng);
            len = norm(u);
        }
        for (double& x : u) x /= len;
        t.u.push_back(std::move(u));
    }
    return t;
}

Configuration eval_system(const Forest& f, double eps, const TorusPoint& u, int d) {
    if (d < 2) throw ValidationError("dimension must be at least 2");
    if (!(eps > 0 && eps < 1.0 / 3.0)) throw ValidationError("eps must lie in (0, 1/3)");
    if (static_cast<int>(u.u.size()) != f.internal_count())
        throw ValidationError("need one unit vector per internal vertex");
    for (const Point& v : u.u)
        if (static_cast<int>(v.size()) != d || std::abs(norm(v) - 1.0) > unit_tolerance)
            throw ValidationError("torus coordinates must be unit vectors in R^" + std::to_string(d));

    Configuration c{d, std::vector<Point>(f.n(), Point(d, 0.0))};
    for (int label = 1; label <= f.n(); ++label) {
        const auto& pos = f.where(label);
        const Tree& t = f.trees()[pos.tree];
        Point& x = c.x[label - 1];
        x[0] = pos.tree + 1;
        int child = pos.node;
        for (int v = t.parent(child); v >= 0; child = v, v = t.parent(v)) {
            double s = t.nodes()[v].left == child ? 1.0 : -1.0;
            double r = std::pow(eps, t.height(v));
            const Point& dir = u.u[f.vertex_index(pos.tree, v)];
            for (int k = 0; k < d; ++k) x[k] += s * r * dir[k];
        }
    }
    return c;
}

Point alpha(const Configuration& c, int i, int j) {
    const Point& a = c.x.at(i - 1);
    const Point& b = c.x.at(j - 1);
    Point diff(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) diff[k] = b[k] - a[k];
    double len = norm(diff);
    if (len < coincidence_tolerance)
        throw ValidationError("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    for (double& v : diff) v /= len;
    return diff;
}

double s_ratio(const Configuration& c, int i, int j, int k) {
    if (i == j || j == k || i == k) throw ValidationError("s_ratio needs three distinct labels");
    double den = distance(c.x.at(i - 1), c.x.at(k - 1));
    if (den < coincidence_tolerance) return std::numeric_limits<double>::infinity();
    return distance(c.x.at(i - 1), c.x.at(j - 1)) / den;
}

IdentityCheck check_identities(const Forest& f, double eps, const Configuration& c) {
    IdentityCheck out;
    int hmax = 0;
    for (int t = 0; t < static_cast<int>(f.trees().size()); ++t) {
        const Tree& tree = f.trees()[t];
        hmax = std::max(hmax, tree.max_height());
        std::vector<Point> center(tree.nodes().size());
        // pre-order storage: children follow their parent, so sweep backwards
        for (int v = static_cast<int>(tree.nodes().size()) - 1; v >= 0; --v) {
            const auto& n = tree.nodes()[v];
            if (n.leaf()) {
                center[v] = c.x[n.label - 1];
                continue;
            }
            center[v] = midpoint(center[n.left], center[n.right]);
            double r = std::pow(eps, tree.height(v));
            out.distance_error = std::max(out.distance_error, std::abs(distance(center[n.left], center[v]) - r));
            out.distance_error = std::max(out.distance_error, std::abs(distance(center[v], center[n.right]) - r));
        }
        Point expected(c.d, 0.0);
        expected[0] = t + 1;
        out.center_error = std::max(out.center_error, distance(center[0], expected));
    }
    for (std::size_t a = 0; a < c.x.size(); ++a)
        for (std::size_t b = a + 1; b < c.x.size(); ++b)
            out.min_separation = std::min(out.min_separation, distance(c.x[a], c.x[b]));
    out.separation_bound = std::pow(eps, hmax) * (1 - 3 * eps);
    return out;
}

IdentityCheck check_identities_serial(const Forest& f, double eps, int d, int samples, std::uint64_t seed) {
    IdentityCheck out;
    for (int s = 0; s < samples; ++s) {
        auto rng = sample_rng(seed, s);
        merge(out, check_identities(f, eps, eval_system(f, eps, random_torus_point(f, d, rng), d)));
    }
    return out;
}

IdentityCheck check_identities_parallel(const Forest& f, double eps, int d, int samples, std::uint64_t seed) {
    std::vector<IdentityCheck> per(samples);
#pragma omp parallel for schedule(static)
    for (int s = 0; s < samples; ++s) {
        auto rng = sample_rng(seed, s);
        per[s] = check_identities(f, eps, eval_system(f, eps, random_torus_point(f, d, rng), d));
    }
    IdentityCheck out;
    for (const auto& c : per) merge(out, c);
    return out;
}

double direction_rounding_bound(const Configuration& c, int i, int j) {
    const Point& a = c.x.at(i - 1);
    const Point& b = c.x.at(j - 1);
    double scale = 1.0;
    for (std::size_t k = 0; k < a.size(); ++k) scale = std::max({scale, std::abs(a[k]), std::abs(b[k])});
    double len = distance(a, b);
    if (len == 0) return std::numeric_limits<double>::infinity();
    // a few ulps per accumulated orbit term, generously rounded up
    return 64 * std::numeric_limits<double>::epsilon() * scale * std::sqrt(static_cast<double>(a.size())) / len;
}

LimitReport limit_check(const Forest& f, const Graph& g, int d, const std::vector<double>& eps_list, int samples,
                        std::uint64_t seed) {
    if (f.n() != g.n()) throw ValidationError("forest and graph have different label counts");
    LimitReport rep;
    rep.d = d;
    rep.eps = eps_list;
    rep.max_deviation.assign(eps_list.size(), 0.0);
    for (const Edge& e : g.edges())
        rep.per_edge.push_back(
            EdgeLimit{e, f.where(e.from).tree == f.where(e.to).tree, std::vector<double>(eps_list.size(), 0.0),
                      std::vector<double>(eps_list.size(), 0.0)});

    for (int s = 0; s < samples; ++s) {
        auto rng = sample_rng(seed, s);
        TorusPoint u = random_torus_point(f, d, rng);
        for (std::size_t k = 0; k < eps_list.size(); ++k) {
            Configuration c = eval_system(f, eps_list[k], u, d);
            for (EdgeLimit& el : rep.per_edge) {
                const Edge& e = el.edge;
                Point theta = alpha(c, e.to, e.from);
                Point predicted(d, 0.0);
                const auto& a = f.where(e.from);
                const auto& b = f.where(e.to);
                if (el.same_tree) {
                    double sigma = a.planar < b.planar ? 1.0 : -1.0;
                    const Point& dir = u.u[*f.nadir(e.from, e.to)];
                    for (int x = 0; x < d; ++x) predicted[x] = sigma * dir[x];
                } else {
                    predicted[0] = a.tree > b.tree ? 1.0 : -1.0;
                }
                double dev = distance(theta, predicted);
                el.deviation[k] = std::max(el.deviation[k], dev);
                el.rounding[k] = std::max(el.rounding[k], direction_rounding_bound(c, e.from, e.to));
                rep.max_deviation[k] = std::max(rep.max_deviation[k], dev);
            }
        }
    }
    return rep;
}

} // namespace confpair
