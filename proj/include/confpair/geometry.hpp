#pragma once

#include "confpair/forest.hpp"
#include "confpair/graph.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace confpair {

using Point = std::vector<double>;

// x[label - 1] in R^d.
struct Configuration {
    int d = 2;
    std::vector<Point> x;
};

// One unit vector per internal vertex, in the forest's global vertex order.
struct TorusPoint {
    int d = 2;
    std::vector<Point> u;
};

inline constexpr double unit_tolerance = 1e-12;
inline constexpr double coincidence_tolerance = 1e-12;

// Rounding bound on the direction of x_i - x_j: the coordinates carry
// absolute error ~ machine epsilon times their size, and the difference
// divides it by |x_i - x_j|. An edge whose endpoints hang off the same
// vertex is exact in theory, so its deviation is all rounding and grows
// as eps shrinks.
double direction_rounding_bound(const Configuration& c, int i, int j);

TorusPoint random_torus_point(const Forest& f, int d, std::mt19937_64& rng);

// x_i = (t, 0, ..., 0) + sum over the vertices v below leaf i of
// +-eps^{h(v)} u_v, where t is the 1-based position of i's tree and the sign
// is + when the path to i leaves v through its left edge. Throws
// ValidationError for eps outside (0, 1/3), d < 2 or non-unit u.
Configuration eval_system(const Forest& f, double eps, const TorusPoint& u, int d);

// (x_j - x_i) / |x_j - x_i|; throws ValidationError for coincident points.
Point alpha(const Configuration& c, int i, int j);
// |x_i - x_j| / |x_i - x_k|, +infinity when x_i = x_k.
double s_ratio(const Configuration& c, int i, int j, int k);

double distance(const Point& a, const Point& b);

// Largest violations of the planetary-system conditions: the center of each
// tree sits at (t, 0, ..., 0), and each internal vertex v has both child
// centers at distance eps^{h(v)} from the midpoint center of T_v.
struct IdentityCheck {
    double center_error = 0;
    double distance_error = 0;
    double min_separation = std::numeric_limits<double>::infinity();
    double separation_bound = 0; // eps^{max height} (1 - 3 eps)
};

IdentityCheck check_identities(const Forest& f, double eps, const Configuration& c);

// Worst case over `samples` seeded torus points. The OpenMP kernel gives the
// same answer as the serial reference because sample s always draws from
// seed_seq{seed, s}.
IdentityCheck check_identities_serial(const Forest& f, double eps, int d, int samples, std::uint64_t seed);
IdentityCheck check_identities_parallel(const Forest& f, double eps, int d, int samples, std::uint64_t seed);

struct EdgeLimit {
    Edge edge;
    bool same_tree = false;
    std::vector<double> deviation; // per eps, worst over samples
    std::vector<double> rounding;  // per eps, worst direction_rounding_bound

    // Each step strictly shrinks the deviation or stays within rounding error.
    bool converging() const {
        for (std::size_t k = 1; k < deviation.size(); ++k)
            if (!(deviation[k] < deviation[k - 1] || deviation[k] <= rounding.at(k))) return false;
        return true;
    }
};

struct LimitReport {
    int d = 2;
    std::vector<double> eps;
    std::vector<double> max_deviation; // per eps, over edges and samples
    std::vector<EdgeLimit> per_edge;
};

// For each edge i->j, the direction of x_i - x_j against its eps -> 0 limit:
// sigma_e u_{nadir} inside a tree (sigma_e = +1 when leaf i is left of leaf j),
// sign(t_i - t_j) e_1 across trees.
LimitReport limit_check(const Forest& f, const Graph& g, int d, const std::vector<double>& eps_list, int samples,
                        std::uint64_t seed);

} // namespace confpair
