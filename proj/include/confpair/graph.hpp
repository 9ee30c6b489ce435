#pragma once

#include "confpair/common.hpp"

#include <compare>
#include <vector>

namespace confpair {

struct Edge {
    int from = 0;
    int to = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// n vertices and an ordered list of directed edges. Repeated edges and cycles
// are allowed here; they vanish only after normalization.
class Graph {
public:
    Graph() = default;
    // Throws ValidationError for endpoints outside 1..n or loops.
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Disjoint chains starting at their block minimum, edges pointing away
    // from it, each chain listed consecutively, chains in block order.
    bool is_long() const;

    friend auto operator<=>(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

} // namespace confpair
