#include "confpair/graph.hpp"
#include "confpair/partition.hpp"

#include <string>

namespace confpair {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
    for (const Edge& e : edges_) {
        if (e.from < 1 || e.from > n || e.to < 1 || e.to > n)
            throw ValidationError("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                                  " outside 1.." + std::to_string(n));
        if (e.from == e.to) throw ValidationError("loop at vertex " + std::to_string(e.from));
    }
}

bool Graph::is_long() const {
    try {
        ordered_partition(*this);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

} // namespace confpair
