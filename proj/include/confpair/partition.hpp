#pragma once

#include "confpair/forest.hpp"
#include "confpair/graph.hpp"

#include <compare>
#include <vector>

namespace confpair {

// Blocks of {1..n}, each listed with its minimum first, sorted by minimum.
struct OrderedPartition {
    std::vector<std::vector<int>> blocks;
    friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;
};

// Throws ValidationError when the forest is not tall / the graph is not long.
OrderedPartition ordered_partition(const Forest& tall);
OrderedPartition ordered_partition(const Graph& long_graph);

Forest tall_forest(const OrderedPartition& p);
Graph long_graph(const OrderedPartition& p);

// All ordered partitions of {1..n} into n-k blocks, in lexicographic order.
std::vector<OrderedPartition> enumerate_ordered_partitions(int n, int k);

// Both enumerations follow enumerate_ordered_partitions, so index r of one
// corresponds to index r of the other.
std::vector<Forest> enumerate_tall_forests(int n, int k);
std::vector<Graph> enumerate_long_graphs(int n, int k);

// Every planar binary tree on the given labels, and every canonical forest
// on {1..n}. Exhaustive; meant for n <= 6.
std::vector<Tree> enumerate_trees(const std::vector<int>& labels);
std::vector<Forest> enumerate_forests(int n);

// Coefficients of prod_{i=1}^{n-1} (1 + i t).
std::vector<Coeff> stirling_row(int n);

} // namespace confpair
