#pragma once

#include "confpair/common.hpp"

#include <compare>
#include <vector>

namespace confpair {

// Rooted tree with arbitrary arities; the inputs of each vertex are labeled
// 1..|v| by their position. Leaves are numbered 1..n in planar order. Nodes
// are stored in pre-order with the root at index 0.
class OTree {
public:
    struct Node {
        bool leaf = false;
        std::vector<int> inputs; // child node indices; slot label = position + 1
        friend auto operator<=>(const Node&, const Node&) = default;
    };

    // gamma_n; n = 0 gives the arity-zero root.
    static OTree corolla(int n);
    // Root with one input per entry: 0 is a leaf, a > 0 a vertex carrying a leaves.
    static OTree two_level(const std::vector<int>& arities);
    // Children are built recursively; an empty list under a non-root node
    // stands for a leaf.
    static OTree from_nodes(std::vector<Node> nodes);

    const std::vector<Node>& nodes() const { return nodes_; }
    int parent(int node) const { return parent_[node]; }
    int slot(int node) const { return slot_[node]; }
    int arity(int node) const { return static_cast<int>(nodes_[node].inputs.size()); }
    int leaf_count() const { return static_cast<int>(leaf_nodes_.size()); }
    int leaf_node(int label) const { return leaf_nodes_.at(label - 1); }

    // Non-leaf nodes in pre-order; this is the tensor-factor order.
    std::vector<int> internal_vertices() const;
    // Non-root internal vertices; each names the edge below it.
    std::vector<int> internal_edges() const;
    bool is_corolla() const { return internal_vertices().size() == 1; }
    // Every input of the root is a leaf or a vertex whose inputs are leaves.
    bool is_two_level() const;
    // Input label at internal vertex v of the branch holding leaf `label`.
    int input_label(int v, int label) const;
    // Lowest internal vertex below both leaves.
    int nadir(int label_a, int label_b) const;

    // Collapses the edge below internal vertex v into its parent: the inputs of
    // v take its slot and later siblings shift up.
    OTree contract(int v) const;

    friend bool operator==(const OTree& a, const OTree& b) { return a.nodes_ == b.nodes_; }
    friend auto operator<=>(const OTree& a, const OTree& b) { return a.nodes_ <=> b.nodes_; }

private:
    void finish();

    std::vector<Node> nodes_;
    std::vector<int> parent_;
    std::vector<int> slot_;
    std::vector<int> depth_;
    std::vector<int> leaf_nodes_;
};

} // namespace confpair
