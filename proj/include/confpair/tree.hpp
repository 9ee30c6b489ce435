#pragma once

#include "confpair/common.hpp"

#include <compare>
#include <vector>

namespace confpair {

// Planar binary tree with labeled leaves. Nodes are stored in pre-order with
// the root at index 0, so structurally equal trees compare equal.
class Tree {
public:
    struct Node {
        int left = -1;
        int right = -1;
        int label = 0; // > 0 for leaves
        bool leaf() const { return left < 0; }
        friend auto operator<=>(const Node&, const Node&) = default;
    };

    static Tree leaf(int label);
    // Throws ValidationError if the two leaf sets overlap.
    static Tree join(const Tree& left, const Tree& right);

    bool is_leaf() const { return nodes_[0].leaf(); }
    int label() const { return nodes_[0].label; }
    Tree left() const { return subtree(nodes_[0].left); }
    Tree right() const { return subtree(nodes_[0].right); }
    Tree subtree(int node) const;
    // Copy with the subtree at `node` replaced by `sub`.
    Tree replace(int node, const Tree& sub) const;

    const std::vector<Node>& nodes() const { return nodes_; }
    int parent(int node) const { return parent_[node]; }
    int internal_count() const { return (static_cast<int>(nodes_.size()) - 1) / 2; }
    int leaf_count() const { return internal_count() + 1; }
    int min_label() const { return min_label_; }

    std::vector<int> leaves() const;        // labels, left to right
    std::vector<int> leaf_nodes() const;    // node indices, left to right
    std::vector<int> inorder() const;       // internal node indices in symmetric order
    // Edges between the node and the univalent root below the tree: the lowest
    // internal vertex has height 1.
    int height(int node) const;
    int max_height() const;
    // Lowest common ancestor of two nodes.
    int meet(int a, int b) const;
    // True when the left-going child of `ancestor` lies on the path to `node`.
    bool through_left(int ancestor, int node) const;
    // Left comb whose deepest-left leaf carries the minimum label.
    bool is_tall() const;

    friend bool operator==(const Tree& a, const Tree& b) { return a.nodes_ == b.nodes_; }
    friend auto operator<=>(const Tree& a, const Tree& b) { return a.nodes_ <=> b.nodes_; }

private:
    Tree() = default;
    void finish();

    std::vector<Node> nodes_;
    std::vector<int> parent_;
    std::vector<int> depth_;
    int min_label_ = 0;
};

} // namespace confpair
