#include "confpair/tree.hpp"

#include <algorithm>
#include <string>

namespace confpair {

Tree Tree::leaf(int label) {
    if (label <= 0) throw ValidationError("leaf label must be positive, got " + std::to_string(label));
    Tree t;
    t.nodes_.push_back(Node{-1, -1, label});
    t.finish();
    return t;
}

Tree Tree::join(const Tree& left, const Tree& right) {
    auto a = left.leaves(), b = right.leaves();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (!common.empty()) throw ValidationError("repeated leaf label " + std::to_string(common.front()));

    Tree t;
    const int nl = static_cast<int>(left.nodes_.size());
    t.nodes_.reserve(1 + left.nodes_.size() + right.nodes_.size());
    t.nodes_.push_back(Node{1, 1 + nl, 0});
    auto append = [&t](const Tree& s, int offset) {
        for (Node n : s.nodes_) {
            if (!n.leaf()) {
                n.left += offset;
                n.right += offset;
            }
            t.nodes_.push_back(n);
        }
    };
    append(left, 1);
    append(right, 1 + nl);
    t.finish();
    return t;
}

void Tree::finish() {
    const int size = static_cast<int>(nodes_.size());
    parent_.assign(size, -1);
    depth_.assign(size, 0);
    min_label_ = 0;
    for (int i = 0; i < size; ++i) {
        const Node& n = nodes_[i];
        if (n.leaf()) {
            if (min_label_ == 0 || n.label < min_label_) min_label_ = n.label;
            continue;
        }
        for (int c : {n.left, n.right}) {
            parent_[c] = i;
            depth_[c] = depth_[i] + 1;
        }
    }
}

Tree Tree::subtree(int node) const {
    const Node& n = nodes_[node];
    if (n.leaf()) return leaf(n.label);
    return join(subtree(n.left), subtree(n.right));
}

Tree Tree::replace(int node, const Tree& sub) const {
    auto rebuild = [&](auto&& self, int v) -> Tree {
        if (v == node) return sub;
        const Node& n = nodes_[v];
        if (n.leaf()) return leaf(n.label);
        return join(self(self, n.left), self(self, n.right));
    };
    return rebuild(rebuild, 0);
}

std::vector<int> Tree::leaf_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
        if (nodes_[i].leaf()) out.push_back(i);
    return out; // pre-order visits leaves left to right
}

std::vector<int> Tree::leaves() const {
    std::vector<int> out;
    for (int i : leaf_nodes()) out.push_back(nodes_[i].label);
    return out;
}

std::vector<int> Tree::inorder() const {
    std::vector<int> out;
    auto walk = [&](auto&& self, int v) -> void {
        const Node& n = nodes_[v];
        if (n.leaf()) return;
        self(self, n.left);
        out.push_back(v);
        self(self, n.right);
    };
    walk(walk, 0);
    return out;
}

int Tree::height(int node) const { return depth_[node] + 1; }

int Tree::max_height() const {
    int h = 0;
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
        if (!nodes_[i].leaf()) h = std::max(h, height(i));
    return h;
}

int Tree::meet(int a, int b) const {
    while (depth_[a] > depth_[b]) a = parent_[a];
    while (depth_[b] > depth_[a]) b = parent_[b];
    while (a != b) {
        a = parent_[a];
        b = parent_[b];
    }
    return a;
}

bool Tree::through_left(int ancestor, int node) const {
    int prev = node;
    while (parent_[prev] != ancestor) prev = parent_[prev];
    return nodes_[ancestor].left == prev;
}

bool Tree::is_tall() const {
    int v = 0;
    while (!nodes_[v].leaf()) {
        if (!nodes_[nodes_[v].right].leaf()) return false;
        v = nodes_[v].left;
    }
    return nodes_[v].label == min_label_;
}

} // namespace confpair
