#pragma once

#include "confpair/tree.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace confpair {

// Trees whose leaf labels partition {1..n}. Canonical forests store their
// trees sorted by minimal label; arranged() keeps any order, which is only
// needed to state the commutativity relation. Internal vertices are numbered
// globally by concatenating the per-tree in-order sequences in storage order.
class Forest {
public:
    struct LeafPos {
        int tree = -1;
        int node = -1;
        int planar = -1; // position in the global left-to-right leaf order
    };
    struct Vertex {
        int tree = -1;
        int node = -1;
    };

    Forest() = default;
    // Throws ValidationError unless the trees are in canonical order and
    // their labels partition {1..n}.
    explicit Forest(std::vector<Tree> trees);
    static Forest arranged(std::vector<Tree> trees);
    static Forest singletons(int n);

    bool is_canonical() const { return canonical_; }

    const std::vector<Tree>& trees() const { return trees_; }
    int n() const { return n_; }
    int internal_count() const { return static_cast<int>(vertices_.size()); }

    const LeafPos& where(int label) const { return where_.at(label - 1); }
    const Vertex& vertex(int global) const { return vertices_[global]; }
    int vertex_index(int tree, int node) const;
    int vertex_height(int global) const;

    // Global index of the lowest vertex on the path between leaves i and j,
    // or nothing when they sit in different trees.
    std::optional<int> nadir(int i, int j) const;

    bool is_tall() const;

    friend bool operator==(const Forest& a, const Forest& b) { return a.trees_ == b.trees_; }
    friend auto operator<=>(const Forest& a, const Forest& b) { return a.trees_ <=> b.trees_; }

private:
    void index();

    std::vector<Tree> trees_;
    int n_ = 0;
    bool canonical_ = true;
    std::vector<LeafPos> where_;
    std::vector<Vertex> vertices_;
    std::vector<int> offset_;                  // first global vertex of each tree
    std::vector<std::vector<int>> local_index_; // node -> position in tree in-order
};

struct CanonicalForest {
    Forest forest;
    // Parity of the permutation of the concatenated internal-vertex sequence
    // caused by sorting. The re-sorting sign is (-1)^{odd * (d-1)}.
    bool odd = false;
    int sign(Parity p) const { return is_even(p) ? sign_of(odd) : 1; }
};

CanonicalForest canonicalize(std::vector<Tree> trees);
CanonicalForest canonicalize(const Forest& f);

} // namespace confpair
