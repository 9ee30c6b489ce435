#include "confpair/forest.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace confpair {

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
    for (std::size_t t = 1; t < trees_.size(); ++t)
        if (trees_[t - 1].min_label() >= trees_[t].min_label())
            throw ValidationError("forest trees must be sorted by minimal leaf label");
    index();
}

Forest Forest::arranged(std::vector<Tree> trees) {
    Forest f;
    f.trees_ = std::move(trees);
    for (std::size_t t = 1; t < f.trees_.size(); ++t)
        if (f.trees_[t - 1].min_label() >= f.trees_[t].min_label()) f.canonical_ = false;
    f.index();
    return f;
}

void Forest::index() {
    for (const Tree& t : trees_) n_ += t.leaf_count();
    where_.assign(n_, LeafPos{});
    offset_.resize(trees_.size());
    local_index_.resize(trees_.size());

    int planar = 0;
    for (int t = 0; t < static_cast<int>(trees_.size()); ++t) {
        const Tree& tree = trees_[t];
        for (int node : tree.leaf_nodes()) {
            int label = tree.nodes()[node].label;
            if (label < 1 || label > n_)
                throw ValidationError("leaf label " + std::to_string(label) + " outside 1.." + std::to_string(n_));
            if (where_[label - 1].tree >= 0)
                throw ValidationError("repeated leaf label " + std::to_string(label));
            where_[label - 1] = LeafPos{t, node, planar++};
        }
        offset_[t] = static_cast<int>(vertices_.size());
        local_index_[t].assign(tree.nodes().size(), -1);
        auto order = tree.inorder();
        for (int k = 0; k < static_cast<int>(order.size()); ++k) {
            local_index_[t][order[k]] = k;
            vertices_.push_back(Vertex{t, order[k]});
        }
    }
}

Forest Forest::singletons(int n) {
    std::vector<Tree> trees;
    for (int i = 1; i <= n; ++i) trees.push_back(Tree::leaf(i));
    return Forest(std::move(trees));
}

int Forest::vertex_index(int tree, int node) const { return offset_[tree] + local_index_[tree][node]; }

int Forest::vertex_height(int global) const {
    const Vertex& v = vertices_[global];
    return trees_[v.tree].height(v.node);
}

std::optional<int> Forest::nadir(int i, int j) const {
    const LeafPos& a = where(i);
    const LeafPos& b = where(j);
    if (a.tree != b.tree || i == j) return std::nullopt;
    return vertex_index(a.tree, trees_[a.tree].meet(a.node, b.node));
}

bool Forest::is_tall() const {
    return std::all_of(trees_.begin(), trees_.end(), [](const Tree& t) { return t.is_tall(); });
}

CanonicalForest canonicalize(std::vector<Tree> trees) {
    std::vector<int> idx(trees.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return trees[a].min_label() < trees[b].min_label(); });

    std::vector<int> start(trees.size());
    int count = 0;
    for (std::size_t t = 0; t < trees.size(); ++t) {
        start[t] = count;
        count += trees[t].internal_count();
    }
    std::vector<int> perm;
    std::vector<Tree> sorted;
    for (int t : idx) {
        for (int k = 0; k < trees[t].internal_count(); ++k) perm.push_back(start[t] + k);
        sorted.push_back(trees[t]);
    }
    return CanonicalForest{Forest(std::move(sorted)), odd_permutation(perm)};
}

CanonicalForest canonicalize(const Forest& f) { return canonicalize(f.trees()); }

} // namespace confpair
