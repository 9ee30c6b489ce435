#include "confpair/otree.hpp"

#include <string>

namespace confpair {

namespace {

// Copies the subtree at `v` of `src` into `dst` in pre-order.
int copy_preorder(const std::vector<OTree::Node>& src, int v, std::vector<OTree::Node>& dst,
                  std::vector<int>& visits) {
    if (v < 0 || v >= static_cast<int>(src.size())) throw ValidationError("o-tree input index out of range");
    if (++visits[v] > 1) throw ValidationError("o-tree node reached twice");
    int at = static_cast<int>(dst.size());
    dst.push_back(OTree::Node{src[v].leaf, {}});
    std::vector<int> kids;
    for (int c : src[v].inputs) kids.push_back(copy_preorder(src, c, dst, visits));
    dst[at].inputs = std::move(kids);
    return at;
}

} // namespace

OTree OTree::corolla(int n) {
    std::vector<Node> nodes(1);
    for (int i = 0; i < n; ++i) {
        nodes[0].inputs.push_back(i + 1);
        nodes.push_back(Node{true, {}});
    }
    return from_nodes(std::move(nodes));
}

OTree OTree::two_level(const std::vector<int>& arities) {
    std::vector<Node> nodes(1);
    for (int a : arities) {
        if (a < 0) throw ValidationError("negative arity");
        int v = static_cast<int>(nodes.size());
        nodes[0].inputs.push_back(v);
        if (a == 0) {
            nodes.push_back(Node{true, {}});
            continue;
        }
        nodes.push_back(Node{false, {}});
        for (int k = 0; k < a; ++k) {
            nodes[v].inputs.push_back(static_cast<int>(nodes.size()));
            nodes.push_back(Node{true, {}});
        }
    }
    return from_nodes(std::move(nodes));
}

OTree OTree::from_nodes(std::vector<Node> nodes) {
    if (nodes.empty()) throw ValidationError("o-tree needs a root");
    if (nodes[0].leaf) throw ValidationError("o-tree root cannot be a leaf");
    for (const Node& n : nodes)
        if (n.leaf && !n.inputs.empty()) throw ValidationError("o-tree leaf with inputs");
    OTree t;
    std::vector<int> visits(nodes.size(), 0);
    copy_preorder(nodes, 0, t.nodes_, visits);
    if (t.nodes_.size() != nodes.size()) throw ValidationError("o-tree is not connected");
    t.finish();
    return t;
}

void OTree::finish() {
    const int size = static_cast<int>(nodes_.size());
    parent_.assign(size, -1);
    slot_.assign(size, 0);
    depth_.assign(size, 0);
    leaf_nodes_.clear();
    for (int v = 0; v < size; ++v) {
        if (nodes_[v].leaf) leaf_nodes_.push_back(v);
        for (int s = 0; s < static_cast<int>(nodes_[v].inputs.size()); ++s) {
            int c = nodes_[v].inputs[s];
            parent_[c] = v;
            slot_[c] = s + 1;
            depth_[c] = depth_[v] + 1;
        }
    }
}

std::vector<int> OTree::internal_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(nodes_.size()); ++v)
        if (!nodes_[v].leaf) out.push_back(v);
    return out;
}

std::vector<int> OTree::internal_edges() const {
    std::vector<int> out;
    for (int v : internal_vertices())
        if (v != 0) out.push_back(v);
    return out;
}

bool OTree::is_two_level() const {
    for (int c : nodes_[0].inputs) {
        if (nodes_[c].leaf) continue;
        for (int g : nodes_[c].inputs)
            if (!nodes_[g].leaf) return false;
    }
    return true;
}

int OTree::input_label(int v, int label) const {
    int node = leaf_node(label);
    while (node >= 0 && parent_[node] != v) node = parent_[node];
    if (node < 0) throw ValidationError("leaf " + std::to_string(label) + " does not lie over vertex " + std::to_string(v));
    return slot_[node];
}

int OTree::nadir(int label_a, int label_b) const {
    int a = leaf_node(label_a), b = leaf_node(label_b);
    while (depth_[a] > depth_[b]) a = parent_[a];
    while (depth_[b] > depth_[a]) b = parent_[b];
    while (a != b) {
        a = parent_[a];
        b = parent_[b];
    }
    return a;
}

OTree OTree::contract(int v) const {
    if (v <= 0 || v >= static_cast<int>(nodes_.size()) || nodes_[v].leaf)
        throw ValidationError("contraction needs a non-root internal vertex");
    std::vector<Node> nodes = nodes_;
    int p = parent_[v];
    auto& inputs = nodes[p].inputs;
    std::vector<int> spliced(inputs.begin(), inputs.begin() + (slot_[v] - 1));
    spliced.insert(spliced.end(), nodes_[v].inputs.begin(), nodes_[v].inputs.end());
    spliced.insert(spliced.end(), inputs.begin() + slot_[v], inputs.end());
    inputs = std::move(spliced);
    // v becomes unreachable; rebuild from the root without it
    OTree t;
    std::vector<int> visits(nodes.size(), 0);
    copy_preorder(nodes, 0, t.nodes_, visits);
    t.finish();
    return t;
}

} // namespace confpair
