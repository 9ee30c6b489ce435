#include "confpair/pois.hpp"

#include <map>
#include <optional>

namespace confpair {

bool shifted_odd(const Tree& t, Parity p) { return is_even(p) && (t.internal_count() + 1) % 2 == 1; }

int antisymmetry_sign(const Tree& a, const Tree& b, Parity p) {
    return -sign_of(shifted_odd(a, p) && shifted_odd(b, p));
}

namespace {

using Cache = std::map<Tree, LinCombo<Tree>>;

LinCombo<Tree> normalize_cached(const Tree& t, Parity p, Cache& cache) {
    if (t.is_leaf()) return LinCombo<Tree>(t);
    if (auto it = cache.find(t); it != cache.end()) return it->second;

    LinCombo<Tree> out;
    Tree x = t.left(), r = t.right();
    if (r.min_label() < x.min_label()) {
        out = antisymmetry_sign(x, r, p) * normalize_cached(Tree::join(r, x), p, cache);
    } else if (r.is_leaf()) {
        for (const auto& [l, c] : normalize_cached(x, p, cache)) out.add(Tree::join(l, r), c);
    } else {
        Tree y1 = r.left(), y2 = r.right();
        out = normalize_cached(Tree::join(Tree::join(x, y1), y2), p, cache);
        int s = -sign_of(shifted_odd(y1, p) && shifted_odd(y2, p));
        out += s * normalize_cached(Tree::join(Tree::join(x, y2), y1), p, cache);
    }
    cache.emplace(t, out);
    return out;
}

} // namespace

LinCombo<Tree> normalize_tree(const Tree& t, Parity p) {
    Cache cache;
    return normalize_cached(t, p, cache);
}

LinCombo<Forest> normalize_pois(const LinCombo<Forest>& x, Parity p) {
    Cache cache;
    std::optional<int> n;
    LinCombo<Forest> out;
    for (const auto& [f, c] : x) {
        if (n && *n != f.n()) throw ValidationError("terms have different numbers of labels");
        n = f.n();
        CanonicalForest cf = canonicalize(f);
        // tensor product of the per-tree expansions; minimal labels and hence
        // the tree order do not change
        std::map<std::vector<Tree>, Coeff> acc{{{}, c * cf.sign(p)}};
        for (const Tree& t : cf.forest.trees()) {
            std::map<std::vector<Tree>, Coeff> next;
            LinCombo<Tree> nt = normalize_cached(t, p, cache);
            for (const auto& [prefix, a] : acc)
                for (const auto& [tt, b] : nt) {
                    auto key = prefix;
                    key.push_back(tt);
                    next[std::move(key)] += a * b;
                }
            acc = std::move(next);
        }
        for (auto& [trees, coeff] : acc) out.add(Forest(trees), coeff);
    }
    return out;
}

} // namespace confpair
