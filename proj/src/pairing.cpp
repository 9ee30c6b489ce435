#include "confpair/pairing.hpp"

#include <string>

namespace confpair {

PairingResult pair(const Graph& g, const Forest& f, Parity p) {
    if (g.n() != f.n())
        throw ValidationError("graph has " + std::to_string(g.n()) + " vertices but forest has " +
                              std::to_string(f.n()) + " leaves");
    PairingResult r;
    if (g.edge_count() != f.internal_count()) return r;

    std::vector<int> beta;
    std::vector<bool> hit(f.internal_count(), false);
    bool odd = false;
    for (const Edge& e : g.edges()) {
        auto v = f.nadir(e.from, e.to);
        if (!v || hit[*v]) return r;
        hit[*v] = true;
        beta.push_back(*v);
        if (f.where(e.from).planar > f.where(e.to).planar) odd = !odd;
    }
    r.value = is_even(p) ? sign_of(odd_permutation(beta)) : sign_of(odd);
    r.beta = std::move(beta);
    return r;
}

int pair_value(const Graph& g, const Forest& f, Parity p) { return pair(g, f, p).value; }

Coeff pair(const LinCombo<Graph>& g, const LinCombo<Forest>& f, Parity p) {
    Coeff total = 0;
    for (const auto& [a, ca] : g)
        for (const auto& [b, cb] : f) {
            int v = pair(a, b, p).value;
            if (v != 0) total += ca * cb * v;
        }
    return total;
}

Coeff pair(const Graph& g, const LinCombo<Forest>& f, Parity p) { return pair(LinCombo<Graph>(g), f, p); }

Coeff pair(const LinCombo<Graph>& g, const Forest& f, Parity p) { return pair(g, LinCombo<Forest>(f), p); }

} // namespace confpair
