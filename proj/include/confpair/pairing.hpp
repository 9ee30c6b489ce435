#pragma once

#include "confpair/forest.hpp"
#include "confpair/graph.hpp"
#include "confpair/lincombo.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace confpair {

struct PairingResult {
    int value = 0;
    // Global vertex index hit by each edge, present when beta is a bijection.
    std::optional<std::vector<int>> beta;
};

// <g, f>: each edge i->j goes to the nadir of leaves i and j. Zero unless that
// map is a bijection onto the internal vertices. Otherwise the sign is, for
// even d, the parity of the vertex sequence hit in edge order and, for odd d,
// (-1)^{#edges i->j with leaf i right of leaf j}. Throws ValidationError when
// the label counts differ.
PairingResult pair(const Graph& g, const Forest& f, Parity p);

Coeff pair(const LinCombo<Graph>& g, const LinCombo<Forest>& f, Parity p);
Coeff pair(const Graph& g, const LinCombo<Forest>& f, Parity p);
Coeff pair(const LinCombo<Graph>& g, const Forest& f, Parity p);

using PairFn = std::function<int(const Graph&, const Forest&, Parity)>;
int pair_value(const Graph& g, const Forest& f, Parity p);

} // namespace confpair
