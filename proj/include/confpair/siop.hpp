#pragma once

#include "confpair/graph.hpp"
#include "confpair/lincombo.hpp"

#include <vector>

namespace confpair {

// Sign s with G = s * G' when G' is G with arrows reversed and edges
// permuted: (-1)^{reversals * d} (sign perm)^{d-1}.
int reorientation_sign(int reversals, bool odd_perm, Parity p);

// The three graphs of the Arnold relation at positions (pa, pb): the edges
// there are taken as j->k and k->l after reorienting, and the relation reads
//   (j->k, k->l) + (k->l, l->j) + (l->j, j->k) = 0.
// Returns the coefficient of g (from reorienting) and the two other terms,
// both with coefficient +1 relative to the reoriented g.
struct ArnoldTerms {
    int sign = 1; // g = sign * (reoriented g)
    Graph oriented;
    Graph second;
    Graph third;
};
ArnoldTerms arnold_terms(const Graph& g, int pa, int pb, Parity p);

// Expresses x in the long-graph basis: graphs with a doubled vertex pair
// vanish, cycles are shortened and branchings moved deeper by Arnold moves,
// and the resulting chains are reoriented and reordered into long form.
// Throws ValidationError when the terms disagree on n.
LinCombo<Graph> normalize_siop(const LinCombo<Graph>& x, Parity p);

} // namespace confpair
