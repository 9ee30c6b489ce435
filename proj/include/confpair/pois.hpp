#pragma once

#include "confpair/forest.hpp"
#include "confpair/lincombo.hpp"

namespace confpair {

// Parity of the shifted degree (|T| + 1)(d - 1) of a bracket word.
bool shifted_odd(const Tree& t, Parity p);

// Sign s with [a, b] = s [b, a].
int antisymmetry_sign(const Tree& a, const Tree& b, Parity p);

// A single tree in the tall basis. Anti-symmetry moves the minimal leaf to
// the left; Jacobi, in the derivation form
//   [X, [Y1, Y2]] = [[X, Y1], Y2] - (-1)^{s(Y1) s(Y2)} [[X, Y2], Y1],
// shrinks the right operand until it is a leaf.
LinCombo<Tree> normalize_tree(const Tree& t, Parity p);

// Expresses x in the tall-forest basis. Non-canonical arrangements are
// re-sorted with the commutativity sign first. Throws ValidationError when
// the terms disagree on n.
LinCombo<Forest> normalize_pois(const LinCombo<Forest>& x, Parity p);

} // namespace confpair
