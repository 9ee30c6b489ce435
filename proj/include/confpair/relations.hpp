#pragma once

#include "confpair/forest.hpp"
#include "confpair/graph.hpp"
#include "confpair/lincombo.hpp"

#include <functional>

namespace confpair {

enum class RelationKind { antisymmetry, jacobi, commutativity, arrow_reversal, edge_swap, arnold, double_edge };

const char* to_string(RelationKind k);

// Every instance on n labels, as a combination that must vanish:
//   antisymmetry   [A,B] + (-1)^{s(A)s(B)} [B,A]
//   jacobi         (-1)^{s(A)s(C)}[A,[B,C]] + (-1)^{s(B)s(A)}[B,[C,A]] + (-1)^{s(C)s(B)}[C,[A,B]]
//   commutativity  a re-ordered arrangement minus its re-sorting sign times the canonical forest
// with s(T) = (|T| + 1)(d - 1), at every vertex of every forest.
void for_each_pois_relation(int n, Parity p, const std::function<void(RelationKind, const LinCombo<Forest>&)>& f);

// Every instance on simple graphs with at most n - 1 edges:
//   arrow_reversal  G - (-1)^d G with one arrow reversed
//   edge_swap       G - (-1)^{d-1} G with two adjacent edges exchanged
//   arnold          (j->k, k->l) + (k->l, l->j) + (l->j, j->k) at any two positions
//   double_edge     a graph with a repeated vertex pair
void for_each_siop_relation(int n, Parity p, const std::function<void(RelationKind, const LinCombo<Graph>&)>& f);

// Ordered lists of k edges on n vertices with distinct vertex pairs.
std::vector<Graph> enumerate_simple_graphs(int n, int k);

} // namespace confpair
