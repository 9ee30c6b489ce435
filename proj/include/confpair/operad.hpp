#pragma once

#include "confpair/forest.hpp"
#include "confpair/graph.hpp"
#include "confpair/lincombo.hpp"
#include "confpair/otree.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace confpair {

// Number of labels shared by all terms; throws ValidationError on a mix and
// returns nothing for the empty combination.
std::optional<int> arity(const LinCombo<Forest>& x);

// b2 substituted for x_i in b1: b2's variables become x_i..x_{i+m-1} and the
// variables x_j, j > i, of b1 become x_{j+m-1}; then Leibniz reduction. The
// orientation puts b1's brackets before b2's.
LinCombo<Forest> compose_unreduced(const LinCombo<Forest>& b1, int i, const LinCombo<Forest>& b2, Parity p);
// The above followed by normalize_pois.
LinCombo<Forest> compose(const LinCombo<Forest>& b1, int i, const LinCombo<Forest>& b2, Parity p);

// gamma(outer; inner_1..inner_r) by o_i at the rightmost site first, times
// the Koszul sign of restoring the inner blocks to left-to-right order.
// inner.size() must equal the outer arity.
LinCombo<Forest> may_compose(const LinCombo<Forest>& outer, const std::vector<LinCombo<Forest>>& inner, Parity p);

// Factor at each internal vertex of tau, in pre-order (root first, then
// children by input label). Edge j->k of g lands at its nadir v as
// J_v(j)->J_v(k); sign = (sign pi)^{d-1}, pi listing g's edges factor by factor.
struct CooperadOutput {
    int sign = 1;
    std::vector<int> vertices; // node indices of tau
    std::vector<Graph> factors;
};

CooperadOutput cooperad(const Graph& g, const OTree& tau, Parity p);
LinCombo<std::vector<Graph>> cooperad(const LinCombo<Graph>& g, const OTree& tau, Parity p);

// Factorwise product of pairings; no extra sign.
Coeff pair_tensor(const LinCombo<std::vector<Graph>>& x, const std::vector<Forest>& factors, Parity p);

struct DualityFailure {
    Graph graph;
    std::vector<Forest> forests; // outer forest first, then one per child vertex
    Coeff composed;              // <G, gamma(F0; F_v)>
    Coeff split;                 // <g_tau(G), F0 (x) F_v>
};

struct DualityReport {
    std::string tau;
    Parity parity = Parity::even;
    std::uint64_t cases_checked = 0;
    std::vector<DualityFailure> failures;
    bool pass() const { return failures.empty(); }
};

struct DualityOptions {
    int exhaustive_limit = 5; // leaf counts above this are sampled
    std::uint64_t samples = 2000;
    std::uint64_t seed = 1;
};

// Compares both sides for every basis tuple and every long graph of matching
// degree. tau must be two-level.
DualityReport check_duality_serial(const OTree& tau, Parity p, const DualityOptions& opt = {});
DualityReport check_duality_parallel(const OTree& tau, Parity p, const DualityOptions& opt = {});
DualityReport check_duality(const OTree& tau, Parity p, const DualityOptions& opt = {});
DualityReport check_duality(const std::vector<int>& arities, Parity p, const DualityOptions& opt = {});

// Root arity vectors (0 = leaf input) of all two-level o-trees with exactly
// n leaves.
std::vector<std::vector<int>> two_level_shapes(int n);

} // namespace confpair
