#pragma once

#include "confpair/forest.hpp"
#include "confpair/lincombo.hpp"

#include <compare>
#include <functional>
#include <vector>

namespace confpair {

// Expression over variables x_i with a commutative dot product and a bracket.
// Each bracket carries an orientation token; the tokens of an expression are
// a permutation of 0..bracket_count()-1. For even d the tokens fix the sign of
// the final forest: reduction multiplies by the sign of the permutation taking
// token order to the forest's in-order vertex order.
class BracketExpr {
public:
    enum class Kind : unsigned char { var, dot, bracket };
    struct Node {
        Kind kind = Kind::var;
        int label = 0; // variables only
        int left = -1;
        int right = -1;
        int token = -1; // brackets only
        friend auto operator<=>(const Node&, const Node&) = default;
    };

    static BracketExpr var(int label);
    // The operands keep their tokens; the right operand's are shifted past the
    // left operand's (and past the new bracket). Built bottom-up this numbers
    // brackets in written order.
    static BracketExpr dot(const BracketExpr& a, const BracketExpr& b);
    static BracketExpr bracket(const BracketExpr& a, const BracketExpr& b);
    // Dot product of the trees' bracket words, tokens in global vertex order.
    static BracketExpr from_forest(const Forest& f);
    static BracketExpr from_tree(const Tree& t);

    const std::vector<Node>& nodes() const { return nodes_; }
    int bracket_count() const;
    std::vector<int> variables() const; // in written order

    BracketExpr relabel(const std::function<int(int)>& f) const;
    // Replaces x_label by e. Tokens of this expression come first.
    BracketExpr substitute(int label, const BracketExpr& e) const;

    friend bool operator==(const BracketExpr& a, const BracketExpr& b) { return a.nodes_ == b.nodes_; }
    friend auto operator<=>(const BracketExpr& a, const BracketExpr& b) { return a.nodes_ <=> b.nodes_; }

private:
    friend LinCombo<Forest> reduce_bracket(const BracketExpr& e, Parity p);
    static BracketExpr combine(Kind kind, const BracketExpr& a, const BracketExpr& b, int token, int shift_b);

    std::vector<Node> nodes_;
};

// Expands dots inside brackets by the Leibniz rule until each monomial is a
// dot product of bracket words, then reads monomials as canonical forests.
// Throws ValidationError unless the variables are exactly 1..n, each once.
LinCombo<Forest> reduce_bracket(const BracketExpr& e, Parity p);
LinCombo<Forest> reduce_bracket(const LinCombo<BracketExpr>& x, Parity p);

} // namespace confpair
