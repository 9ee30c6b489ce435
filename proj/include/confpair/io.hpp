#pragma once

#include "confpair/bracket.hpp"
#include "confpair/forest.hpp"
#include "confpair/graph.hpp"
#include "confpair/lincombo.hpp"
#include "confpair/otree.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <string_view>

namespace confpair {

// Text grammars
//   tree    := INT | "[" INT "]" | "[" tree "," tree "]"
//   forest  := tree (";" tree)*
//   graph   := "n=" INT ";" [edge ("," edge)*]      edge := INT "->" INT
//   otree   := "(" [item (("," | space) item)*] ")"  item := "*" | otree
//   bracket := factor (dot factor)*                 dot := "·" | "." | ";"
//   factor  := var | "[" bracket "," bracket "]" | "(" bracket ")"
//   var     := ["x"] digits                          (subscript digits allowed)
// Whitespace is free between tokens. Failures throw ParseError with a byte
// offset; well-formed text with bad labels throws ValidationError.
Tree parse_tree(std::string_view text);
Forest parse_forest(std::string_view text); // trees kept in written order
Graph parse_graph(std::string_view text);
OTree parse_otree(std::string_view text);
BracketExpr parse_bracket(std::string_view text);

std::string render(const Tree& t);
std::string render(const Forest& f);
std::string render(const Graph& g);
std::string render(const OTree& t);
std::string render(const BracketExpr& e);

// Linear combinations: one term per line, "coeff * element" or just "element".
// Forest terms are re-sorted into canonical order with the commutativity sign.
LinCombo<Forest> parse_forest_combo(std::string_view text, Parity p);
LinCombo<Graph> parse_graph_combo(std::string_view text);
LinCombo<BracketExpr> parse_bracket_combo(std::string_view text);

template <class B>
std::string render(const LinCombo<B>& x) {
    std::ostringstream out;
    if (x.empty()) out << "0\n";
    for (const auto& [b, c] : x) out << c << " * " << render(b) << '\n';
    return out.str();
}

using Json = nlohmann::json;

Json to_json(const Tree& t);
Json to_json(const Forest& f);
Json to_json(const Graph& g);
Json to_json(const OTree& t);
Json to_json(const BracketExpr& e);
Json coeff_to_json(const Coeff& c);

Tree tree_from_json(const Json& j);
Forest forest_from_json(const Json& j);
Graph graph_from_json(const Json& j);
OTree otree_from_json(const Json& j);
Coeff coeff_from_json(const Json& j);

template <class B>
Json to_json(const LinCombo<B>& x, int n) {
    Json terms = Json::array();
    for (const auto& [b, c] : x) terms.push_back({{"coeff", coeff_to_json(c)}, {"element", to_json(b)}});
    return {{"n", n}, {"terms", terms}};
}

} // namespace confpair
