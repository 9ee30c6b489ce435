#include "confpair/io.hpp"

#include <cctype>
#include <limits>

namespace confpair {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s, std::size_t base = 0) : s_(s), base_(base) {}

    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        ws();
        return pos_ == s_.size();
    }
    bool eat(std::string_view tok) {
        ws();
        if (s_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }
    void expect(std::string_view tok) {
        if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
    }
    void finish() {
        if (!done()) fail("unexpected trailing input");
    }
    // ASCII digits, or UTF-8 subscript digits when allowed.
    int integer(bool subscripts = false) {
        ws();
        long long v = 0;
        std::size_t start = pos_;
        while (pos_ < s_.size()) {
            int digit = -1;
            unsigned char ch = static_cast<unsigned char>(s_[pos_]);
            if (std::isdigit(ch)) {
                digit = ch - '0';
                ++pos_;
            } else if (subscripts && pos_ + 2 < s_.size() && ch == 0xE2 &&
                       static_cast<unsigned char>(s_[pos_ + 1]) == 0x82 &&
                       static_cast<unsigned char>(s_[pos_ + 2]) >= 0x80 &&
                       static_cast<unsigned char>(s_[pos_ + 2]) <= 0x89) {
                digit = static_cast<unsigned char>(s_[pos_ + 2]) - 0x80;
                pos_ += 3;
            } else {
                break;
            }
            v = v * 10 + digit;
            if (v > std::numeric_limits<int>::max()) fail("integer too large", start);
        }
        if (pos_ == start) fail("expected an integer");
        return static_cast<int>(v);
    }
    std::size_t pos() const { return pos_; }
    [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) { throw ParseError(what, base_ + at); }

private:
    std::string_view s_;
    std::size_t base_ = 0;
    std::size_t pos_ = 0;
};

Tree tree_at(Cursor& c) {
    if (c.eat("[")) {
        Tree l = tree_at(c);
        // "[INT]" is accepted as a leaf
        if (l.internal_count() == 0 && c.eat("]")) return l;
        c.expect(",");
        Tree r = tree_at(c);
        c.expect("]");
        return Tree::join(l, r);
    }
    return Tree::leaf(c.integer());
}

Forest forest_at(Cursor& c) {
    std::vector<Tree> trees{tree_at(c)};
    while (c.eat(";")) trees.push_back(tree_at(c));
    return Forest::arranged(std::move(trees));
}

Graph graph_at(Cursor& c) {
    c.expect("n");
    c.expect("=");
    int n = c.integer();
    c.expect(";");
    std::vector<Edge> edges;
    if (!c.done()) {
        do {
            int a = c.integer();
            c.expect("->");
            int b = c.integer();
            edges.push_back(Edge{a, b});
        } while (c.eat(","));
    }
    return Graph(n, std::move(edges));
}

int otree_at(Cursor& c, std::vector<OTree::Node>& nodes) {
    int at = static_cast<int>(nodes.size());
    if (c.eat("*")) {
        nodes.push_back(OTree::Node{true, {}});
        return at;
    }
    c.expect("(");
    nodes.push_back(OTree::Node{false, {}});
    while (!c.eat(")")) {
        int child = otree_at(c, nodes);
        nodes[at].inputs.push_back(child);
        c.eat(",");
    }
    return at;
}

BracketExpr bracket_at(Cursor& c);

BracketExpr factor_at(Cursor& c) {
    if (c.eat("[")) {
        BracketExpr a = bracket_at(c);
        c.expect(",");
        BracketExpr b = bracket_at(c);
        c.expect("]");
        return BracketExpr::bracket(a, b);
    }
    if (c.eat("(")) {
        BracketExpr e = bracket_at(c);
        c.expect(")");
        return e;
    }
    if (!c.eat("x")) c.eat("X");
    return BracketExpr::var(c.integer(true));
}

BracketExpr bracket_at(Cursor& c) {
    BracketExpr e = factor_at(c);
    while (c.eat("·") || c.eat(".") || c.eat(";")) e = BracketExpr::dot(e, factor_at(c));
    return e;
}

template <class T, class F>
T parse_whole(std::string_view text, F&& f) {
    Cursor c(text);
    T out = f(c);
    c.finish();
    return out;
}

// Calls f(coeff, element_text, offset) for every non-blank line.
template <class F>
void for_each_term(std::string_view text, F&& f) {
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') {
            Coeff coeff = 1;
            std::size_t body = first;
            // optional "coeff *" prefix, or a bare sign
            std::size_t i = first;
            int sign = 1;
            if (line[i] == '+' || line[i] == '-') {
                sign = line[i] == '-' ? -1 : 1;
                ++i;
                while (i < line.size() && line[i] == ' ') ++i;
            }
            std::size_t digits = i;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t after = i;
            while (after < line.size() && (line[after] == ' ' || line[after] == '\t')) ++after;
            if (i > digits && after < line.size() && line[after] == '*' &&
                (after + 1 >= line.size() || line[after + 1] != '>')) {
                coeff = Coeff(std::string(line.substr(digits, i - digits))) * sign;
                body = after + 1;
            } else if (digits > first) {
                coeff = sign;
                body = digits;
            }
            f(coeff, line.substr(body), start + body);
        }
        if (end == text.size()) break;
        start = end + 1;
    }
}

} // namespace

Tree parse_tree(std::string_view text) { return parse_whole<Tree>(text, tree_at); }
Forest parse_forest(std::string_view text) { return parse_whole<Forest>(text, forest_at); }
Graph parse_graph(std::string_view text) { return parse_whole<Graph>(text, graph_at); }
BracketExpr parse_bracket(std::string_view text) { return parse_whole<BracketExpr>(text, bracket_at); }

OTree parse_otree(std::string_view text) {
    Cursor c(text);
    c.ws();
    if (c.eat("*")) c.fail("o-tree root cannot be a leaf", 0);
    std::vector<OTree::Node> nodes;
    otree_at(c, nodes);
    c.finish();
    return OTree::from_nodes(std::move(nodes));
}

std::string render(const Tree& t) {
    std::string out;
    auto walk = [&](auto&& self, int v) -> void {
        const auto& n = t.nodes()[v];
        if (n.leaf()) {
            out += std::to_string(n.label);
            return;
        }
        out += '[';
        self(self, n.left);
        out += ',';
        self(self, n.right);
        out += ']';
    };
    walk(walk, 0);
    return out;
}

std::string render(const Forest& f) {
    std::string out;
    for (std::size_t i = 0; i < f.trees().size(); ++i) {
        if (i) out += " ; ";
        out += render(f.trees()[i]);
    }
    return out;
}

std::string render(const Graph& g) {
    std::string out = "n=" + std::to_string(g.n()) + ";";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        out += i ? ", " : " ";
        out += std::to_string(g.edges()[i].from) + "->" + std::to_string(g.edges()[i].to);
    }
    return out;
}

std::string render(const OTree& t) {
    std::string out;
    auto walk = [&](auto&& self, int v) -> void {
        const auto& n = t.nodes()[v];
        if (n.leaf) {
            out += '*';
            return;
        }
        out += '(';
        for (std::size_t i = 0; i < n.inputs.size(); ++i) {
            if (i) out += ',';
            self(self, n.inputs[i]);
        }
        out += ')';
    };
    walk(walk, 0);
    return out;
}

std::string render(const BracketExpr& e) {
    std::string out;
    auto walk = [&](auto&& self, int v) -> void {
        const auto& n = e.nodes()[v];
        switch (n.kind) {
        case BracketExpr::Kind::var:
            out += "x" + std::to_string(n.label);
            break;
        case BracketExpr::Kind::dot:
            self(self, n.left);
            out += "·";
            self(self, n.right);
            break;
        case BracketExpr::Kind::bracket:
            out += '[';
            self(self, n.left);
            out += ',';
            self(self, n.right);
            out += ']';
            break;
        }
    };
    walk(walk, 0);
    return out;
}

LinCombo<Forest> parse_forest_combo(std::string_view text, Parity p) {
    LinCombo<Forest> out;
    for_each_term(text, [&](const Coeff& c, std::string_view body, std::size_t offset) {
        Cursor cur(body, offset);
        Forest f = forest_at(cur);
        cur.finish();
        CanonicalForest cf = canonicalize(f);
        out.add(cf.forest, c * cf.sign(p));
    });
    return out;
}

LinCombo<Graph> parse_graph_combo(std::string_view text) {
    LinCombo<Graph> out;
    for_each_term(text, [&](const Coeff& c, std::string_view body, std::size_t offset) {
        Cursor cur(body, offset);
        Graph g = graph_at(cur);
        cur.finish();
        out.add(g, c);
    });
    return out;
}

LinCombo<BracketExpr> parse_bracket_combo(std::string_view text) {
    LinCombo<BracketExpr> out;
    for_each_term(text, [&](const Coeff& c, std::string_view body, std::size_t offset) {
        Cursor cur(body, offset);
        BracketExpr e = bracket_at(cur);
        cur.finish();
        out.add(e, c);
    });
    return out;
}

Json to_json(const Tree& t) {
    auto walk = [&](auto&& self, int v) -> Json {
        const auto& n = t.nodes()[v];
        if (n.leaf()) return {{"leaf", n.label}};
        return {{"left", self(self, n.left)}, {"right", self(self, n.right)}};
    };
    return walk(walk, 0);
}

Json to_json(const Forest& f) {
    Json trees = Json::array();
    for (const Tree& t : f.trees()) trees.push_back(to_json(t));
    return {{"n", f.n()}, {"trees", trees}};
}

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({{"from", e.from}, {"to", e.to}});
    return {{"n", g.n()}, {"edges", edges}};
}

Json to_json(const OTree& t) {
    auto walk = [&](auto&& self, int v) -> Json {
        const auto& n = t.nodes()[v];
        if (n.leaf) return {{"leaf", true}};
        Json inputs = Json::array();
        for (int c : n.inputs) inputs.push_back(self(self, c));
        return {{"inputs", inputs}};
    };
    return walk(walk, 0);
}

Json to_json(const BracketExpr& e) {
    auto walk = [&](auto&& self, int v) -> Json {
        const auto& n = e.nodes()[v];
        switch (n.kind) {
        case BracketExpr::Kind::var:
            return {{"var", n.label}};
        case BracketExpr::Kind::dot:
            return {{"dot", {self(self, n.left), self(self, n.right)}}};
        default:
            return {{"bracket", {self(self, n.left), self(self, n.right)}}};
        }
    };
    return walk(walk, 0);
}

Json coeff_to_json(const Coeff& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

Coeff coeff_from_json(const Json& j) {
    if (j.is_number_integer()) return Coeff(j.get<std::int64_t>());
    if (j.is_string()) return Coeff(j.get<std::string>());
    throw ValidationError("coefficient must be an integer or a decimal string");
}

Tree tree_from_json(const Json& j) {
    if (j.contains("leaf")) return Tree::leaf(j.at("leaf").get<int>());
    return Tree::join(tree_from_json(j.at("left")), tree_from_json(j.at("right")));
}

Forest forest_from_json(const Json& j) {
    std::vector<Tree> trees;
    for (const Json& t : j.at("trees")) trees.push_back(tree_from_json(t));
    Forest f = Forest::arranged(std::move(trees));
    if (j.contains("n") && j.at("n").get<int>() != f.n()) throw ValidationError("forest n does not match its leaves");
    return f;
}

Graph graph_from_json(const Json& j) {
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) edges.push_back(Edge{e.at("from").get<int>(), e.at("to").get<int>()});
    return Graph(j.at("n").get<int>(), std::move(edges));
}

OTree otree_from_json(const Json& j) {
    std::vector<OTree::Node> nodes;
    auto walk = [&](auto&& self, const Json& x) -> int {
        int at = static_cast<int>(nodes.size());
        if (x.contains("leaf")) {
            nodes.push_back(OTree::Node{true, {}});
            return at;
        }
        nodes.push_back(OTree::Node{false, {}});
        for (const Json& c : x.at("inputs")) {
            int child = self(self, c);
            nodes[at].inputs.push_back(child);
        }
        return at;
    };
    walk(walk, j);
    return OTree::from_nodes(std::move(nodes));
}

} // namespace confpair
