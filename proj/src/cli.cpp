#include "confpair/cli.hpp"

#include "confpair/cache.hpp"
#include "confpair/geometry.hpp"
#include "confpair/gram.hpp"
#include "confpair/io.hpp"
#include "confpair/operad.hpp"
#include "confpair/pairing.hpp"
#include "confpair/partition.hpp"
#include "confpair/pois.hpp"
#include "confpair/siop.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace confpair::cli {

namespace {


struct Globals {
    int d = 2;
    std::string format = "text";
    std::string cache_dir;
    std::uint64_t seed = 1;

    Parity parity() const { return parity_of(d); }
    bool json() const { return format == "json"; }
};

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Flag value if given, otherwise all of stdin (read at most once).
class Inputs {
public:
    explicit Inputs(std::istream& in) : in_(in) {}
    std::string get(const std::optional<std::string>& flag, const char* what) {
        if (flag) return *flag;
        if (used_) throw ValidationError(std::string("missing --") + what + " (stdin already consumed)");
        used_ = true;
        std::string text = read_all(in_);
        if (text.find_first_not_of(" \t\r\n") == std::string::npos)
            throw ValidationError(std::string("missing --") + what + " and nothing on stdin");
        return text;
    }

private:
    std::istream& in_;
    bool used_ = false;
};

std::string trim(std::string s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}


Json failure_json(const GramFailure& f) {
    return {{"k", f.k},
            {"row", f.row},
            {"col", f.col},
            {"graph", render(f.graph)},
            {"forest", render(f.forest)},
            {"value", f.value},
            {"expected", f.expected}};
}

GramMatrix load_gram(const Globals& g, int n, int k) {
    if (g.cache_dir.empty()) return gram_matrix(n, k, g.parity());
    return DiskCache(g.cache_dir).gram(n, k, g.parity());
}

RankTable load_ranks(const Globals& g, int n) {
    if (g.cache_dir.empty()) return rank_table(n, g.d);
    return DiskCache(g.cache_dir).ranks(n, g.d);
}

void require_n(int n, int lo, int hi) {
    if (n < lo || n > hi)
        throw ValidationError("--n must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
}

// Bracket expressions cover forests too: "[[2,1],3];4" is a product of brackets.
LinCombo<Forest> parse_operand(const std::string& text, Parity p) {
    return reduce_bracket(parse_bracket_combo(text), p);
}

template <class B>
int combo_arity(const LinCombo<B>& x) {
    std::optional<int> n;
    for (const auto& [b, c] : x) {
        if (n && *n != b.n()) throw ValidationError("terms have different arities");
        n = b.n();
    }
    return n.value_or(0);
}

void write_combo(std::ostream& out, const Globals& g, const LinCombo<Forest>& x) {
    if (g.json())
        out << to_json(x, combo_arity(x)).dump(2) << '\n';
    else
        out << render(x);
}

void write_combo(std::ostream& out, const Globals& g, const LinCombo<Graph>& x) {
    if (g.json())
        out << to_json(x, combo_arity(x)).dump(2) << '\n';
    else
        out << render(x);
}

Json duality_json(const DualityReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json forests = Json::array();
        for (const Forest& x : f.forests) forests.push_back(render(x));
        failures.push_back({{"graph", render(f.graph)},
                            {"forests", forests},
                            {"composed", coeff_to_json(f.composed)},
                            {"split", coeff_to_json(f.split)}});
    }
    return {{"tau", r.tau},
            {"parity", to_string(r.parity)},
            {"cases_checked", r.cases_checked},
            {"failures", failures},
            {"pass", r.pass()}};
}

Json perfect_json(const PerfectReport& r, int d) {
    Json degrees = Json::array();
    for (const auto& c : r.degrees)
        degrees.push_back({{"k", c.k}, {"degree", c.k * (d - 1)}, {"size", c.size}, {"identity", c.identity}});
    Json failures = Json::array();
    for (const auto& f : r.failures) failures.push_back(failure_json(f));
    return {{"n", r.n},
            {"d", d},
            {"parity", to_string(r.parity)},
            {"degrees", degrees},
            {"first_degree", {{"rank", r.first_degree_rank}, {"identity", r.first_degree_identity}}},
            {"failures", failures},
            {"pass", r.pass()}};
}

std::vector<double> parse_eps_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw ValidationError("bad --eps entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ValidationError("--eps is empty");
    return out;
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Configuration pairing between forest and graph bases", "confpair"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--d", g.d, "ambient dimension (>= 2)")->check(CLI::Range(2, 1 << 20));
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache-dir", g.cache_dir, "directory for Gram and rank caches");
    app.add_option("--seed", g.seed, "seed for any sampling");

    Inputs inputs(in);
    std::function<int()> action;

    // pair
    std::optional<std::string> pair_graph, pair_forest;
    auto* pair_cmd = app.add_subcommand("pair", "pair a graph combination with a forest combination");
    pair_cmd->add_option("--graph", pair_graph, "graph or graph combination");
    pair_cmd->add_option("--forest", pair_forest, "forest or forest combination");
    pair_cmd->callback([&] {
        action = [&] {
            auto gs = parse_graph_combo(inputs.get(pair_graph, "graph"));
            auto fs = parse_forest_combo(inputs.get(pair_forest, "forest"), g.parity());
            Coeff v = pair(gs, fs, g.parity());
            if (g.json())
                out << Json{{"d", g.d}, {"value", coeff_to_json(v)}}.dump(2) << '\n';
            else
                out << v << '\n';
            return ok;
        };
    });

    // normalize
    std::string norm_kind;
    std::optional<std::string> norm_input;
    auto* norm_cmd = app.add_subcommand("normalize", "rewrite a combination in the tall / long basis");
    norm_cmd->add_option("--kind", norm_kind, "pois (forests) or siop (graphs)")
        ->required()
        ->check(CLI::IsMember({"pois", "siop"}));
    norm_cmd->add_option("--input", norm_input, "combination, one term per line");
    norm_cmd->callback([&] {
        action = [&] {
            std::string text = inputs.get(norm_input, "input");
            if (norm_kind == "pois")
                write_combo(out, g, normalize_pois(parse_forest_combo(text, g.parity()), g.parity()));
            else
                write_combo(out, g, normalize_siop(parse_graph_combo(text), g.parity()));
            return ok;
        };
    });

    // compose
    std::optional<std::string> comp_outer, comp_inner;
    int comp_at = 0;
    bool comp_normalize = false;
    auto* comp_cmd = app.add_subcommand("compose", "operadic composition outer o_i inner, expanded by Leibniz");
    comp_cmd->add_option("--outer", comp_outer, "bracket expression or combination")->required();
    comp_cmd->add_option("--inner", comp_inner, "bracket expression or combination");
    comp_cmd->add_option("--at", comp_at, "input of the outer operand to substitute into")->required();
    comp_cmd->add_flag("--normalize", comp_normalize, "rewrite the result in the tall basis");
    comp_cmd->callback([&] {
        action = [&] {
            auto outer = parse_operand(*comp_outer, g.parity());
            auto inner = parse_operand(inputs.get(comp_inner, "inner"), g.parity());
            auto r = comp_normalize ? compose(outer, comp_at, inner, g.parity())
                                    : compose_unreduced(outer, comp_at, inner, g.parity());
            write_combo(out, g, r);
            return ok;
        };
    });

    // cooperad
    std::optional<std::string> coop_graph;
    std::string coop_otree;
    auto* coop_cmd = app.add_subcommand("cooperad", "split a graph along an o-tree");
    coop_cmd->add_option("--otree", coop_otree, "o-tree such as \"(*,(*,*),*)\"")->required();
    coop_cmd->add_option("--graph", coop_graph, "graph or graph combination");
    coop_cmd->callback([&] {
        action = [&] {
            OTree tau = parse_otree(coop_otree);
            auto x = cooperad(parse_graph_combo(inputs.get(coop_graph, "graph")), tau, g.parity());
            if (g.json()) {
                Json terms = Json::array();
                for (const auto& [gs, c] : x) {
                    Json factors = Json::array();
                    for (const Graph& f : gs) factors.push_back(to_json(f));
                    terms.push_back({{"coeff", coeff_to_json(c)}, {"factors", factors}});
                }
                out << Json{{"otree", render(tau)}, {"terms", terms}}.dump(2) << '\n';
            } else {
                if (x.empty()) out << "0\n";
                for (const auto& [gs, c] : x) {
                    out << c << " *";
                    for (std::size_t i = 0; i < gs.size(); ++i) out << (i ? " (x) " : " ") << render(gs[i]);
                    out << '\n';
                }
            }
            return ok;
        };
    });

    // gram
    int gram_n = 0, gram_k = 0;
    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of long graphs against tall forests");
    gram_cmd->add_option("--n", gram_n)->required();
    gram_cmd->add_option("--k", gram_k, "number of edges / internal vertices")->required();
    gram_cmd->callback([&] {
        action = [&] {
            require_n(gram_n, 1, 8);
            if (gram_k < 0 || gram_k >= gram_n) throw ValidationError("--k must lie in 0..n-1");
            GramMatrix m = load_gram(g, gram_n, gram_k);
            auto failures = identity_failures(m);
            if (g.json()) {
                Json j = to_json(m);
                j["identity"] = failures.empty();
                out << j.dump(2) << '\n';
            } else {
                for (std::size_t r = 0; r < m.rows.size(); ++r) {
                    for (std::size_t c = 0; c < m.cols.size(); ++c) out << (c ? " " : "") << m.at(r, c);
                    out << '\n';
                }
            }
            if (!failures.empty()) {
                err << "gram matrix is not the identity: " << failures.size() << " bad entries\n";
                return verification_failure;
            }
            return ok;
        };
    });

    // ranks
    int ranks_n = 0;
    auto* ranks_cmd = app.add_subcommand("ranks", "ranks per degree from prod (1 + i t^(d-1))");
    ranks_cmd->add_option("--n", ranks_n)->required();
    ranks_cmd->callback([&] {
        action = [&] {
            require_n(ranks_n, 1, 64);
            RankTable t = load_ranks(g, ranks_n);
            if (g.json())
                out << to_json(t).dump(2) << '\n';
            else
                out << to_csv(t);
            return ok;
        };
    });

    // enumerate
    std::string enum_kind;
    int enum_n = 0, enum_k = 0;
    auto* enum_cmd = app.add_subcommand("enumerate", "list tall forests or long graphs");
    enum_cmd->add_option("--kind", enum_kind)->required()->check(CLI::IsMember({"tall", "long"}));
    enum_cmd->add_option("--n", enum_n)->required();
    enum_cmd->add_option("--k", enum_k)->required();
    enum_cmd->callback([&] {
        action = [&] {
            require_n(enum_n, 1, 9);
            if (enum_k < 0 || enum_k >= enum_n) throw ValidationError("--k must lie in 0..n-1");
            Json items = Json::array();
            if (enum_kind == "tall") {
                for (const Forest& f : enumerate_tall_forests(enum_n, enum_k))
                    g.json() ? items.push_back(to_json(f)) : void(out << render(f) << '\n');
            } else {
                for (const Graph& x : enumerate_long_graphs(enum_n, enum_k))
                    g.json() ? items.push_back(to_json(x)) : void(out << render(x) << '\n');
            }
            if (g.json())
                out << Json{{"kind", enum_kind}, {"n", enum_n}, {"k", enum_k}, {"items", items}}.dump(2) << '\n';
            return ok;
        };
    });

    // verify
    int verify_n = 0;
    std::optional<std::string> verify_otree;
    auto* verify_cmd = app.add_subcommand("verify", "perfect pairing check, or duality along an o-tree");
    verify_cmd->add_option("--n", verify_n, "labels for the Gram identity check");
    verify_cmd->add_option("--otree", verify_otree, "two-level o-tree for the duality check");
    verify_cmd->callback([&] {
        action = [&] {
            Json report;
            bool pass = false;
            if (verify_otree) {
                DualityOptions opt;
                opt.seed = g.seed;
                DualityReport r = check_duality(parse_otree(*verify_otree), g.parity(), opt);
                report = duality_json(r);
                pass = r.pass();
            } else {
                require_n(verify_n, 1, 7);
                PerfectReport r = verify_perfect(verify_n, g.parity());
                report = perfect_json(r, g.d);
                pass = r.pass();
            }
            // reports are always JSON
            out << report.dump(2) << '\n';
            if (!pass) {
                err << "verification failed\n";
                return verification_failure;
            }
            return ok;
        };
    });

    // geom-check
    std::optional<std::string> geom_forest;
    std::optional<std::string> geom_graph;
    std::string geom_eps = "0.1,0.01,0.001";
    int geom_samples = 100;
    double geom_identity_tol = 1e-9, geom_limit_tol = 1e-2;
    auto* geom_cmd = app.add_subcommand("geom-check", "planetary-system identities and edge-direction limits");
    geom_cmd->add_option("--forest", geom_forest, "forest, trees separated by ';'");
    geom_cmd->add_option("--graph", geom_graph, "graph whose edge directions are checked");
    geom_cmd->add_option("--eps", geom_eps, "comma-separated radii scales, decreasing");
    geom_cmd->add_option("--samples", geom_samples)->check(CLI::PositiveNumber);
    geom_cmd->add_option("--identity-tol", geom_identity_tol);
    geom_cmd->add_option("--limit-tol", geom_limit_tol, "bound on the deviation at the smallest eps");
    geom_cmd->callback([&] {
        action = [&] {
            Forest f = parse_forest(inputs.get(geom_forest, "forest"));
            auto eps = parse_eps_list(geom_eps);
            bool pass = true;
            Json ids = Json::array();
            for (double e : eps) {
                IdentityCheck c = check_identities_parallel(f, e, g.d, geom_samples, g.seed);
                bool good = c.center_error <= geom_identity_tol && c.distance_error <= geom_identity_tol &&
                            c.min_separation >= c.separation_bound;
                pass = pass && good;
                ids.push_back({{"eps", e},
                               {"center_error", c.center_error},
                               {"distance_error", c.distance_error},
                               {"min_separation", c.min_separation},
                               {"separation_bound", c.separation_bound},
                               {"pass", good}});
            }
            Json report{{"forest", render(f)}, {"d", g.d}, {"samples", geom_samples}, {"identities", ids}};
            if (geom_graph) {
                Graph gr = parse_graph(*geom_graph);
                LimitReport lr = limit_check(f, gr, g.d, eps, geom_samples, g.seed);
                Json edges = Json::array();
                bool good = true;
                for (const auto& el : lr.per_edge) {
                    bool decreasing = el.converging();
                    good = good && decreasing && el.deviation.back() < geom_limit_tol;
                    edges.push_back({{"edge", std::to_string(el.edge.from) + "->" + std::to_string(el.edge.to)},
                                     {"same_tree", el.same_tree},
                                     {"deviation", el.deviation},
                                     {"decreasing", decreasing}});
                }
                pass = pass && good;
                report["limits"] = {{"graph", render(gr)}, {"max_deviation", lr.max_deviation},
                                    {"edges", edges}, {"pass", good}};
            }
            report["pass"] = pass;
            if (g.json()) {
                out << report.dump(2) << '\n';
            } else {
                for (const auto& c : ids)
                    out << "eps=" << c["eps"].get<double>() << " center_error=" << c["center_error"].get<double>()
                        << " distance_error=" << c["distance_error"].get<double>()
                        << (c["pass"].get<bool>() ? " ok" : " FAIL") << '\n';
                if (report.contains("limits"))
                    for (const auto& e : report["limits"]["edges"]) {
                        out << "edge " << e["edge"].get<std::string>() << " deviation";
                        for (double v : e["deviation"]) out << ' ' << v;
                        out << '\n';
                    }
                out << (pass ? "pass" : "FAIL") << '\n';
            }
            if (!pass) {
                err << "geometry check failed\n";
                return verification_failure;
            }
            return ok;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return validation_error;
    }

    try {
        return action ? action() : validation_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_error;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_error;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << '\n';
        return validation_error;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return validation_error;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << '\n';
        return validation_error;
    }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"confpair"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

} // namespace confpair::cli
