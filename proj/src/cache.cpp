#include "confpair/cache.hpp"

#include <fstream>
#include <optional>
#include <random>
#include <sstream>

namespace confpair {

namespace fs = std::filesystem;

Json to_json(const GramMatrix& m) {
    Json rows = Json::array(), cols = Json::array(), entries = Json::array();
    for (const Graph& g : m.rows) rows.push_back(render(g));
    for (const Forest& f : m.cols) cols.push_back(render(f));
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols.size(); ++c) row.push_back(m.at(r, c));
        entries.push_back(row);
    }
    return {{"schema_version", cache_schema_version},
            {"kind", "gram"},
            {"n", m.n},
            {"k", m.k},
            {"parity", to_string(m.parity)},
            {"rows", rows},
            {"cols", cols},
            {"entries", entries}};
}

GramMatrix gram_from_json(const Json& j) {
    if (j.at("schema_version").get<int>() != cache_schema_version || j.at("kind") != "gram")
        throw ValidationError("unsupported gram cache schema");
    GramMatrix m;
    m.n = j.at("n").get<int>();
    m.k = j.at("k").get<int>();
    m.parity = j.at("parity") == "even" ? Parity::even : Parity::odd;
    for (const Json& r : j.at("rows")) m.rows.push_back(parse_graph(r.get<std::string>()));
    for (const Json& c : j.at("cols")) m.cols.push_back(canonicalize(parse_forest(c.get<std::string>())).forest);
    for (const Json& row : j.at("entries")) {
        if (row.size() != m.cols.size()) throw ValidationError("gram cache row has the wrong length");
        for (const Json& e : row) m.entries.push_back(e.get<int>());
    }
    if (m.entries.size() != m.rows.size() * m.cols.size()) throw ValidationError("gram cache has the wrong shape");
    return m;
}

Json to_json(const RankTable& t) {
    Json q = Json::array();
    for (const Coeff& c : t.q) q.push_back(coeff_to_json(c));
    return {{"schema_version", cache_schema_version}, {"kind", "ranks"}, {"n", t.n}, {"d", t.d}, {"q", q}};
}

RankTable ranks_from_json(const Json& j) {
    if (j.at("schema_version").get<int>() != cache_schema_version || j.at("kind") != "ranks")
        throw ValidationError("unsupported rank cache schema");
    RankTable t;
    t.n = j.at("n").get<int>();
    t.d = j.at("d").get<int>();
    for (const Json& c : j.at("q")) t.q.push_back(coeff_from_json(c));
    return t;
}

void write_atomically(const fs::path& path, const std::string& contents) {
    std::random_device rd;
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path DiskCache::gram_path(int n, int k, Parity p) const {
    return dir_ / ("gram_n" + std::to_string(n) + "_k" + std::to_string(k) + "_" + to_string(p) + ".json");
}

fs::path DiskCache::ranks_path(int n, int d) const {
    return dir_ / ("ranks_n" + std::to_string(n) + "_d" + std::to_string(d) + ".json");
}

namespace {

std::optional<Json> read_json(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    Json j = Json::parse(buf.str(), nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    return j;
}

} // namespace

GramMatrix DiskCache::gram(int n, int k, Parity p) const {
    fs::path path = gram_path(n, k, p);
    if (auto j = read_json(path)) {
        try {
            GramMatrix m = gram_from_json(*j);
            if (m.n == n && m.k == k && m.parity == p) return m;
        } catch (const std::exception&) {
            // stale or foreign file: recompute below
        }
    }
    GramMatrix m = gram_matrix(n, k, p);
    write_atomically(path, to_json(m).dump() + "\n");
    return m;
}

RankTable DiskCache::ranks(int n, int d) const {
    fs::path path = ranks_path(n, d);
    if (auto j = read_json(path)) {
        try {
            RankTable t = ranks_from_json(*j);
            if (t.n == n && t.d == d) return t;
        } catch (const std::exception&) {
        }
    }
    RankTable t = rank_table(n, d);
    write_atomically(path, to_json(t).dump() + "\n");
    return t;
}

} // namespace confpair
