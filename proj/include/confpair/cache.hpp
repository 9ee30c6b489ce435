#pragma once

#include "confpair/gram.hpp"
#include "confpair/io.hpp"

#include <filesystem>

namespace confpair {

inline constexpr int cache_schema_version = 1;

Json to_json(const GramMatrix& m);
GramMatrix gram_from_json(const Json& j);
Json to_json(const RankTable& t);
RankTable ranks_from_json(const Json& j);

// Writes through a temporary file in the same directory and renames it into
// place, so readers never see a partial file.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

// JSON files under `dir`, one per (n, k, parity) Gram matrix and one per
// (n, d) rank table. Unreadable files or a different schema version are
// recomputed and overwritten. Results never depend on the cache.
class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir);

    GramMatrix gram(int n, int k, Parity p) const;
    RankTable ranks(int n, int d) const;

    std::filesystem::path gram_path(int n, int k, Parity p) const;
    std::filesystem::path ranks_path(int n, int d) const;

private:
    std::filesystem::path dir_;
};

} // namespace confpair
