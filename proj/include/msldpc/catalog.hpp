#ifndef MSLDPC_CATALOG_HPP
#define MSLDPC_CATALOG_HPP

// Persisted code catalog: an append-only JSON-lines file keyed by the
// record's dedup_key. Re-running a search against the same catalog adds
// nothing. A single writer is enforced with an advisory flock on the
// catalog file.

#include <ctime>
#include <fstream>
#include <string>
#include <vector>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "code_search.hpp"
#include "errors.hpp"

namespace msldpc {

inline constexpr int kCatalogSchemaVersion = 1;

inline nlohmann::json record_to_json(const CodeRecord& rec) {
    nlohmann::json j;
    j["schema"] = kCatalogSchemaVersion;
    j["n"] = rec.n;
    j["k"] = rec.k;
    j["subset"] = rec.subset;
    j["u"] = poly_to_string(rec.u, 'x');
    j["theta"] = poly_to_string(rec.theta, 'z');
    j["g"] = poly_to_string(rec.g, 'x');
    j["weight"] = rec.weight;
    j["r_theta"] = rec.r_theta;
    j["bch_bound"] = rec.bch_bound;
    j["orthogonal"] = rec.orthogonal;
    j["dedup_key"] = rec.dedup_key;
    return j;
}

struct CatalogAppendResult {
    size_t added = 0;
    size_t skipped = 0;
};

// Appends records whose dedup_key is not yet present. Provenance (the
// search configuration) and a UTC timestamp ride along with each entry.
inline CatalogAppendResult catalog_append(const std::string& path, const std::vector<CodeRecord>& records,
                                          const SearchConfig& cfg) {
    int fd = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd < 0) throw Error("cannot open catalog file: " + path);
    if (::flock(fd, LOCK_EX) != 0) {
        ::close(fd);
        throw Error("cannot lock catalog file: " + path);
    }

    CatalogAppendResult res;
    try {
        std::vector<std::string> known;
        {
            std::ifstream in(path);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                auto j = nlohmann::json::parse(line, nullptr, false);
                if (!j.is_discarded() && j.contains("dedup_key")) known.push_back(j["dedup_key"].get<std::string>());
            }
        }

        std::ofstream out(path, std::ios::app);
        for (const CodeRecord& rec : records) {
            if (std::find(known.begin(), known.end(), rec.dedup_key) != known.end()) {
                ++res.skipped;
                continue;
            }
            nlohmann::json j = record_to_json(rec);
            j["provenance"] = {{"r_min", cfg.r_min}, {"d", cfg.d}, {"delta", cfg.delta}};
            std::time_t now = std::time(nullptr);
            char buf[32];
            std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
            j["created_utc"] = buf;
            out << j.dump() << '\n';
            known.push_back(rec.dedup_key);
            ++res.added;
        }
    } catch (...) {
        ::flock(fd, LOCK_UN);
        ::close(fd);
        throw;
    }
    ::flock(fd, LOCK_UN);
    ::close(fd);
    return res;
}

}  // namespace msldpc

#endif
