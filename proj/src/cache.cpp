#include "delrecon/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"

namespace delrecon {

namespace {

std::filesystem::path report_path(const std::filesystem::path& dir, int n, int d, int t) {
    return dir / ("n" + std::to_string(n) + "_d" + std::to_string(d) + "_t" + std::to_string(t) +
                  ".json");
}

}  // namespace

std::filesystem::path cache_directory() {
    if (const char* env = std::getenv("DELRECON_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(".delrecon-cache");
}

void cache_store(const SearchReport& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["engine_version"] = report.engine;
    doc["n"] = report.n;
    doc["d"] = report.d;
    doc["t"] = report.t;
    doc["value"] = report.value;
    if (report.witness) {
        doc["witness_x"] = report.witness->x.str();
        doc["witness_y"] = report.witness->y.str();
    } else {
        doc["witness_x"] = nullptr;
        doc["witness_y"] = nullptr;
    }
    doc["pairs_scanned"] = report.pairs_scanned;
    doc["classes_scanned"] = report.classes_scanned;
    std::ofstream out(report_path(dir, report.n, report.d, report.t));
    out << doc.dump(2) << '\n';
    if (!out) throw CacheError("failed to write cache file");
}

std::optional<SearchReport> cache_load(int n, int d, int t, const std::filesystem::path& dir) {
    const auto path = report_path(dir, n, d, t);
    std::ifstream in(path);
    if (!in.is_open()) return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
        if (doc.at("engine_version").get<std::string>() != engine_version) return std::nullopt;
        SearchReport report;
        report.n = doc.at("n").get<int>();
        report.d = doc.at("d").get<int>();
        report.t = doc.at("t").get<int>();
        report.value = doc.at("value").get<std::uint64_t>();
        if (!doc.at("witness_x").is_null()) {
            report.witness =
                SearchWitness{BinarySequence::parse(doc.at("witness_x").get<std::string>()),
                              BinarySequence::parse(doc.at("witness_y").get<std::string>()),
                              report.t, report.t};
        }
        report.pairs_scanned = doc.at("pairs_scanned").get<std::uint64_t>();
        report.classes_scanned = doc.at("classes_scanned").get<std::uint64_t>();
        report.engine = doc.at("engine_version").get<std::string>();
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw CacheError("corrupt cache file " + path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw CacheError("corrupt cache file " + path.string() + ": " + e.what());
    }
}

}  // namespace delrecon
