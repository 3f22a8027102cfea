#include "polycosec/comb_cache.hpp"

#include "polycosec/combinatorics.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace polycosec::cache {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json triangle_json(const std::vector<std::vector<std::string>>& rows) {
    ordered_json t;
    t["max_index"] = static_cast<long>(rows.size()) - 1;
    t["entries"] = rows;
    return t;
}

ordered_json row_json(const std::vector<std::string>& row) {
    ordered_json t;
    t["max_index"] = static_cast<long>(row.size()) - 1;
    t["entries"] = row;
    return t;
}

std::vector<std::vector<std::string>> triangle_from(const ordered_json& t) {
    return t.at("entries").get<std::vector<std::vector<std::string>>>();
}

} // namespace

std::filesystem::path default_cache_dir() {
    if (const char* dir = std::getenv("POLYCOSEC_CACHE_DIR"))
        return std::filesystem::path(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "polycosec";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "polycosec";
    return std::filesystem::temp_directory_path() / "polycosec";
}

std::filesystem::path default_cache_file() {
    return default_cache_dir() / "comb_tables.json";
}

std::string serialize_tables() {
    const CombTablesDump dump = dump_comb_tables();
    ordered_json doc;
    doc["format_version"] = kFormatVersion;
    ordered_json tables;
    tables["binomial"] = triangle_json(dump.binomial);
    tables["stirling1_unsigned"] = triangle_json(dump.stirling1_unsigned);
    tables["stirling2"] = triangle_json(dump.stirling2);
    tables["bernoulli"] = row_json(dump.bernoulli);
    tables["tangent_higher"] = triangle_json(dump.tangent_higher);
    doc["tables"] = tables;
    return doc.dump(2) + "\n";
}

bool load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        return false;
    try {
        const ordered_json doc = ordered_json::parse(in);
        if (doc.at("format_version").get<int>() != kFormatVersion)
            return false;
        const auto& tables = doc.at("tables");
        CombTablesDump dump;
        dump.binomial = triangle_from(tables.at("binomial"));
        dump.stirling1_unsigned = triangle_from(tables.at("stirling1_unsigned"));
        dump.stirling2 = triangle_from(tables.at("stirling2"));
        dump.bernoulli = tables.at("bernoulli").at("entries").get<std::vector<std::string>>();
        dump.tangent_higher = triangle_from(tables.at("tangent_higher"));
        preload_comb_tables(dump);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

bool save(const std::filesystem::path& file) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    std::ofstream out(file, std::ios::trunc);
    if (!out)
        return false;
    out << serialize_tables();
    return static_cast<bool>(out);
}

} // namespace polycosec::cache
