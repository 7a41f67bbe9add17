/**
 * @file fetch.cpp
 * @brief HTTP download of local-field tables (cpp-httplib), validated and
 *        written atomically into an immutable cache.
 */

#include "qpl/local/fetch.hpp"

#include "qpl/local/local_fields.hpp"
#include "qpl/util/errors.hpp"

#include "httplib.h"

#include <fstream>
#include <random>
#include <regex>

namespace qpl {

namespace {

struct Endpoint {
    std::string host_port;  ///< "http://host:port"
    std::string base_path;  ///< "" or "/api"
};

Endpoint parse_endpoint(const std::string& url) {
    static const std::regex re(R"(^(https?)://([^/]+)(/.*)?$)");
    std::smatch m;
    if (!std::regex_match(url, m, re)) throw NetworkError("malformed endpoint '" + url + "'");
    if (m[1] == "https") throw NetworkError("https endpoints are not supported by this build");
    std::string path = m[3].matched ? m[3].str() : std::string{};
    while (!path.empty() && path.back() == '/') path.pop_back();
    return {"http://" + m[2].str(), path};
}

std::string sanitize(std::string s) {
    for (auto& ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '.' && ch != '-' && ch != '_') ch = '_';
    return s.empty() ? "unversioned" : s;
}

}  // namespace

std::filesystem::path fetch_local_fields(const FetchOptions& opts, long p, int max_degree) {
    namespace fs = std::filesystem;
    if (!opts.network_enabled) throw NetworkError("network access is disabled (set network_enabled = true)");
    if (opts.cache_dir.empty()) throw NetworkError("no cache_dir configured");
    const std::string stem = "p" + std::to_string(p) + "_n" + std::to_string(max_degree) + "_";

    // Immutable cache: any completed download for (p, max_degree) is reused.
    if (fs::exists(opts.cache_dir))
        for (const auto& entry : fs::directory_iterator(opts.cache_dir)) {
            const std::string name = entry.path().filename().string();
            if (name.rfind(stem, 0) == 0 && entry.path().extension() == ".tbl") return entry.path();
        }

    const Endpoint ep = parse_endpoint(opts.endpoint);
    httplib::Client client(ep.host_port);
    client.set_connection_timeout(opts.timeout_seconds, 0);
    client.set_read_timeout(opts.timeout_seconds, 0);
    const std::string target = ep.base_path + "/localfields?p=" + std::to_string(p) + "&max_degree=" + std::to_string(max_degree);
    auto res = client.Get(target);
    if (!res) throw NetworkError("GET " + opts.endpoint + target + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw NetworkError("GET " + target + " returned HTTP " + std::to_string(res->status));

    LocalFieldTable table;
    try {
        table = parse_local_fields(res->body, "download");
    } catch (const Error& e) {
        throw SchemaMismatch(e.what());
    }
    if (table.records.empty()) throw SchemaMismatch("downloaded table is empty");
    if (table.p != p) throw SchemaMismatch("downloaded table is for p = " + std::to_string(table.p));
    for (const auto& r : table.records)
        if (r.n > max_degree) throw SchemaMismatch("record of degree " + std::to_string(r.n) + " exceeds max_degree");

    const std::string version = sanitize(res->get_header_value("X-Source-Version"));
    fs::create_directories(opts.cache_dir);
    const fs::path final_path = opts.cache_dir / (stem + version + ".tbl");
    std::random_device rd;
    const fs::path tmp = opts.cache_dir / (".partial-" + std::to_string(rd()) + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary);
        out << format_local_fields(table, "downloaded from " + opts.endpoint + " (source version " + version + ")");
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw NetworkError("cannot write cache file " + tmp.string());
        }
    }
    fs::rename(tmp, final_path);
    return final_path;
}

}  // namespace qpl
