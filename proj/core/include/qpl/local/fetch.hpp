#pragma once

/**
 * @file fetch.hpp
 * @brief Optional HTTP client for downloading local-field tables.
 *
 * The endpoint serves `GET <base>/localfields?p=<p>&max_degree=<n>` with a
 * body in the load_local_fields format and an optional `X-Source-Version`
 * header.  Downloads are validated before they are written, written
 * atomically, and cached immutably by (p, max_degree, source version).
 * Offline fixtures remain authoritative; nothing here runs unless enabled.
 */

#include <filesystem>
#include <string>

namespace qpl {

struct FetchOptions {
    bool network_enabled = false;
    std::string endpoint;  ///< e.g. "http://127.0.0.1:8080/api"
    std::filesystem::path cache_dir;
    int timeout_seconds = 10;
};

/**
 * Returns the path of a validated table for (p, max_degree), downloading it
 * if the cache has none.  Throws NetworkError when disabled or unreachable
 * (no file is left behind) and SchemaMismatch when the body does not parse or
 * does not describe the requested prime and degrees.
 */
std::filesystem::path fetch_local_fields(const FetchOptions& opts, long p, int max_degree);

}  // namespace qpl
