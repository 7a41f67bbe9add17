#pragma once

/**
 * @file config.hpp
 * @brief Run configuration: `key = value` file, command-line flags and
 *        QPL_-prefixed environment variables, in increasing precedence.
 */

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace qpl::cli {

enum class OutputFormat { Jsonl, Csv, Text };

OutputFormat parse_format(const std::string& s);
const char* to_string(OutputFormat f);

struct Config {
    std::uint64_t seed = 1;
    int precision = 96;  ///< bits
    long p_max = 10000;
    std::filesystem::path fixtures_dir;
    bool network_enabled = false;
    std::string endpoint = "http://127.0.0.1:8080/api";
    std::filesystem::path cache_dir;
    int retry_cap = 8;
    int prime_budget = 500;
    int jobs = 1;
    OutputFormat format = OutputFormat::Jsonl;

    /// Throws UsageError unless every numeric field is positive.
    void validate() const;
};

/// Keys accepted in config files; the environment uses "QPL_" + uppercase key.
const std::map<std::string, std::string>& config_keys();

/// Apply one `key = value` setting (UsageError on unknown keys or bad values).
void apply_setting(Config& c, const std::string& key, const std::string& value);

/// Parse a config file body; ParseError carries the offending line.
void apply_config_text(Config& c, const std::string& text);
void apply_config_file(Config& c, const std::filesystem::path& path);

/// Apply QPL_* variables from an environment map (QPL_CI is not a setting).
void apply_environment(Config& c, const std::map<std::string, std::string>& env);

/// Environment of the current process restricted to QPL_* variables.
std::map<std::string, std::string> process_environment();

}  // namespace qpl::cli
