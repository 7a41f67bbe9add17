/**
 * @file config.cpp
 * @brief Layered configuration parsing.
 */

#include "qpl/cli/config.hpp"

#include "qpl/util/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

extern char** environ;

namespace qpl::cli {

namespace {

std::string trim(std::string s) {
    auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) throw UsageError("invalid value '" + value + "' for " + key);
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    std::string v = value;
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw UsageError("invalid boolean '" + value + "' for " + key);
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
    if (s == "jsonl") return OutputFormat::Jsonl;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    throw UsageError("unknown format '" + s + "' (expected jsonl, csv or text)");
}

const char* to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Jsonl: return "jsonl";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Text: return "text";
    }
    return "?";
}

void Config::validate() const {
    if (precision <= 0) throw UsageError("precision must be positive");
    if (p_max <= 0) throw UsageError("p_max must be positive");
    if (retry_cap <= 0) throw UsageError("retry_cap must be positive");
    if (prime_budget <= 0) throw UsageError("prime_budget must be positive");
    if (jobs <= 0) throw UsageError("jobs must be positive");
}

const std::map<std::string, std::string>& config_keys() {
    static const std::map<std::string, std::string> keys{
        {"seed", "base seed for every randomized step"},
        {"precision", "working precision in bits"},
        {"p_max", "Euler-product truncation point"},
        {"fixtures_dir", "directory holding table1.txt and localfields/"},
        {"network_enabled", "allow downloading local-field tables"},
        {"endpoint", "base URL of the local-field table service"},
        {"cache_dir", "where downloaded tables are stored"},
        {"retry_cap", "pencil genericity retries"},
        {"prime_budget", "primes examined by the S5 certifier"},
        {"jobs", "worker threads"},
        {"format", "jsonl, csv or text"},
    };
    return keys;
}

void apply_setting(Config& c, const std::string& key, const std::string& value) {
    if (key == "seed") c.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "precision") c.precision = parse_number<int>(key, value);
    else if (key == "p_max") c.p_max = parse_number<long>(key, value);
    else if (key == "fixtures_dir") c.fixtures_dir = value;
    else if (key == "network_enabled") c.network_enabled = parse_bool(key, value);
    else if (key == "endpoint") c.endpoint = value;
    else if (key == "cache_dir") c.cache_dir = value;
    else if (key == "retry_cap") c.retry_cap = parse_number<int>(key, value);
    else if (key == "prime_budget") c.prime_budget = parse_number<int>(key, value);
    else if (key == "jobs") c.jobs = parse_number<int>(key, value);
    else if (key == "format") c.format = parse_format(value);
    else throw UsageError("unknown configuration key '" + key + "'");
}

void apply_config_text(Config& c, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno);
        try {
            apply_setting(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const UsageError& e) {
            throw ParseError(e.what(), lineno, eq + 1);
        }
    }
}

void apply_config_file(Config& c, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    apply_config_text(c, ss.str());
}

void apply_environment(Config& c, const std::map<std::string, std::string>& env) {
    for (const auto& [key, doc] : config_keys()) {
        std::string var = "QPL_" + key;
        std::transform(var.begin(), var.end(), var.begin(), [](unsigned char ch) { return std::toupper(ch); });
        const auto it = env.find(var);
        if (it != env.end()) apply_setting(c, key, it->second);
    }
}

std::map<std::string, std::string> process_environment() {
    std::map<std::string, std::string> env;
    for (char** e = environ; e && *e; ++e) {
        const std::string kv(*e);
        const auto eq = kv.find('=');
        if (eq == std::string::npos || kv.rfind("QPL_", 0) != 0) continue;
        env.emplace(kv.substr(0, eq), kv.substr(eq + 1));
    }
    return env;
}

}  // namespace qpl::cli
