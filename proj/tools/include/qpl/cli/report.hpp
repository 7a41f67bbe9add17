#pragma once

/**
 * @file report.hpp
 * @brief Run reports: machine-readable records, an inputs digest and the
 *        exit-code contract (0 all checks pass, 1 a check failed, 2 usage).
 */

#include "qpl/cli/config.hpp"

#include "json.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qpl::cli {

using Record = nlohmann::ordered_json;

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// 64-bit FNV-1a, fed incrementally; hex() gives 16 lowercase hex digits.
class Digest {
public:
    Digest& update(std::string_view bytes) noexcept;
    /// Length-prefixed so that ("ab","c") and ("a","bc") differ.
    Digest& field(std::string_view bytes) noexcept;
    [[nodiscard]] std::uint64_t value() const noexcept { return h_; }
    [[nodiscard]] std::string hex() const;

private:
    std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

struct RunReport {
    std::string command;
    std::string inputs_digest;
    std::vector<Record> records;
    std::size_t checks = 0;
    std::size_t failures = 0;

    /// A record with a value and no verdict.
    Record& add_value(const std::string& name, Record value, const std::string& provenance);
    /// A record with a boolean verdict; failures are counted.
    Record& add_check(const std::string& name, bool verdict, const std::string& provenance);

    [[nodiscard]] bool all_passed() const noexcept { return failures == 0; }
    [[nodiscard]] int exit_code() const noexcept { return all_passed() ? kExitPass : kExitCheckFailed; }
    /// Closing record: command, digest, counts and overall verdict.
    [[nodiscard]] Record summary() const;
};

/// Writes every record followed by the summary in the chosen format.
void write_report(const RunReport& report, OutputFormat format, std::ostream& out);

}  // namespace qpl::cli
