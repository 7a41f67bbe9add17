#pragma once

/**
 * @file dispatch.hpp
 * @brief Command-line parsing and subcommand dispatch.
 *
 * Subcommands: `table1 generate|verify`, `weights`, `haar`, `classify`,
 * `beta`, `constants`, `identities`, `wp-bound`, `jacobian`, `davenport`,
 * `sample`.  Global flags: `--config`, `--seed`, `--jobs`, `--format`,
 * `--precision`, `--p-max`, `--version`.
 */

#include "qpl/cli/config.hpp"
#include "qpl/cli/report.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qpl::cli {

/// Version string reported by `--version`.
const char* version();

/// Subcommand-specific arguments (anything that is not a Config setting).
struct CommandArgs {
    std::optional<std::string> coord;
    std::optional<std::filesystem::path> table;
    std::optional<std::filesystem::path> input;
    std::optional<long> p;
    bool infinity = false;
    int samples = 10;
    long radius = 5;
    long count = 100;
    std::optional<std::filesystem::path> region;
    int batch = 0;
    long qmc_points = 1L << 18;
};

struct ParsedCommand {
    std::string command;  ///< e.g. "table1 verify"
    Config config;        ///< defaults < config file < flags < environment
    CommandArgs args;
    bool seed_on_command_line = false;
};

/// True for subcommands whose output depends on the seed.
bool is_randomized(const std::string& command);

/**
 * Parses argv (without the program name).  Throws UnknownCommand for an
 * unrecognised subcommand, UsageError for bad flags or values (including a
 * randomized subcommand without `--seed` while QPL_CI=1) and ParseError for
 * a malformed config file.
 */
ParsedCommand parse_command_line(const std::vector<std::string>& argv, const std::map<std::string, std::string>& env);

/**
 * Runs a parsed command.  Check outcomes become records with verdicts;
 * library errors raised while checking become a failing "error" record.
 * ParseError / UsageError on inputs propagate to the caller.
 */
RunReport dispatch(const ParsedCommand& cmd);

/// Parse, dispatch and print; returns the process exit code (0, 1 or 2).
int run(const std::vector<std::string>& argv, const std::map<std::string, std::string>& env, std::ostream& out,
        std::ostream& err);

}  // namespace qpl::cli
