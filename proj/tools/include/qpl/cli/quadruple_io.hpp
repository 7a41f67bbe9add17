#pragma once

/**
 * @file quadruple_io.hpp
 * @brief Text format for quadruples: one per line, 40 whitespace-separated
 *        integers in coordinate order, `#` starts a comment.
 */

#include "qpl/pencil/quadruple.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace qpl::cli {

/// A parsed quadruple together with the 1-based line it came from.
struct QuadrupleRecord {
    std::size_t line = 0;
    Quadruple q;
};

/**
 * Parses quadruple text.  Blank and comment-only lines are skipped; a token
 * that is not an integer raises ParseError with its line and column, and a
 * line with a number of integers other than 40 raises CountMismatch.
 */
std::vector<QuadrupleRecord> parse_quadruple_text(const std::string& text);

/// parse_quadruple_text on a file's contents (UsageError if unreadable).
std::vector<QuadrupleRecord> parse_quadruple_file(const std::filesystem::path& path);

/// One line per quadruple; parse_quadruple_text inverts it.
std::string format_quadruples(const std::vector<Quadruple>& qs);

/// Whole-file read (UsageError if unreadable).
std::string read_text_file(const std::filesystem::path& path);

}  // namespace qpl::cli
