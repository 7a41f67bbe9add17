#pragma once

/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every qpl module.
 *
 * Each named failure mode of the library has its own type so callers (and the
 * CLI exit-code mapping) can distinguish precondition violations from check
 * failures without parsing messages.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpl {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QPL_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// algebra-core
QPL_DEFINE_ERROR(NotSkew);
QPL_DEFINE_ERROR(NotSquarefree);
QPL_DEFINE_ERROR(NotQuintic);
QPL_DEFINE_ERROR(DimensionMismatch);
// pencil
QPL_DEFINE_ERROR(BadDeterminant);
QPL_DEFINE_ERROR(DegeneratePencil);
QPL_DEFINE_ERROR(NotIrreducible);
// cusp-atlas
QPL_DEFINE_ERROR(NoFactorFound);
// geometry-numbers
QPL_DEFINE_ERROR(IllConditioned);
QPL_DEFINE_ERROR(Unbounded);
// local-masses
QPL_DEFINE_ERROR(IncompleteTable);
QPL_DEFINE_ERROR(WildPrime);
QPL_DEFINE_ERROR(NetworkError);
QPL_DEFINE_ERROR(SchemaMismatch);
// cli
QPL_DEFINE_ERROR(UnknownCommand);
QPL_DEFINE_ERROR(UsageError);

#undef QPL_DEFINE_ERROR

/// Malformed text input; carries a 1-based line and column (0 = unknown).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
        : Error("ParseError at line " + std::to_string(line) +
                (column ? ", column " + std::to_string(column) : std::string{}) + ": " + what),
          line_(line), column_(column) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A quadruple record with the wrong number of integers.
class CountMismatch : public ParseError {
public:
    CountMismatch(std::size_t line, std::size_t found)
        : ParseError("CountMismatch: expected 40 integers, found " + std::to_string(found), line),
          found_(found) {}
    [[nodiscard]] std::size_t found() const noexcept { return found_; }

private:
    std::size_t found_;
};

/// A data record that parses but violates a structural invariant.
class InvariantViolation : public Error {
public:
    InvariantViolation(const std::string& what, std::size_t record_index)
        : Error("InvariantViolation in record " + std::to_string(record_index) + ": " + what),
          index_(record_index) {}
    [[nodiscard]] std::size_t record_index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace qpl
