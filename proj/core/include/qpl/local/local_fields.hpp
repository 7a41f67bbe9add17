#pragma once

/**
 * @file local_fields.hpp
 * @brief Local fields of degree ≤ 5 over Q_p (and over R), their tables, and
 *        the tame classification.
 */

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace qpl {

/// Invariants of one isomorphism class of extension of Q_p (p = 0 for R).
struct LocalFieldRec {
    long p = 0;
    int n = 1;    ///< degree
    int e = 1;    ///< ramification index
    int f = 1;    ///< residue degree
    int c = 0;    ///< discriminant exponent: Disc = p^c
    long aut = 1; ///< |Aut_{Q_p}(K)|

    friend bool operator==(const LocalFieldRec&, const LocalFieldRec&) = default;
    friend auto operator<=>(const LocalFieldRec&, const LocalFieldRec&) = default;
};

/// All classes of degree ≤ 5 at one prime; one record per isomorphism class.
struct LocalFieldTable {
    long p = 0;
    std::vector<LocalFieldRec> records;

    /// Records of degree n.
    [[nodiscard]] std::vector<LocalFieldRec> of_degree(int n) const;
    /// Record count per degree.
    [[nodiscard]] std::map<int, std::size_t> degree_counts() const;
};

/**
 * Reads a `# p n e f c aut` table.  Lines starting with '#' are comments.
 * Throws ParseError (with line number) on malformed lines and
 * InvariantViolation (with 0-based record index) when a record breaks
 * n = e·f, the tame discriminant rule c = f(e−1), the wild lower bound
 * c ≥ f·e, aut | n, or mixes primes.
 */
LocalFieldTable load_local_fields(const std::filesystem::path& file);
/// Same, from text already in memory (used for downloaded tables).
LocalFieldTable parse_local_fields(const std::string& text, const std::string& source = "<memory>");

/// Checks one record's invariants; returns an empty string when valid.
std::string local_field_violation(const LocalFieldRec& r);

/**
 * Tame classification for p > 5: for each (e, f) with e·f ≤ 5, the classes
 * are the orbits of r ↦ p·r on Z/g with g = gcd(e, p^f − 1) (the extensions
 * x^e − p·ω^r over the unramified field of degree f), with aut = f·g/|orbit|
 * and c = f(e − 1).  Throws WildPrime for p ≤ 5.
 */
LocalFieldTable tame_local_fields(long p);

/// Writes a table in the load_local_fields format.
std::string format_local_fields(const LocalFieldTable& t, const std::string& comment = {});

/// The archimedean "fields": R (n = 1, aut 1) and C (n = 2, aut 2), p = 0.
LocalFieldTable real_local_fields();

/// Fixture file data/localfields/p<p>.tbl under `fixtures_dir`.
std::filesystem::path fixture_path(const std::filesystem::path& fixtures_dir, long p);

}  // namespace qpl
