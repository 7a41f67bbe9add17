#pragma once

/**
 * @file atlas.hpp
 * @brief Regeneration and verification of the cusp dissection table.
 *
 * Each case is described by the set T0 of coordinates assumed to vanish.  Its
 * T1 is the set of minimal-weight coordinates among the rest; the children of
 * a case set one T1 coordinate to zero at a time.  Branches whose T0 contains
 * one of seven fixed coordinate patterns (which force reducibility) are cut.
 * For each case a "use factor" π — a multiset supported on T1 — makes every
 * s-exponent of the integrand negative, giving the bound X^{(40−|T0|+#π)/40}.
 */

#include "qpl/algebra/numbers.hpp"
#include "qpl/cusp/weights.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace qpl {

/// A set of coordinates, as a 40-bit mask.
class CoordSet {
public:
    constexpr CoordSet() = default;
    constexpr explicit CoordSet(std::uint64_t bits) : bits_(bits) {}
    CoordSet(std::initializer_list<CoordId> ids) {
        for (auto c : ids) insert(c);
    }
    static CoordSet all() { return CoordSet((std::uint64_t{1} << CoordId::kCount) - 1); }

    [[nodiscard]] constexpr bool contains(CoordId c) const noexcept { return (bits_ >> c.index()) & 1U; }
    constexpr void insert(CoordId c) noexcept { bits_ |= std::uint64_t{1} << c.index(); }
    constexpr void erase(CoordId c) noexcept { bits_ &= ~(std::uint64_t{1} << c.index()); }
    [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
    [[nodiscard]] int size() const noexcept { return __builtin_popcountll(bits_); }
    [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
    [[nodiscard]] constexpr bool subset_of(CoordSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
    [[nodiscard]] constexpr CoordSet complement() const noexcept {
        return CoordSet(~bits_ & ((std::uint64_t{1} << CoordId::kCount) - 1));
    }
    [[nodiscard]] CoordSet with(CoordId c) const noexcept {
        CoordSet s = *this;
        s.insert(c);
        return s;
    }
    /// Members in increasing index order.
    [[nodiscard]] std::vector<CoordId> members() const;
    /// Comma-separated names, e.g. "a12,b12" (empty string for ∅).
    [[nodiscard]] std::string to_string() const;
    /// Inverse of to_string; throws std::invalid_argument on unknown names.
    static CoordSet parse(const std::string& text);

    friend constexpr bool operator==(CoordSet, CoordSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member lists (used for case labels).
bool lex_less(CoordSet a, CoordSet b);

/// A multiset of coordinates (coordinate → multiplicity > 0).
using CoordMultiset = std::map<CoordId, int>;
int multiset_size(const CoordMultiset& m);
/// "a25^2,a34" style, or "-" when empty.
std::string multiset_to_string(const CoordMultiset& m);
/// Inverse of multiset_to_string.
CoordMultiset parse_multiset(const std::string& text);

/// Minimal elements of T∖T0 in the componentwise weight order.
CoordSet minimal_coordinates(CoordSet t0);

/// The seven coordinate patterns whose vanishing forces reducibility.
const std::array<CoordSet, 7>& reducibility_patterns();
/// True iff T0 contains one of the seven patterns.
bool reducible_by_vanishing(CoordSet t0);

/**
 * s1..s7 exponents of (∏_{t∈T∖T0} w(t))·w(π)·(Haar factor).  The bound for a
 * case is valid when all seven are strictly negative.
 */
std::array<int, 7> integrand_s_exponents(CoordSet t0, const CoordMultiset& pi);
bool pi_makes_negative(CoordSet t0, const CoordMultiset& pi);

struct CaseNode {
    std::string label;
    CoordSet t0;
    CoordSet t1;
    CoordMultiset pi;         ///< auto-found minimum-size use factor
    int bound_numerator = 40;  ///< 40 − |T0| + #π
    int depth = 0;
    int parent = -1;           ///< index of the BFS parent (first discovery)
    std::vector<int> children;
};

struct Atlas {
    std::vector<CaseNode> nodes;
    /// All parent → child edges, including those into already-seen nodes.
    std::vector<std::pair<int, int>> edges;
    /// Index of the node with the given T0, or -1.
    [[nodiscard]] int find(CoordSet t0) const;
};

/**
 * Minimum-cardinality multiset π supported on node.t1 that makes every
 * s-exponent negative, searched by size up to `cap`; throws NoFactorFound.
 */
CoordMultiset find_pi(const CaseNode& node, int cap = 12);

/// (40 − |T0| + #π)/40.
Rat case_bound(const CaseNode& node, const CoordMultiset& pi);

/// Breadth-first regeneration from T0 = ∅ (T1, π and bounds filled in).
Atlas generate_atlas();

/// One row of the transcribed table.
struct Table1Row {
    std::size_t line = 0;
    std::string label;
    CoordSet t0;
    CoordSet t1;
    int bound_numerator = 0;
    CoordMultiset pi;
};

/// Reads `label | T0 | T1 | bound | pi`; throws ParseError with line number.
std::vector<Table1Row> load_table1(const std::filesystem::path& path);

struct Table1RowCheck {
    std::string label;
    std::size_t line = 0;
    bool t0_found = false;      ///< T0 matches a generated node
    bool t1_match = false;
    bool bound_match = false;   ///< 40 − |T0| + #π_listed equals the listed bound
    bool pi_negative = false;   ///< listed π makes all s-exponents negative
    bool auto_pi_no_larger = false;
    [[nodiscard]] bool ok() const { return t0_found && t1_match && bound_match && pi_negative && auto_pi_no_larger; }
};

struct Table1Report {
    std::vector<Table1RowCheck> rows;
    std::vector<std::string> missing_from_table;  ///< generated T0 sets with no row
    std::size_t matches = 0;
    std::size_t mismatches = 0;
    std::size_t t0_matches = 0;
    [[nodiscard]] bool all_match() const { return mismatches == 0 && missing_from_table.empty(); }
};

Table1Report verify_against_table(const Atlas& atlas, const std::vector<Table1Row>& table);
Table1Report verify_against_table(const Atlas& atlas, const std::filesystem::path& table_file);

}  // namespace qpl
