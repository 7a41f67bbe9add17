/**
 * @file test_cusp.cpp
 * @brief Weight calculus, reducibility patterns, atlas regeneration and the
 *        comparison with the bundled table transcription.
 */

#include "doctest.h"

#include "qpl/cusp/atlas.hpp"
#include "qpl/util/errors.hpp"

#include <filesystem>
#include <fstream>

using namespace qpl;

namespace {

const std::filesystem::path kTable = std::filesystem::path(QPL_DATA_DIR) / "table1.txt";

CoordId id(const char* name) { return *CoordId::parse(name); }

const Atlas& atlas() {
    static const Atlas a = generate_atlas();
    return a;
}

const CaseNode& node_with(const std::string& t0) { return atlas().nodes[static_cast<std::size_t>(atlas().find(CoordSet::parse(t0)))]; }

}  // namespace

TEST_CASE("coordinate weights") {
    CHECK(coordinate_weight(id("a12")) == WeightMonomial({1, -3, -1, -1, -3, -6, -4, -2}));
    CHECK(coordinate_weight(id("d45")) == WeightMonomial({1, 1, 1, 3, 2, 4, 6, 3}));
    WeightMonomial total;
    for (auto c : CoordId::all()) total += coordinate_weight(c);
    CHECK(total == WeightMonomial({40, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("haar exponents from root characters") {
    const auto h = haar_exponents();
    CHECK(h == std::array<int, 7>{-12, -8, -12, -20, -30, -30, -20});
}

TEST_CASE("minimal coordinates") {
    CHECK(minimal_coordinates(CoordSet{}) == CoordSet{id("a12")});
    CHECK(minimal_coordinates(CoordSet{id("a12")}) == CoordSet({id("a13"), id("b12")}));
    CHECK(minimal_coordinates(CoordSet({id("a12"), id("b12")})) == CoordSet({id("a13"), id("c12")}));
}

TEST_CASE("reducible_by_vanishing") {
    CHECK(reducible_by_vanishing(CoordSet::parse("a12,a13,a14,a23,a24,a34")));
    CHECK(reducible_by_vanishing(CoordSet::parse("a12,a13,a14,a23,a24,a34,d45")));
    CHECK_FALSE(reducible_by_vanishing(CoordSet{}));
    CHECK(reducible_by_vanishing(CoordSet::all()));
    CHECK_FALSE(reducible_by_vanishing(CoordSet::parse("a12,a13,a14,a23,a24")));
}

TEST_CASE("atlas: size, children, leaf") {
    const Atlas& a = atlas();
    CHECK(a.nodes.size() == 152);
    CHECK(a.nodes[0].t0.empty());

    const CaseNode& one = node_with("a12");
    std::vector<std::string> kids;
    for (int c : one.children) kids.push_back(a.nodes[static_cast<std::size_t>(c)].t0.to_string());
    std::sort(kids.begin(), kids.end());
    CHECK(kids == std::vector<std::string>{"a12,a13", "a12,b12"});

    int deepest = 0;
    for (const auto& n : a.nodes) deepest = std::max(deepest, n.depth);
    CHECK(deepest == 13);
    for (const auto& n : a.nodes) {
        if (n.depth != 13) continue;
        CHECK(n.children.empty());
        // Leaf property: zeroing any T1 coordinate hits a pattern.
        for (auto t : n.t1.members()) CHECK(reducible_by_vanishing(n.t0.with(t)));
    }
    // Determinism.
    const Atlas b = generate_atlas();
    REQUIRE(b.nodes.size() == a.nodes.size());
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        CHECK(a.nodes[i].t0 == b.nodes[i].t0);
        CHECK(a.nodes[i].label == b.nodes[i].label);
    }
}

TEST_CASE("atlas invariants: antichains, domination, bounds below 40") {
    for (const auto& n : atlas().nodes) {
        CHECK((n.t0.bits() & n.t1.bits()) == 0);
        const auto t1 = n.t1.members();
        for (auto x : t1)
            for (auto y : t1)
                if (x != y) CHECK_FALSE((coordinate_weight(x).leq(coordinate_weight(y)) && coordinate_weight(x) != coordinate_weight(y)));
        for (auto c : n.t0.complement().members()) {
            const bool dominates = std::any_of(t1.begin(), t1.end(), [&](CoordId m) { return coordinate_weight(m).leq(coordinate_weight(c)); });
            CHECK(dominates);
        }
        CHECK(pi_makes_negative(n.t0, n.pi));
        if (n.depth > 0) CHECK(n.bound_numerator < 40);
    }
}

TEST_CASE("find_pi and case_bound on named cases") {
    const CaseNode& root = atlas().nodes[0];
    CHECK(find_pi(root).empty());
    CHECK(case_bound(root, {}) == 1);

    const CaseNode& one = node_with("a12");
    CHECK(find_pi(one).empty());

    const CaseNode& five_a = node_with("a12,a13,a14,a15,a23");
    CHECK(multiset_size(find_pi(five_a)) == 2);
    CHECK(pi_makes_negative(five_a.t0, parse_multiset("a24^2")));

    const CaseNode& thirteen = node_with("a12,a13,a14,a15,a23,a24,b12,b13,b14,b23,c12,c13,d12");
    const CoordMultiset listed = parse_multiset("a25^2,a34,b24^2,c14^2,d13^3");
    CHECK(multiset_size(listed) == 10);
    CHECK(pi_makes_negative(thirteen.t0, listed));
    CHECK(multiset_size(find_pi(thirteen)) <= 10);
    CHECK(case_bound(thirteen, listed) == make_rat(37, 40));

    // A depth-4 case with empty use factor has bound 36/40.
    int seen = 0;
    for (const auto& n : atlas().nodes)
        if (n.depth == 4 && n.pi.empty()) {
            CHECK(case_bound(n, n.pi) == make_rat(36, 40));
            ++seen;
        }
    CHECK(seen > 0);
}

TEST_CASE("verify_against_table: bundled transcription matches 152/152") {
    const auto report = verify_against_table(atlas(), kTable);
    CHECK(report.rows.size() == 152);
    CHECK(report.t0_matches == 152);
    CHECK(report.matches == 152);
    CHECK(report.all_match());
}

TEST_CASE("verify_against_table: fault injection and parse errors") {
    auto rows = load_table1(kTable);
    rows[17].bound_numerator += 1;
    const auto report = verify_against_table(atlas(), rows);
    CHECK(report.mismatches == 1);
    CHECK_FALSE(report.all_match());

    const auto tmp = std::filesystem::temp_directory_path() / "qpl_bad_table1.txt";
    {
        std::ofstream out(tmp);
        out << "# header\n0 |  | a12 | 40 | -\n1 | a12 | a13,b12 | 39\n";
    }
    try {
        (void)load_table1(tmp);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    {
        std::ofstream out(tmp);
        out << "0 | zz9 | a12 | 40 | -\n";
    }
    CHECK_THROWS_AS(load_table1(tmp), ParseError);
    std::filesystem::remove(tmp);
}
