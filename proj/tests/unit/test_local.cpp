/**
 * @file test_local.cpp
 * @brief Local-field tables, tame classification, étale quintic masses and
 *        the optional table download client (against a loopback server).
 */

#include "doctest.h"

#include "qpl/local/fetch.hpp"
#include "qpl/local/local_fields.hpp"
#include "qpl/local/masses.hpp"
#include "qpl/util/errors.hpp"

#include "httplib.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

using namespace qpl;
namespace fs = std::filesystem;

namespace {

const fs::path kData(QPL_DATA_DIR);

fs::path write_temp(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

std::vector<LocalFieldRec> sorted(std::vector<LocalFieldRec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Int binomial(long n, long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Number of multisets of total degree 5 from per-degree class counts,
/// summing over partitions of 5 (independent of the enumeration code).
Int multiset_count(const std::map<int, std::size_t>& counts) {
    auto count = [&](int n) { return counts.contains(n) ? static_cast<long>(counts.at(n)) : 0L; };
    Int total = 0;
    // m_k = number of degree-k factors, Σ k·m_k = 5.
    for (int m5 = 0; m5 <= 1; ++m5)
        for (int m4 = 0; 4 * m4 + 5 * m5 <= 5; ++m4)
            for (int m3 = 0; 3 * m3 + 4 * m4 + 5 * m5 <= 5; ++m3)
                for (int m2 = 0; 2 * m2 + 3 * m3 + 4 * m4 + 5 * m5 <= 5; ++m2) {
                    const int m1 = 5 - 2 * m2 - 3 * m3 - 4 * m4 - 5 * m5;
                    Int term = 1;
                    const int ms[6] = {0, m1, m2, m3, m4, m5};
                    for (int k = 1; k <= 5; ++k) {
                        const long n = count(k);
                        if (ms[k] == 0) continue;
                        term *= n == 0 ? Int(0) : binomial(n + ms[k] - 1, ms[k]);
                    }
                    total += term;
                }
    return total;
}

}  // namespace

TEST_CASE("load_local_fields: fixtures, violations, empty file") {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        const auto t = load_local_fields(fixture_path(kData, p));
        CHECK(t.p == p);
        CHECK_FALSE(t.records.empty());
        for (const auto& r : t.records) CHECK(local_field_violation(r).empty());
    }
    const auto t2 = load_local_fields(fixture_path(kData, 2));
    CHECK(t2.degree_counts() == std::map<int, std::size_t>{{1, 1}, {2, 7}, {3, 2}, {4, 59}, {5, 2}});

    const auto bad = write_temp("qpl_bad_lf.tbl", "# p n e f c aut\n7 1 1 1 0 1\n7 4 2 1 1 2\n");
    try {
        (void)load_local_fields(bad);
        FAIL("expected InvariantViolation");
    } catch (const InvariantViolation& e) {
        CHECK(e.record_index() == 1);
    }
    CHECK_THROWS_AS(load_local_fields(write_temp("qpl_bad_lf2.tbl", "7 1 1 1 zero 1\n")), ParseError);
    CHECK(load_local_fields(write_temp("qpl_empty_lf.tbl", "")).records.empty());
}

TEST_CASE("tame_local_fields: unramified, totally ramified, masses") {
    const auto t7 = tame_local_fields(7);
    int unram5 = 0;
    for (const auto& r : t7.records)
        if (r.e == 1 && r.f == 5) {
            ++unram5;
            CHECK(r.aut == 5);
        }
    CHECK(unram5 == 1);

    for (long p : {7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 41L, 61L}) {
        const auto t = tame_local_fields(p);
        for (int e = 1; e <= 5; ++e) {
            Rat mass = 0;
            for (const auto& r : t.records)
                if (r.f == 1 && r.e == e) mass += Rat(1, r.aut);
            CHECK(mass == 1);
        }
        CHECK(beta_p(p, t).match);
    }
    CHECK_THROWS_AS(tame_local_fields(5), WildPrime);
    CHECK_THROWS_AS(tame_local_fields(2), WildPrime);
}

TEST_CASE("tame_local_fields agrees with the independently computed fixtures") {
    for (long p : {7L, 11L, 13L}) {
        const auto fixture = load_local_fields(fixture_path(kData, p));
        CHECK(sorted(tame_local_fields(p).records) == sorted(fixture.records));
    }
}

TEST_CASE("etale_quintics and automorphism orders") {
    LocalFieldTable base;
    base.p = 7;
    base.records.push_back({7, 1, 1, 1, 0, 1});
    const auto only = etale_quintics(base);
    REQUIRE(only.size() == 1);
    CHECK(only[0].components.size() == 1);
    CHECK(only[0].components[0].multiplicity == 5);
    CHECK(algebra_aut_order(only[0]) == 120);

    const auto reals = real_etale_quintics();
    REQUIRE(reals.size() == 3);
    std::vector<Int> auts;
    for (const auto& a : reals) auts.push_back(algebra_aut_order(a));
    std::sort(auts.begin(), auts.end());
    CHECK(auts == std::vector<Int>{8, 12, 120});

    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        const auto t = load_local_fields(fixture_path(kData, p));
        CHECK(Int(static_cast<long>(etale_quintics(t).size())) == multiset_count(t.degree_counts()));
    }

    EtaleQuintic unram;
    unram.p = 7;
    unram.components.push_back({{7, 5, 1, 5, 0, 5}, 0, 1});
    CHECK(algebra_aut_order(unram) == 5);

    LocalFieldTable no_base;
    no_base.p = 7;
    no_base.records.push_back({7, 2, 1, 2, 0, 2});
    CHECK_THROWS_AS(etale_quintics(no_base), IncompleteTable);
}

TEST_CASE("beta_p from fixtures and tame tables") {
    CHECK(beta_p(2, load_local_fields(fixture_path(kData, 2))).total == Rat(37, 32));
    CHECK(beta_p(7, tame_local_fields(7)).total == Rat(17142, 16807));
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        const auto r = beta_p(p, load_local_fields(fixture_path(kData, p)));
        CHECK(r.match);
        Rat s = 0;
        for (const auto& t : r.terms) s += t.mass;
        CHECK(s == r.sum);
    }
    auto t = tame_local_fields(11);
    std::erase_if(t.records, [](const LocalFieldRec& r) { return r.n == 4; });
    CHECK_THROWS_AS(beta_p(11, t), IncompleteTable);
}

TEST_CASE("beta_infinity") {
    const auto r = beta_infinity();
    CHECK(r.total == make_rat(13, 120));
    CHECK(r.total == Rat(1, 240) + Rat(1, 24) + Rat(1, 16));
    CHECK(r.sum == make_rat(13, 60));
    CHECK(r.match);
}

TEST_CASE("fetch_local_fields against a loopback server") {
    const fs::path cache = fs::temp_directory_path() / "qpl_fetch_cache";
    fs::remove_all(cache);

    FetchOptions opts;
    opts.cache_dir = cache;
    opts.timeout_seconds = 2;
    CHECK_THROWS_AS(fetch_local_fields(opts, 3, 5), NetworkError);

    httplib::Server server;
    server.Get("/api/localfields", [](const httplib::Request& req, httplib::Response& res) {
        const long p = std::stol(req.get_param_value("p"));
        std::string body;
        if (p == 7) {
            body = format_local_fields(tame_local_fields(7));
        } else if (p == 17) {
            body = "not a table\n";
        } else {
            std::ifstream in(fixture_path(kData, p));
            std::ostringstream ss;
            ss << in.rdbuf();
            body = ss.str();
        }
        res.set_header("X-Source-Version", "loopback-1");
        res.set_content(body, "text/plain");
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread th([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    opts.network_enabled = true;
    opts.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/api";
    const fs::path got3 = fetch_local_fields(opts, 3, 5);
    const auto t3 = load_local_fields(got3);
    CHECK(t3.p == 3);
    CHECK(beta_p(3, t3).match);
    CHECK(fetch_local_fields(opts, 3, 5) == got3);  // cached

    const auto t7 = load_local_fields(fetch_local_fields(opts, 7, 5));
    CHECK(sorted(t7.records) == sorted(tame_local_fields(7).records));

    CHECK_THROWS_AS(fetch_local_fields(opts, 17, 5), SchemaMismatch);
    server.stop();
    th.join();

    // Unreachable endpoint: NetworkError and nothing written.
    const auto before = std::distance(fs::directory_iterator(cache), fs::directory_iterator{});
    opts.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/api";
    CHECK_THROWS_AS(fetch_local_fields(opts, 11, 5), NetworkError);
    const auto after = std::distance(fs::directory_iterator(cache), fs::directory_iterator{});
    CHECK(before == after);
    fs::remove_all(cache);
}
