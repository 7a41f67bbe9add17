/**
 * @file test_cli.cpp
 * @brief Configuration layering, quadruple files, the worker pool, report
 *        emission and the exit-code contract of the command-line front end.
 */

#include "doctest.h"

#include "qpl/cli/config.hpp"
#include "qpl/cli/dispatch.hpp"
#include "qpl/cli/quadruple_io.hpp"
#include "qpl/cli/report.hpp"
#include "qpl/cli/worker_pool.hpp"
#include "qpl/util/errors.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace qpl;
using namespace qpl::cli;

namespace {

const std::filesystem::path kData = QPL_DATA_DIR;

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args, const std::map<std::string, std::string>& env = {}) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = run(args, env, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<nlohmann::json> parse_jsonl(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(nlohmann::json::parse(line));
    return out;
}

std::filesystem::path temp_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("qpl-cli-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("config: file < flags < environment") {
    const auto dir = temp_dir("config");
    write_file(dir / "run.conf", "# comment line\nseed = 11\nprecision = 80   # trailing comment\np_max = 500\njobs = 2\n");
    const std::string conf = (dir / "run.conf").string();

    auto cmd = parse_command_line({"--config", conf, "identities"}, {});
    CHECK(cmd.config.seed == 11);
    CHECK(cmd.config.precision == 80);
    CHECK(cmd.config.p_max == 500);
    CHECK_FALSE(cmd.config.network_enabled);

    cmd = parse_command_line({"--config", conf, "--seed", "12", "--precision", "90", "identities"}, {});
    CHECK(cmd.config.seed == 12);
    CHECK(cmd.config.precision == 90);

    cmd = parse_command_line({"--config", conf, "--seed", "12", "identities"}, {{"QPL_SEED", "13"}, {"QPL_FORMAT", "csv"}});
    CHECK(cmd.config.seed == 13);
    CHECK(cmd.config.format == OutputFormat::Csv);
    CHECK(cmd.config.jobs == 2);

    // Global flags may also follow the subcommand.
    cmd = parse_command_line({"identities", "--seed", "5"}, {});
    CHECK(cmd.config.seed == 5);
    CHECK(cmd.seed_on_command_line);
}

TEST_CASE("config: malformed files and invalid values") {
    Config c;
    try {
        apply_config_text(c, "seed = 1\n\nno equals sign here\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(apply_config_text(c, "colour = blue\n"), ParseError);
    CHECK_THROWS_AS(apply_config_text(c, "jobs = many\n"), ParseError);
    CHECK_THROWS_AS(apply_setting(c, "network_enabled", "perhaps"), UsageError);

    c = Config{};
    c.precision = 0;
    CHECK_THROWS_AS(c.validate(), UsageError);
    c = Config{};
    c.jobs = -1;
    CHECK_THROWS_AS(c.validate(), UsageError);
    CHECK_NOTHROW(Config{}.validate());

    CHECK(run_cli({"--jobs", "0", "identities"}).code == kExitUsage);
    CHECK(run_cli({"identities"}, {{"QPL_PRECISION", "-3"}}).code == kExitUsage);
}

TEST_CASE("config: randomized commands need --seed in CI mode") {
    const std::map<std::string, std::string> ci{{"QPL_CI", "1"}};
    CHECK(is_randomized("sample"));
    CHECK(is_randomized("jacobian"));
    CHECK_FALSE(is_randomized("identities"));
    CHECK_THROWS_AS(parse_command_line({"jacobian", "--samples", "3"}, ci), UsageError);
    // A seed from the environment does not count as explicit.
    auto env = ci;
    env["QPL_SEED"] = "4";
    CHECK_THROWS_AS(parse_command_line({"sample", "--count", "2"}, env), UsageError);
    CHECK_NOTHROW(parse_command_line({"sample", "--count", "2", "--seed", "4"}, ci));
    CHECK_NOTHROW(parse_command_line({"identities"}, ci));
    CHECK(run_cli({"jacobian"}, ci).code == kExitUsage);
}

TEST_CASE("quadruple files: parsing, errors and round trip") {
    std::string zero_line;
    for (int k = 0; k < 40; ++k) zero_line += "0 ";
    auto recs = parse_quadruple_text("# header\n\n" + zero_line + "  # trailing\n");
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].line == 3);
    CHECK(recs[0].q.is_zero());

    std::string short_line;
    for (int k = 0; k < 39; ++k) short_line += "1 ";
    try {
        parse_quadruple_text(zero_line + "\n" + short_line + "\n");
        FAIL("expected CountMismatch");
    } catch (const CountMismatch& e) {
        CHECK(e.line() == 2);
        CHECK(e.found() == 39);
    }
    try {
        parse_quadruple_text("1 2 x3\n");
        FAIL("expected ParseError");
    } catch (const CountMismatch&) {
        FAIL("wrong error type");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }

    std::mt19937_64 rng(99);
    std::vector<Quadruple> qs;
    for (int k = 0; k < 20; ++k) qs.push_back(random_quadruple(rng, 1000000));
    const auto back = parse_quadruple_text(format_quadruples(qs));
    REQUIRE(back.size() == qs.size());
    for (std::size_t k = 0; k < qs.size(); ++k) CHECK(back[k].q == qs[k]);

    // Skew-symmetry is constructed: entry (j, i) is the negative of (i, j).
    CHECK(qs[0].entry(0, 1, 0) == -qs[0].entry(0, 0, 1));
}

TEST_CASE("worker pool: index order and deterministic failures") {
    for (int jobs : {1, 2, 4, 7}) {
        const WorkerPool pool(jobs);
        const auto squares = pool.map(100, [](std::size_t k) { return k * k; });
        REQUIRE(squares.size() == 100);
        for (std::size_t k = 0; k < 100; ++k) CHECK(squares[k] == k * k);
        try {
            pool.map(50, [](std::size_t k) -> int {
                if (k % 10 == 3) throw std::runtime_error("task " + std::to_string(k));
                return 0;
            });
            FAIL("expected an exception");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()) == "task 3");
        }
    }
    CHECK(WorkerPool(3).map(0, [](std::size_t) { return 1; }).empty());
}

TEST_CASE("report: digest, verdict bookkeeping and formats") {
    Digest a;
    Digest b;
    a.field("ab").field("c");
    b.field("a").field("bc");
    CHECK(a.hex() != b.hex());
    CHECK(Digest().update("").hex() == "cbf29ce484222325");
    CHECK(Digest().update("a").hex() == "af63dc4c8601ec8c");  // FNV-1a reference value

    RunReport rep;
    rep.command = "demo";
    rep.add_value("x", 3, "test");
    CHECK(rep.exit_code() == kExitPass);
    rep.add_check("y", false, "test");
    CHECK(rep.exit_code() == kExitCheckFailed);
    CHECK(rep.summary()["failures"] == 1);

    std::ostringstream csv;
    write_report(rep, OutputFormat::Csv, csv);
    std::istringstream lines(csv.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header.rfind("command,name,value,provenance,verdict", 0) == 0);

    std::ostringstream jsonl;
    write_report(rep, OutputFormat::Jsonl, jsonl);
    for (const auto& rec : parse_jsonl(jsonl.str())) {
        CHECK(rec.contains("command"));
        CHECK(rec.contains("name"));
        CHECK((rec.contains("verdict") || rec.contains("value")));
        CHECK(rec.contains("provenance"));
    }
}

TEST_CASE("cli: version, unknown commands and usage errors") {
    auto r = run_cli({"--version"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.rfind("qpl ", 0) == 0);
    CHECK(run_cli({"frobnicate"}).code == kExitUsage);
    CHECK(run_cli({"--seed", "3", "frobnicate"}).code == kExitUsage);
    CHECK(run_cli({}).code == kExitUsage);
    CHECK(run_cli({"classify"}).code == kExitUsage);
    CHECK(run_cli({"weights", "--coord", "z99"}).code == kExitUsage);
    CHECK(run_cli({"beta"}).code == kExitUsage);
    CHECK(run_cli({"beta", "--p", "4"}).code == kExitUsage);
    CHECK(run_cli({"--format", "xml", "haar"}).code == kExitUsage);
}

TEST_CASE("cli: identities passes and every record is schema-stable") {
    const auto r = run_cli({"identities"});
    CHECK(r.code == kExitPass);
    const auto recs = parse_jsonl(r.out);
    REQUIRE(recs.size() > 10);
    for (const auto& rec : recs) {
        CHECK(rec["command"] == "identities");
        CHECK(rec.contains("provenance"));
        if (rec.contains("verdict")) CHECK(rec["verdict"] == true);
    }
    CHECK(recs.back()["name"] == "summary");
}

TEST_CASE("cli: table1 verify detects a single perturbed row") {
    const auto good = run_cli({"table1", "verify"});
    CHECK(good.code == kExitPass);

    // Change the bound column of row "2b" from 38 to 37.
    std::ifstream in(kData / "table1.txt");
    std::ostringstream perturbed;
    int changed = 0;
    for (std::string line; std::getline(in, line);) {
        if (line.rfind("2b |", 0) == 0) {
            const auto pos = line.find("| 38 |");
            REQUIRE(pos != std::string::npos);
            line.replace(pos, 6, "| 37 |");
            ++changed;
        }
        perturbed << line << '\n';
    }
    REQUIRE(changed == 1);
    const auto dir = temp_dir("table1");
    write_file(dir / "table1.txt", perturbed.str());

    const auto bad = run_cli({"table1", "verify", "--table", (dir / "table1.txt").string()});
    CHECK(bad.code == kExitCheckFailed);
    int failing = 0;
    for (const auto& rec : parse_jsonl(bad.out))
        if (rec.contains("verdict") && rec["verdict"] == false && rec["name"] != "summary") {
            ++failing;
            CHECK(rec["name"] == "2b");
            CHECK(rec["bound_match"] == false);
        }
    CHECK(failing == 1);
}

TEST_CASE("cli: determinism of digests and records") {
    const auto first = run_cli({"wp-bound"});
    const auto second = run_cli({"wp-bound"});
    CHECK(first.code == kExitPass);
    CHECK(first.out == second.out);

    const std::string input = (kData / "quadruples" / "sample.txt").string();
    const auto serial = run_cli({"classify", "--in", input, "--seed", "5", "--jobs", "1"});
    const auto parallel = run_cli({"classify", "--in", input, "--seed", "5", "--jobs", "3"});
    CHECK(serial.code == kExitPass);
    CHECK(serial.out == parallel.out);
    const auto reseeded = run_cli({"classify", "--in", input, "--seed", "6"});
    CHECK(parse_jsonl(reseeded.out).back()["inputs_digest"] != parse_jsonl(serial.out).back()["inputs_digest"]);

    const auto text = run_cli({"--format", "text", "haar"});
    CHECK(text.out.find("haar_exponents") == 0);
}

TEST_CASE("cli: beta sources and offline failure") {
    const auto fixture = parse_jsonl(run_cli({"beta", "--p", "3"}).out);
    CHECK(fixture.back()["verdict"] == true);
    CHECK(fixture[fixture.size() - 2]["provenance"] == "fixture:p3.tbl");

    const auto tame = parse_jsonl(run_cli({"beta", "--p", "19"}).out);
    CHECK(tame.back()["verdict"] == true);
    CHECK(tame[tame.size() - 2]["provenance"] == "tame enumeration");

    CHECK(run_cli({"beta", "--infinity"}).code == kExitPass);

    // No fixture for p = 5 and the network disabled: the run reports a failure.
    const auto empty = temp_dir("nofixtures");
    const auto r = run_cli({"beta", "--p", "5"}, {{"QPL_FIXTURES_DIR", empty.string()}});
    CHECK(r.code == kExitCheckFailed);
    CHECK(r.out.find("NetworkError") != std::string::npos);
}
