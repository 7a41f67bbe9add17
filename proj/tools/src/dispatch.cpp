/**
 * @file dispatch.cpp
 * @brief Command-line parsing and the subcommand implementations.
 */

#include "qpl/cli/dispatch.hpp"

#include "qpl/cli/quadruple_io.hpp"
#include "qpl/cli/worker_pool.hpp"
#include "qpl/constants/euler_products.hpp"
#include "qpl/constants/identities.hpp"
#include "qpl/constants/s5_classes.hpp"
#include "qpl/constants/zeta.hpp"
#include "qpl/cusp/atlas.hpp"
#include "qpl/cusp/weights.hpp"
#include "qpl/geometry/chart.hpp"
#include "qpl/geometry/region.hpp"
#include "qpl/geometry/sampling.hpp"
#include "qpl/local/fetch.hpp"
#include "qpl/local/local_fields.hpp"
#include "qpl/local/masses.hpp"
#include "qpl/pencil/pencil.hpp"
#include "qpl/util/errors.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>

#ifndef QPL_VERSION
#define QPL_VERSION "0.0.0"
#endif
#ifndef QPL_DATA_DIR
#define QPL_DATA_DIR "data"
#endif

namespace qpl::cli {

const char* version() { return QPL_VERSION; }

namespace {

const std::vector<std::string>& top_level_commands() {
    static const std::vector<std::string> names{"table1",     "weights",  "haar",     "classify",
                                                "beta",       "constants", "identities", "wp-bound",
                                                "jacobian",   "davenport", "sample"};
    return names;
}

/// Global options that consume the following token.
bool takes_value(const std::string& flag) {
    static const std::set<std::string> flags{"--config", "--seed", "--jobs", "--format", "--precision", "--p-max"};
    return flags.contains(flag);
}

/// The first positional token must name a subcommand.
void reject_unknown_command(const std::vector<std::string>& argv) {
    for (std::size_t k = 0; k < argv.size(); ++k) {
        const std::string& tok = argv[k];
        if (tok.rfind("-", 0) == 0) {
            if (tok.find('=') == std::string::npos && takes_value(tok)) ++k;
            continue;
        }
        const auto& names = top_level_commands();
        if (std::find(names.begin(), names.end(), tok) == names.end()) throw UnknownCommand("unknown command '" + tok + "'");
        return;
    }
}

Config default_config() {
    Config c;
    c.fixtures_dir = QPL_DATA_DIR;
    c.cache_dir = std::filesystem::temp_directory_path() / "qpl-cache";
    return c;
}

/// SplitMix64 finaliser: independent per-task seeds from (seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Record weight_json(const WeightMonomial& w) {
    Record r;
    r["monomial"] = w.to_string();
    r["exponents"] = w.exponents();
    return r;
}

// ---------------------------------------------------------------- table1

void run_table1_generate(const ParsedCommand&, RunReport& rep, Digest&) {
    const Atlas atlas = generate_atlas();
    for (const auto& node : atlas.nodes) {
        Record v;
        v["T0"] = node.t0.to_string();
        v["T1"] = node.t1.to_string();
        v["pi"] = multiset_to_string(node.pi);
        v["bound"] = std::to_string(node.bound_numerator) + "/40";
        v["depth"] = node.depth;
        v["parent"] = node.parent >= 0 ? atlas.nodes[static_cast<std::size_t>(node.parent)].label : std::string{};
        rep.add_value(node.label, std::move(v), "generated");
    }
    rep.add_value("case_count", atlas.nodes.size(), "generated");
}

void run_table1_verify(const ParsedCommand& cmd, RunReport& rep, Digest& digest) {
    const auto path = cmd.args.table.value_or(cmd.config.fixtures_dir / "table1.txt");
    digest.field(read_text_file(path));
    const auto table = load_table1(path);
    const Atlas atlas = generate_atlas();
    const Table1Report report = verify_against_table(atlas, table);
    const std::string prov = "table:" + path.filename().string();
    for (const auto& row : report.rows) {
        auto& r = rep.add_check(row.label, row.ok(), prov);
        r["line"] = row.line;
        r["t0_found"] = row.t0_found;
        r["t1_match"] = row.t1_match;
        r["bound_match"] = row.bound_match;
        r["pi_negative"] = row.pi_negative;
        r["auto_pi_no_larger"] = row.auto_pi_no_larger;
    }
    for (const auto& t0 : report.missing_from_table) rep.add_check("missing:{" + t0 + "}", false, "generated");
    auto& count = rep.add_check("row_count", table.size() == atlas.nodes.size(), prov);
    count["table_rows"] = table.size();
    count["generated"] = atlas.nodes.size();
    rep.add_value("matches", report.matches, prov);
    rep.add_value("mismatches", report.mismatches, prov);
}

// ---------------------------------------------------------------- weights

void run_weights(const ParsedCommand& cmd, RunReport& rep, Digest&) {
    if (cmd.args.coord) {
        const auto id = CoordId::parse(*cmd.args.coord);
        if (!id) throw UsageError("unknown coordinate '" + *cmd.args.coord + "'");
        rep.add_value(*cmd.args.coord, weight_json(coordinate_weight(*id)), "derived:torus characters");
        return;
    }
    WeightMonomial sum;
    for (int k = 0; k < CoordId::kCount; ++k) {
        const CoordId id = CoordId::from_index(k);
        const auto w = coordinate_weight(id);
        sum += w;
        rep.add_value(id.name(), weight_json(w), "derived:torus characters");
    }
    std::array<int, WeightMonomial::kSize> expected{};
    expected[0] = CoordId::kCount;
    auto& r = rep.add_check("weight_sum", sum == WeightMonomial(expected), "derived:torus characters");
    r["value"] = sum.exponents();
}

void run_haar(const ParsedCommand&, RunReport& rep, Digest&) {
    rep.add_value("haar_exponents", haar_exponents(), "derived:root characters");
}

// ---------------------------------------------------------------- classify

Record classification_json(const Classification& c) {
    Record v;
    v["status"] = to_string(c.status);
    v["i"] = c.i;
    v["reducible"] = c.reducible;
    v["s5"] = to_string(c.s5);
    v["char_poly"] = c.char_poly.to_string();
    v["disc_sign"] = c.disc_sign;
    v["factor_degrees"] = c.factor_degrees;
    return v;
}

ClassifyOptions classify_options(const Config& c) {
    return {.retry_cap = c.retry_cap, .prime_budget = c.prime_budget, .certify_s5 = true};
}

void run_classify(const ParsedCommand& cmd, RunReport& rep, Digest& digest) {
    if (!cmd.args.input) throw UsageError("classify requires --in <file>");
    const std::string text = read_text_file(*cmd.args.input);
    digest.field(text);
    const auto records = parse_quadruple_text(text);
    const auto opts = classify_options(cmd.config);
    const WorkerPool pool(cmd.config.jobs);
    const auto results = pool.map(records.size(), [&](std::size_t k) {
        return classify(records[k].q, derive_seed(cmd.config.seed, k), opts);
    });
    const std::string prov = "input:" + cmd.args.input->filename().string();
    for (std::size_t k = 0; k < records.size(); ++k) {
        auto& r = rep.add_value("line:" + std::to_string(records[k].line), classification_json(results[k]), prov);
        r["seed"] = derive_seed(cmd.config.seed, k);
    }
}

// ---------------------------------------------------------------- beta

/// Local-field table for p: explicit file, bundled fixture, tame
/// classification (p > 5), or a download when the network is enabled.
std::pair<LocalFieldTable, std::string> table_for_prime(const ParsedCommand& cmd, long p, Digest& digest) {
    if (cmd.args.table) {
        digest.field(read_text_file(*cmd.args.table));
        return {load_local_fields(*cmd.args.table), "table:" + cmd.args.table->filename().string()};
    }
    const auto fixture = fixture_path(cmd.config.fixtures_dir, p);
    if (std::filesystem::exists(fixture)) {
        digest.field(read_text_file(fixture));
        return {load_local_fields(fixture), "fixture:" + fixture.filename().string()};
    }
    if (p > 5) return {tame_local_fields(p), "tame enumeration"};
    const FetchOptions fo{.network_enabled = cmd.config.network_enabled,
                          .endpoint = cmd.config.endpoint,
                          .cache_dir = cmd.config.cache_dir};
    const auto fetched = fetch_local_fields(fo, p, 5);
    digest.field(read_text_file(fetched));
    return {load_local_fields(fetched), "fetched:" + fetched.filename().string()};
}

void add_mass_report(RunReport& rep, const std::string& name, const MassReport& m, const std::string& prov) {
    for (const auto& t : m.terms) {
        Record v;
        v["aut"] = t.aut.get_str();
        v["disc_exponent"] = t.disc_exponent;
        v["mass"] = rat_str(t.mass);
        rep.add_value(name + ":" + t.algebra, std::move(v), prov);
    }
    auto& r = rep.add_check(name, m.match, prov);
    r["value"] = rat_str(m.total);
    r["closed_form"] = rat_str(m.closed_form);
    r["terms"] = m.terms.size();
}

void run_beta(const ParsedCommand& cmd, RunReport& rep, Digest& digest) {
    if (cmd.args.infinity == cmd.args.p.has_value()) throw UsageError("beta requires exactly one of --p <prime> or --infinity");
    if (cmd.args.infinity) {
        add_mass_report(rep, "beta_infinity", beta_infinity(), "real etale algebras");
        return;
    }
    const long p = *cmd.args.p;
    if (p < 2 || !is_probable_prime(Int(p))) throw UsageError("--p must be a prime");
    const auto [table, prov] = table_for_prime(cmd, p, digest);
    add_mass_report(rep, "beta_" + std::to_string(p), beta_p(p, table), prov);
}

// ---------------------------------------------------------------- constants

Record constant_json(const ConstantReport& c) {
    Record v;
    v["decimal"] = c.decimal(25);
    v["error_bound"] = c.value.error_bound();
    return v;
}

void run_constants(const ParsedCommand& cmd, RunReport& rep, Digest&) {
    const int bits = cmd.config.precision;
    const double target = std::ldexp(1.0, -bits);
    for (int k = 2; k <= 5; ++k) {
        const auto z = zeta(k, bits);
        auto& r = rep.add_check("zeta(" + std::to_string(k) + ")", z.value.error_bound() <= target, "Euler-Maclaurin");
        r["value"] = constant_json(z);
    }
    for (int i = 0; i <= 2; ++i) {
        const auto c = theorem6_constant(i, bits);
        auto& r = rep.add_check("density_constant_i" + std::to_string(i), c.value.error_bound() < 1e-12, "zeta products");
        r["value"] = constant_json(c);
        r["n_i"] = real_algebra_aut_order(i);
        r["denominator"] = 2 * real_algebra_aut_order(i);
    }
    const auto direct = c5_constant(bits, cmd.config.p_max);
    const auto routes = c5_two_route(bits, cmd.config.p_max);
    const std::string prov = "Euler product, p_max=" + std::to_string(cmd.config.p_max);
    auto& d = rep.add_value("c5_direct", constant_json(direct.report), prov);
    d["tail_relative"] = direct.tail_relative.get_d();
    d["primes"] = direct.primes;
    rep.add_value("c5_route_a", constant_json(routes.route_a), prov);
    rep.add_value("c5_route_b", constant_json(routes.route_b), prov);
    auto& agree = rep.add_check("c5_two_route_consistency", routes.consistent_within(Rat(1, 100000000)), prov);
    agree["difference"] = routes.difference.get_d();
    agree["tolerance"] = 1e-8;
    auto& nested = rep.add_check("c5_direct_contains_route_a",
                                 direct.report.value.lower() <= routes.route_a.value.upper() &&
                                     routes.route_a.value.lower() <= direct.report.value.upper(),
                                 prov);
    nested["direct_error"] = direct.report.value.error_bound();
}

// ---------------------------------------------------------------- identities

void run_identities(const ParsedCommand&, RunReport& rep, Digest&) {
    for (const auto& id : euler_factor_identities()) {
        auto& r = rep.add_check(id.name, id.verdict, "exact Laurent polynomials");
        r["statement"] = id.statement;
        r["left"] = id.left.to_string();
        r["right"] = id.right.to_string();
    }
    const Rat two(2);
    const Rat g2 = group_order_formula().eval(two);
    auto& go = rep.add_check("group_order_p2", g2 == Rat(Int("201587097600")) &&
                                                   g2 == (gl_order(4) * sl_order(5)).eval(two),
                             "spot value");
    go["value"] = rat_str(g2);
    const Rat rp = ramified_proportion(2);
    auto& ram = rep.add_check("ramified_proportion_p2", rp == Rat(21, 37) && rp == ramified_proportion_closed_form(2),
                              "spot value");
    ram["value"] = rat_str(rp);
    auto& um = rep.add_check("unramified_mass", unramified_mass() == 1, "S5 class equation");
    um["value"] = rat_str(unramified_mass());

    long total = 0;
    for (const auto& cls : s5_class_data()) {
        auto& r = rep.add_check("S5:" + cls.cycle_notation(), cls.size * cls.centralizer_order == 120, "permutation enumeration");
        r["cycle_type"] = cls.cycle_type;
        r["splitting_type"] = cls.splitting_type();
        r["size"] = cls.size;
        r["centralizer_order"] = cls.centralizer_order;
        total += cls.size;
    }
    auto& sum = rep.add_check("S5:class_sizes_sum", total == 120, "permutation enumeration");
    sum["value"] = total;
}

// ---------------------------------------------------------------- wp-bound

Record wp_json(const WpBound& w) {
    Record v;
    v["crossover"] = w.crossover;
    v["head"] = rat_str(w.head);
    v["tail"] = rat_str(w.tail);
    v["series"] = rat_str(w.series);
    v["scaled"] = rat_str(w.scaled);
    v["bound"] = w.bound.decimal(20);
    return v;
}

void run_wp_bound(const ParsedCommand& cmd, RunReport& rep, Digest&) {
    std::vector<long> primes{2, 3, 5, 7, 11, 13, 17};
    if (cmd.args.p) {
        if (*cmd.args.p < 2 || !is_probable_prime(Int(*cmd.args.p))) throw UsageError("--p must be a prime");
        primes = {*cmd.args.p};
    }
    const WorkerPool pool(cmd.config.jobs);
    const int bits = cmd.config.precision;
    const auto bounds = pool.map(primes.size(), [&](std::size_t k) { return wp_series_bound(primes[k], bits); });
    bool monotone = true;
    for (std::size_t k = 0; k < bounds.size(); ++k) {
        rep.add_value("p=" + std::to_string(primes[k]), wp_json(bounds[k]), "exact series");
        if (k > 0 && bounds[k].scaled > bounds[k - 1].scaled) monotone = false;
    }
    if (bounds.size() > 1) {
        auto& r = rep.add_check("scaled_monotone_nonincreasing", monotone, "exact series");
        r["primes"] = primes;
    }
}

// ---------------------------------------------------------------- jacobian

void run_jacobian(const ParsedCommand& cmd, RunReport& rep, Digest& digest) {
    Quadruple y;
    std::string prov;
    if (cmd.args.input) {
        const std::string text = read_text_file(*cmd.args.input);
        digest.field(text);
        const auto records = parse_quadruple_text(text);
        if (records.empty()) throw UsageError("jacobian: input file has no quadruple");
        y = records.front().q;
        prov = "input:" + cmd.args.input->filename().string();
    } else {
        std::mt19937_64 rng(cmd.config.seed);
        y = random_quadruple(rng, cmd.args.radius);
        prov = "random base point";
    }
    if (cmd.args.samples < 2) throw UsageError("--samples must be at least 2");
    const auto rep_c = jacobian_constancy_check(to_real(y), cmd.args.samples, cmd.config.seed);
    for (std::size_t k = 0; k < rep_c.values.size(); ++k) rep.add_value("phi[" + std::to_string(k) + "]", rep_c.values[k], prov);
    auto& spread = rep.add_check("relative_spread", rep_c.relative_spread < 1e-5, prov);
    spread["value"] = rep_c.relative_spread;
    spread["tolerance"] = 1e-5;
    auto& lam = rep.add_check("lambda_invariance", rep_c.lambda_gap < 1e-10, prov);
    lam["value"] = rep_c.lambda_gap;
    lam["tolerance"] = 1e-10;
    rep.add_value("homogeneity_gap", rep_c.homogeneity_gap, prov);
    rep.add_value("max_richardson_gap", rep_c.max_richardson_gap, prov);
    rep.add_value("mean", rep_c.mean, prov);
}

// ---------------------------------------------------------------- davenport

constexpr double kDavenportC = 32.0;

Record lattice_json(const LatticeCountReport& r) {
    Record v;
    v["count"] = r.count.get_str();
    v["volume"] = r.volume;
    v["volume_error"] = r.volume_error;
    v["max_projection"] = r.max_projection;
    v["projection_subset"] = r.projection_subset;
    v["discrepancy"] = r.discrepancy;
    v["ratio"] = r.ratio;
    return v;
}

void run_davenport(const ParsedCommand& cmd, RunReport& rep, Digest& digest) {
    const DavenportOptions opts{.qmc_points = static_cast<std::size_t>(cmd.args.qmc_points), .replicates = 16,
                                .seed = cmd.config.seed};
    if (cmd.args.region) {
        const std::string text = read_text_file(*cmd.args.region);
        digest.field(text);
        const Region region = parse_region(text);
        const auto r = davenport_count(region, opts);
        const std::string prov = "region:" + cmd.args.region->filename().string();
        auto& rec = rep.add_check("davenport_bound", r.ratio <= kDavenportC, prov);
        rec["value"] = lattice_json(r);
        rec["C"] = kDavenportC;
    }
    if (cmd.args.batch > 0) {
        const auto batch = davenport_random_batch(cmd.args.batch, cmd.config.seed, 1e6, opts);
        for (std::size_t k = 0; k < batch.trials.size(); ++k) {
            auto& rec = rep.add_value("trial[" + std::to_string(k) + "]", lattice_json(batch.trials[k].report), "random batch");
            rec["dimension"] = batch.trials[k].region.dimension;
            rec["shear_magnitude"] = batch.trials[k].shear_magnitude;
        }
        auto& rec = rep.add_check("batch_constant", batch.max_ratio <= kDavenportC, "random batch");
        rec["value"] = batch.max_ratio;
        rec["C"] = kDavenportC;
        rec["max_volume_error"] = batch.max_volume_error;
    }
    if (!cmd.args.region && cmd.args.batch <= 0) throw UsageError("davenport requires --region <file> or --batch <n>");
}

// ---------------------------------------------------------------- sample

void run_sample(const ParsedCommand& cmd, RunReport& rep, Digest&) {
    if (cmd.args.radius <= 0 || cmd.args.count <= 0) throw UsageError("--radius and --count must be positive");
    SampleOptions opts;
    opts.jobs = cmd.config.jobs;
    opts.classify = classify_options(cmd.config);
    const auto stats = sample_box(cmd.args.radius, cmd.args.count, cmd.config.seed, opts);
    const std::string prov = "box radius " + std::to_string(cmd.args.radius);
    for (const auto& [key, n] : stats.histogram) rep.add_value(key.to_string(), n, prov);
    auto& r = rep.add_check("invariance_spot_checks", stats.invariance_ok(), prov);
    r["spot_checks"] = stats.spot_checks;
    r["passed"] = stats.spot_checks_passed;
}

using Handler = void (*)(const ParsedCommand&, RunReport&, Digest&);

Handler handler_for(const std::string& command) {
    static const std::map<std::string, Handler> table{
        {"table1 generate", run_table1_generate}, {"table1 verify", run_table1_verify},
        {"weights", run_weights},                 {"haar", run_haar},
        {"classify", run_classify},               {"beta", run_beta},
        {"constants", run_constants},             {"identities", run_identities},
        {"wp-bound", run_wp_bound},               {"jacobian", run_jacobian},
        {"davenport", run_davenport},             {"sample", run_sample},
    };
    const auto it = table.find(command);
    if (it == table.end()) throw UnknownCommand("unknown command '" + command + "'");
    return it->second;
}

/// Everything that can influence the records, excluding --jobs and --format.
void digest_invocation(const ParsedCommand& cmd, Digest& d) {
    const auto& c = cmd.config;
    d.field(cmd.command);
    d.field(std::to_string(c.seed)).field(std::to_string(c.precision)).field(std::to_string(c.p_max));
    d.field(std::to_string(c.retry_cap)).field(std::to_string(c.prime_budget));
    d.field(c.network_enabled ? "net" : "offline");
    const auto& a = cmd.args;
    d.field(a.coord.value_or("")).field(a.p ? std::to_string(*a.p) : "").field(a.infinity ? "inf" : "");
    d.field(std::to_string(a.samples)).field(std::to_string(a.radius)).field(std::to_string(a.count));
    d.field(std::to_string(a.batch)).field(std::to_string(a.qmc_points));
}

}  // namespace

bool is_randomized(const std::string& command) {
    return command == "classify" || command == "jacobian" || command == "davenport" || command == "sample";
}

ParsedCommand parse_command_line(const std::vector<std::string>& argv, const std::map<std::string, std::string>& env) {
    reject_unknown_command(argv);

    CLI::App app{"Quintic-field counting toolkit", "qpl"};
    app.set_version_flag("--version", std::string("qpl ") + version());
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::map<std::string, std::string> flags;
    std::string seed, jobs, format, precision, p_max;
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--seed", seed, "base seed for randomized steps");
    app.add_option("--jobs", jobs, "worker threads");
    app.add_option("--format", format, "output format: jsonl, csv or text");
    app.add_option("--precision", precision, "working precision in bits");
    app.add_option("--p-max", p_max, "Euler-product truncation point");

    ParsedCommand cmd;
    auto& a = cmd.args;
    std::string table, input, region, coord;
    long p = 0;

    auto* table1 = app.add_subcommand("table1", "regenerate or verify the cusp case table");
    table1->require_subcommand(1);
    table1->fallthrough();
    auto* gen = table1->add_subcommand("generate", "emit every case of the atlas");
    auto* ver = table1->add_subcommand("verify", "compare the atlas with a transcription");
    gen->fallthrough();
    ver->fallthrough();
    ver->add_option("--table", table, "transcription file");

    auto* weights = app.add_subcommand("weights", "weight monomials of coordinates");
    weights->add_option("--coord", coord, "coordinate, e.g. a12 (all 40 if omitted)");
    app.add_subcommand("haar", "Haar-measure exponent vector");
    auto* cls = app.add_subcommand("classify", "classify quadruples from a file");
    cls->add_option("--in", input, "quadruple file")->required();
    auto* beta = app.add_subcommand("beta", "local mass β_p or β_∞");
    beta->add_option("--p", p, "prime");
    beta->add_option("--table", table, "local-field table file");
    beta->add_flag("--infinity", a.infinity, "archimedean mass");
    app.add_subcommand("constants", "ζ values, density constants and c5");
    app.add_subcommand("identities", "exact local-density identities and S5 data");
    auto* wp = app.add_subcommand("wp-bound", "series bound for non-maximal elements");
    wp->add_option("--p", p, "prime (default: 2..17)");
    auto* jac = app.add_subcommand("jacobian", "Jacobian constancy check");
    jac->add_option("--samples", a.samples, "chart points");
    jac->add_option("--in", input, "base point file (first quadruple)");
    jac->add_option("--radius", a.radius, "radius of the random base point");
    auto* dav = app.add_subcommand("davenport", "lattice counts against volumes");
    dav->add_option("--region", region, "region file");
    dav->add_option("--batch", a.batch, "random sheared-ellipsoid trials");
    dav->add_option("--points", a.qmc_points, "QMC points per volume estimate");
    auto* smp = app.add_subcommand("sample", "classify random quadruples from a box");
    smp->add_option("--radius", a.radius, "coordinate radius");
    smp->add_option("--count", a.count, "number of samples");
    for (auto* sub : {weights, cls, beta, wp, jac, dav, smp}) sub->fallthrough();
    for (const char* name : {"haar", "constants", "identities"}) app.get_subcommand(name)->fallthrough();

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success&) {
        throw;
    } catch (const CLI::Error& e) {
        throw UsageError(e.what());
    }

    if (gen->parsed()) cmd.command = "table1 generate";
    else if (ver->parsed()) cmd.command = "table1 verify";
    else cmd.command = app.get_subcommands().front()->get_name();

    if (!table.empty()) a.table = table;
    if (!input.empty()) a.input = input;
    if (!region.empty()) a.region = region;
    if (!coord.empty()) a.coord = coord;
    if (beta->count("--p") || wp->count("--p")) a.p = p;

    // Layers: defaults < config file < flags < environment.
    cmd.config = default_config();
    if (!config_path.empty()) apply_config_file(cmd.config, config_path);
    if (app.count("--seed")) apply_setting(cmd.config, "seed", seed);
    if (app.count("--jobs")) apply_setting(cmd.config, "jobs", jobs);
    if (app.count("--format")) apply_setting(cmd.config, "format", format);
    if (app.count("--precision")) apply_setting(cmd.config, "precision", precision);
    if (app.count("--p-max")) apply_setting(cmd.config, "p_max", p_max);
    apply_environment(cmd.config, env);
    cmd.config.validate();
    cmd.seed_on_command_line = app.count("--seed") > 0;

    const auto ci = env.find("QPL_CI");
    if (ci != env.end() && ci->second == "1" && is_randomized(cmd.command) && !cmd.seed_on_command_line)
        throw UsageError("'" + cmd.command + "' is randomized: --seed is required when QPL_CI=1");
    return cmd;
}

RunReport dispatch(const ParsedCommand& cmd) {
    RunReport rep;
    rep.command = cmd.command;
    Digest digest;
    digest_invocation(cmd, digest);
    const Handler handler = handler_for(cmd.command);
    try {
        handler(cmd, rep, digest);
    } catch (const ParseError&) {
        throw;
    } catch (const UsageError&) {
        throw;
    } catch (const UnknownCommand&) {
        throw;
    } catch (const Error& e) {
        auto& r = rep.add_check("error", false, "exception");
        r["message"] = e.what();
    }
    rep.inputs_digest = digest.hex();
    return rep;
}

int run(const std::vector<std::string>& argv, const std::map<std::string, std::string>& env, std::ostream& out,
        std::ostream& err) {
    try {
        const ParsedCommand cmd = parse_command_line(argv, env);
        const RunReport rep = dispatch(cmd);
        write_report(rep, cmd.config.format, out);
        return rep.exit_code();
    } catch (const CLI::CallForVersion&) {
        out << "qpl " << version() << '\n';
        return kExitPass;
    } catch (const CLI::CallForHelp&) {
        out << "usage: qpl [--config F] [--seed S] [--jobs J] [--format jsonl|csv|text] <command> [options]\n"
               "commands: table1 generate|verify, weights, haar, classify, beta, constants, identities,\n"
               "          wp-bound, jacobian, davenport, sample\n";
        return kExitPass;
    } catch (const UnknownCommand& e) {
        err << "qpl: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "qpl: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "qpl: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "qpl: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

}  // namespace qpl::cli
