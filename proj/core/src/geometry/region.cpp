/**
 * @file region.cpp
 * @brief Semi-algebraic regions, exact lattice enumeration and QMC volumes.
 */

#include "qpl/geometry/region.hpp"

#include "qpl/util/errors.hpp"

#include "json.hpp"

#include <boost/random/sobol.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <unordered_set>
#include <sstream>

namespace qpl {

namespace {

using Interval = std::pair<double, double>;

Interval pad(Interval x) {
    const double m = 1e-12 * std::max(std::abs(x.first), std::abs(x.second)) + 1e-300;
    return {x.first - m, x.second + m};
}

Interval ipow(Interval x, int e) {
    if (e == 0) return {1.0, 1.0};
    const double a = std::pow(x.first, e);
    const double b = std::pow(x.second, e);
    if (e % 2 == 0 && x.first <= 0.0 && x.second >= 0.0) return {0.0, std::max(a, b)};
    return {std::min(a, b), std::max(a, b)};
}

Interval imul(Interval x, Interval y) {
    const double p[4] = {x.first * y.first, x.first * y.second, x.second * y.first, x.second * y.second};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

enum class ShearKind { Identity, Upper, Lower };

ShearKind classify_shear(const std::vector<std::vector<Rat>>& s, int n) {
    if (static_cast<int>(s.size()) != n) throw DimensionMismatch("shear must be n x n");
    bool upper = true;
    bool lower = true;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(s[static_cast<std::size_t>(i)].size()) != n) throw DimensionMismatch("shear must be n x n");
        for (int j = 0; j < n; ++j) {
            const Rat& v = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i == j && v != 1) throw DimensionMismatch("shear must be unipotent");
            if (i < j && v != 0) lower = false;
            if (i > j && v != 0) upper = false;
        }
    }
    if (upper && lower) return ShearKind::Identity;
    if (upper) return ShearKind::Upper;
    if (lower) return ShearKind::Lower;
    throw DimensionMismatch("shear must be upper or lower triangular");
}

/// Inverse of a unipotent triangular matrix by substitution.
std::vector<std::vector<Rat>> unipotent_inverse(const std::vector<std::vector<Rat>>& s) {
    const std::size_t n = s.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    // Solve S X = I column by column; works for either triangular shape by
    // iterating until the fixed point (n passes suffice for nilpotent S - I).
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Rat> x(n);
        x[c] = 1;
        for (std::size_t pass = 0; pass < n; ++pass) {
            std::vector<Rat> next(n);
            for (std::size_t i = 0; i < n; ++i) {
                Rat acc = (i == c) ? Rat(1) : Rat(0);
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i) acc -= s[i][j] * x[j];
                next[i] = acc;
            }
            x = std::move(next);
        }
        for (std::size_t i = 0; i < n; ++i) inv[i][c] = x[i];
    }
    return inv;
}

/// True if some point of the face cell may satisfy every inequality.
bool cell_may_meet(const std::vector<RegionPolynomial>& ineqs, const std::vector<Interval>& cell) {
    for (const auto& p : ineqs)
        if (p.eval_interval(cell).first > 0.0) return false;
    return true;
}

bool face_is_clear(const std::vector<RegionPolynomial>& ineqs, std::vector<Interval> cell, int depth,
                   std::size_t& budget) {
    if (budget == 0) return false;
    --budget;
    if (!cell_may_meet(ineqs, cell)) return true;
    if (depth == 0) return false;
    std::size_t widest = 0;
    double width = -1.0;
    for (std::size_t i = 0; i < cell.size(); ++i) {
        const double w = cell[i].second - cell[i].first;
        if (w > width) {
            width = w;
            widest = i;
        }
    }
    if (width <= 0.0) return false;
    const double mid = 0.5 * (cell[widest].first + cell[widest].second);
    auto left = cell;
    auto right = cell;
    left[widest].second = mid;
    right[widest].first = mid;
    return face_is_clear(ineqs, left, depth - 1, budget) && face_is_clear(ineqs, right, depth - 1, budget);
}

Rat parse_rational(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    if (!j.is_string()) throw SchemaMismatch("expected a rational (integer or string)");
    std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash != std::string::npos) return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s));
    const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    return make_rat(Int(digits), qpl::ipow(Int(10), s.size() - dot - 1));
}

std::string rat_json(const Rat& q) { return q.get_str(); }

std::string subset_name(unsigned mask, int n) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
        if (mask & (1U << i)) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    return s + "}";
}

}  // namespace

void RegionPolynomial::add_term(const Exponent& e, const Rat& c) {
    for (int k : e)
        if (k < 0) throw DimensionMismatch("negative exponent in region polynomial");
    Rat& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
}

int RegionPolynomial::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
}

int RegionPolynomial::max_variable() const {
    int m = -1;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < kMaxRegionDimension; ++i)
            if (e[static_cast<std::size_t>(i)] > 0) m = std::max(m, i);
    return m;
}

Rat RegionPolynomial::eval(const std::vector<Rat>& w) const {
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= w[i];
        acc += term;
    }
    return acc;
}

double RegionPolynomial::eval(const double* w) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term *= std::pow(w[i], e[i]);
        acc += term;
    }
    return acc;
}

Interval RegionPolynomial::eval_interval(const std::vector<Interval>& box) const {
    Interval acc{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
        Interval term{c.get_d(), c.get_d()};
        for (std::size_t i = 0; i < box.size(); ++i)
            if (e[i] > 0) term = imul(term, ipow(box[i], e[i]));
        term = pad(term);
        acc = {acc.first + term.first, acc.second + term.second};
    }
    return pad(acc);
}

std::vector<int> Region::degrees() const {
    std::vector<int> d;
    for (const auto& p : inequalities) d.push_back(p.degree());
    return d;
}

std::vector<std::vector<Rat>> Region::shear_or_identity() const {
    if (!shear.empty()) return shear;
    std::vector<std::vector<Rat>> id(static_cast<std::size_t>(dimension), std::vector<Rat>(static_cast<std::size_t>(dimension)));
    for (int i = 0; i < dimension; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return id;
}

std::vector<Rat> Region::offset_or_zero() const {
    return offset.empty() ? std::vector<Rat>(static_cast<std::size_t>(dimension)) : offset;
}

void Region::validate() const {
    if (dimension < 1 || dimension > kMaxRegionDimension) throw DimensionMismatch("region dimension must be 1..4");
    if (inequalities.empty()) throw Unbounded("region has no inequalities");
    for (const auto& p : inequalities)
        if (p.max_variable() >= dimension) throw DimensionMismatch("inequality uses a variable beyond the dimension");
    (void)classify_shear(shear_or_identity(), dimension);
    if (!offset.empty() && static_cast<int>(offset.size()) != dimension) throw DimensionMismatch("offset size");
    if (static_cast<int>(box.size()) != dimension) throw Unbounded("region needs an enclosing box for every coordinate");
    for (const auto& [lo, hi] : box)
        if (!(lo < hi)) throw Unbounded("empty or inverted enclosing box");

    std::vector<Interval> full;
    for (const auto& [lo, hi] : box) full.emplace_back(lo.get_d(), hi.get_d());
    for (int i = 0; i < dimension; ++i)
        for (int side = 0; side < 2; ++side) {
            auto face = full;
            const double v = side == 0 ? full[static_cast<std::size_t>(i)].first : full[static_cast<std::size_t>(i)].second;
            face[static_cast<std::size_t>(i)] = {v, v};
            std::size_t budget = 200000;
            if (!face_is_clear(inequalities, face, 40, budget))
                throw Unbounded("cannot certify that the region avoids the boundary of its box (coordinate " +
                                std::to_string(i) + ")");
        }
}

bool Region::contains_pre(const std::vector<Rat>& w) const {
    for (const auto& p : inequalities)
        if (p.eval(w) > 0) return false;
    return true;
}

bool Region::contains(const std::vector<Rat>& v) const {
    const auto inv = unipotent_inverse(shear_or_identity());
    const auto off = offset_or_zero();
    std::vector<Rat> w(static_cast<std::size_t>(dimension));
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) w[i] += inv[i][j] * (v[j] - off[j]);
    return contains_pre(w);
}

Region Region::translated(const std::vector<long>& by) const {
    Region r = *this;
    r.offset = offset_or_zero();
    for (std::size_t i = 0; i < r.offset.size(); ++i) r.offset[i] += by.at(i);
    return r;
}

Region box_region(const std::vector<std::pair<Rat, Rat>>& sides) {
    Region r;
    r.dimension = static_cast<int>(sides.size());
    for (int i = 0; i < r.dimension; ++i) {
        const auto& [lo, hi] = sides[static_cast<std::size_t>(i)];
        RegionPolynomial::Exponent e{};
        e[static_cast<std::size_t>(i)] = 1;
        RegionPolynomial lower;  // lo - w_i <= 0
        lower.add_term(e, -1);
        lower.add_term({}, lo);
        RegionPolynomial upper;  // w_i - hi <= 0
        upper.add_term(e, 1);
        upper.add_term({}, -hi);
        r.inequalities.push_back(lower);
        r.inequalities.push_back(upper);
        const Rat margin = (hi - lo) / 64 + Rat(1, 64);
        r.box.emplace_back(lo - margin, hi + margin);
    }
    return r;
}

Region ellipsoid_region(const std::vector<Rat>& center, const std::vector<Rat>& semi_axes) {
    if (center.size() != semi_axes.size()) throw DimensionMismatch("center/semi-axes size mismatch");
    Region r;
    r.dimension = static_cast<int>(center.size());
    RegionPolynomial p;
    p.add_term({}, -1);
    for (std::size_t i = 0; i < center.size(); ++i) {
        const Rat inv_a2 = 1 / (semi_axes[i] * semi_axes[i]);
        RegionPolynomial::Exponent sq{};
        sq[i] = 2;
        RegionPolynomial::Exponent lin{};
        lin[i] = 1;
        p.add_term(sq, inv_a2);
        p.add_term(lin, -2 * center[i] * inv_a2);
        p.add_term({}, center[i] * center[i] * inv_a2);
        const Rat margin = semi_axes[i] / 32;
        r.box.emplace_back(center[i] - semi_axes[i] - margin, center[i] + semi_axes[i] + margin);
    }
    r.inequalities.push_back(p);
    return r;
}

Region parse_region(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(std::min(e.byte, text.size())), '\n'));
        throw ParseError(e.what(), line);
    }
    try {
        Region r;
        r.dimension = j.at("dimension").get<int>();
        if (r.dimension < 1 || r.dimension > kMaxRegionDimension) throw DimensionMismatch("region dimension must be 1..4");
        for (const auto& ineq : j.at("inequalities")) {
            RegionPolynomial p;
            for (const auto& term : ineq) {
                RegionPolynomial::Exponent e{};
                const auto& ex = term.at("exp");
                if (static_cast<int>(ex.size()) != r.dimension) throw SchemaMismatch("exponent length must equal dimension");
                for (std::size_t i = 0; i < ex.size(); ++i) e[i] = ex[i].get<int>();
                p.add_term(e, parse_rational(term.at("coef")));
            }
            r.inequalities.push_back(std::move(p));
        }
        for (const auto& side : j.at("box")) r.box.emplace_back(parse_rational(side.at(0)), parse_rational(side.at(1)));
        if (j.contains("shear"))
            for (const auto& row : j.at("shear")) {
                std::vector<Rat> rr;
                for (const auto& v : row) rr.push_back(parse_rational(v));
                r.shear.push_back(std::move(rr));
            }
        if (j.contains("offset"))
            for (const auto& v : j.at("offset")) r.offset.push_back(parse_rational(v));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaMismatch(std::string("region: ") + e.what());
    }
}

Region load_region(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open region file " + path.string(), 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_region(ss.str());
}

std::string format_region(const Region& r) {
    nlohmann::json j;
    j["dimension"] = r.dimension;
    j["inequalities"] = nlohmann::json::array();
    for (const auto& p : r.inequalities) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : p.terms())
            terms.push_back({{"coef", rat_json(c)},
                             {"exp", std::vector<int>(e.begin(), e.begin() + r.dimension)}});
        j["inequalities"].push_back(terms);
    }
    j["box"] = nlohmann::json::array();
    for (const auto& [lo, hi] : r.box) j["box"].push_back({rat_json(lo), rat_json(hi)});
    if (!r.shear.empty()) {
        j["shear"] = nlohmann::json::array();
        for (const auto& row : r.shear) {
            nlohmann::json jr = nlohmann::json::array();
            for (const auto& v : row) jr.push_back(rat_json(v));
            j["shear"].push_back(jr);
        }
    }
    if (!r.offset.empty()) {
        j["offset"] = nlohmann::json::array();
        for (const auto& v : r.offset) j["offset"].push_back(rat_json(v));
    }
    return j.dump(2);
}

LatticeCountReport davenport_count(const Region& region, const DavenportOptions& opts) {
    region.validate();
    if (opts.replicates < 2 || opts.qmc_points < static_cast<std::size_t>(opts.replicates))
        throw DimensionMismatch("need at least two QMC replicates");
    const int n = region.dimension;
    const auto un = static_cast<std::size_t>(n);
    const auto s = region.shear_or_identity();
    const auto inv = unipotent_inverse(s);
    const auto off = region.offset_or_zero();
    const ShearKind kind = classify_shear(s, n);

    LatticeCountReport rep;

    // Exact enumeration.  With w = S^-1 (v - offset) triangular, w_i depends on
    // v_i and the already fixed coordinates only, so v_i ranges over the
    // integers of [lo_i, hi_i] shifted by a known rational.
    std::vector<std::size_t> order(un);
    for (std::size_t k = 0; k < un; ++k) order[k] = (kind == ShearKind::Lower) ? k : un - 1 - k;
    std::vector<Rat> v(un);
    std::vector<Rat> w(un);
    std::function<void(std::size_t)> descend = [&](std::size_t level) {
        if (level == un) {
            ++rep.nodes_visited;
            if (region.contains_pre(w)) ++rep.count;
            return;
        }
        const std::size_t i = order[level];
        Rat shift = -off[i];
        for (std::size_t j = 0; j < un; ++j)
            if (j != i && inv[i][j] != 0) shift += inv[i][j] * (v[j] - off[j]);
        const Int lo = ceil_rat(region.box[i].first - shift);
        const Int hi = floor_rat(region.box[i].second - shift);
        for (Int k = lo; k <= hi; ++k) {
            v[i] = k;
            w[i] = Rat(k) + shift;
            descend(level + 1);
        }
        v[i] = 0;
    };
    descend(0);

    // Randomly shifted Sobol replicates over the box of R0 (the shear has
    // determinant 1, so volumes are computed before shearing).
    std::vector<double> lo(un);
    std::vector<double> width(un);
    double box_volume = 1.0;
    for (std::size_t i = 0; i < un; ++i) {
        lo[i] = region.box[i].first.get_d();
        width[i] = region.box[i].second.get_d() - lo[i];
        box_volume *= width[i];
    }
    std::vector<std::vector<double>> sdbl(un, std::vector<double>(un));
    std::vector<double> odbl(un);
    for (std::size_t i = 0; i < un; ++i) {
        odbl[i] = off[i].get_d();
        for (std::size_t j = 0; j < un; ++j) sdbl[i][j] = s[i][j].get_d();
    }
    // Floating copies of the inequalities for the sampling loop.
    struct FastTerm {
        double coef;
        RegionPolynomial::Exponent exp;
    };
    std::vector<std::vector<FastTerm>> fast;
    for (const auto& p : region.inequalities) {
        std::vector<FastTerm> terms;
        for (const auto& [e, c] : p.terms()) terms.push_back({c.get_d(), e});
        fast.push_back(std::move(terms));
    }
    auto satisfied = [&](const double* x) {
        for (const auto& terms : fast) {
            double acc = 0.0;
            for (const auto& t : terms) {
                double m = t.coef;
                for (std::size_t i = 0; i < un; ++i)
                    for (int k = 0; k < t.exp[i]; ++k) m *= x[i];
                acc += m;
            }
            if (acc > 0.0) return false;
        }
        return true;
    };
    const std::size_t per_rep = opts.qmc_points / static_cast<std::size_t>(opts.replicates);
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> estimates;
    constexpr std::size_t kProjectionSamples = 1 << 18;
    std::vector<std::vector<double>> inside;  // sheared accepted points (subsample) for projections
    double pt[kMaxRegionDimension];
    for (int r = 0; r < opts.replicates; ++r) {
        std::vector<double> shift(un);
        for (auto& x : shift) x = unit(rng);
        boost::random::sobol qrng(static_cast<std::size_t>(n));
        const double span = static_cast<double>(qrng.max() - qrng.min()) + 1.0;
        std::size_t hits = 0;
        for (std::size_t k = 0; k < per_rep; ++k) {
            for (std::size_t i = 0; i < un; ++i) {
                double u = static_cast<double>(qrng() - qrng.min()) / span + shift[i];
                if (u >= 1.0) u -= 1.0;
                pt[i] = lo[i] + u * width[i];
            }
            if (!satisfied(pt)) continue;
            ++hits;
            if (inside.size() < kProjectionSamples) {
                std::vector<double> vv(un);
                for (std::size_t i = 0; i < un; ++i) {
                    vv[i] = odbl[i];
                    for (std::size_t j = 0; j < un; ++j) vv[i] += sdbl[i][j] * pt[j];
                }
                inside.push_back(std::move(vv));
            }
        }
        estimates.push_back(box_volume * static_cast<double>(hits) / static_cast<double>(per_rep));
    }
    double mean = 0.0;
    for (double e : estimates) mean += e;
    mean /= static_cast<double>(estimates.size());
    double var = 0.0;
    for (double e : estimates) var += (e - mean) * (e - mean);
    var /= static_cast<double>(estimates.size() - 1);
    rep.volume = mean;
    rep.volume_error = 3.0 * std::sqrt(var / static_cast<double>(estimates.size()));

    // Projections to every proper coordinate subspace: occupancy of a grid
    // over the projected bounding box of the accepted sample points.
    rep.max_projection = 1.0;
    rep.projection_subset = "{}";
    if (!inside.empty())
        for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
            std::vector<std::size_t> coords;
            for (std::size_t i = 0; i < un; ++i)
                if (mask & (1U << i)) coords.push_back(i);
            const std::size_t k = coords.size();
            const auto cells = static_cast<std::size_t>(
                std::max(4.0, std::floor(std::pow(static_cast<double>(inside.size()), 1.0 / static_cast<double>(k + 1)))));
            std::vector<double> pmin(k, INFINITY);
            std::vector<double> pmax(k, -INFINITY);
            for (const auto& p : inside)
                for (std::size_t a = 0; a < k; ++a) {
                    pmin[a] = std::min(pmin[a], p[coords[a]]);
                    pmax[a] = std::max(pmax[a], p[coords[a]]);
                }
            double cell_volume = 1.0;
            for (std::size_t a = 0; a < k; ++a) cell_volume *= (pmax[a] - pmin[a]) / static_cast<double>(cells);
            std::unordered_set<std::uint64_t> occupied;
            occupied.reserve(inside.size());
            for (const auto& p : inside) {
                std::uint64_t key = 0;
                for (std::size_t a = 0; a < k; ++a) {
                    const double f = (pmax[a] > pmin[a]) ? (p[coords[a]] - pmin[a]) / (pmax[a] - pmin[a]) : 0.0;
                    key = key * cells + std::min(cells - 1, static_cast<std::size_t>(f * static_cast<double>(cells)));
                }
                occupied.insert(key);
            }
            const double vol = cell_volume * static_cast<double>(occupied.size());
            if (vol > rep.max_projection) {
                rep.max_projection = vol;
                rep.projection_subset = subset_name(mask, n);
            }
        }
    rep.discrepancy = std::abs(rep.count.get_d() - rep.volume);
    rep.ratio = rep.discrepancy / std::max(1.0, rep.max_projection);
    return rep;
}

DavenportBatchReport davenport_random_batch(int trials, std::uint64_t seed, double max_shear,
                                            const DavenportOptions& opts) {
    DavenportBatchReport out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim_dist(2, 3);
    std::uniform_int_distribution<long> axis_dist(2 * 64, 12 * 64);
    std::uniform_int_distribution<long> center_dist(-5 * 97, 5 * 97);
    std::uniform_real_distribution<double> log_shear(0.0, std::log10(std::max(1.0, max_shear)));
    std::uniform_int_distribution<long> frac_dist(0, 96);
    std::bernoulli_distribution coin(0.5);
    for (int t = 0; t < trials; ++t) {
        const int n = dim_dist(rng);
        std::vector<Rat> center;
        std::vector<Rat> axes;
        for (int i = 0; i < n; ++i) {
            center.push_back(make_rat(center_dist(rng), 97));
            axes.push_back(make_rat(axis_dist(rng), 64));
        }
        DavenportTrial trial;
        trial.region = ellipsoid_region(center, axes);
        auto sh = trial.region.shear_or_identity();
        const bool upper = coin(rng);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if ((upper && j <= i) || (!upper && j >= i)) continue;
                const double mag = std::floor(std::pow(10.0, log_shear(rng)));
                Rat entry = Rat(Int(static_cast<long>(mag))) + make_rat(frac_dist(rng), 97);
                if (coin(rng)) entry = -entry;
                sh[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry;
                trial.shear_magnitude = std::max(trial.shear_magnitude, std::abs(entry.get_d()));
            }
        trial.region.shear = sh;
        DavenportOptions o = opts;
        o.seed = opts.seed + static_cast<std::uint64_t>(t);
        trial.report = davenport_count(trial.region, o);
        out.max_ratio = std::max(out.max_ratio, trial.report.ratio);
        out.max_volume_error = std::max(out.max_volume_error, trial.report.volume_error);
        out.trials.push_back(std::move(trial));
    }
    return out;
}

}  // namespace qpl
