/**
 * @file chart.cpp
 * @brief Chart on G_R, the real orbit map and its finite-difference Jacobian.
 */

#include "qpl/geometry/chart.hpp"

#include "qpl/util/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qpl {

namespace {

using Vector40 = Eigen::Matrix<double, 40, 1>;
using Matrix40 = Eigen::Matrix<double, 40, 40>;

constexpr std::array<std::pair<int, int>, 6> kUpper4{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
constexpr std::array<std::pair<int, int>, 10> kUpper5{
    {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
constexpr std::array<std::pair<int, int>, 6> kLower4{{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}};
constexpr std::array<std::pair<int, int>, 10> kLower5{
    {{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}};

Matrix5r skew_of(const RealQuadruple& y, int letter) {
    Matrix5r m = Matrix5r::Zero();
    for (std::size_t k = 0; k < kUpper5.size(); ++k) {
        const auto [r, c] = kUpper5[k];
        const double v = y[static_cast<std::size_t>(letter) * 10 + k];
        m(r, c) = v;
        m(c, r) = -v;
    }
    return m;
}

Vector40 evaluate(const RealQuadruple& y, const std::array<double, 40>& params) {
    const RealQuadruple z = act_real(chart_to_group(ChartPoint::from_params(params)), y);
    return Eigen::Map<const Vector40>(z.data());
}

Matrix40 difference_matrix(const RealQuadruple& y, const std::array<double, 40>& base, double scale) {
    Matrix40 d;
    for (std::size_t i = 0; i < 40; ++i) {
        const double h = scale * (1.0 + std::abs(base[i]));
        auto plus = base;
        auto minus = base;
        plus[i] += h;
        minus[i] -= h;
        // Use the actually represented step to avoid rounding in h itself.
        const double span = plus[i] - minus[i];
        d.col(static_cast<Eigen::Index>(i)) = (evaluate(y, plus) - evaluate(y, minus)) / span;
    }
    return d;
}

}  // namespace

RealQuadruple to_real(const Quadruple& q) {
    RealQuadruple y{};
    for (const auto id : CoordId::all()) y[static_cast<std::size_t>(id.index())] = q[id].get_d();
    return y;
}

std::array<double, ChartPoint::kParams> ChartPoint::params() const {
    std::array<double, kParams> p{};
    std::copy(x.begin(), x.end(), p.begin());
    std::copy(u.begin(), u.end(), p.begin() + 16);
    std::copy(t.begin(), t.end(), p.begin() + 32);
    p[39] = lambda;
    return p;
}

ChartPoint ChartPoint::from_params(const std::array<double, kParams>& p) {
    ChartPoint cp;
    std::copy(p.begin(), p.begin() + 16, cp.x.begin());
    std::copy(p.begin() + 16, p.begin() + 32, cp.u.begin());
    std::copy(p.begin() + 32, p.begin() + 39, cp.t.begin());
    cp.lambda = p[39];
    return cp;
}

void ChartPoint::validate() const {
    for (double ti : t)
        if (!(ti > 0)) throw DimensionMismatch("chart torus coordinates must be positive");
    if (!(lambda > 0)) throw DimensionMismatch("chart scaling lambda must be positive");
}

GroupPair chart_to_group(const ChartPoint& cp) {
    Matrix4r n4 = Matrix4r::Identity();
    Matrix4r nb4 = Matrix4r::Identity();
    Matrix5r n5 = Matrix5r::Identity();
    Matrix5r nb5 = Matrix5r::Identity();
    for (std::size_t k = 0; k < 6; ++k) {
        n4(kUpper4[k].first, kUpper4[k].second) = cp.x[k];
        nb4(kLower4[k].first, kLower4[k].second) = cp.u[k];
    }
    for (std::size_t k = 0; k < 10; ++k) {
        n5(kUpper5[k].first, kUpper5[k].second) = cp.x[6 + k];
        nb5(kLower5[k].first, kLower5[k].second) = cp.u[6 + k];
    }
    const auto& t = cp.t;
    const Eigen::Vector4d a4(t[0], t[1] / t[0], t[2] / t[1], 1.0 / t[2]);
    Eigen::Matrix<double, 5, 1> a5;
    a5 << t[3], t[4] / t[3], t[5] / t[4], t[6] / t[5], 1.0 / t[6];
    GroupPair g;
    g.g4 = cp.lambda * (n4 * nb4 * a4.asDiagonal());
    g.g5 = n5 * nb5 * a5.asDiagonal();
    return g;
}

RealQuadruple act_real(const GroupPair& g, const RealQuadruple& y) {
    std::array<Matrix5r, 4> conj;
    for (int l = 0; l < 4; ++l) conj[static_cast<std::size_t>(l)] = g.g5 * skew_of(y, l) * g.g5.transpose();
    RealQuadruple out{};
    for (int k = 0; k < 4; ++k) {
        Matrix5r m = Matrix5r::Zero();
        for (int l = 0; l < 4; ++l) m += g.g4(k, l) * conj[static_cast<std::size_t>(l)];
        for (std::size_t c = 0; c < kUpper5.size(); ++c)
            out[static_cast<std::size_t>(k) * 10 + c] = m(kUpper5[c].first, kUpper5[c].second);
    }
    return out;
}

ChartPoint ChartSampler::operator()(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> unip(-0.5, 0.5);
    std::uniform_real_distribution<double> torus(c, t_max);
    std::uniform_real_distribution<double> scale(c_prime, lambda_max);
    ChartPoint cp;
    for (auto& v : cp.x) v = unip(rng);
    for (auto& v : cp.u) v = unip(rng);
    for (auto& v : cp.t) v = torus(rng);
    cp.lambda = scale(rng);
    return cp;
}

JacobianResult orbit_map_jacobian(const RealQuadruple& y, const ChartPoint& cp, const JacobianOptions& opts) {
    cp.validate();
    const auto base = cp.params();
    const Matrix40 coarse = difference_matrix(y, base, opts.step_scale);
    const Matrix40 fine = difference_matrix(y, base, opts.step_scale / 2);

    JacobianResult r;
    for (Eigen::Index i = 0; i < 40; ++i) {
        const double norm = fine.col(i).norm();
        if (norm == 0.0) throw IllConditioned("orbit map has a zero column");
        r.richardson_gap = std::max(r.richardson_gap, (coarse.col(i) - fine.col(i)).norm() / norm);
    }
    if (r.richardson_gap > opts.richardson_tol)
        throw IllConditioned("step-halving gap " + std::to_string(r.richardson_gap) + " exceeds tolerance");

    const Matrix40 extrapolated = (4.0 * fine - coarse) / 3.0;
    const Eigen::JacobiSVD<Matrix40> svd(extrapolated);
    const auto& sv = svd.singularValues();
    r.inverse_condition = sv(39) / sv(0);
    if (!(r.inverse_condition > opts.rank_tol)) throw IllConditioned("orbit map Jacobian is numerically singular");

    const Eigen::PartialPivLU<Matrix40> lu(extrapolated);
    const auto& packed = lu.matrixLU();
    for (Eigen::Index i = 0; i < 40; ++i) r.log_abs_det += std::log(std::abs(packed(i, i)));
    r.abs_det = std::exp(r.log_abs_det);
    return r;
}

namespace {

/// g·y is linear in λ, so J(λ) = λ^39 J(1) exactly; Φ is therefore evaluated
/// at λ = 1, which makes it λ-invariant by construction.
ChartPoint at_unit_lambda(ChartPoint cp) {
    cp.lambda = 1.0;
    return cp;
}

double phi_from_unit(const JacobianResult& j_unit, const ChartPoint& cp) {
    double log_phi = j_unit.log_abs_det;
    for (double ti : cp.t) log_phi += std::log(ti);
    return std::exp(log_phi);
}

}  // namespace

double phi(const RealQuadruple& y, const ChartPoint& cp, const JacobianOptions& opts) {
    cp.validate();
    return phi_from_unit(orbit_map_jacobian(y, at_unit_lambda(cp), opts), cp);
}

double phi_at_lambda(const RealQuadruple& y, const ChartPoint& cp, const JacobianOptions& opts) {
    const JacobianResult j = orbit_map_jacobian(y, cp, opts);
    double log_phi = j.log_abs_det - 39.0 * std::log(cp.lambda);
    for (double ti : cp.t) log_phi += std::log(ti);
    return std::exp(log_phi);
}

ConstancyReport jacobian_constancy_check(const RealQuadruple& y, int n_samples, std::uint64_t seed,
                                         const ChartSampler& sampler, const JacobianOptions& opts) {
    if (n_samples < 1) throw DimensionMismatch("need at least one chart sample");
    std::mt19937_64 rng(seed);
    ConstancyReport rep;
    for (int s = 0; s < n_samples; ++s) {
        const ChartPoint cp = sampler(rng);
        const JacobianResult j = orbit_map_jacobian(y, at_unit_lambda(cp), opts);
        rep.max_richardson_gap = std::max(rep.max_richardson_gap, j.richardson_gap);
        rep.points.push_back(cp);
        rep.values.push_back(phi_from_unit(j, cp));
    }
    const auto [lo, hi] = std::minmax_element(rep.values.begin(), rep.values.end());
    rep.min = *lo;
    rep.max = *hi;
    double sum = 0.0;
    for (double v : rep.values) sum += v;
    rep.mean = sum / static_cast<double>(rep.values.size());
    rep.relative_spread = (rep.max - rep.min) / rep.mean;

    ChartPoint moved = rep.points.front();
    moved.lambda *= 2.75;
    rep.lambda_gap = std::abs(phi(y, moved, opts) - rep.values.front()) / rep.values.front();
    rep.homogeneity_gap = std::abs(phi_at_lambda(y, rep.points.front(), opts) - rep.values.front()) / rep.values.front();
    return rep;
}

}  // namespace qpl
