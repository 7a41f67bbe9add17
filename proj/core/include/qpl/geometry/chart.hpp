#pragma once

/**
 * @file chart.hpp
 * @brief Real chart n(x) n̄(u) a(t) λ on G_R = GL4(R) × SL5(R), the orbit map
 *        g ↦ g·y, and its Jacobian.
 *
 * For any y with nonzero discriminant the Jacobian of
 * (x, u, t, λ) ↦ n(x) n̄(u) a(t) λ · y, multiplied by λ·t1⋯t7 / λ^40, is a
 * constant multiple of |Disc(y)|: the chart measure dx du d×t d×λ is Haar
 * and Disc(g·y) = det(g4)^10 Disc(y).  jacobian_constancy_check measures that
 * constancy numerically.
 */

#include "qpl/pencil/quadruple.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace qpl {

using Matrix4r = Eigen::Matrix<double, 4, 4>;
using Matrix5r = Eigen::Matrix<double, 5, 5>;

/// A real point of V in the fixed coordinate order (a12..a45, b.., c.., d..).
using RealQuadruple = std::array<double, 40>;

RealQuadruple to_real(const Quadruple& q);

/// Chart coordinates of G_R.
struct ChartPoint {
    std::array<double, 16> x{};  ///< upper unipotent: 6 entries of GL4 then 10 of SL5, row order
    std::array<double, 16> u{};  ///< lower unipotent: 6 entries of GL4 then 10 of SL5, row order
    std::array<double, 7> t{1, 1, 1, 1, 1, 1, 1};
    double lambda = 1.0;

    static constexpr std::size_t kParams = 40;
    /// Flattened (x, u, t, λ).
    [[nodiscard]] std::array<double, kParams> params() const;
    static ChartPoint from_params(const std::array<double, kParams>& p);
    /// Throws DimensionMismatch unless every t_i and λ is positive.
    void validate() const;
};

struct GroupPair {
    Matrix4r g4;
    Matrix5r g5;
};

/// (λ n4(x) n̄4(u) a4(t), n5(x) n̄5(u) a5(t)).
GroupPair chart_to_group(const ChartPoint& cp);

/// (g4, g5)·y = Σ_l g4(k,l) g5 M_l g5ᵀ, in coordinates.
RealQuadruple act_real(const GroupPair& g, const RealQuadruple& y);

/// Random chart point in a Siegel-type box: x, u in [-1/2, 1/2],
/// t_i in [c, t_max], λ in [c', lambda_max].
struct ChartSampler {
    double c = 0.5;
    double c_prime = 0.5;
    double t_max = 2.0;
    double lambda_max = 2.0;

    [[nodiscard]] ChartPoint operator()(std::mt19937_64& rng) const;
};

struct JacobianOptions {
    double step_scale = 1e-5;      ///< h_i = step_scale · (1 + |param_i|)
    double richardson_tol = 1e-4;  ///< max relative column gap between steps h and h/2
    double rank_tol = 1e-13;       ///< minimum σ_min/σ_max
};

struct JacobianResult {
    double abs_det = 0.0;
    double log_abs_det = 0.0;
    double richardson_gap = 0.0;  ///< max relative column difference between h and h/2
    double inverse_condition = 0.0;
};

/**
 * |det| of the 40×40 matrix ∂(g·y)/∂(x, u, t, λ) by central differences,
 * extrapolated from steps h and h/2.  Throws IllConditioned when the two
 * steps disagree beyond richardson_tol or the matrix is numerically singular.
 */
JacobianResult orbit_map_jacobian(const RealQuadruple& y, const ChartPoint& cp, const JacobianOptions& opts = {});

/**
 * Φ(cp) = |J| · λ · t1⋯t7 / λ^40.  Because g·y is linear in λ, J(λ) = λ^39 J(1)
 * and Φ is evaluated from the Jacobian at λ = 1: λ-invariant by construction.
 */
double phi(const RealQuadruple& y, const ChartPoint& cp, const JacobianOptions& opts = {});

/// The same quantity from the finite-difference Jacobian at the actual λ
/// (checks the homogeneity argument numerically).
double phi_at_lambda(const RealQuadruple& y, const ChartPoint& cp, const JacobianOptions& opts = {});

struct ConstancyReport {
    std::vector<ChartPoint> points;
    std::vector<double> values;  ///< Φ at each point
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double relative_spread = 0.0;  ///< (max - min) / mean
    double lambda_gap = 0.0;       ///< relative change of Φ at points[0] when only λ changes
    double homogeneity_gap = 0.0;  ///< |phi_at_lambda - phi| / phi at points[0]
    double max_richardson_gap = 0.0;
};

ConstancyReport jacobian_constancy_check(const RealQuadruple& y, int n_samples, std::uint64_t seed,
                                         const ChartSampler& sampler = {}, const JacobianOptions& opts = {});

}  // namespace qpl
