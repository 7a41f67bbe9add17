#pragma once

/**
 * @file region.hpp
 * @brief Bounded semi-algebraic regions in R^n (n <= 4) and an empirical
 *        validator for Davenport's lattice-point lemma:
 *        #(R ∩ Z^n) = Vol(R) + O(max{Vol(R̄), 1}), R̄ ranging over the
 *        projections of R to coordinate subspaces.
 *
 * A Region is S·R0 + offset where R0 = {w : p_j(w) <= 0 for all j} lies in a
 * declared box and S is a unipotent triangular shear.  Lattice points are
 * enumerated exactly (rational membership) fibre by fibre in the order the
 * shear permits, so the work is proportional to the box of R0 regardless of
 * how large the shear is.
 */

#include "qpl/algebra/numbers.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace qpl {

inline constexpr int kMaxRegionDimension = 4;

/// Sparse polynomial in up to four variables with rational coefficients.
class RegionPolynomial {
public:
    using Exponent = std::array<int, kMaxRegionDimension>;

    RegionPolynomial() = default;
    void add_term(const Exponent& e, const Rat& c);

    [[nodiscard]] const std::map<Exponent, Rat>& terms() const noexcept { return terms_; }
    [[nodiscard]] int degree() const;
    [[nodiscard]] int max_variable() const;  ///< largest variable index used (-1 if constant)

    [[nodiscard]] Rat eval(const std::vector<Rat>& w) const;
    [[nodiscard]] double eval(const double* w) const;
    /// Enclosure of the values over the box [lo_i, hi_i] (outward padded).
    [[nodiscard]] std::pair<double, double> eval_interval(const std::vector<std::pair<double, double>>& box) const;

private:
    std::map<Exponent, Rat> terms_;
};

struct Region {
    int dimension = 0;
    std::vector<RegionPolynomial> inequalities;  ///< p(w) <= 0
    std::vector<std::vector<Rat>> shear;         ///< unipotent triangular; empty means identity
    std::vector<Rat> offset;                     ///< empty means zero
    std::vector<std::pair<Rat, Rat>> box;        ///< encloses R0 (pre-shear coordinates)

    [[nodiscard]] std::size_t inequality_count() const { return inequalities.size(); }
    [[nodiscard]] std::vector<int> degrees() const;

    /// Structural checks (DimensionMismatch) and the boundedness certificate
    /// (Unbounded): the box must be present and, by interval subdivision of
    /// its faces, no point of the box boundary may satisfy every inequality.
    /// For a connected R0 meeting the box this proves R0 lies inside it.
    void validate() const;

    /// Exact membership of a point of R0 (pre-shear coordinates).
    [[nodiscard]] bool contains_pre(const std::vector<Rat>& w) const;
    /// Exact membership of v in S·R0 + offset.
    [[nodiscard]] bool contains(const std::vector<Rat>& v) const;

    [[nodiscard]] std::vector<std::vector<Rat>> shear_or_identity() const;
    [[nodiscard]] std::vector<Rat> offset_or_zero() const;
    /// Copy translated by an integer vector.
    [[nodiscard]] Region translated(const std::vector<long>& by) const;
};

/// Axis-parallel box [lo_i, hi_i] as 2n linear inequalities, with a padded enclosure.
Region box_region(const std::vector<std::pair<Rat, Rat>>& sides);
/// Ellipsoid Σ ((w_i - c_i)/a_i)² <= 1, with a padded enclosure.
Region ellipsoid_region(const std::vector<Rat>& center, const std::vector<Rat>& semi_axes);

/// Region from JSON text:
/// {"dimension": n, "inequalities": [[{"coef": "3/2", "exp": [2,0]}, ...], ...],
///  "box": [["lo","hi"], ...], "shear": [[...], ...], "offset": [...]}.
/// Rationals may be JSON integers or strings "a", "a/b", "-1.25".
Region parse_region(const std::string& text);
Region load_region(const std::filesystem::path& path);
std::string format_region(const Region& r);

struct DavenportOptions {
    std::size_t qmc_points = 1'000'000;
    int replicates = 16;
    std::uint64_t seed = 1;
};

struct LatticeCountReport {
    Int count = 0;
    double volume = 0.0;
    double volume_error = 0.0;  ///< 3σ over randomly shifted QMC replicates
    double max_projection = 0.0;
    std::string projection_subset;  ///< coordinates of the largest projection, e.g. "{0,2}"
    double discrepancy = 0.0;       ///< |count - volume|
    double ratio = 0.0;             ///< discrepancy / max(1, max_projection)
    std::size_t nodes_visited = 0;
};

/// Exact lattice count, QMC volume and projection volumes (throws Unbounded).
LatticeCountReport davenport_count(const Region& region, const DavenportOptions& opts = {});

struct DavenportTrial {
    Region region;
    LatticeCountReport report;
    double shear_magnitude = 0.0;
};

struct DavenportBatchReport {
    std::vector<DavenportTrial> trials;
    double max_ratio = 0.0;  ///< the fitted constant C
    double max_volume_error = 0.0;
};

/// Random ellipses/ellipsoids (dimensions 2–3) under random unipotent shears
/// with entries up to `max_shear` in magnitude.
DavenportBatchReport davenport_random_batch(int trials, std::uint64_t seed, double max_shear = 1e6,
                                            const DavenportOptions& opts = {.qmc_points = 1 << 17});

}  // namespace qpl
