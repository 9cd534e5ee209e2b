#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fillcert/cusp_lattice.hpp"
#include "fillcert/filling_metric.hpp"
#include "fillcert/tolerance.hpp"

namespace fillcert {

// A cusped manifold presented by its cusp cross-sections, the slopes chosen
// for filling (nullopt = cusp left unfilled), and the Heegaard genus whose
// preservation is being certified.
struct ManifoldInput {
    std::vector<CuspTorus> cusps;
    std::vector<std::optional<Slope>> fillings;
    int genus = 2;
};

// Throws std::invalid_argument unless cusps and fillings have equal, nonzero
// size and genus >= 1.
void validate_manifold(const ManifoldInput& input);

// Outcome of the two length tests on one filled cusp. Thresholds:
//   slope test:     length(s)      > 2*pi*(2g - 1)
//   longitude test: length(lambda) > 6*(2g - 3)
// where lambda is the shortest curve meeting s once. Margins are value minus
// threshold. Longitude fields are only populated by the full check; the
// certificate only when the aggregate slope test passed (that is what makes
// the tube metric available).
struct CuspCriterionRecord {
    int cusp_index = 0;
    Slope filling;
    double slope_length_value = 0.0;
    double slope_threshold = 0.0;
    double slope_margin = 0.0;
    Verdict slope_verdict = Verdict::uncertain;
    std::optional<SlopeLength> longitude;
    double longitude_threshold = 0.0;
    double longitude_margin = 0.0;
    std::optional<Verdict> longitude_verdict;
    std::optional<MetricCertificate> certificate;
};

// Aggregated result of a criterion check. Aggregate verdicts are the
// conjunction over filled cusps (fail dominates, uncertain beats pass).
// genus 1 is recorded as vacuous: nothing to test, aggregate passes.
struct CriterionReport {
    int genus = 2;
    double rel_tolerance = kDefaultRelTolerance;
    bool vacuous = false;
    std::vector<CuspCriterionRecord> cusps;
    Verdict core_isotopy = Verdict::uncertain;
    std::optional<Verdict> heegaard_persists;
    // Populated when the slope test passed overall: minimal filled length
    // and the interpolation parameter chosen from it.
    std::optional<double> min_filled_length;
    std::optional<double> zeta;
};

// Slope test only: each filled slope must be longer than 2*pi*(2g - 1) for
// the filled cores to drop out of a genus-g surface's handlebodies.
CriterionReport check_core_isotopy(const ManifoldInput& input,
                                   double rel_tol = kDefaultRelTolerance);

// Full check: the slope test plus, per filled cusp, the shortest curve
// meeting the filling once must be longer than 6*(2g - 3). Passing certifies
// that a genus-g Heegaard surface survives the filling.
CriterionReport check_heegaard_persists(const ManifoldInput& input,
                                        double rel_tol = kDefaultRelTolerance);

// Slopes that the slope test cannot certify at this genus: everything of
// length <= 2*pi*(2g - 1), band included and flagged.
std::vector<SlopeLength> enumerate_bad_slope_candidates(const CuspTorus& torus, int genus,
                                                        double rel_tol = kDefaultRelTolerance);

// A curve lambda meeting the filling slope once and too short for the
// longitude test. Along such a lambda the filled solid torus admits a
// destabilizing compression, so these are the directions a genus bound can
// fail in. The curves meeting s once form the line base + k * s (k integer);
// base is pinned to the canonical representative nearest the origin.
struct DestabilizationLine {
    Slope longitude;
    double length = 0.0;
    bool boundary_uncertain = false;
    Slope line_base;
    Slope line_direction;
};

// All primitive curves meeting s once with length <= 6*(2g - 3), band
// included and flagged, sorted like enumerate_slopes_below.
std::vector<DestabilizationLine> enumerate_destabilization_lines(
    const CuspTorus& torus, const Slope& s, int genus,
    double rel_tol = kDefaultRelTolerance);

// Largest genus g >= 2 whose full check passes for this single filled cusp,
// nullopt when even genus 2 does not pass. Thresholds grow with g, so this
// is the last g before the first non-pass.
std::optional<int> max_certified_genus(const CuspTorus& torus, const Slope& s,
                                       double rel_tol = kDefaultRelTolerance);

// Integer bookkeeping behind the threshold 6*(2g - 3) for surfaces with
// boundary: a genus-g splitting surface cut along b boundary curves.
struct BoundaryObstruction {
    std::int64_t lhs = 0;          // 6*b*(2g - 3), total length budget
    std::int64_t euler_bound = 0;  // 6*(2g + b - 4), the Euler-characteristic bound
    std::int64_t witness = 0;      // (lhs - euler_bound) / 6 = 2*(g - 2)*(b - 1)
};

// For genus g >= 2 and b >= 1 boundary curves: lhs >= euler_bound always,
// with equality exactly when g = 2 or b = 1, witnessed by
// witness = 2*(g - 2)*(b - 1) = (lhs - euler_bound) / 6 >= 0.
BoundaryObstruction boundary_obstruction(int genus, int boundary_count);

// 6 * |chi| for a compact surface of the given genus with b boundary
// circles, chi = 2 - 2*genus - b. Requires chi <= 0.
double euler_length_bound(int genus, int boundary_count);

}  // namespace fillcert
