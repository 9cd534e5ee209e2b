#pragma once

#include <numbers>

namespace fillcert {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// Certified data for the negatively curved metric that a Dehn filling tube
// of meridian length ell carries. All quantities are functions of ell and
// the interpolation parameter zeta in (0, 1):
//
//   t_lim     = 1 - (2*pi/ell)^2
//   r0        = -atanh(sqrt(t_lim)) / sqrt(t_lim)        (tube depth, < 0)
//   kappa_max = zeta * ((2*pi/ell_min)^2 - 1)            (< 0)
//   disk_area_limit       = ell^2 / (ell + 2*pi)
//   disk_area_lower_bound = zeta * disk_area_limit
//
// kappa_max is shared across the cusps of one manifold (it uses the minimal
// filled length), while the disk areas are per cusp.
struct MetricCertificate {
    double slope_length = 0.0;
    double zeta = 0.0;
    double t_lim = 0.0;
    double r0 = 0.0;
    double kappa_max = 0.0;
    double disk_area_lower_bound = 0.0;
    double disk_area_limit = 0.0;
};

// t_lim = 1 - (2*pi/ell)^2. Requires ell > 2*pi; throws std::domain_error
// ("metric undefined: slope too short") otherwise.
double compute_t_lim(double ell);

// r0 = -atanh(sqrt(t_lim)) / sqrt(t_lim) for t_lim in (0, 1).
double compute_r0(double t_lim);

// Radial circumference profile of the model tube,
//   f(r) = ell * sqrt(1 - t_lim) / sqrt(t_lim) * sinh(sqrt(t_lim) * (r - r0)),
// defined for r in [r0, 0]. f(r0) = 0 and f(0) = ell (up to roundoff).
double profile_f(double ell, double r);

// Area of the meridian disk of the model tube: integral of profile_f over
// [r0, 0], which evaluates in closed form to ell^2 / (ell + 2*pi).
double disk_area_closed_form(double ell);

// Same area by adaptive Simpson quadrature to absolute tolerance abs_tol.
// Exists as a cross-check of the closed form; throws std::runtime_error if
// the subdivision limit is hit before the tolerance is met.
double disk_area_quadrature(double ell, double abs_tol);

// Upper bound on sectional curvature after filling:
// kappa_max = zeta * ((2*pi/ell_min)^2 - 1), negative whenever ell_min > 2*pi.
double curvature_bound(double ell_min, double zeta);

// Area bound for a minimal surface S of negative Euler characteristic in a
// manifold with curvature <= kappa_max < 0: area <= 2*pi*chi / kappa_max.
double minimal_surface_area_bound(int euler_characteristic, double kappa_max);

// Area bound for the slices of a sweepout of such a surface: the minimal
// surface bound weakened by the interpolation factor,
// area <= 2*pi*chi / (zeta * kappa_max).
double sweepout_area_bound(int euler_characteristic, double kappa_max, double zeta);

// Smallest zeta for which the disk-area comparison can work at this genus:
// zeta_0 = sqrt(2*pi*(2g - 2) / (ell_min - 2*pi)). Valid zeta are (zeta_0, 1).
double zeta_feasibility_floor(double ell_min, int genus);

// Picks zeta = (zeta_0 + 1) / 2, the midpoint of the feasible interval.
// Requires genus >= 2 and ell_min > 2*pi*(2*genus - 1); throws
// std::domain_error ("hypothesis not met: no valid zeta guaranteed") when the
// length hypothesis fails, and a dedicated error for genus 1, where the
// criterion is vacuous and no metric is needed.
double select_zeta(double ell_min, int genus);

// Assembles the full certificate for one cusp. ell is that cusp's filling
// length, ell_min the minimum over all filled cusps (both > 2*pi), and zeta
// the shared interpolation parameter in (0, 1).
MetricCertificate make_certificate(double ell, double ell_min, double zeta);

}  // namespace fillcert
