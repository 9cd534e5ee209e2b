#include "fillcert/filling_metric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fillcert {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string("non-finite ") + what);
    }
}

void require_zeta(double zeta) {
    require_finite(zeta, "zeta");
    if (!(zeta > 0.0 && zeta < 1.0)) {
        throw std::domain_error("zeta must lie in (0, 1)");
    }
}

void require_genus_at_least_two(int genus) {
    if (genus == 1) {
        throw std::domain_error(
            "genus 1 needs no tube metric: the criterion is vacuous there");
    }
    if (genus < 1) {
        throw std::invalid_argument("genus must be a positive integer");
    }
}

struct Profile {
    double sqrt_t;
    double r0;
    double amplitude;  // ell * sqrt(1 - t_lim) / sqrt(t_lim)
};

Profile make_profile(double ell) {
    const double t = compute_t_lim(ell);
    const double st = std::sqrt(t);
    const double r0 = -std::atanh(st) / st;
    return Profile{st, r0, ell * std::sqrt(1.0 - t) / st};
}

double eval_profile(const Profile& p, double r) {
    return p.amplitude * std::sinh(p.sqrt_t * (r - p.r0));
}

// Adaptive Simpson with the classic |S2 - S1| <= 15*tol acceptance and
// Richardson correction. depth counts remaining subdivisions.
template <typename F>
double simpson_adapt(const F& f, double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        throw std::runtime_error("quadrature did not converge within subdivision limit");
    }
    return simpson_adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_adapt(f, a, b, fa, fm, fb, whole, tol, 60);
}

}  // namespace

double compute_t_lim(double ell) {
    require_finite(ell, "slope length");
    if (!(ell > kTwoPi)) {
        throw std::domain_error("metric undefined: slope too short");
    }
    const double ratio = kTwoPi / ell;
    return 1.0 - ratio * ratio;
}

double compute_r0(double t_lim) {
    require_finite(t_lim, "t_lim");
    if (!(t_lim > 0.0 && t_lim < 1.0)) {
        throw std::domain_error("t_lim must lie in (0, 1)");
    }
    const double st = std::sqrt(t_lim);
    return -std::atanh(st) / st;
}

double profile_f(double ell, double r) {
    const Profile p = make_profile(ell);
    if (!std::isfinite(r) || r < p.r0 || r > 0.0) {
        throw std::domain_error("profile radius outside [r0, 0]");
    }
    return eval_profile(p, r);
}

double disk_area_closed_form(double ell) {
    // Validates ell > 2*pi as a side effect.
    (void)compute_t_lim(ell);
    return ell * ell / (ell + kTwoPi);
}

double disk_area_quadrature(double ell, double abs_tol) {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
        throw std::invalid_argument("quadrature tolerance must be positive");
    }
    const Profile p = make_profile(ell);
    return integrate([&p](double r) { return eval_profile(p, r); }, p.r0, 0.0, abs_tol);
}

double curvature_bound(double ell_min, double zeta) {
    require_zeta(zeta);
    // Reuses the domain check: ell_min must exceed 2*pi or no negatively
    // curved tube metric exists at all.
    (void)compute_t_lim(ell_min);
    const double ratio = kTwoPi / ell_min;
    return zeta * (ratio * ratio - 1.0);
}

double minimal_surface_area_bound(int euler_characteristic, double kappa_max) {
    require_finite(kappa_max, "curvature bound");
    if (euler_characteristic >= 0) {
        throw std::invalid_argument(
            "area bound needs negative Euler characteristic");
    }
    if (!(kappa_max < 0.0)) {
        throw std::domain_error("area bound needs a negative curvature bound");
    }
    // Gauss-Bonnet with curvature <= kappa_max < 0; both signs flip, so the
    // quotient is positive.
    return kTwoPi * static_cast<double>(euler_characteristic) / kappa_max;
}

double sweepout_area_bound(int euler_characteristic, double kappa_max, double zeta) {
    require_zeta(zeta);
    return minimal_surface_area_bound(euler_characteristic, kappa_max) / zeta;
}

double zeta_feasibility_floor(double ell_min, int genus) {
    require_genus_at_least_two(genus);
    (void)compute_t_lim(ell_min);
    return std::sqrt(kTwoPi * static_cast<double>(2 * genus - 2) / (ell_min - kTwoPi));
}

double select_zeta(double ell_min, int genus) {
    require_genus_at_least_two(genus);
    require_finite(ell_min, "slope length");
    const double threshold = kTwoPi * static_cast<double>(2 * genus - 1);
    if (!(ell_min > threshold)) {
        throw std::domain_error("hypothesis not met: no valid zeta guaranteed");
    }
    // ell_min > 2*pi*(2g - 1) makes zeta_0 < 1, and any zeta strictly between
    // zeta_0 and 1 satisfies ell_min > (2*pi/zeta^2)*(2g - 2 + zeta^2). The
    // midpoint keeps a healthy margin on both sides.
    const double zeta0 = zeta_feasibility_floor(ell_min, genus);
    return 0.5 * (zeta0 + 1.0);
}

MetricCertificate make_certificate(double ell, double ell_min, double zeta) {
    require_zeta(zeta);
    MetricCertificate cert;
    cert.slope_length = ell;
    cert.zeta = zeta;
    cert.t_lim = compute_t_lim(ell);
    cert.r0 = compute_r0(cert.t_lim);
    cert.kappa_max = curvature_bound(ell_min, zeta);
    cert.disk_area_limit = disk_area_closed_form(ell);
    cert.disk_area_lower_bound = zeta * cert.disk_area_limit;
    return cert;
}

}  // namespace fillcert
