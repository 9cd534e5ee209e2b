#include "fillcert/cusp_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "fillcert/kernels.hpp"

namespace fillcert {

namespace {

// One canonical way to compute |p*m + q*l|. Enumeration, shortest_longitude
// and slope_length all funnel through here so that the same slope on the
// same torus always yields the same double.
double length_of_coords(const CuspTorus& torus, double p, double q) {
    const Vec2 m = torus.meridian();
    const Vec2 l = torus.longitude();
    const double x = p * m.x + q * l.x;
    const double y = p * m.y + q * l.y;
    return std::sqrt(x * x + y * y);
}

void canonicalize_sign(std::int64_t& p, std::int64_t& q) {
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
}

// Extended Euclid: returns g = gcd(a, b) and x, y with a*x + b*y = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    std::int64_t x1 = 0, y1 = 0;
    const std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

Slope::Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    if (p == 0 && q == 0) {
        throw std::invalid_argument("slope (0, 0) is not a curve");
    }
    if (!is_primitive(p, q)) {
        throw std::invalid_argument("slope not primitive");
    }
    canonicalize_sign(p_, q_);
}

bool Slope::is_primitive(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) return false;
    return std::gcd(std::abs(p), std::abs(q)) == 1;
}

CuspTorus::CuspTorus(Vec2 meridian, Vec2 longitude)
    : meridian_(meridian), longitude_(longitude) {
    if (!std::isfinite(meridian.x) || !std::isfinite(meridian.y) ||
        !std::isfinite(longitude.x) || !std::isfinite(longitude.y)) {
        throw std::invalid_argument("cusp lattice coordinates must be finite");
    }
    const double d = std::abs(det(meridian_, longitude_));
    const double scale = norm(meridian_) * norm(longitude_);
    if (!(d > 1e-12 * scale) || scale == 0.0) {
        throw std::invalid_argument("degenerate cusp lattice");
    }
}

double slope_length(const CuspTorus& torus, const Slope& s) {
    return length_of_coords(torus, static_cast<double>(s.p()), static_cast<double>(s.q()));
}

std::int64_t intersection_number(const Slope& a, const Slope& b) {
    return std::abs(a.p() * b.q() - a.q() * b.p());
}

CuspTorus reduce_basis(const CuspTorus& torus) {
    BasisTransform u;
    return reduce_basis(torus, u);
}

CuspTorus reduce_basis(const CuspTorus& torus, BasisTransform& transform) {
    Vec2 a = torus.meridian();
    Vec2 b = torus.longitude();
    // Columns of U track how (a, b) are written in the original basis.
    std::int64_t u00 = 1, u10 = 0;  // a = u00*m + u10*l
    std::int64_t u01 = 0, u11 = 1;  // b = u01*m + u11*l

    if (norm_sq(a) > norm_sq(b)) {
        std::swap(a, b);
        std::swap(u00, u01);
        std::swap(u10, u11);
    }
    // Lagrange loop: shear b by the rounded projection onto a, swap while it
    // gets shorter. Terminates because |a| strictly decreases at each swap.
    for (int iter = 0; iter < 64; ++iter) {
        const double mu_real = dot(a, b) / dot(a, a);
        const std::int64_t mu = std::llround(mu_real);
        if (mu != 0) {
            b = b - static_cast<double>(mu) * a;
            u01 -= mu * u00;
            u11 -= mu * u10;
        }
        if (norm_sq(b) >= norm_sq(a)) {
            // Recompute the reduced vectors from the transform so the output
            // basis is an exact integer combination of the input vectors.
            const Vec2 m = torus.meridian();
            const Vec2 l = torus.longitude();
            Vec2 ra = static_cast<double>(u00) * m + static_cast<double>(u10) * l;
            Vec2 rb = static_cast<double>(u01) * m + static_cast<double>(u11) * l;
            if (det(ra, rb) < 0.0) {
                rb = {-rb.x, -rb.y};
                u01 = -u01;
                u11 = -u11;
            }
            transform = BasisTransform{u00, u01, u10, u11};
            return CuspTorus(ra, rb);
        }
        std::swap(a, b);
        std::swap(u00, u01);
        std::swap(u10, u11);
    }
    throw std::runtime_error("lattice reduction did not converge");
}

std::vector<SlopeLength> enumerate_slopes_below(const CuspTorus& torus, double bound,
                                                double rel_tol) {
    if (!(bound > 0.0) || !std::isfinite(bound)) {
        throw std::invalid_argument("enumeration bound must be positive and finite");
    }
    if (!(rel_tol >= 0.0) || !(rel_tol < 0.5)) {
        throw std::invalid_argument("tolerance must lie in [0, 0.5)");
    }

    BasisTransform u;
    const CuspTorus red = reduce_basis(torus, u);
    const Vec2 rm = red.meridian();
    const Vec2 rl = red.longitude();
    const double d = std::abs(red.determinant());

    // Anything within the band of the bound must be kept. The band test is
    // relative to max(length, bound), so its far edge sits at
    // bound / (1 - rel_tol); add a little slack on top for roundoff.
    const double reach = bound / (1.0 - rel_tol) + 1e-12 * bound;
    // Coordinate bounds from the dual basis: |p'| <= reach*|l'|/|d| and
    // |q'| <= reach*|m'|/|d| for any vector of length <= reach.
    const double p_extent = reach * norm(rl) / d;
    const double q_extent = reach * norm(rm) / d;
    if (p_extent > 1e7 || q_extent > 1e7 || p_extent * q_extent > 5e8) {
        throw std::runtime_error("slope enumeration box too large for this bound");
    }
    const auto pmax = static_cast<std::int64_t>(std::floor(p_extent + 1e-9));
    const auto qmax = static_cast<std::int64_t>(std::floor(q_extent + 1e-9));

    // The kernel row pass evaluates norms from the reduced vectors, which can
    // differ from the canonical original-basis value by a few ulp, so accept
    // with slack here and re-test each survivor exactly below.
    const double prefilter = reach * reach * (1.0 + 1e-10);

    std::vector<double> row(static_cast<std::size_t>(2 * qmax + 1));
    std::vector<SlopeLength> result;
    for (std::int64_t rp = 0; rp <= pmax; ++rp) {
        const std::int64_t qlo = (rp == 0) ? 1 : -qmax;
        const std::int64_t qhi = qmax;
        if (qlo > qhi) continue;
        const auto count = static_cast<std::size_t>(qhi - qlo + 1);
        const double bx = static_cast<double>(rp) * rm.x;
        const double by = static_cast<double>(rp) * rm.y;
        kernels::row_norms_sq(bx, by, rl.x, rl.y, static_cast<double>(qlo),
                              row.data(), count);
        for (std::size_t idx = 0; idx < count; ++idx) {
            if (row[idx] > prefilter) continue;
            const std::int64_t rq = qlo + static_cast<std::int64_t>(idx);
            if (std::gcd(std::abs(rp), std::abs(rq)) != 1) continue;
            // Map back to original meridian/longitude coordinates.
            std::int64_t p = u.u00 * rp + u.u01 * rq;
            std::int64_t q = u.u10 * rp + u.u11 * rq;
            canonicalize_sign(p, q);
            const double len =
                length_of_coords(torus, static_cast<double>(p), static_cast<double>(q));
            const bool on_boundary = within_band(len, bound, rel_tol);
            if (len <= bound || on_boundary) {
                result.push_back(SlopeLength{Slope(p, q), len, on_boundary});
            }
        }
    }
    std::sort(result.begin(), result.end(), [](const SlopeLength& a, const SlopeLength& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.slope < b.slope;
    });
    return result;
}

SlopeLength shortest_longitude(const CuspTorus& torus, const Slope& s) {
    // Base solution of p_s * q - q_s * p = 1 via Bezout.
    std::int64_t x = 0, y = 0;
    ext_gcd(s.p(), s.q(), x, y);  // s.p()*x + s.q()*y == 1 since s is primitive
    const std::int64_t p0 = -y;
    const std::int64_t q0 = x;

    // Every curve meeting s once is (p0, q0) + k * (p_s, q_s); minimizing its
    // length is a 1D problem along the line through s's direction vector.
    const Vec2 m = torus.meridian();
    const Vec2 l = torus.longitude();
    const Vec2 sv = static_cast<double>(s.p()) * m + static_cast<double>(s.q()) * l;
    const Vec2 w0 = static_cast<double>(p0) * m + static_cast<double>(q0) * l;
    const double k_star = -dot(w0, sv) / dot(sv, sv);

    const auto k_mid = static_cast<std::int64_t>(std::llround(k_star));
    bool have = false;
    std::int64_t best_p = 0, best_q = 0;
    double best_len = std::numeric_limits<double>::infinity();
    for (std::int64_t k = k_mid - 2; k <= k_mid + 2; ++k) {
        std::int64_t p = p0 + k * s.p();
        std::int64_t q = q0 + k * s.q();
        canonicalize_sign(p, q);
        const double len =
            length_of_coords(torus, static_cast<double>(p), static_cast<double>(q));
        if (!have || len < best_len ||
            (len == best_len && std::make_pair(p, q) < std::make_pair(best_p, best_q))) {
            have = true;
            best_p = p;
            best_q = q;
            best_len = len;
        }
    }
    return SlopeLength{Slope(best_p, best_q), best_len, false};
}

}  // namespace fillcert
