#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fillcert/tolerance.hpp"
#include "fillcert/vec2.hpp"

namespace fillcert {

// An unoriented slope on a cusp torus: a primitive integer pair (p, q) of
// meridian/longitude coefficients. (p, q) and (-p, -q) describe the same
// curve, so construction normalizes the sign to p > 0, or p == 0 and q == 1.
class Slope {
public:
    // Throws std::invalid_argument for (0, 0) or a non-primitive pair.
    Slope(std::int64_t p, std::int64_t q);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }

    static bool is_primitive(std::int64_t p, std::int64_t q);

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
    // Canonical ordering: smaller p first, then smaller q.
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.p_ != b.p_) return a.p_ < b.p_;
        return a.q_ < b.q_;
    }

private:
    std::int64_t p_;
    std::int64_t q_;
};

// Euclidean cross-section of a cusp: the translation lattice spanned by the
// meridian and longitude holonomies. Vectors are stored exactly as given
// (flipping one to fix the orientation would silently renumber slopes);
// orientation is only normalized on the output of reduce_basis.
class CuspTorus {
public:
    // Throws std::invalid_argument if a coordinate is not finite or the two
    // vectors are (numerically) linearly dependent, meaning
    // |det| < 1e-12 * |m| * |l|.
    CuspTorus(Vec2 meridian, Vec2 longitude);

    Vec2 meridian() const { return meridian_; }
    Vec2 longitude() const { return longitude_; }
    double determinant() const { return det(meridian_, longitude_); }

private:
    Vec2 meridian_;
    Vec2 longitude_;
};

// A slope together with its translation length on a given torus. The flag
// marks lengths that fell inside the tolerance band of whatever threshold
// the enumeration was run against.
struct SlopeLength {
    Slope slope;
    double length = 0.0;
    bool boundary_uncertain = false;
};

// Geodesic length of the slope on the flat torus: |p * m + q * l|.
double slope_length(const CuspTorus& torus, const Slope& s);

// Minimal geometric intersection number of two slopes, |p1 q2 - q1 p2|.
std::int64_t intersection_number(const Slope& a, const Slope& b);

// Unimodular change of basis computed by reduce_basis: the reduced pair is
// (m', l') = (u00*m + u10*l, u01*m + u11*l), and a slope written as (p', q')
// in the reduced basis has original coordinates p = u00*p' + u01*q',
// q = u10*p' + u11*q'.
struct BasisTransform {
    std::int64_t u00 = 1, u01 = 0;
    std::int64_t u10 = 0, u11 = 1;
};

// Lagrange reduction of the lattice basis: returns a torus whose meridian is
// a shortest lattice vector and whose longitude is a shortest vector
// independent of it, with positive determinant, spanning the same lattice.
CuspTorus reduce_basis(const CuspTorus& torus);

// Same, but also reports the unimodular transform that was applied.
CuspTorus reduce_basis(const CuspTorus& torus, BasisTransform& transform);

// All slopes with length <= bound (up to the relative tolerance band;
// lengths inside the band are included and flagged), sorted by
// (length, p, q). bound must be positive and finite.
std::vector<SlopeLength> enumerate_slopes_below(const CuspTorus& torus, double bound,
                                                double rel_tol = kDefaultRelTolerance);

// Shortest slope intersecting s exactly once, i.e. the shortest curve that
// can serve as a longitude for the core of the filling solid torus. Ties in
// length are broken by the canonical slope ordering.
SlopeLength shortest_longitude(const CuspTorus& torus, const Slope& s);

}  // namespace fillcert
