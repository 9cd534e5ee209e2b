#pragma once

#include <cmath>

namespace fillcert {

// Plain 2D vector over doubles. Cusp cross-section translations live here,
// so keep the arithmetic dead simple and inlined: downstream code relies on
// getting the exact same double out of the same inputs everywhere.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// Signed area of the parallelogram spanned by (a, b).
inline double det(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double norm_sq(Vec2 v) { return v.x * v.x + v.y * v.y; }
inline double norm(Vec2 v) { return std::sqrt(norm_sq(v)); }

}  // namespace fillcert
