#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fillcert {

// Outcome of a certified strict inequality. Everything the tool reports is a
// conjunction of these, so the ordering matters: one definite failure makes
// the whole certificate fail, while a value sitting inside the tolerance band
// can only ever downgrade a pass to uncertain.
enum class Verdict {
    pass,
    fail,
    uncertain,
};

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::uncertain: return "uncertain";
    }
    return "uncertain";
}

// Default width of the relative band around every threshold comparison.
inline constexpr double kDefaultRelTolerance = 1e-9;

// Decide "value > threshold" as a tri-state. Values within
// rel_tol * max(|value|, |threshold|) of the threshold are uncertain.
inline Verdict check_strictly_greater(double value, double threshold, double rel_tol) {
    if (!(rel_tol >= 0.0) || !std::isfinite(rel_tol)) {
        throw std::invalid_argument("tolerance must be a finite nonnegative number");
    }
    if (!std::isfinite(value) || !std::isfinite(threshold)) {
        throw std::invalid_argument("cannot compare non-finite values");
    }
    const double band = rel_tol * std::max(std::abs(value), std::abs(threshold));
    if (std::abs(value - threshold) <= band) return Verdict::uncertain;
    return value > threshold ? Verdict::pass : Verdict::fail;
}

// True when |value - threshold| lands inside the relative band, i.e. the
// comparison above would report uncertain.
inline bool within_band(double value, double threshold, double rel_tol) {
    const double band = rel_tol * std::max(std::abs(value), std::abs(threshold));
    return std::abs(value - threshold) <= band;
}

// Conjunction of verdicts: fail dominates, then uncertain, then pass.
inline Verdict verdict_and(Verdict a, Verdict b) {
    if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
    if (a == Verdict::uncertain || b == Verdict::uncertain) return Verdict::uncertain;
    return Verdict::pass;
}

}  // namespace fillcert
