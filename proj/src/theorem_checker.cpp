#include "fillcert/theorem_checker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace fillcert {

namespace {

double slope_test_threshold(int genus) {
    return kTwoPi * static_cast<double>(2 * genus - 1);
}

double longitude_test_threshold(int genus) {
    return 6.0 * static_cast<double>(2 * genus - 3);
}

// Shared skeleton of the two checks. with_longitudes switches the second
// length test (and the certificates) on.
CriterionReport run_check(const ManifoldInput& input, double rel_tol, bool with_longitudes) {
    validate_manifold(input);
    if (!(rel_tol >= 0.0) || !(rel_tol < 0.5)) {
        throw std::invalid_argument("tolerance must lie in [0, 0.5)");
    }

    CriterionReport report;
    report.genus = input.genus;
    report.rel_tolerance = rel_tol;

    if (input.genus == 1) {
        // A genus-1 splitting has nothing to destabilize and the criterion
        // holds with no length hypothesis at all. Report it as vacuously
        // true rather than running meaningless comparisons.
        report.vacuous = true;
        report.core_isotopy = Verdict::pass;
        report.heegaard_persists = Verdict::pass;
        return report;
    }

    std::size_t filled = 0;
    double min_len = std::numeric_limits<double>::infinity();
    const double slope_thr = slope_test_threshold(input.genus);
    const double long_thr = longitude_test_threshold(input.genus);

    Verdict core = Verdict::pass;
    Verdict full = Verdict::pass;
    for (std::size_t i = 0; i < input.cusps.size(); ++i) {
        if (!input.fillings[i].has_value()) continue;
        ++filled;
        const Slope& s = *input.fillings[i];
        const double len = slope_length(input.cusps[i], s);
        min_len = std::min(min_len, len);

        CuspCriterionRecord rec{.cusp_index = static_cast<int>(i),
                                .filling = s,
                                .slope_length_value = len,
                                .slope_threshold = slope_thr,
                                .slope_margin = len - slope_thr,
                                .slope_verdict = check_strictly_greater(len, slope_thr, rel_tol),
                                .longitude = std::nullopt,
                                .longitude_threshold = 0.0,
                                .longitude_margin = 0.0,
                                .longitude_verdict = std::nullopt,
                                .certificate = std::nullopt};
        core = verdict_and(core, rec.slope_verdict);
        full = verdict_and(full, rec.slope_verdict);

        if (with_longitudes) {
            const SlopeLength lambda = shortest_longitude(input.cusps[i], s);
            rec.longitude = lambda;
            rec.longitude_threshold = long_thr;
            rec.longitude_margin = lambda.length - long_thr;
            rec.longitude_verdict = check_strictly_greater(lambda.length, long_thr, rel_tol);
            full = verdict_and(full, *rec.longitude_verdict);
        }
        report.cusps.push_back(std::move(rec));
    }
    if (filled == 0) {
        throw std::invalid_argument("no filled cusps: nothing to certify");
    }

    report.core_isotopy = core;
    if (with_longitudes) {
        report.heegaard_persists = full;
    }

    if (core == Verdict::pass) {
        // Passing outside the band guarantees min_len > 2*pi*(2g - 1)
        // strictly, which is exactly the select_zeta precondition.
        report.min_filled_length = min_len;
        report.zeta = select_zeta(min_len, input.genus);
        if (with_longitudes) {
            for (auto& rec : report.cusps) {
                rec.certificate =
                    make_certificate(rec.slope_length_value, min_len, *report.zeta);
            }
        }
    }
    return report;
}

}  // namespace

void validate_manifold(const ManifoldInput& input) {
    if (input.cusps.empty()) {
        throw std::invalid_argument("manifold needs at least one cusp");
    }
    if (input.fillings.size() != input.cusps.size()) {
        throw std::invalid_argument("fillings array must match cusp count");
    }
    if (input.genus < 1) {
        throw std::invalid_argument("genus must be a positive integer");
    }
}

CriterionReport check_core_isotopy(const ManifoldInput& input, double rel_tol) {
    return run_check(input, rel_tol, false);
}

CriterionReport check_heegaard_persists(const ManifoldInput& input, double rel_tol) {
    return run_check(input, rel_tol, true);
}

std::vector<SlopeLength> enumerate_bad_slope_candidates(const CuspTorus& torus, int genus,
                                                        double rel_tol) {
    if (genus < 2) {
        throw std::invalid_argument("bad slope candidates need genus >= 2");
    }
    return enumerate_slopes_below(torus, slope_test_threshold(genus), rel_tol);
}

std::vector<DestabilizationLine> enumerate_destabilization_lines(const CuspTorus& torus,
                                                                 const Slope& s, int genus,
                                                                 double rel_tol) {
    if (genus < 2) {
        throw std::invalid_argument("destabilization lines need genus >= 2");
    }
    const std::vector<SlopeLength> shorts =
        enumerate_slopes_below(torus, longitude_test_threshold(genus), rel_tol);

    std::vector<DestabilizationLine> lines;
    for (const SlopeLength& cand : shorts) {
        if (intersection_number(cand.slope, s) != 1) continue;
        // Pin the line base to the translate of cand closest to the origin
        // in coordinate space; llround makes the choice deterministic.
        const double kk = -static_cast<double>(cand.slope.p() * s.p() + cand.slope.q() * s.q()) /
                          static_cast<double>(s.p() * s.p() + s.q() * s.q());
        const std::int64_t k = std::llround(kk);
        std::int64_t bp = cand.slope.p() + k * s.p();
        std::int64_t bq = cand.slope.q() + k * s.q();
        if (bp < 0 || (bp == 0 && bq < 0)) {
            bp = -bp;
            bq = -bq;
        }
        lines.push_back(DestabilizationLine{cand.slope, cand.length, cand.boundary_uncertain,
                                            Slope(bp, bq), s});
    }
    return lines;
}

std::optional<int> max_certified_genus(const CuspTorus& torus, const Slope& s,
                                       double rel_tol) {
    const double len = slope_length(torus, s);
    const SlopeLength lambda = shortest_longitude(torus, s);
    // Both thresholds are strictly increasing in g, so the pass set is an
    // interval starting at 2 (when nonempty) and we can stop at the first
    // non-pass. The caps below bound where the strict inequalities can hold.
    const double cap_slope = len / (2.0 * kTwoPi) + 0.5;
    const double cap_long = lambda.length / 12.0 + 1.5;
    const auto g_cap =
        static_cast<int>(std::floor(std::min(cap_slope, cap_long))) + 1;

    std::optional<int> best;
    for (int g = 2; g <= g_cap; ++g) {
        const Verdict v =
            verdict_and(check_strictly_greater(len, slope_test_threshold(g), rel_tol),
                        check_strictly_greater(lambda.length, longitude_test_threshold(g), rel_tol));
        if (v != Verdict::pass) break;
        best = g;
    }
    return best;
}

BoundaryObstruction boundary_obstruction(int genus, int boundary_count) {
    if (genus < 2) {
        throw std::invalid_argument("boundary obstruction needs genus >= 2");
    }
    if (boundary_count < 1) {
        throw std::invalid_argument("boundary obstruction needs at least one boundary curve");
    }
    const std::int64_t g = genus;
    const std::int64_t b = boundary_count;
    BoundaryObstruction ob;
    ob.lhs = 6 * b * (2 * g - 3);
    ob.euler_bound = 6 * (2 * g + b - 4);
    ob.witness = 2 * (g - 2) * (b - 1);
    return ob;
}

double euler_length_bound(int genus, int boundary_count) {
    if (genus < 0) {
        throw std::invalid_argument("genus must be nonnegative");
    }
    if (boundary_count < 1) {
        throw std::invalid_argument("surface must have boundary");
    }
    const int chi = 2 - 2 * genus - boundary_count;
    if (chi > 0) {
        throw std::domain_error("length bound needs nonpositive Euler characteristic");
    }
    return 6.0 * static_cast<double>(-chi);
}

}  // namespace fillcert
