// Acceptance gate for the certification tool. Each criterion prints one
// [PASS]/[FAIL] line; the process exits nonzero if any criterion fails.
//
// Criterion 7 drives the installed CLI binary; it needs FILLCERT_CLI set to
// the executable path and FILLCERT_FIXTURES set to the fixture directory
// (the ctest registration wires both).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fillcert/cusp_lattice.hpp"
#include "fillcert/filling_metric.hpp"
#include "fillcert/manifold_io.hpp"
#include "fillcert/theorem_checker.hpp"
#include "oracle.hpp"

using namespace fillcert;

namespace {

struct Criterion {
    const char* label;
    std::function<std::string()> run;  // returns "" on success, else the failure detail
};

double wall_seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(n - 1);
        out.push_back(lo * std::pow(hi / lo, f));
    }
    return out;
}

// ---- criterion 1: quadrature vs closed form --------------------------------

std::string criterion_quadrature() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto lengths = log_spaced(kTwoPi * 1.001, 1e3, 50);
    double worst = 0.0;
    for (double ell : lengths) {
        const double q = disk_area_quadrature(ell, 1e-10);
        const double c = disk_area_closed_form(ell);
        worst = std::max(worst, std::abs(q - c));
    }
    const double secs = wall_seconds(t0);
    std::ostringstream detail;
    detail << "max |quadrature - closed| = " << worst << " over 50 lengths, " << secs << "s";
    if (worst > 1e-8) return "tolerance exceeded: " + detail.str();
    if (secs >= 5.0) return "too slow: " + detail.str();
    std::cout << "        " << detail.str() << "\n";
    return "";
}

// ---- criterion 2: profile endpoints and the cosh identity ------------------

std::string criterion_profile() {
    const auto lengths = log_spaced(kTwoPi * 1.001, 1e3, 50);
    for (double ell : lengths) {
        const double r0 = compute_r0(compute_t_lim(ell));
        if (profile_f(ell, r0) != 0.0) {
            return "profile not exactly zero at r0 for length " + std::to_string(ell);
        }
        const double err = std::abs(profile_f(ell, 0.0) - ell);
        if (err > 1e-10 * ell) {
            return "profile off at the boundary: |f(0) - l| = " + std::to_string(err) +
                   " for length " + std::to_string(ell);
        }
    }
    for (double t : {0.01, 0.5, 0.75, 0.99}) {
        const double lhs = std::cosh(std::atanh(std::sqrt(t)));
        const double rhs = 1.0 / std::sqrt(1.0 - t);
        if (std::abs(lhs - rhs) > 1e-12 * rhs) {
            return "cosh(atanh(sqrt(t))) identity broken at t = " + std::to_string(t);
        }
    }
    return "";
}

// ---- criterion 3: the zeta selection chain ----------------------------------

std::string criterion_zeta_chain() {
    int checked = 0;
    for (int g = 2; g <= 10; ++g) {
        const double thr = kTwoPi * static_cast<double>(2 * g - 1);
        for (double ell : log_spaced(thr * 1.001, 1e3, 20)) {
            const double zeta = select_zeta(ell, g);
            const double zeta0 = zeta_feasibility_floor(ell, g);
            const double chi_term = kTwoPi * static_cast<double>(2 * g - 2);
            std::ostringstream at;
            at << " at g = " << g << ", length = " << ell;
            if (!(zeta > zeta0 && zeta < 1.0)) return "zeta outside (zeta0, 1)" + at.str();
            // Feasibility inequality for the interpolation parameter.
            if (!(ell > (kTwoPi / (zeta * zeta)) * (2 * g - 2 + zeta * zeta))) {
                return "feasibility inequality violated" + at.str();
            }
            // Chained comparison: the certified disk area must beat the
            // maximal area a compressing disk could have,
            // zeta * l^2/(l + 2*pi) > 2*pi*(2g - 2)/|kappa_max|.
            const double kappa = curvature_bound(ell, zeta);
            if (!(zeta * disk_area_closed_form(ell) > chi_term / std::abs(kappa))) {
                return "disk area chain violated" + at.str();
            }
            ++checked;
        }
    }
    std::cout << "        " << checked << " (genus, length) pairs, zero violations\n";
    return "";
}

// ---- criterion 4: enumeration against brute force ---------------------------

std::string criterion_enumeration() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0x5eed2026ull);
    const std::array<double, 3> bounds{5.0, 3.0 * kTwoPi, 50.0};
    long slope_checks = 0;
    long longitude_checks = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const testutil::RawBasis rb = testutil::random_basis(rng);
        const CuspTorus torus(Vec2{rb.mx, rb.my}, Vec2{rb.lx, rb.ly});
        for (double bound : bounds) {
            const auto expect = testutil::brute_slopes_below(rb, bound, 1e-9);
            const auto got = enumerate_slopes_below(torus, bound);
            std::ostringstream at;
            at << " (trial " << trial << ", bound " << bound << ")";
            if (got.size() != expect.size()) {
                return "enumeration size mismatch: " + std::to_string(got.size()) + " vs " +
                       std::to_string(expect.size()) + at.str();
            }
            for (std::size_t i = 0; i < got.size(); ++i) {
                const bool same = got[i].slope.p() == expect[i].p &&
                                  got[i].slope.q() == expect[i].q &&
                                  got[i].length == expect[i].length &&
                                  got[i].boundary_uncertain == expect[i].boundary_uncertain;
                if (!same) {
                    return "enumeration entry " + std::to_string(i) + " differs" + at.str();
                }
            }
            slope_checks += static_cast<long>(got.size());
        }
        // Shortest longitudes for the two axes plus two random slopes.
        std::vector<Slope> probes{Slope(1, 0), Slope(0, 1)};
        for (int extra = 0; extra < 2; ++extra) {
            const auto [p, q] = testutil::random_primitive_slope(rng);
            probes.emplace_back(p, q);
        }
        for (const Slope& s : probes) {
            const SlopeLength got = shortest_longitude(torus, s);
            const testutil::RawSlope expect =
                testutil::brute_shortest_longitude(rb, s.p(), s.q(), got.length);
            if (got.slope.p() != expect.p || got.slope.q() != expect.q ||
                got.length != expect.length) {
                std::ostringstream fail;
                fail << "shortest longitude differs at trial " << trial << " for slope ("
                     << s.p() << "," << s.q() << "): got (" << got.slope.p() << ","
                     << got.slope.q() << ") len " << got.length << ", brute force says ("
                     << expect.p << "," << expect.q << ") len " << expect.length;
                return fail.str();
            }
            ++longitude_checks;
        }
    }
    const double secs = wall_seconds(t0);
    std::ostringstream detail;
    detail << slope_checks << " enumerated slopes and " << longitude_checks
           << " longitudes cross-checked, zero discrepancies, " << secs << "s";
    if (secs >= 30.0) return "too slow: " + detail.str();
    std::cout << "        " << detail.str() << "\n";
    return "";
}

// ---- criterion 5: frozen reference values -----------------------------------

std::string criterion_reference_values() {
    const double slope_thr = kTwoPi * 3.0;  // genus 2
    if (std::abs(slope_thr - 18.849555921538759) > 1e-10) {
        return "genus-2 slope threshold drifted from 6*pi";
    }
    const double long_thr = 6.0 * (2.0 * 2.0 - 3.0);  // genus 2
    if (std::abs(long_thr - 6.0) > 1e-10) {
        return "genus-2 longitude threshold drifted from 6";
    }
    const CuspTorus sq(Vec2{40.0, 0.0}, Vec2{0.0, 40.0});
    const auto g = max_certified_genus(sq, Slope(1, 0));
    if (!g.has_value() || *g != 3) {
        return "max certified genus of the scaled square is not 3";
    }
    return "";
}

// ---- criterion 6: boundary obstruction, exhaustively ------------------------

std::string criterion_boundary_obstruction() {
    for (int g = 2; g <= 100; ++g) {
        for (int b = 1; b <= 100; ++b) {
            const BoundaryObstruction ob = boundary_obstruction(g, b);
            std::ostringstream at;
            at << " at g = " << g << ", b = " << b;
            if (ob.witness < 0) return "negative witness" + at.str();
            if (ob.lhs < ob.euler_bound) return "length budget below Euler bound" + at.str();
            if (ob.lhs - ob.euler_bound != 6 * ob.witness) {
                return "witness does not account for the gap" + at.str();
            }
            const bool equality = ob.lhs == ob.euler_bound;
            const bool expect_equality = (g == 2 || b == 1);
            if (equality != expect_equality) {
                return "equality cases are not exactly g = 2 or b = 1" + at.str();
            }
        }
    }
    std::cout << "        9900 (g, b) pairs, zero violations\n";
    return "";
}

// ---- criterion 7: CLI determinism over the fixture corpus -------------------

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_command(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

std::string criterion_cli_determinism() {
    const char* cli = std::getenv("FILLCERT_CLI");
    const char* fixtures = std::getenv("FILLCERT_FIXTURES");
    if (cli == nullptr || fixtures == nullptr) {
        return "FILLCERT_CLI / FILLCERT_FIXTURES not set";
    }
    std::vector<std::filesystem::path> docs;
    for (const auto& entry : std::filesystem::directory_iterator(fixtures)) {
        if (entry.path().extension() == ".json") docs.push_back(entry.path());
    }
    std::sort(docs.begin(), docs.end());
    if (docs.size() < 20) {
        return "expected at least 20 fixtures, found " + std::to_string(docs.size());
    }
    int verdict_codes[3] = {0, 0, 0};
    for (const auto& doc : docs) {
        const std::string cmd =
            std::string("'") + cli + "' check --input '" + doc.string() + "' 2>/dev/null";
        const RunResult first = run_command(cmd);
        const RunResult second = run_command(cmd);
        const std::string name = doc.filename().string();
        if (first.code != second.code || first.out != second.out) {
            return "output not reproducible for " + name;
        }
        if (first.out.empty()) return "empty report for " + name;

        // The process exit code must equal the verdict computed in-process.
        const ManifoldDocument md = load_manifold(doc.string());
        const CriterionReport rep = check_heegaard_persists(md.input);
        int expect = 2;
        switch (*rep.heegaard_persists) {
            case Verdict::pass: expect = 0; break;
            case Verdict::fail: expect = 1; break;
            case Verdict::uncertain: expect = 2; break;
        }
        if (first.code != expect) {
            return "exit code " + std::to_string(first.code) + " but verdict says " +
                   std::to_string(expect) + " for " + name;
        }
        ++verdict_codes[expect];
    }
    // The corpus is only a real test if every verdict class shows up.
    if (verdict_codes[0] == 0 || verdict_codes[1] == 0 || verdict_codes[2] == 0) {
        return "fixture corpus does not cover all three verdicts";
    }
    std::cout << "        " << docs.size() << " fixtures, twice each: byte-identical ("
              << verdict_codes[0] << " pass / " << verdict_codes[1] << " fail / "
              << verdict_codes[2] << " uncertain)\n";
    return "";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"criterion 1: quadrature matches the closed-form disk area", criterion_quadrature},
        {"criterion 2: tube profile endpoints and cosh identity", criterion_profile},
        {"criterion 3: zeta selection chain has zero violations", criterion_zeta_chain},
        {"criterion 4: enumeration agrees with brute force", criterion_enumeration},
        {"criterion 5: frozen threshold and genus reference values", criterion_reference_values},
        {"criterion 6: boundary obstruction bookkeeping, g,b <= 100", criterion_boundary_obstruction},
        {"criterion 7: CLI reports are deterministic with correct exit codes",
         criterion_cli_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
            std::cout << "[PASS] " << c.label << "\n";
        } else {
            ++failures;
            std::cout << "[FAIL] " << c.label << "\n       " << detail << "\n";
        }
    }
    if (failures > 0) {
        std::cout << failures << " of " << criteria.size() << " acceptance criteria failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
    return 0;
}
