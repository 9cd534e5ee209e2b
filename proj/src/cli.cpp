#include "fillcert/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "fillcert/json_writer.hpp"
#include "fillcert/manifold_io.hpp"
#include "fillcert/theorem_checker.hpp"

namespace fillcert {

namespace {

constexpr const char* kToolName = "fillcert";
constexpr const char* kToolVersion = "1.0.0";

enum class Format { json, csv, text };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw CLI::ValidationError("--format", "must be json, csv or text");
}

// CSV and text use 12 significant digits: readable, and documented as lossy
// next to the 17-digit JSON output.
std::string short_num(double v) {
    char tmp[32];
    std::snprintf(tmp, sizeof(tmp), "%.12g", v);
    return tmp;
}

std::string slope_str(const Slope& s) {
    return "(" + std::to_string(s.p()) + "," + std::to_string(s.q()) + ")";
}

void write_slope(JsonWriter& w, const Slope& s) {
    w.begin_array();
    w.value(s.p());
    w.value(s.q());
    w.end_array();
}

void write_meta(JsonWriter& w, const char* command, const std::string& name,
                double tolerance) {
    w.key("tool");
    w.value(kToolName);
    w.key("version");
    w.value(kToolVersion);
    w.key("command");
    w.value(command);
    w.key("name");
    w.value(name);
    w.key("tolerance");
    w.value(tolerance);
}

void write_certificate(JsonWriter& w, const MetricCertificate& c) {
    w.begin_object();
    w.key("slope_length");
    w.value(c.slope_length);
    w.key("zeta");
    w.value(c.zeta);
    w.key("t_lim");
    w.value(c.t_lim);
    w.key("r0");
    w.value(c.r0);
    w.key("kappa_max");
    w.value(c.kappa_max);
    w.key("disk_area_lower_bound");
    w.value(c.disk_area_lower_bound);
    w.key("disk_area_limit");
    w.value(c.disk_area_limit);
    w.end_object();
}

int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::pass: return kExitPass;
        case Verdict::fail: return kExitFail;
        case Verdict::uncertain: return kExitUncertain;
    }
    return kExitUncertain;
}

// ---- check ----------------------------------------------------------------

std::string render_check_json(const CriterionReport& r, const std::string& name,
                              std::size_t cusp_count, int exit_code) {
    JsonWriter w;
    w.begin_object();
    write_meta(w, "check", name, r.rel_tolerance);
    w.key("genus");
    w.value(r.genus);
    w.key("cusp_count");
    w.value(static_cast<std::int64_t>(cusp_count));
    w.key("vacuous");
    w.value(r.vacuous);
    w.key("cusps");
    w.begin_array();
    for (const auto& c : r.cusps) {
        w.begin_object();
        w.key("index");
        w.value(c.cusp_index);
        w.key("filling");
        write_slope(w, c.filling);
        w.key("slope_length");
        w.value(c.slope_length_value);
        w.key("slope_threshold");
        w.value(c.slope_threshold);
        w.key("slope_margin");
        w.value(c.slope_margin);
        w.key("slope_verdict");
        w.value(to_string(c.slope_verdict));
        if (c.longitude.has_value()) {
            w.key("longitude");
            write_slope(w, c.longitude->slope);
            w.key("longitude_length");
            w.value(c.longitude->length);
            w.key("longitude_threshold");
            w.value(c.longitude_threshold);
            w.key("longitude_margin");
            w.value(c.longitude_margin);
            w.key("longitude_verdict");
            w.value(to_string(*c.longitude_verdict));
        }
        w.key("certificate");
        if (c.certificate.has_value()) {
            write_certificate(w, *c.certificate);
        } else {
            w.null();
        }
        w.end_object();
    }
    w.end_array();
    w.key("min_filled_length");
    if (r.min_filled_length.has_value()) {
        w.value(*r.min_filled_length);
    } else {
        w.null();
    }
    w.key("zeta");
    if (r.zeta.has_value()) {
        w.value(*r.zeta);
    } else {
        w.null();
    }
    w.key("core_isotopy");
    w.value(to_string(r.core_isotopy));
    w.key("heegaard_persists");
    w.value(to_string(*r.heegaard_persists));
    w.key("exit_code");
    w.value(exit_code);
    w.end_object();
    return w.str();
}

std::string render_check_csv(const CriterionReport& r) {
    std::string out =
        "cusp,filling_p,filling_q,slope_length,slope_threshold,slope_margin,slope_verdict,"
        "longitude_p,longitude_q,longitude_length,longitude_threshold,longitude_margin,"
        "longitude_verdict\n";
    for (const auto& c : r.cusps) {
        out += std::to_string(c.cusp_index) + ',' + std::to_string(c.filling.p()) + ',' +
               std::to_string(c.filling.q()) + ',' + short_num(c.slope_length_value) + ',' +
               short_num(c.slope_threshold) + ',' + short_num(c.slope_margin) + ',' +
               to_string(c.slope_verdict);
        if (c.longitude.has_value()) {
            out += ',' + std::to_string(c.longitude->slope.p()) + ',' +
                   std::to_string(c.longitude->slope.q()) + ',' + short_num(c.longitude->length) +
                   ',' + short_num(c.longitude_threshold) + ',' + short_num(c.longitude_margin) +
                   ',' + to_string(*c.longitude_verdict);
        } else {
            out += ",,,,,,";
        }
        out += '\n';
    }
    return out;
}

std::string render_check_text(const CriterionReport& r, const std::string& name) {
    std::ostringstream out;
    out << kToolName << " check";
    if (!name.empty()) out << ": " << name;
    out << "\ngenus " << r.genus << ", tolerance " << short_num(r.rel_tolerance) << "\n";
    if (r.vacuous) {
        out << "genus 1 splitting: nothing to certify, vacuously true\n";
    }
    for (const auto& c : r.cusps) {
        out << "cusp " << c.cusp_index << ": filling " << slope_str(c.filling) << " length "
            << short_num(c.slope_length_value) << " vs " << short_num(c.slope_threshold)
            << " margin " << short_num(c.slope_margin) << " [" << to_string(c.slope_verdict)
            << "]\n";
        if (c.longitude.has_value()) {
            out << "        longitude " << slope_str(c.longitude->slope) << " length "
                << short_num(c.longitude->length) << " vs " << short_num(c.longitude_threshold)
                << " margin " << short_num(c.longitude_margin) << " ["
                << to_string(*c.longitude_verdict) << "]\n";
        }
    }
    if (r.zeta.has_value()) {
        out << "zeta " << short_num(*r.zeta) << " (min filled length "
            << short_num(*r.min_filled_length) << ")\n";
    }
    out << "core isotopy: " << to_string(r.core_isotopy) << "\n";
    out << "heegaard persists: " << to_string(*r.heegaard_persists) << "\n";
    return out.str();
}

// ---- bad-slopes -----------------------------------------------------------

std::string render_bad_slopes_json(const std::vector<std::vector<SlopeLength>>& per_cusp,
                                   const std::string& name, int genus, double threshold,
                                   double tolerance) {
    JsonWriter w;
    w.begin_object();
    write_meta(w, "bad-slopes", name, tolerance);
    w.key("genus");
    w.value(genus);
    w.key("threshold");
    w.value(threshold);
    w.key("cusps");
    w.begin_array();
    for (std::size_t i = 0; i < per_cusp.size(); ++i) {
        w.begin_object();
        w.key("index");
        w.value(static_cast<std::int64_t>(i));
        w.key("count");
        w.value(static_cast<std::int64_t>(per_cusp[i].size()));
        w.key("slopes");
        w.begin_array();
        for (const auto& sl : per_cusp[i]) {
            w.begin_object();
            w.key("slope");
            write_slope(w, sl.slope);
            w.key("length");
            w.value(sl.length);
            w.key("boundary_uncertain");
            w.value(sl.boundary_uncertain);
            w.end_object();
        }
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.key("exit_code");
    w.value(kExitPass);
    w.end_object();
    return w.str();
}

std::string render_bad_slopes_csv(const std::vector<std::vector<SlopeLength>>& per_cusp) {
    std::string out = "cusp,p,q,length,boundary_uncertain\n";
    for (std::size_t i = 0; i < per_cusp.size(); ++i) {
        for (const auto& sl : per_cusp[i]) {
            out += std::to_string(i) + ',' + std::to_string(sl.slope.p()) + ',' +
                   std::to_string(sl.slope.q()) + ',' + short_num(sl.length) + ',' +
                   (sl.boundary_uncertain ? "true" : "false") + '\n';
        }
    }
    return out;
}

std::string render_bad_slopes_text(const std::vector<std::vector<SlopeLength>>& per_cusp,
                                   int genus, double threshold) {
    std::ostringstream out;
    out << kToolName << " bad-slopes: genus " << genus << ", slope threshold "
        << short_num(threshold) << "\n";
    for (std::size_t i = 0; i < per_cusp.size(); ++i) {
        out << "cusp " << i << ": " << per_cusp[i].size() << " slope(s) at or below threshold\n";
        for (const auto& sl : per_cusp[i]) {
            out << "  " << slope_str(sl.slope) << " length " << short_num(sl.length)
                << (sl.boundary_uncertain ? " (boundary)" : "") << "\n";
        }
    }
    return out.str();
}

// ---- destab-lines ----------------------------------------------------------

struct DestabCusp {
    std::size_t index;
    Slope filling;
    std::vector<DestabilizationLine> lines;
};

std::string render_destab_json(const std::vector<DestabCusp>& cusps, const std::string& name,
                               int genus, double threshold, double tolerance) {
    JsonWriter w;
    w.begin_object();
    write_meta(w, "destab-lines", name, tolerance);
    w.key("genus");
    w.value(genus);
    w.key("threshold");
    w.value(threshold);
    w.key("cusps");
    w.begin_array();
    for (const auto& c : cusps) {
        w.begin_object();
        w.key("index");
        w.value(static_cast<std::int64_t>(c.index));
        w.key("filling");
        write_slope(w, c.filling);
        w.key("count");
        w.value(static_cast<std::int64_t>(c.lines.size()));
        w.key("lines");
        w.begin_array();
        for (const auto& ln : c.lines) {
            w.begin_object();
            w.key("longitude");
            write_slope(w, ln.longitude);
            w.key("length");
            w.value(ln.length);
            w.key("boundary_uncertain");
            w.value(ln.boundary_uncertain);
            w.key("line_base");
            write_slope(w, ln.line_base);
            w.key("line_direction");
            write_slope(w, ln.line_direction);
            w.end_object();
        }
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.key("exit_code");
    w.value(kExitPass);
    w.end_object();
    return w.str();
}

std::string render_destab_csv(const std::vector<DestabCusp>& cusps) {
    std::string out =
        "cusp,longitude_p,longitude_q,length,boundary_uncertain,base_p,base_q,dir_p,dir_q\n";
    for (const auto& c : cusps) {
        for (const auto& ln : c.lines) {
            out += std::to_string(c.index) + ',' + std::to_string(ln.longitude.p()) + ',' +
                   std::to_string(ln.longitude.q()) + ',' + short_num(ln.length) + ',' +
                   (ln.boundary_uncertain ? "true" : "false") + ',' +
                   std::to_string(ln.line_base.p()) + ',' + std::to_string(ln.line_base.q()) +
                   ',' + std::to_string(ln.line_direction.p()) + ',' +
                   std::to_string(ln.line_direction.q()) + '\n';
        }
    }
    return out;
}

std::string render_destab_text(const std::vector<DestabCusp>& cusps, int genus,
                               double threshold) {
    std::ostringstream out;
    out << kToolName << " destab-lines: genus " << genus << ", longitude threshold "
        << short_num(threshold) << "\n";
    for (const auto& c : cusps) {
        out << "cusp " << c.index << ": filling " << slope_str(c.filling) << ", "
            << c.lines.size() << " short curve(s) meeting it once\n";
        for (const auto& ln : c.lines) {
            out << "  " << slope_str(ln.longitude) << " length " << short_num(ln.length)
                << " on line " << slope_str(ln.line_base) << " + k*"
                << slope_str(ln.line_direction) << (ln.boundary_uncertain ? " (boundary)" : "")
                << "\n";
        }
    }
    return out.str();
}

// ---- metric ---------------------------------------------------------------

std::string render_metric_json(const MetricCertificate& cert, int genus, bool feasible,
                               double tolerance) {
    JsonWriter w;
    w.begin_object();
    write_meta(w, "metric", "", tolerance);
    w.key("genus");
    w.value(genus);
    w.key("zeta_feasible");
    w.value(feasible);
    w.key("certificate");
    write_certificate(w, cert);
    w.key("exit_code");
    w.value(kExitPass);
    w.end_object();
    return w.str();
}

std::string render_metric_csv(const MetricCertificate& c) {
    std::string out =
        "slope_length,zeta,t_lim,r0,kappa_max,disk_area_lower_bound,disk_area_limit\n";
    out += short_num(c.slope_length) + ',' + short_num(c.zeta) + ',' + short_num(c.t_lim) +
           ',' + short_num(c.r0) + ',' + short_num(c.kappa_max) + ',' +
           short_num(c.disk_area_lower_bound) + ',' + short_num(c.disk_area_limit) + '\n';
    return out;
}

std::string render_metric_text(const MetricCertificate& c, int genus, bool feasible) {
    std::ostringstream out;
    out << kToolName << " metric: slope length " << short_num(c.slope_length) << ", genus "
        << genus << "\n";
    out << "t_lim " << short_num(c.t_lim) << ", r0 " << short_num(c.r0) << "\n";
    out << "zeta " << short_num(c.zeta)
        << (feasible ? "" : " (fallback: length hypothesis not met at this genus)") << "\n";
    out << "kappa_max " << short_num(c.kappa_max) << "\n";
    out << "disk area >= " << short_num(c.disk_area_lower_bound) << " (limit "
        << short_num(c.disk_area_limit) << ")\n";
    return out.str();
}

// ---- max-genus -------------------------------------------------------------

struct MaxGenusCusp {
    std::size_t index;
    Slope filling;
    double slope_len;
    SlopeLength longitude;
    std::optional<int> genus;
};

std::string render_max_genus_json(const std::vector<MaxGenusCusp>& cusps,
                                  const std::optional<int>& overall, const std::string& name,
                                  double tolerance, int exit_code) {
    JsonWriter w;
    w.begin_object();
    write_meta(w, "max-genus", name, tolerance);
    w.key("cusps");
    w.begin_array();
    for (const auto& c : cusps) {
        w.begin_object();
        w.key("index");
        w.value(static_cast<std::int64_t>(c.index));
        w.key("filling");
        write_slope(w, c.filling);
        w.key("slope_length");
        w.value(c.slope_len);
        w.key("longitude");
        write_slope(w, c.longitude.slope);
        w.key("longitude_length");
        w.value(c.longitude.length);
        w.key("max_genus");
        if (c.genus.has_value()) {
            w.value(*c.genus);
        } else {
            w.null();
        }
        w.end_object();
    }
    w.end_array();
    w.key("max_genus");
    if (overall.has_value()) {
        w.value(*overall);
    } else {
        w.null();
    }
    w.key("exit_code");
    w.value(exit_code);
    w.end_object();
    return w.str();
}

std::string render_max_genus_csv(const std::vector<MaxGenusCusp>& cusps) {
    std::string out = "cusp,filling_p,filling_q,slope_length,longitude_length,max_genus\n";
    for (const auto& c : cusps) {
        out += std::to_string(c.index) + ',' + std::to_string(c.filling.p()) + ',' +
               std::to_string(c.filling.q()) + ',' + short_num(c.slope_len) + ',' +
               short_num(c.longitude.length) + ',' +
               (c.genus.has_value() ? std::to_string(*c.genus) : std::string("none")) + '\n';
    }
    return out;
}

std::string render_max_genus_text(const std::vector<MaxGenusCusp>& cusps,
                                  const std::optional<int>& overall) {
    std::ostringstream out;
    out << kToolName << " max-genus\n";
    for (const auto& c : cusps) {
        out << "cusp " << c.index << ": filling " << slope_str(c.filling) << " length "
            << short_num(c.slope_len) << ", longitude " << slope_str(c.longitude.slope)
            << " length " << short_num(c.longitude.length) << ", max genus ";
        if (c.genus.has_value()) {
            out << *c.genus;
        } else {
            out << "none";
        }
        out << "\n";
    }
    out << "overall: ";
    if (overall.has_value()) {
        out << "genus up to " << *overall << " certified\n";
    } else {
        out << "no genus certified\n";
    }
    return out.str();
}

// ---- driver ----------------------------------------------------------------

struct CommonOpts {
    std::string input_path;
    std::string format_name = "json";
    double tolerance = kDefaultRelTolerance;
    bool tolerance_set = false;
    int genus_override = 0;
    bool genus_set = false;
};

// Tolerance precedence: --tolerance flag, then FILLCERT_TOLERANCE, then the
// built-in default.
double resolve_tolerance(const CommonOpts& o) {
    if (o.tolerance_set) return o.tolerance;
    if (const char* env = std::getenv("FILLCERT_TOLERANCE")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v >= 0.0) || !(v < 0.5)) {
            throw CLI::ValidationError("FILLCERT_TOLERANCE",
                                       "must be a number in [0, 0.5)");
        }
        return v;
    }
    return kDefaultRelTolerance;
}

int effective_genus(const CommonOpts& o, const ManifoldDocument& doc) {
    return o.genus_set ? o.genus_override : doc.input.genus;
}

int run_cli_throwing(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err) {
    CLI::App app{"certifies Heegaard genus preservation under Dehn filling from "
                 "cusp cross-section geometry"};
    app.name(kToolName);
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    CommonOpts opt;
    double metric_length = 0.0;
    int metric_genus = 2;

    auto add_common = [&opt](CLI::App* cmd, bool needs_input) {
        if (needs_input) {
            cmd->add_option("--input,-i", opt.input_path, "manifold JSON document")
                ->required();
        }
        cmd->add_option("--format,-f", opt.format_name, "output format: json, csv or text");
        cmd->add_option("--tolerance,-t", opt.tolerance,
                        "relative width of the uncertainty band around thresholds")
            ->check(CLI::Range(0.0, 0.499999999))
            ->each([&opt](const std::string&) { opt.tolerance_set = true; });
    };
    auto add_genus_override = [&opt](CLI::App* cmd) {
        cmd->add_option("--genus,-g", opt.genus_override,
                        "override the genus stored in the document")
            ->check(CLI::PositiveNumber)
            ->each([&opt](const std::string&) { opt.genus_set = true; });
    };

    CLI::App* c_check = app.add_subcommand("check", "run both length tests on every filled cusp");
    add_common(c_check, true);
    add_genus_override(c_check);

    CLI::App* c_bad = app.add_subcommand(
        "bad-slopes", "list slopes too short for the core isotopy test at this genus");
    add_common(c_bad, true);
    add_genus_override(c_bad);

    CLI::App* c_destab = app.add_subcommand(
        "destab-lines", "list short curves meeting each filling once (destabilization directions)");
    add_common(c_destab, true);
    add_genus_override(c_destab);

    CLI::App* c_metric = app.add_subcommand(
        "metric", "print the tube metric certificate for one slope length");
    c_metric->add_option("--length,-l", metric_length, "slope length (must exceed 2*pi)")
        ->required();
    c_metric->add_option("--genus,-g", metric_genus, "genus used for the zeta selection")
        ->check(CLI::PositiveNumber);
    add_common(c_metric, false);

    CLI::App* c_max = app.add_subcommand(
        "max-genus", "largest genus certified for each filled cusp");
    add_common(c_max, true);

    try {
        // CLI11's vector overload consumes arguments back to front.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitPass;
    } catch (const CLI::CallForVersion& e) {
        app.exit(e, out, err);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    const double tol = resolve_tolerance(opt);
    const Format format = parse_format(opt.format_name);

    if (c_metric->parsed()) {
        // The certificate itself only needs length > 2*pi. When the length
        // also clears the slope test at this genus the zeta selection is
        // guaranteed; otherwise fall back to zeta = 1/2 and say so.
        bool feasible = true;
        double zeta = 0.0;
        try {
            zeta = select_zeta(metric_length, metric_genus);
        } catch (const std::domain_error&) {
            feasible = false;
            zeta = 0.5;
        }
        const MetricCertificate cert = make_certificate(metric_length, metric_length, zeta);
        switch (format) {
            case Format::json:
                out << render_metric_json(cert, metric_genus, feasible, tol) << "\n";
                break;
            case Format::csv: out << render_metric_csv(cert); break;
            case Format::text: out << render_metric_text(cert, metric_genus, feasible); break;
        }
        return kExitPass;
    }

    const ManifoldDocument doc = load_manifold(opt.input_path);

    if (c_check->parsed()) {
        ManifoldInput input = doc.input;
        input.genus = effective_genus(opt, doc);
        const CriterionReport report = check_heegaard_persists(input, tol);
        const int code = exit_code_for(*report.heegaard_persists);
        switch (format) {
            case Format::json:
                out << render_check_json(report, doc.name, input.cusps.size(), code) << "\n";
                break;
            case Format::csv: out << render_check_csv(report); break;
            case Format::text: out << render_check_text(report, doc.name); break;
        }
        return code;
    }

    if (c_bad->parsed()) {
        const int genus = effective_genus(opt, doc);
        std::vector<std::vector<SlopeLength>> per_cusp;
        per_cusp.reserve(doc.input.cusps.size());
        for (const auto& torus : doc.input.cusps) {
            per_cusp.push_back(enumerate_bad_slope_candidates(torus, genus, tol));
        }
        const double threshold = kTwoPi * static_cast<double>(2 * genus - 1);
        switch (format) {
            case Format::json:
                out << render_bad_slopes_json(per_cusp, doc.name, genus, threshold, tol) << "\n";
                break;
            case Format::csv: out << render_bad_slopes_csv(per_cusp); break;
            case Format::text: out << render_bad_slopes_text(per_cusp, genus, threshold); break;
        }
        return kExitPass;
    }

    if (c_destab->parsed()) {
        const int genus = effective_genus(opt, doc);
        std::vector<DestabCusp> cusps;
        for (std::size_t i = 0; i < doc.input.cusps.size(); ++i) {
            if (!doc.input.fillings[i].has_value()) continue;
            cusps.push_back(DestabCusp{
                i, *doc.input.fillings[i],
                enumerate_destabilization_lines(doc.input.cusps[i], *doc.input.fillings[i],
                                                genus, tol)});
        }
        if (cusps.empty()) {
            throw std::invalid_argument("no filled cusps: nothing to certify");
        }
        const double threshold = 6.0 * static_cast<double>(2 * genus - 3);
        switch (format) {
            case Format::json:
                out << render_destab_json(cusps, doc.name, genus, threshold, tol) << "\n";
                break;
            case Format::csv: out << render_destab_csv(cusps); break;
            case Format::text: out << render_destab_text(cusps, genus, threshold); break;
        }
        return kExitPass;
    }

    // max-genus
    std::vector<MaxGenusCusp> cusps;
    std::optional<int> overall;
    bool any_none = false;
    for (std::size_t i = 0; i < doc.input.cusps.size(); ++i) {
        if (!doc.input.fillings[i].has_value()) continue;
        const CuspTorus& torus = doc.input.cusps[i];
        const Slope& s = *doc.input.fillings[i];
        MaxGenusCusp c{i, s, slope_length(torus, s), shortest_longitude(torus, s),
                       max_certified_genus(torus, s, tol)};
        if (c.genus.has_value()) {
            overall = overall.has_value() ? std::min(*overall, *c.genus) : *c.genus;
        } else {
            any_none = true;
        }
        cusps.push_back(c);
    }
    if (cusps.empty()) {
        throw std::invalid_argument("no filled cusps: nothing to certify");
    }
    if (any_none) overall.reset();
    const int code = overall.has_value() ? kExitPass : kExitFail;
    switch (format) {
        case Format::json:
            out << render_max_genus_json(cusps, overall, doc.name, tol, code) << "\n";
            break;
        case Format::csv: out << render_max_genus_csv(cusps); break;
        case Format::text: out << render_max_genus_text(cusps, overall); break;
    }
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_cli_throwing(args, out, err);
    } catch (const CLI::ValidationError& e) {
        err << kToolName << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << kToolName << ": " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace fillcert
