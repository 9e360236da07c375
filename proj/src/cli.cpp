#include "gaborlab/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gaborlab/bargmann_fock.hpp"
#include "gaborlab/entire_function.hpp"
#include "gaborlab/exec.hpp"
#include "gaborlab/gabor_core.hpp"
#include "gaborlab/indicator_lab.hpp"
#include "gaborlab/io.hpp"
#include "gaborlab/phase_space.hpp"
#include "gaborlab/special_functions.hpp"
#include "gaborlab/time_function.hpp"

namespace gaborlab {
namespace {

using nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

// Malformed values discovered after CLI11 parsing (mini-grammar strings)
// are usage errors, not module failures.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_real(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": malformed real '" + s + "'");
    }
}

long parse_integer(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": malformed integer '" + s + "'");
    }
}

PhasePoint parse_point(const std::string& s, const char* what) {
    const auto parts = split(s, ':');
    if (parts.size() != 2) throw UsageError(std::string(what) + ": expected x:y, got '" + s + "'");
    return PhasePoint{parse_real(parts[0], what), parse_real(parts[1], what)};
}

std::vector<PhasePoint> parse_point_list(const std::string& s, const char* what) {
    std::vector<PhasePoint> out;
    for (const auto& item : split(s, ',')) out.push_back(parse_point(item, what));
    return out;
}

std::complex<double> parse_complex(const std::string& s, const char* what) {
    const PhasePoint p = parse_point(s, what);
    return {p.xi, p.eta};
}

std::vector<std::complex<double>> parse_complex_list(const std::string& s, const char* what) {
    std::vector<std::complex<double>> out;
    for (const auto& item : split(s, ',')) out.push_back(parse_complex(item, what));
    return out;
}

// Time-function grammar: gauss | shift:X:Y | tpow:K.
TimeFunctionSpec parse_time_function(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts[0] == "gauss" && parts.size() == 1) return TimeFunctionSpec::gaussian();
    if (parts[0] == "shift" && parts.size() == 3)
        return TimeFunctionSpec::shifted_gaussian(parse_real(parts[1], "--target"),
                                                  parse_real(parts[2], "--target"));
    if (parts[0] == "tpow" && parts.size() == 2)
        return TimeFunctionSpec::monomial_gaussian(
            static_cast<int>(parse_integer(parts[1], "--target")));
    throw UsageError("--target: expected gauss | shift:X:Y | tpow:K, got '" + s + "'");
}

// Entire-function grammar:
//   one | s | monomial:N | expq:RE:IM | mlfhalf:SCALE
//   | quot:SPEC:RE:IM       (SPEC any spec; RE:IM parsed from the right)
//   | prod:SPEC,SPEC,...    (comma-separated factors)
EntireFunctionSpec parse_function(const std::string& s) {
    if (s == "one") return EntireFunctionSpec::one();
    if (s == "s") return EntireFunctionSpec::s_function();
    if (s.rfind("monomial:", 0) == 0)
        return EntireFunctionSpec::monomial(
            static_cast<int>(parse_integer(s.substr(9), "--function")));
    if (s.rfind("expq:", 0) == 0) {
        const auto parts = split(s.substr(5), ':');
        if (parts.size() != 2) throw UsageError("--function: expq takes RE:IM, got '" + s + "'");
        return EntireFunctionSpec::exp_quadratic(
            {parse_real(parts[0], "--function"), parse_real(parts[1], "--function")});
    }
    if (s.rfind("mlfhalf:", 0) == 0)
        return EntireFunctionSpec::mittag_leffler_half(parse_real(s.substr(8), "--function"));
    if (s.rfind("quot:", 0) == 0) {
        const std::string rest = s.substr(5);
        const std::size_t c2 = rest.rfind(':');
        if (c2 == std::string::npos) throw UsageError("--function: quot takes SPEC:RE:IM");
        const std::size_t c1 = rest.rfind(':', c2 - 1);
        if (c1 == std::string::npos) throw UsageError("--function: quot takes SPEC:RE:IM");
        const std::complex<double> root{parse_real(rest.substr(c1 + 1, c2 - c1 - 1), "--function"),
                                        parse_real(rest.substr(c2 + 1), "--function")};
        return EntireFunctionSpec::quotient_by_linear(parse_function(rest.substr(0, c1)), root);
    }
    if (s.rfind("prod:", 0) == 0) {
        std::vector<EntireFunctionSpec> factors;
        for (const auto& item : split(s.substr(5), ','))
            factors.push_back(parse_function(item));
        return EntireFunctionSpec::product(std::move(factors));
    }
    throw UsageError("--function: unknown spec '" + s + "'");
}

struct RunContext {
    std::filesystem::path out_dir;
    std::string format = "csv";
    std::uint64_t seed = 0;
    bool serial = false;
    std::string subcommand;
    ordered_json params = ordered_json::object();
    ordered_json results = ordered_json::object();
    std::vector<std::string> outputs;

    Exec exec() const { return serial ? Exec::serial : Exec::parallel; }

    std::string render_cell(const ordered_json& cell) const {
        if (cell.is_null()) return "";
        if (cell.is_string()) return cell.get<std::string>();
        if (cell.is_number_float()) return io::format_real(cell.get<double>());
        return cell.dump();
    }

    void write_table(const std::string& stem, const std::vector<std::string>& columns,
                     const ordered_json& rows) {
        if (format == "json") {
            ordered_json j;
            j["columns"] = columns;
            j["rows"] = rows;
            write_json(stem, j);
            return;
        }
        std::string text = io::csv_line(columns);
        for (const auto& row : rows) {
            std::vector<std::string> cells;
            for (const auto& cell : row) cells.push_back(render_cell(cell));
            text += io::csv_line(cells);
        }
        const std::string name = stem + ".csv";
        io::write_text_file((out_dir / name).string(), text);
        outputs.push_back(name);
    }

    void write_json(const std::string& stem, const ordered_json& j) {
        const std::string name = stem + ".json";
        io::write_text_file((out_dir / name).string(), j.dump(2) + "\n");
        outputs.push_back(name);
    }

    void write_manifest() {
        ordered_json j;
        j["subcommand"] = subcommand;
        params["out"] = out_dir.string();
        params["format"] = format;
        params["seed"] = seed;
        params["serial"] = serial;
        j["parameters"] = params;
        j["outputs"] = outputs;
        j["results"] = results;
        io::write_text_file((out_dir / "run.json").string(), j.dump(2) + "\n");
    }
};

// Option storage shared across subcommands (exactly one subcommand parses).
struct Opts {
    std::string set = "axes";
    double a = 1.0;
    double b = 1.0;
    std::string omit;
    std::string points;
    std::vector<double> r;
    double theta = 0.0;
    double vartheta = 2.0 * kPi;
    std::string z;
    int thetas = 256;
    double eps = 0.3;
    std::string function = "s";
    std::string target = "gauss";
    double reg = 0.0;
    bool dump_matrix = false;
    std::vector<double> dirs;
    bool integrate = false;
    int grid = 256;
    int random_count = 0;
    double x = 0.0;
    double y = 0.0;
    std::vector<double> t;
};

PointSetSpec build_point_set(const Opts& o, RunContext& ctx) {
    ctx.params["set"] = o.set;
    if (o.set == "axes") return PointSetSpec::axes_theorem1();
    if (o.set == "lattice") {
        ctx.params["a"] = o.a;
        ctx.params["b"] = o.b;
        return PointSetSpec::lattice(o.a, o.b);
    }
    if (o.set == "lattice-minus") {
        if (o.omit.empty()) throw UsageError("--omit is required with --set lattice-minus");
        ctx.params["a"] = o.a;
        ctx.params["b"] = o.b;
        ctx.params["omit"] = o.omit;
        return PointSetSpec::lattice_minus_point(o.a, o.b, parse_point(o.omit, "--omit"));
    }
    if (o.set == "explicit") {
        if (o.points.empty()) throw UsageError("--points is required with --set explicit");
        ctx.params["points"] = o.points;
        return PointSetSpec::explicit_list(parse_point_list(o.points, "--points"));
    }
    throw UsageError("--set: unknown point set '" + o.set + "'");
}

double single_radius(const std::vector<double>& r) {
    if (r.size() != 1) throw UsageError("--r: exactly one radius expected here");
    return r.front();
}

std::vector<double> default_indicator_ladder() {
    std::vector<double> ladder;
    for (int i = 0; i <= 10; ++i) ladder.push_back(10.0 + 1.5 * i);
    return ladder;
}

ordered_json direction_report(const DirectionSet& ds) {
    const LevelCheckReport rep = level_inequality_check(ds);
    ordered_json j;
    j["angles"] = ds.angles();
    j["integral"] = rep.integral;
    j["passes"] = rep.passes;
    return j;
}

IndicatorProfile profile_from_opts(const Opts& o, RunContext& ctx) {
    const std::vector<double> ladder = o.r.empty() ? default_indicator_ladder() : o.r;
    ctx.params["function"] = o.function;
    ctx.params["thetas"] = o.thetas;
    ctx.params["r"] = ladder;
    return estimate_indicator(parse_function(o.function), o.thetas, ladder, ctx.exec());
}

void do_points(const Opts& o, RunContext& ctx) {
    const PointSetSpec spec = build_point_set(o, ctx);
    const double radius = single_radius(o.r);
    ctx.params["r"] = radius;
    const auto pts = generate_points(spec, radius);
    ordered_json rows = ordered_json::array();
    for (const auto& p : pts) rows.push_back({p.xi, p.eta, p.modulus(), p.angle()});
    ctx.write_table("points", {"xi", "eta", "modulus", "angle"}, rows);
    ctx.results["count"] = pts.size();
    std::cout << "points: " << pts.size() << " inside r=" << io::format_real(radius) << "\n";
}

void do_count(const Opts& o, RunContext& ctx) {
    const PointSetSpec spec = build_point_set(o, ctx);
    const double radius = single_radius(o.r);
    ctx.params["r"] = radius;
    ctx.params["theta"] = o.theta;
    ctx.params["vartheta"] = o.vartheta;
    const SectorCount c = count_sector(spec, radius, o.theta, o.vartheta);
    ordered_json rows = ordered_json::array();
    rows.push_back({c.r, c.theta, c.vartheta, c.count});
    ctx.write_table("count", {"r", "theta", "vartheta", "count"}, rows);
    ctx.results["count"] = c.count;
    std::cout << "count: " << c.count << "\n";
}

void do_density(const Opts& o, RunContext& ctx) {
    const PointSetSpec spec = build_point_set(o, ctx);
    if (o.r.empty()) throw UsageError("--r: radius ladder required");
    ctx.params["r"] = o.r;
    ctx.params["theta"] = o.theta;
    ctx.params["vartheta"] = o.vartheta;
    const DensityEstimate d = angular_density(spec, o.theta, o.vartheta, o.r, ctx.exec());
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < d.r_ladder.size(); ++i)
        rows.push_back({d.r_ladder[i], d.theta, d.vartheta, d.counts[i], d.values[i]});
    ctx.write_table("density", {"r", "theta", "vartheta", "count", "density"}, rows);
    ctx.results["extrapolated"] = d.extrapolated;
    std::cout << "density: extrapolated " << io::format_real(d.extrapolated) << "\n";
}

void do_invsq(const Opts& o, RunContext& ctx) {
    const PointSetSpec spec = build_point_set(o, ctx);
    if (o.r.empty()) throw UsageError("--r: at least one radius required");
    ctx.params["r"] = o.r;
    ordered_json rows = ordered_json::array();
    std::complex<double> last{0.0, 0.0};
    for (double radius : o.r) {
        last = inverse_square_partial_sum(spec, radius);
        rows.push_back({radius, last.real(), last.imag()});
    }
    ctx.write_table("invsq", {"r", "sum_re", "sum_im"}, rows);
    ctx.results["sum_re"] = last.real();
    ctx.results["sum_im"] = last.imag();
    std::cout << "invsq: " << io::format_real(last.real()) << " + "
              << io::format_real(last.imag()) << "i at r=" << io::format_real(o.r.back()) << "\n";
}

void do_eval_s(const Opts& o, RunContext& ctx) {
    ctx.params["z"] = o.z;
    ordered_json rows = ordered_json::array();
    for (const auto z : parse_complex_list(o.z, "--z")) {
        const LogComplex lv = eval_s_log(z);
        ordered_json row = {z.real(), z.imag(), lv.log_abs, lv.arg};
        if (lv.log_abs <= 700.0) {
            const std::complex<double> v = lv.to_complex();
            row.push_back(v.real());
            row.push_back(v.imag());
        } else {
            row.push_back(nullptr);
            row.push_back(nullptr);
        }
        rows.push_back(row);
    }
    ctx.write_table("evals", {"z_re", "z_im", "log_abs", "arg", "value_re", "value_im"}, rows);
    ctx.results["count"] = rows.size();
    std::cout << "eval-s: " << rows.size() << " points\n";
}

void do_mlf(const Opts& o, RunContext& ctx) {
    ctx.params["z"] = o.z;
    ordered_json rows = ordered_json::array();
    for (const auto z : parse_complex_list(o.z, "--z")) {
        const std::complex<double> v = eval_mittag_leffler_half(z);
        rows.push_back({z.real(), z.imag(), v.real(), v.imag()});
    }
    ctx.write_table("mlf", {"z_re", "z_im", "value_re", "value_im"}, rows);
    ctx.results["count"] = rows.size();
    std::cout << "mlf: " << rows.size() << " points\n";
}

void do_growth_scan(const Opts& o, RunContext& ctx) {
    if (o.r.empty()) throw UsageError("--r: at least one radius required");
    ctx.params["r"] = o.r;
    ctx.params["thetas"] = o.thetas;
    ctx.params["eps"] = o.eps;
    const GrowthRatioReport rep = growth_ratio_scan(o.r, o.thetas, o.eps, ctx.exec());
    ordered_json rows = ordered_json::array();
    for (const auto& p : rep.grid)
        rows.push_back({p.r, p.theta, p.log_abs_s, p.model_exponent, p.ratio,
                        p.excluded ? 1 : 0});
    ctx.write_table("growthscan",
                    {"r", "theta", "log_abs_s", "model_exponent", "ratio", "excluded"}, rows);
    ctx.results["min_ratio"] = rep.min_ratio;
    ctx.results["max_ratio"] = rep.max_ratio;
    ctx.results["excluded_count"] = rep.excluded_count;
    std::cout << "growth-scan: ratio in [" << io::format_real(rep.min_ratio) << ", "
              << io::format_real(rep.max_ratio) << "], " << rep.excluded_count << " excluded\n";
}

void do_shift(const Opts& o, RunContext& ctx) {
    if (o.t.empty()) throw UsageError("--t: at least one time required");
    ctx.params["x"] = o.x;
    ctx.params["y"] = o.y;
    ctx.params["t"] = o.t;
    ordered_json rows = ordered_json::array();
    for (double t : o.t) {
        const std::complex<double> v = tf_shift_eval(o.x, o.y, t);
        rows.push_back({t, v.real(), v.imag()});
    }
    ctx.write_table("shift", {"t", "re", "im"}, rows);
    ctx.results["count"] = rows.size();
    std::cout << "shift: " << rows.size() << " samples\n";
}

void do_gram(const Opts& o, RunContext& ctx) {
    const PointSetSpec spec = build_point_set(o, ctx);
    const double radius = single_radius(o.r);
    ctx.params["r"] = radius;
    ctx.params["dump_matrix"] = o.dump_matrix;
    const GramSection sec = gram_section(spec, radius, ctx.exec());
    ordered_json j;
    j["n"] = sec.size();
    j["sigma_min"] = sec.sigma_min;
    j["sigma_max"] = sec.sigma_max;
    ctx.write_json("gram", j);
    if (o.dump_matrix) {
        ordered_json rows = ordered_json::array();
        const std::size_t n = sec.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                rows.push_back({i, k, sec.entries[i * n + k].real(),
                                sec.entries[i * n + k].imag()});
        ctx.write_table("gram_matrix", {"i", "j", "re", "im"}, rows);
    }
    ctx.results = j;
    std::cout << "gram: n=" << sec.size() << " sigma_min=" << io::format_real(sec.sigma_min)
              << " sigma_max=" << io::format_real(sec.sigma_max) << "\n";
}

void do_biorth(const Opts& o, RunContext& ctx) {
    const PointSetSpec spec = build_point_set(o, ctx);
    const double radius = single_radius(o.r);
    ctx.params["r"] = radius;
    ctx.params["reg"] = o.reg;
    const BiorthogonalReport rep = biorthogonal_residual(spec, radius, o.reg, ctx.exec());
    ordered_json j;
    j["n"] = rep.points.size();
    j["deviation"] = rep.residual_matrix_deviation;
    j["regularization"] = rep.regularization;
    ctx.write_json("biorth", j);
    ctx.results = j;
    std::cout << "biorth: deviation " << io::format_real(rep.residual_matrix_deviation) << "\n";
}

void do_complete(const Opts& o, RunContext& ctx) {
    const PointSetSpec spec = build_point_set(o, ctx);
    if (o.r.empty()) throw UsageError("--r: radius ladder required");
    ctx.params["r"] = o.r;
    ctx.params["target"] = o.target;
    const auto residuals =
        completeness_residual(parse_time_function(o.target), spec, o.r, ctx.exec());
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < residuals.size(); ++i) rows.push_back({o.r[i], residuals[i]});
    ctx.write_table("complete", {"radius", "residual"}, rows);
    ctx.results["final_residual"] = residuals.back();
    std::cout << "complete: final residual " << io::format_real(residuals.back()) << "\n";
}

void do_bargmann(const Opts& o, RunContext& ctx) {
    ctx.params["target"] = o.target;
    ctx.params["z"] = o.z;
    const TimeFunctionSpec f = parse_time_function(o.target);
    ordered_json rows = ordered_json::array();
    for (const auto z : parse_complex_list(o.z, "--z")) {
        const std::complex<double> v = bargmann_transform(f, z);
        rows.push_back({z.real(), z.imag(), v.real(), v.imag()});
    }
    ctx.write_table("bargmann", {"z_re", "z_im", "re", "im"}, rows);
    ctx.results["count"] = rows.size();
    std::cout << "bargmann: " << rows.size() << " points\n";
}

void do_fock_norm(const Opts& o, RunContext& ctx) {
    if (o.r.empty()) throw UsageError("--r: at least one truncation radius required");
    ctx.params["function"] = o.function;
    ctx.params["r"] = o.r;
    const EntireFunctionSpec F = parse_function(o.function);
    ordered_json rows = ordered_json::array();
    double last = 0.0;
    for (double radius : o.r) {
        last = fock_norm_truncated(F, radius, ctx.exec());
        rows.push_back({radius, last});
    }
    ctx.write_table("focknorm", {"R", "value"}, rows);
    ctx.results["value"] = last;
    std::cout << "fock-norm: " << io::format_real(last) << " at R="
              << io::format_real(o.r.back()) << "\n";
}

void do_fock_probe(const Opts& o, RunContext& ctx) {
    if (o.r.empty()) throw UsageError("--r: radius ladder required");
    ctx.params["function"] = o.function;
    ctx.params["r"] = o.r;
    const FockNormLadder lad =
        fock_membership_probe(parse_function(o.function), o.r, ctx.exec());
    ordered_json j;
    j["R_ladder"] = lad.R_ladder;
    j["values"] = lad.values;
    j["increments"] = lad.increments;
    j["last_relative_increment"] = lad.last_relative_increment;
    j["verdict"] = to_string(lad.verdict);
    j["note"] = "numerical corroboration, not a proof";
    ctx.write_json("fockprobe", j);
    ctx.results["verdict"] = to_string(lad.verdict);
    ctx.results["last_relative_increment"] = lad.last_relative_increment;
    std::cout << "fock-probe: " << to_string(lad.verdict) << " (last relative increment "
              << io::format_real(lad.last_relative_increment) << ")\n";
}

void do_growth_check(const Opts& o, RunContext& ctx) {
    if (o.r.empty()) throw UsageError("--r: at least one radius required");
    ctx.params["function"] = o.function;
    ctx.params["r"] = o.r;
    ctx.params["thetas"] = o.thetas;
    const auto rows_in =
        fock_growth_check(parse_function(o.function), o.r, o.thetas, ctx.exec());
    ordered_json rows = ordered_json::array();
    for (const auto& row : rows_in)
        rows.push_back({row.r, row.log_max_weighted, row.max_weighted});
    ctx.write_table("growthcheck", {"r", "log_max_weighted", "max_weighted"}, rows);
    ctx.results["last_log_max_weighted"] = rows_in.back().log_max_weighted;
    std::cout << "growth-check: last log max weighted "
              << io::format_real(rows_in.back().log_max_weighted) << "\n";
}

void do_indicator(const Opts& o, RunContext& ctx) {
    const IndicatorProfile prof = profile_from_opts(o, ctx);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < prof.thetas.size(); ++i)
        rows.push_back({prof.thetas[i], prof.h_values[i], prof.fit_residuals[i]});
    ctx.write_table("indicator", {"theta", "h", "residual"}, rows);
    ctx.results["levin"] = levin_density(prof);
    std::cout << "indicator: " << prof.thetas.size() << " angles, levin "
              << io::format_real(ctx.results["levin"].get<double>()) << "\n";
}

void do_levin(const Opts& o, RunContext& ctx) {
    const IndicatorProfile prof = profile_from_opts(o, ctx);
    const double v = levin_density(prof);
    ordered_json j;
    j["value"] = v;
    ctx.write_json("levin", j);
    ctx.results["value"] = v;
    std::cout << "levin: " << io::format_real(v) << "\n";
}

void do_jensen(const Opts& o, RunContext& ctx) {
    const double radius = single_radius(o.r);
    ctx.params["function"] = o.function;
    ctx.params["r"] = radius;
    const JensenReport rep = jensen_check(parse_function(o.function), radius);
    ordered_json j;
    j["r"] = rep.r;
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["abs_diff"] = std::abs(rep.lhs - rep.rhs);
    ctx.write_json("jensen", j);
    ctx.results = j;
    std::cout << "jensen: lhs " << io::format_real(rep.lhs) << " rhs "
              << io::format_real(rep.rhs) << "\n";
}

void do_envelope(const Opts& o, RunContext& ctx) {
    if (o.dirs.empty()) throw UsageError("--dirs: direction list required");
    ctx.params["dirs"] = o.dirs;
    ctx.params["grid"] = o.grid;
    ctx.params["integrate"] = o.integrate;
    if (o.grid < 8) throw UsageError("--grid: need at least 8 samples");
    const DirectionSet ds(o.dirs);
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < o.grid; ++i) {
        const double theta = 2.0 * kPi * i / o.grid;
        rows.push_back({theta, h_envelope(ds, theta)});
    }
    ctx.write_table("envelope", {"theta", "H"}, rows);
    if (o.integrate) {
        const LevelCheckReport rep = level_inequality_check(ds);
        ctx.results["integral"] = rep.integral;
        ctx.results["passes"] = rep.passes;
        std::cout << "envelope: integral " << io::format_real(rep.integral) << "\n";
    } else {
        std::cout << "envelope: " << o.grid << " samples\n";
    }
}

void do_level_check(const Opts& o, RunContext& ctx) {
    ordered_json j;
    if (o.random_count > 0) {
        ctx.params["random"] = o.random_count;
        std::mt19937_64 rng(ctx.seed);
        ordered_json sets = ordered_json::array();
        bool all = true;
        for (int k = 0; k < o.random_count; ++k) {
            ordered_json rep = direction_report(random_direction_set(rng));
            all = all && rep["passes"].get<bool>();
            sets.push_back(std::move(rep));
        }
        j["sets"] = std::move(sets);
        j["all_pass"] = all;
        ctx.results["all_pass"] = all;
        std::cout << "level-check: " << o.random_count << " random sets, all_pass="
                  << (all ? "true" : "false") << "\n";
    } else {
        if (o.dirs.empty()) throw UsageError("level-check needs --dirs or --random N");
        ctx.params["dirs"] = o.dirs;
        j = direction_report(DirectionSet(o.dirs));
        ctx.results["integral"] = j["integral"];
        ctx.results["passes"] = j["passes"];
        std::cout << "level-check: integral "
                  << io::format_real(j["integral"].get<double>()) << "\n";
    }
    ctx.write_json("levelcheck", j);
}

void do_convexity(const Opts& o, RunContext& ctx) {
    const IndicatorProfile prof = profile_from_opts(o, ctx);
    const ConvexityFloorReport rep = convexity_floor_check(prof);
    ordered_json j;
    j["worst_margin"] = rep.worst_margin;
    j["maxima_thetas"] = rep.maxima_thetas;
    ctx.write_json("convexity", j);
    ctx.results["worst_margin"] = rep.worst_margin;
    ctx.results["maxima_count"] = rep.maxima_thetas.size();
    std::cout << "convexity: worst margin " << io::format_real(rep.worst_margin) << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"numerical laboratory for Gaussian time-frequency shift systems"};
    app.require_subcommand(1);

    Opts o;
    RunContext ctx;
    std::string out_dir = ".";
    app.add_option("--out", out_dir, "output directory for artifacts")->capture_default_str();
    app.add_option("--format", ctx.format, "table artifact format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--seed", ctx.seed, "seed for randomized sweeps")->capture_default_str();
    app.add_flag("--serial", ctx.serial, "run parallel kernels on one thread");

    const auto add_set_options = [&](CLI::App* sub) {
        sub->add_option("--set", o.set, "point set: axes | lattice | lattice-minus | explicit")
            ->capture_default_str();
        sub->add_option("--a", o.a, "lattice spacing in time")->capture_default_str();
        sub->add_option("--b", o.b, "lattice spacing in frequency")->capture_default_str();
        sub->add_option("--omit", o.omit, "dropped lattice node x:y (lattice-minus)");
        sub->add_option("--points", o.points, "explicit point list x:y,x:y,...");
    };
    const auto add_r = [&](CLI::App* sub, const char* help, bool required) {
        auto* opt = sub->add_option("--r", o.r, help)->delimiter(',');
        if (required) opt->required();
        return opt;
    };

    std::vector<std::pair<CLI::App*, void (*)(const Opts&, RunContext&)>> dispatch;
    const auto sub = [&](const char* name, const char* desc,
                         void (*fn)(const Opts&, RunContext&)) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        dispatch.emplace_back(s, fn);
        return s;
    };

    {
        CLI::App* s = sub("points", "list the phase-space points inside a disk", do_points);
        add_set_options(s);
        add_r(s, "disk radius", true);
    }
    {
        CLI::App* s = sub("count", "count points in a sector (angles in (theta, vartheta])",
                          do_count);
        add_set_options(s);
        add_r(s, "disk radius", true);
        s->add_option("--theta", o.theta, "sector start angle (radians)")->capture_default_str();
        s->add_option("--vartheta", o.vartheta, "sector end angle (radians)")
            ->capture_default_str();
    }
    {
        CLI::App* s = sub("density", "sector counts over pi r^2 along a radius ladder",
                          do_density);
        add_set_options(s);
        add_r(s, "radius ladder (comma separated)", true);
        s->add_option("--theta", o.theta, "sector start angle (radians)")->capture_default_str();
        s->add_option("--vartheta", o.vartheta, "sector end angle (radians)")
            ->capture_default_str();
    }
    {
        CLI::App* s = sub("invsq", "partial sums of lambda^{-2} over the point set", do_invsq);
        add_set_options(s);
        add_r(s, "cutoff radii (one row per radius)", true);
    }
    {
        CLI::App* s = sub("eval-s", "evaluate s(z) in log-magnitude + phase form", do_eval_s);
        s->add_option("--z", o.z, "points re:im,re:im,...")->required();
    }
    {
        CLI::App* s = sub("mlf", "evaluate the order-two Mittag-Leffler function", do_mlf);
        s->add_option("--z", o.z, "points re:im,re:im,... (|z| <= 20)")->required();
    }
    {
        CLI::App* s = sub("growth-scan",
                          "|s| against its growth model on a polar grid, zeros excluded",
                          do_growth_scan);
        add_r(s, "scan radii (comma separated, in [2, 30])", true);
        s->add_option("--thetas", o.thetas, "angular sample count (>= 64)")
            ->capture_default_str();
        s->add_option("--eps", o.eps, "zero exclusion scale eps/sqrt(r)")->capture_default_str();
    }
    {
        CLI::App* s = sub("shift", "sample a time-frequency shifted window", do_shift);
        s->add_option("--x", o.x, "time shift")->capture_default_str();
        s->add_option("--y", o.y, "frequency shift")->capture_default_str();
        s->add_option("--t", o.t, "sample times (comma separated)")->delimiter(',')->required();
    }
    {
        CLI::App* s = sub("gram", "Gram section of the shift system with extreme eigenvalues",
                          do_gram);
        add_set_options(s);
        add_r(s, "section radius", true);
        s->add_flag("--dump-matrix", o.dump_matrix, "also write the full matrix");
    }
    {
        CLI::App* s = sub("biorth", "finite-section biorthogonality residual", do_biorth);
        add_set_options(s);
        add_r(s, "section radius", true);
        s->add_option("--reg", o.reg, "Tikhonov regularization (0 = plain solve)")
            ->capture_default_str();
    }
    {
        CLI::App* s = sub("complete", "distance from a target to the truncated spans",
                          do_complete);
        add_set_options(s);
        add_r(s, "radius ladder (comma separated)", true);
        s->add_option("--target", o.target, "target: gauss | shift:X:Y | tpow:K")
            ->capture_default_str();
    }
    {
        CLI::App* s = sub("bargmann", "integral transform of a time function", do_bargmann);
        s->add_option("--target", o.target, "time function: gauss | shift:X:Y | tpow:K")
            ->capture_default_str();
        s->add_option("--z", o.z, "evaluation points re:im,... (|z| <= 10)")->required();
    }
    {
        CLI::App* s = sub("fock-norm", "truncated weighted norm of an entire function",
                          do_fock_norm);
        s->add_option("--function", o.function, "entire function spec")->capture_default_str();
        add_r(s, "truncation radii (one row per radius, <= 30)", true);
    }
    {
        CLI::App* s = sub("fock-probe", "membership ladder with a heuristic verdict",
                          do_fock_probe);
        s->add_option("--function", o.function, "entire function spec")->capture_default_str();
        add_r(s, "increasing radius ladder (>= 4 rungs, <= 30)", true);
    }
    {
        CLI::App* s = sub("growth-check", "weighted modulus maxima per radius", do_growth_check);
        s->add_option("--function", o.function, "entire function spec")->capture_default_str();
        add_r(s, "radii (comma separated, <= 30)", true);
        s->add_option("--thetas", o.thetas, "angular sample count (>= 64)")
            ->capture_default_str();
    }
    const auto add_profile_options = [&](CLI::App* s) {
        s->add_option("--function", o.function, "entire function spec")->capture_default_str();
        s->add_option("--thetas", o.thetas, "angular grid size (>= 64)")->capture_default_str();
        add_r(s, "radius ladder (default 10,11.5,...,25; top half is used)", false);
    };
    {
        CLI::App* s = sub("indicator", "directional growth exponents over an angular grid",
                          do_indicator);
        add_profile_options(s);
    }
    {
        CLI::App* s = sub("levin", "angular average of the indicator against pi^2", do_levin);
        add_profile_options(s);
    }
    {
        CLI::App* s = sub("jensen", "zero-count vs circle-average consistency check", do_jensen);
        s->add_option("--function", o.function, "entire function spec (needs a zero catalog)")
            ->capture_default_str();
        add_r(s, "circle radius", true);
    }
    {
        CLI::App* s = sub("envelope",
                          "direction-set envelope H(theta); sector boundaries are the angular "
                          "midpoints between adjacent directions (not gap half-widths)",
                          do_envelope);
        s->add_option("--dirs", o.dirs, "directions in [0, 2pi), sorted, gaps <= pi/2")
            ->delimiter(',')
            ->required();
        s->add_option("--grid", o.grid, "output samples")->capture_default_str();
        s->add_flag("--integrate", o.integrate, "also integrate H over the circle");
    }
    {
        CLI::App* s = sub("level-check", "integral of the envelope against 2 pi", do_level_check);
        s->add_option("--dirs", o.dirs, "directions in [0, 2pi), sorted, gaps <= pi/2")
            ->delimiter(',');
        s->add_option("--random", o.random_count, "check N seeded random admissible sets");
    }
    {
        CLI::App* s = sub("convexity", "trigonometric floor check around indicator maxima",
                          do_convexity);
        add_profile_options(s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic
        if (argc <= 1) std::cerr << app.help();
        return 2;
    }

    try {
        ctx.out_dir = out_dir;
        std::filesystem::create_directories(ctx.out_dir);
        for (const auto& [s, fn] : dispatch) {
            if (s->parsed()) {
                ctx.subcommand = s->get_name();
                fn(o, ctx);
                ctx.write_manifest();
                return 0;
            }
        }
        std::cerr << "error: no subcommand dispatched\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gaborlab
