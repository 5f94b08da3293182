// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>

#include "pt3/errors.hpp"
#include "pt3/io.hpp"
#include "pt3/logitp3.hpp"
#include "pt3/logp3.hpp"
#include "pt3/mc_oracle.hpp"
#include "pt3/pearson3.hpp"
#include "pt3/presets.hpp"
#include "pt3/sums.hpp"
#include "pt3/wpt.hpp"

namespace pt3::cli {
namespace {

constexpr std::size_t kMinSamples = 1000;
constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

presets::Sweep parse_sweep(const std::string& text) {
    presets::Sweep sweep{};
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &sweep.start, &sweep.stop, &sweep.step, &extra) != 3) {
        throw DomainError("sweep must be start:stop:step, got '" + text + "'");
    }
    return sweep;
}

void write_rows(std::ostream& out, const std::string& var, const std::string& value_name,
                const std::vector<double>& points, const std::function<double(double)>& fn) {
    out << var << ',' << value_name << '\n';
    for (double x : points) {
        out << format_number(x) << ',' << format_number(fn(x)) << '\n';
    }
}

void write_metadata(std::ostream& out, const std::vector<std::string>& lines) {
    for (const auto& line : lines) out << "# " << line << '\n';
}

std::string describe(const Pearson3Params& p) {
    return "a=" + format_number(p.shape) + " b=" + format_number(p.rate) + " m=" + format_number(p.shift);
}

// ---------------------------------------------------------------- dist

struct DistArgs {
    std::string family;
    std::string quantity;
    double a = kUnset;
    double b = kUnset;
    double m = 0.0;
    double point = kUnset;
    double t = kUnset;
    int n = -1;
    std::string sweep;
};

std::function<double(double)> dist_function(const DistArgs& args, const Pearson3Params& p,
                                            std::string& op_name) {
    const auto& f = args.family;
    const auto& q = args.quantity;
    if (f == "p3") {
        if (q == "pdf") { op_name = "pearson3.p3_pdf"; return [p](double x) { return p3_pdf(p, x); }; }
        if (q == "cdf") { op_name = "pearson3.p3_cdf"; return [p](double x) { return p3_cdf(p, x); }; }
    } else if (f == "logp3") {
        if (q == "pdf") { op_name = "logp3.lp3_pdf"; return [p](double y) { return lp3_pdf(p, y); }; }
        if (q == "cdf") { op_name = "logp3.lp3_cdf"; return [p](double y) { return lp3_cdf(p, y); }; }
    } else if (f == "logitp3") {
        if (q == "pdf") { op_name = "logitp3.ltp3_pdf"; return [p](double z) { return ltp3_pdf(p, z); }; }
        if (q == "cdf") { op_name = "logitp3.ltp3_cdf"; return [p](double z) { return ltp3_cdf(p, z); }; }
    } else if (f == "logitgamma") {
        if (q == "pdf") {
            op_name = "logitp3.logit_gamma_pdf";
            return [p](double z) { return logit_gamma_pdf(p.shape, p.rate, z); };
        }
        if (q == "cdf") {
            op_name = "logitp3.logit_gamma_cdf";
            return [p](double z) { return logit_gamma_cdf(p.shape, p.rate, z); };
        }
    }
    throw DomainError("unsupported quantity '" + q + "' for family '" + f + "'");
}

double dist_moment(const DistArgs& args, const Pearson3Params& p) {
    if (args.family == "p3") return p3_moment(p, args.n);
    if (args.family == "logp3") return lp3_moment(p, args.n);
    if (args.family == "logitp3") return ltp3_moment(p, args.n);
    return logit_gamma_moment(p.shape, p.rate, args.n);
}

int cmd_dist(const DistArgs& args, std::ostream& out) {
    if (std::isnan(args.a) || std::isnan(args.b)) {
        throw DomainError("dist requires --a and --b");
    }
    if (args.family == "logitgamma" && args.m != 0.0) {
        throw DomainError("logitgamma has no shift; omit --m");
    }
    const Pearson3Params p{args.a, args.b, args.m};
    p.validate();

    if (args.quantity == "moment") {
        detail::require(args.n >= 0, "moment requires --n >= 0");
        out << format_number(dist_moment(args, p)) << '\n';
        return kOk;
    }
    if (args.quantity == "charfn") {
        detail::require(!std::isnan(args.t), "charfn requires --t");
        std::complex<double> phi;
        if (args.family == "p3") {
            phi = p3_char_fn(p, args.t);
        } else if (args.family == "logp3") {
            phi = lp3_char_fn_series(p, args.t);
        } else {
            throw DomainError("charfn is available for p3 and for logp3 with b < 0");
        }
        out << format_number(phi.real()) << ' ' << format_number(phi.imag()) << '\n';
        return kOk;
    }

    std::string op_name;
    const auto fn = dist_function(args, p, op_name);
    const std::string var = args.family == "p3" ? "x" : args.family == "logp3" ? "y" : "z";
    if (!args.sweep.empty()) {
        const auto points = presets::sweep_points(parse_sweep(args.sweep));
        write_metadata(out, {"dist " + args.family + " " + args.quantity + " " + describe(p),
                             "columns: " + var + " (input), value (" + op_name + ")"});
        write_rows(out, var, "value", points, fn);
        return kOk;
    }
    detail::require(!std::isnan(args.point), args.quantity + " requires --" + var + " (or --sweep)");
    out << format_number(fn(args.point)) << '\n';
    return kOk;
}

// ---------------------------------------------------------------- sum

struct SumArgs {
    std::string spec_path;
    std::string quantity;
    std::string transform = "none";
    double point = kUnset;
    int n = -1;
    std::string sweep;
    double snap_tolerance = SumOptions{}.snap_tolerance;
};

std::string regime_line(const SumSpec& spec) {
    std::string line = spec.regime() == RateRegime::equal ? "regime=equal" : "regime=distinct";
    if (spec.snapped()) line += " snapped";
    return line;
}

int cmd_sum(const SumArgs& args, std::ostream& out) {
    const SumSpec spec = load_sum_spec(args.spec_path, SumOptions{args.snap_tolerance});
    const auto& tr = args.transform;
    if (args.quantity == "moment") {
        detail::require(args.n >= 0, "moment requires --n >= 0");
        double value = 0.0;
        if (tr == "none") value = sum_moment(spec, args.n);
        else if (tr == "log") value = logsum_moment(spec, args.n);
        else value = logitsum_moment(spec, args.n);
        write_metadata(out, {regime_line(spec)});
        out << format_number(value) << '\n';
        return kOk;
    }

    std::function<double(double)> fn;
    std::string op_name;
    if (args.quantity == "pdf") {
        if (tr == "none") { fn = [&](double x) { return sum_pdf(spec, x); }; op_name = "sums.sum_pdf"; }
        else if (tr == "log") { fn = [&](double y) { return logsum_pdf(spec, y); }; op_name = "sums.logsum_pdf"; }
        else { fn = [&](double z) { return logitsum_pdf(spec, z); }; op_name = "sums.logitsum_pdf"; }
    } else {
        if (tr == "none") { fn = [&](double x) { return sum_cdf(spec, x); }; op_name = "sums.sum_cdf"; }
        else if (tr == "log") { fn = [&](double y) { return logsum_cdf(spec, y); }; op_name = "sums.logsum_cdf"; }
        else { fn = [&](double z) { return logitsum_cdf(spec, z); }; op_name = "sums.logitsum_cdf"; }
    }
    const std::string var = tr == "none" ? "x" : tr == "log" ? "y" : "z";
    if (!args.sweep.empty()) {
        const auto points = presets::sweep_points(parse_sweep(args.sweep));
        write_metadata(out, {regime_line(spec), "spec " + sum_spec_to_json(spec),
                             "columns: " + var + " (input), value (" + op_name + ")"});
        write_rows(out, var, "value", points, fn);
        return kOk;
    }
    detail::require(!std::isnan(args.point), args.quantity + " requires --" + var + " (or --sweep)");
    write_metadata(out, {regime_line(spec)});
    out << format_number(fn(args.point)) << '\n';
    return kOk;
}

// ---------------------------------------------------------------- wpt

struct ScenarioArgs {
    std::string scenario_path;
    std::string preset;
    int antennas = 1;
    double distance = kUnset;
    double power = kUnset;
};

MisoScenario build_scenario(const ScenarioArgs& args) {
    if (!args.scenario_path.empty()) {
        detail::require(args.preset.empty(), "use either --scenario or --preset, not both");
        return load_scenario(args.scenario_path);
    }
    detail::require(!args.preset.empty(), "a scenario is required: --scenario FILE or --preset figN");
    detail::require(args.antennas >= 1 && args.antennas <= 3, "--L must be 1, 2 or 3");
    const double power = std::isnan(args.power) ? presets::kTotalPower : args.power;
    if (args.preset == "fig3" || args.preset == "fig5") {
        const double distance = std::isnan(args.distance) ? 10.0 : args.distance;
        return presets::single_beacon(args.antennas, distance, power);
    }
    if (args.preset == "fig4" || args.preset == "fig6") {
        detail::require(std::isnan(args.distance), "the " + args.preset + " preset fixes beacon distances; drop --d");
        return presets::beacon_set(args.antennas, power);
    }
    throw DomainError("unknown preset '" + args.preset + "' (expected fig3, fig4, fig5 or fig6)");
}

MisoScenario with_distance(MisoScenario s, double d) {
    for (auto& link : s.branches) link.distance = d;
    return s;
}

MisoScenario with_total_power(MisoScenario s, double p) {
    const double share = p / static_cast<double>(s.branches.size());
    for (auto& link : s.branches) link.power = share;
    return s;
}

struct WptArgs {
    ScenarioArgs scenario;
    std::string quantity;
    double qt_frac = kUnset;
    double q = kUnset;
    int n = -1;
    std::string sweep_d;
    std::string sweep_p;
    std::string sweep_q;
};

std::function<double(const MisoScenario&, double)> wpt_quantity(const WptArgs& args,
                                                                 std::string& op_name) {
    const auto& qn = args.quantity;
    if (qn == "outage") {
        detail::require(args.qt_frac > 0.0 && args.qt_frac < 1.0, "outage requires --qt-frac in (0, 1)");
        op_name = "wpt.outage_probability at q_t = " + format_number(args.qt_frac) + " Ps";
        const double frac = args.qt_frac;
        return [frac](const MisoScenario& s, double) { return outage_probability(s, frac * s.model.Ps); };
    }
    if (qn == "mean") {
        op_name = "wpt.q_moment_miso n=1";
        return [](const MisoScenario& s, double) { return q_moment_miso(s, 1); };
    }
    if (qn == "moment") {
        detail::require(args.n >= 1, "moment requires --n >= 1");
        op_name = "wpt.q_moment_miso n=" + std::to_string(args.n);
        const int n = args.n;
        return [n](const MisoScenario& s, double) { return q_moment_miso(s, n); };
    }
    if (qn == "cdf") {
        op_name = "wpt.q_cdf_miso";
        return [](const MisoScenario& s, double q) { return q_cdf_miso(s, q); };
    }
    op_name = "wpt.q_pdf_miso";
    return [](const MisoScenario& s, double q) { return q_pdf_miso(s, q); };
}

int cmd_wpt(const WptArgs& args, std::ostream& out) {
    const MisoScenario base = build_scenario(args.scenario);
    std::string op_name;
    const auto fn = wpt_quantity(args, op_name);
    const bool takes_q = args.quantity == "cdf" || args.quantity == "pdf";
    const int sweeps = !args.sweep_d.empty() + !args.sweep_p.empty() + !args.sweep_q.empty();
    detail::require(sweeps <= 1, "use at most one of --sweep-d, --sweep-p, --sweep-q");
    detail::require(args.sweep_q.empty() || takes_q, "--sweep-q applies to cdf and pdf only");

    std::string var;
    std::vector<double> points;
    std::function<double(double)> eval;
    if (!args.sweep_d.empty()) {
        var = "distance";
        points = presets::sweep_points(parse_sweep(args.sweep_d));
        eval = [&](double d) { return fn(with_distance(base, d), args.q); };
    } else if (!args.sweep_p.empty()) {
        var = "power";
        points = presets::sweep_points(parse_sweep(args.sweep_p));
        eval = [&](double p) { return fn(with_total_power(base, p), args.q); };
    } else if (!args.sweep_q.empty()) {
        var = "q";
        points = presets::sweep_points(parse_sweep(args.sweep_q));
        eval = [&](double q) { return fn(base, q); };
    } else {
        if (takes_q) {
            detail::require(!std::isnan(args.q), args.quantity + " requires --q (W) or --sweep-q");
            var = "q";
            points = {args.q};
        } else if (args.quantity == "outage") {
            var = "qt_frac";
            points = {args.qt_frac};
        } else {
            var = "n";
            points = {static_cast<double>(args.quantity == "mean" ? 1 : args.n)};
        }
        eval = [&](double x) { return fn(base, takes_q ? x : args.q); };
    }
    if (takes_q && args.sweep_q.empty()) {
        detail::require(!std::isnan(args.q), args.quantity + " requires --q (W) or --sweep-q");
    }

    write_metadata(out, {"scenario-hash=" + hash_hex(scenario_hash(base)) + ", seed=n/a, columns: " +
                             var + ", value",
                         "regime=" + std::string(miso_regime(base) == RateRegime::equal ? "equal" : "distinct"),
                         "value: " + op_name});
    write_rows(out, var, "value", points, eval);
    return kOk;
}

// ---------------------------------------------------------------- figure

struct FigureArgs {
    std::string id;
    std::string out_dir = ".";
    bool gnuplot = false;
};

struct Curve {
    std::string file;
    std::string title;
};

void write_curve(const std::filesystem::path& path, const std::vector<std::string>& metadata,
                 const std::string& var, const std::string& value_name,
                 const std::vector<double>& points, const std::function<double(double)>& fn) {
    std::ofstream file(path);
    if (!file) {
        throw DomainError("cannot write '" + path.string() + "'");
    }
    write_metadata(file, metadata);
    write_rows(file, var, value_name, points, fn);
    if (!file) {
        throw DomainError("failed while writing '" + path.string() + "'");
    }
}

std::vector<Curve> figure_logit(const std::string& id, const std::filesystem::path& dir) {
    const bool is_cdf = id == "fig1";
    std::vector<Curve> curves;
    for (const auto& p : presets::logit_family()) {
        // 199 interior points of the support half (0.5, 1) or (0, 0.5)
        const double lo = p.rate > 0 ? 0.5 : 0.0;
        std::vector<double> z;
        for (int k = 1; k < 200; ++k) z.push_back(lo + k * 0.0025);
        const std::string name = id + "_a" + format_number(p.shape) + "_b" + format_number(p.rate) + ".csv";
        const std::string op = is_cdf ? "logitp3.ltp3_cdf" : "logitp3.ltp3_pdf";
        write_curve(dir / name,
                    {"figure=" + id + " " + describe(p),
                     "columns: z (input), " + std::string(is_cdf ? "cdf" : "pdf") + " (" + op + ")"},
                    "z", is_cdf ? "cdf" : "pdf", z, [&](double x) {
                        return is_cdf ? ltp3_cdf(p, x) : ltp3_pdf(p, x);
                    });
        curves.push_back({name, describe(p)});
    }
    return curves;
}

std::vector<Curve> figure_wpt(const std::string& id, const std::filesystem::path& dir) {
    const bool over_distance = id == "fig3" || id == "fig5";
    const bool outage = id == "fig3" || id == "fig4";
    const auto points = presets::sweep_points(over_distance ? presets::kDistanceSweep : presets::kPowerSweep);
    const std::string var = over_distance ? "distance" : "power";
    std::vector<Curve> curves;
    for (int L = 1; L <= 3; ++L) {
        const auto scenario_at = [&](double x) {
            return over_distance ? presets::single_beacon(L, x)
                                 : presets::beacon_set(L, x);
        };
        const auto reference = scenario_at(points.front());
        const std::string hash_line = "scenario-hash=" + hash_hex(scenario_hash(reference)) +
                                      " (at " + var + "=" + format_number(points.front()) + "), seed=n/a";
        const std::string layout = over_distance
                                       ? "one beacon, L=" + std::to_string(L) + " antennas, total power 2 W split equally"
                                       : "beacons at the first " + std::to_string(L) +
                                             " of 12/10/8 m, total power split equally";
        if (outage) {
            for (double frac : presets::kThresholdFractions) {
                const std::string name =
                    id + "_L" + std::to_string(L) + "_qt" + format_number(frac) + ".csv";
                write_curve(dir / name,
                            {"figure=" + id + " " + layout, hash_line,
                             "columns: " + var + " (input), outage (wpt.outage_probability at q_t = " +
                                 format_number(frac) + " Ps)"},
                            var, "outage", points, [&](double x) {
                                const auto s = scenario_at(x);
                                return outage_probability(s, frac * s.model.Ps);
                            });
                curves.push_back({name, "L=" + std::to_string(L) + ", q_t/P_s=" + format_number(frac)});
            }
        } else {
            const std::string name = id + "_L" + std::to_string(L) + ".csv";
            write_curve(dir / name,
                        {"figure=" + id + " " + layout, hash_line,
                         "columns: " + var + " (input), mean (wpt.q_moment_miso n=1, W)"},
                        var, "mean", points, [&](double x) { return q_moment_miso(scenario_at(x), 1); });
            curves.push_back({name, "L=" + std::to_string(L)});
        }
    }
    return curves;
}

void write_gnuplot(const std::filesystem::path& dir, const std::string& id,
                   const std::vector<Curve>& curves) {
    std::ofstream gp(dir / (id + ".gp"));
    if (!gp) {
        throw DomainError("cannot write gnuplot script in '" + dir.string() + "'");
    }
    gp << "set datafile separator ','\n"
       << "set key autotitle columnhead\n";
    if (id == "fig3" || id == "fig4") gp << "set logscale y\n";
    gp << "plot ";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        gp << (i ? ", \\\n     " : "") << "'" << curves[i].file << "' using 1:2 with lines title '"
           << curves[i].title << "'";
    }
    gp << '\n';
}

int cmd_figure(const FigureArgs& args, std::ostream& out) {
    const std::filesystem::path dir(args.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw DomainError("cannot create '" + dir.string() + "': " + ec.message());
    }
    std::vector<Curve> curves;
    if (args.id == "fig1" || args.id == "fig2") {
        curves = figure_logit(args.id, dir);
    } else if (args.id == "fig3" || args.id == "fig4" || args.id == "fig5" || args.id == "fig6") {
        curves = figure_wpt(args.id, dir);
    } else {
        throw DomainError("unknown figure '" + args.id + "' (expected fig1 ... fig6)");
    }
    if (args.gnuplot) write_gnuplot(dir, args.id, curves);
    for (const auto& c : curves) out << (dir / c.file).string() << '\n';
    if (args.gnuplot) out << (dir / (args.id + ".gp")).string() << '\n';
    return kOk;
}

// ---------------------------------------------------------------- compare

struct CompareArgs {
    std::string op;
    double a = kUnset;
    double b = kUnset;
    double m = 0.0;
    int n = 1;
    std::string spec_path;
    std::string transform = "none";
    ScenarioArgs scenario;
    double qt_frac = kUnset;
    double q = kUnset;
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 1;
};

oracle::OracleReport ks_report(const std::string& statistic, const std::vector<double>& samples,
                               const std::function<double(double)>& cdf, std::uint64_t seed) {
    oracle::OracleReport r;
    r.statistic = statistic;
    r.error = oracle::ks_distance(samples, cdf);
    r.criterion = oracle::Criterion::distance;
    r.tolerance = oracle::ks_threshold(samples.size());
    r.samples = samples.size();
    r.seed = seed;
    return r;
}

oracle::OracleReport moment_report(const std::string& statistic, double analytic,
                                   const std::vector<double>& samples, int n, std::uint64_t seed) {
    const auto est = oracle::empirical_moment(samples, n);
    oracle::OracleReport r;
    r.statistic = statistic;
    r.analytic = analytic;
    r.empirical = est.value;
    r.error = est.standard_error;
    r.criterion = oracle::Criterion::standard_errors;
    r.tolerance = 3.0;
    r.samples = samples.size();
    r.seed = seed;
    return r;
}

std::vector<double> transformed(std::vector<double> x, const std::string& transform) {
    if (transform == "log") {
        for (auto& v : x) v = std::exp(v);
    } else if (transform == "logit") {
        for (auto& v : x) v = logistic(v);
    }
    return x;
}

std::vector<double> harvested_samples(const MisoScenario& s, std::size_t count, std::uint64_t seed) {
    std::vector<double> received(count, 0.0);
    for (std::size_t i = 0; i < s.branches.size(); ++i) {
        const auto& link = s.branches[i];
        const double gain = path_loss(link) * link.power;
        const auto h2 = oracle::sample_channel_gain(link.fading, oracle::derive_seed(seed, i), count);
        for (std::size_t j = 0; j < count; ++j) received[j] += gain * h2[j];
    }
    for (auto& r : received) r = harvested_power(s.model, r);
    return received;
}

oracle::OracleReport compare_single(const CompareArgs& args, const std::string& family,
                                    const std::string& quantity) {
    detail::require(!std::isnan(args.a) && !std::isnan(args.b), "compare " + args.op + " requires --a and --b");
    const Pearson3Params p{args.a, args.b, args.m};
    p.validate();
    const std::string transform = family == "p3" ? "none" : family == "logp3" ? "log" : "logit";
    const auto samples = transformed(oracle::sample_pearson3(p, args.seed, args.samples), transform);
    if (quantity == "cdf") {
        std::function<double(double)> cdf;
        if (family == "p3") cdf = [p](double x) { return p3_cdf(p, x); };
        else if (family == "logp3") cdf = [p](double y) { return lp3_cdf(p, y); };
        else cdf = [p](double z) { return ltp3_cdf(p, z); };
        return ks_report(args.op + " ks " + describe(p), samples, cdf, args.seed);
    }
    double analytic = 0.0;
    if (family == "p3") analytic = p3_moment(p, args.n);
    else if (family == "logp3") analytic = lp3_moment(p, args.n);
    else analytic = ltp3_moment(p, args.n);
    return moment_report(args.op + " n=" + std::to_string(args.n) + " " + describe(p), analytic,
                         samples, args.n, args.seed);
}

oracle::OracleReport compare_sum(const CompareArgs& args, const std::string& quantity) {
    detail::require(!args.spec_path.empty(), "compare " + args.op + " requires --spec FILE");
    const SumSpec spec = load_sum_spec(args.spec_path);
    const auto samples =
        transformed(oracle::sample_pearson3_sum(spec.terms(), args.seed, args.samples), args.transform);
    const auto& tr = args.transform;
    if (quantity == "cdf") {
        std::function<double(double)> cdf;
        if (tr == "none") cdf = [&](double x) { return sum_cdf(spec, x); };
        else if (tr == "log") cdf = [&](double y) { return y > 0.0 ? logsum_cdf(spec, y) : 0.0; };
        else cdf = [&](double z) { return z > 0.0 && z < 1.0 ? logitsum_cdf(spec, z) : (z >= 1.0 ? 1.0 : 0.0); };
        return ks_report(args.op + " ks transform=" + tr, samples, cdf, args.seed);
    }
    double analytic = 0.0;
    if (tr == "none") analytic = sum_moment(spec, args.n);
    else if (tr == "log") analytic = logsum_moment(spec, args.n);
    else analytic = logitsum_moment(spec, args.n);
    return moment_report(args.op + " n=" + std::to_string(args.n) + " transform=" + tr, analytic,
                         samples, args.n, args.seed);
}

oracle::OracleReport compare_wpt(const CompareArgs& args, const std::string& quantity) {
    const MisoScenario s = build_scenario(args.scenario);
    const auto samples = harvested_samples(s, args.samples, args.seed);
    const std::string tag = args.op + " scenario=" + hash_hex(scenario_hash(s));
    if (quantity == "outage" || quantity == "cdf") {
        double q = args.q;
        if (quantity == "outage") {
            detail::require(args.qt_frac > 0.0 && args.qt_frac < 1.0, "outage requires --qt-frac in (0, 1)");
            q = args.qt_frac * s.model.Ps;
        }
        detail::require(!std::isnan(q), "cdf requires --q (W)");
        std::uint64_t hits = 0;
        for (double v : samples) hits += v < q;
        const auto check = oracle::binomial_consistency(q_cdf_miso(s, q), hits, samples.size());
        return oracle::report_from(tag + " q=" + format_number(q), check, samples.size(), args.seed);
    }
    if (quantity == "mean") {
        const auto est = oracle::empirical_moment(samples, 1);
        oracle::OracleReport r;
        r.statistic = tag;
        r.analytic = q_moment_miso(s, 1);
        r.empirical = est.value;
        r.error = est.standard_error;
        r.criterion = oracle::Criterion::relative;
        r.tolerance = 0.01;
        r.samples = samples.size();
        r.seed = args.seed;
        return r;
    }
    detail::require(args.n >= 1, "moment requires --n >= 1");
    return moment_report(tag + " n=" + std::to_string(args.n), q_moment_miso(s, args.n), samples,
                         args.n, args.seed);
}

int cmd_compare(const CompareArgs& args, std::ostream& out) {
    if (args.samples < kMinSamples) {
        throw DomainError("compare needs --samples >= " + std::to_string(kMinSamples));
    }
    const auto dot = args.op.find('.');
    const std::string family = args.op.substr(0, dot);
    const std::string quantity = dot == std::string::npos ? "" : args.op.substr(dot + 1);
    oracle::OracleReport report;
    if ((family == "p3" || family == "logp3" || family == "logitp3") &&
        (quantity == "cdf" || quantity == "moment")) {
        report = compare_single(args, family, quantity);
    } else if (family == "sums" && (quantity == "cdf" || quantity == "moment")) {
        report = compare_sum(args, quantity);
    } else if (family == "wpt" &&
               (quantity == "outage" || quantity == "cdf" || quantity == "mean" || quantity == "moment")) {
        report = compare_wpt(args, quantity);
    } else {
        throw DomainError("unknown compare target '" + args.op + "'");
    }
    out << report.to_json_line() << '\n';
    return report.pass() ? kOk : kOracleFailure;
}

void add_scenario_options(CLI::App* cmd, ScenarioArgs& s) {
    cmd->add_option("--scenario", s.scenario_path, "scenario JSON file");
    cmd->add_option("--preset", s.preset, "fig3, fig4, fig5 or fig6");
    cmd->add_option("--L", s.antennas, "antennas (fig3/fig5) or beacons (fig4/fig6)");
    cmd->add_option("--d", s.distance, "beacon distance in m (fig3/fig5, default 10)");
    cmd->add_option("--p", s.power, "total transmit power in W (default 2)");
}

}  // namespace

std::string format_number(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pearson type III family distributions and wireless power transfer statistics", "pt3"};
    app.require_subcommand(1);

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "evaluate a single-variate quantity");
    dist_cmd->add_option("family", dist.family, "p3, logp3, logitp3 or logitgamma")
        ->required()
        ->check(CLI::IsMember({"p3", "logp3", "logitp3", "logitgamma"}));
    dist_cmd->add_option("quantity", dist.quantity, "pdf, cdf, moment or charfn")
        ->required()
        ->check(CLI::IsMember({"pdf", "cdf", "moment", "charfn"}));
    dist_cmd->add_option("--a", dist.a, "shape");
    dist_cmd->add_option("--b", dist.b, "rate (inverse scale)");
    dist_cmd->add_option("--m", dist.m, "shift");
    dist_cmd->add_option("--x,--y,--z", dist.point, "evaluation point");
    dist_cmd->add_option("--t", dist.t, "characteristic function argument");
    dist_cmd->add_option("--n", dist.n, "moment order");
    dist_cmd->add_option("--sweep", dist.sweep, "start:stop:step");

    SumArgs sum;
    auto* sum_cmd = app.add_subcommand("sum", "evaluate the sum of independent Pearson III terms");
    sum_cmd->add_option("spec", sum.spec_path, "sum spec JSON file")->required();
    sum_cmd->add_option("quantity", sum.quantity, "pdf, cdf or moment")
        ->required()
        ->check(CLI::IsMember({"pdf", "cdf", "moment"}));
    sum_cmd->add_option("--transform", sum.transform, "none, log (e^S) or logit (logistic(S))")
        ->check(CLI::IsMember({"none", "log", "logit"}));
    sum_cmd->add_option("--x,--y,--z", sum.point, "evaluation point");
    sum_cmd->add_option("--n", sum.n, "moment order");
    sum_cmd->add_option("--sweep", sum.sweep, "start:stop:step");
    sum_cmd->add_option("--snap-tol", sum.snap_tolerance, "relative rate spread treated as equal rates");

    WptArgs wpt;
    auto* wpt_cmd = app.add_subcommand("wpt", "harvested-power statistics");
    wpt_cmd->add_option("quantity", wpt.quantity, "outage, mean, cdf, pdf or moment")
        ->required()
        ->check(CLI::IsMember({"outage", "mean", "cdf", "pdf", "moment"}));
    add_scenario_options(wpt_cmd, wpt.scenario);
    wpt_cmd->add_option("--qt-frac", wpt.qt_frac, "outage threshold as a fraction of Ps");
    wpt_cmd->add_option("--q", wpt.q, "harvested power in W (cdf, pdf)");
    wpt_cmd->add_option("--n", wpt.n, "moment order");
    wpt_cmd->add_option("--sweep-d", wpt.sweep_d, "distance sweep start:stop:step (m)");
    wpt_cmd->add_option("--sweep-p", wpt.sweep_p, "total power sweep start:stop:step (W)");
    wpt_cmd->add_option("--sweep-q", wpt.sweep_q, "harvested power sweep start:stop:step (W)");

    FigureArgs figure;
    auto* figure_cmd = app.add_subcommand("figure", "write the CSV curves of a reference figure");
    figure_cmd->add_option("id", figure.id, "fig1 ... fig6")->required();
    figure_cmd->add_option("--out", figure.out_dir, "output directory");
    figure_cmd->add_flag("--gnuplot", figure.gnuplot, "also write a gnuplot script");

    CompareArgs compare;
    auto* compare_cmd = app.add_subcommand("compare", "check an analytic quantity against Monte Carlo");
    compare_cmd->add_option("--op", compare.op,
                            "p3|logp3|logitp3.{cdf,moment}, sums.{cdf,moment}, wpt.{outage,cdf,mean,moment}")
        ->required();
    compare_cmd->add_option("--a", compare.a, "shape");
    compare_cmd->add_option("--b", compare.b, "rate");
    compare_cmd->add_option("--m", compare.m, "shift");
    compare_cmd->add_option("--n", compare.n, "moment order");
    compare_cmd->add_option("--spec", compare.spec_path, "sum spec JSON file");
    compare_cmd->add_option("--transform", compare.transform, "none, log or logit")
        ->check(CLI::IsMember({"none", "log", "logit"}));
    add_scenario_options(compare_cmd, compare.scenario);
    compare_cmd->add_option("--qt-frac", compare.qt_frac, "outage threshold as a fraction of Ps");
    compare_cmd->add_option("--q", compare.q, "harvested power in W");
    compare_cmd->add_option("--samples", compare.samples, "Monte Carlo sample count (>= 1000)");
    compare_cmd->add_option("--seed", compare.seed, "generator seed");

    std::vector<const char*> argv{"pt3"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kArgumentError;
    }

    try {
        if (*dist_cmd) return cmd_dist(dist, out);
        if (*sum_cmd) return cmd_sum(sum, out);
        if (*wpt_cmd) return cmd_wpt(wpt, out);
        if (*figure_cmd) return cmd_figure(figure, out);
        return cmd_compare(compare, out);
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kConvergenceError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    }
}

}  // namespace pt3::cli
