// SPDX-License-Identifier: Apache-2.0
#include "pt3/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <limits>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <json.hpp>

#include "numeric_util.hpp"
#include "pt3/errors.hpp"

namespace pt3::oracle {
namespace {

// Two-sided 3 sigma normal tail mass, per side.
constexpr double kThreeSigmaTail = 0.00134989803163;

std::vector<double> gamma_draws(double shape, double scale, std::uint64_t seed, std::size_t count) {
    std::mt19937_64 engine(seed);
    std::gamma_distribution<double> dist(shape, scale);
    std::vector<double> out(count);
    for (auto& x : out) x = dist(engine);
    return out;
}

std::vector<double> on_grid(const SupportedPdf& pdf, double step, int intervals) {
    std::vector<double> values(intervals + 1);
    for (int j = 0; j <= intervals; ++j) {
        values[j] = pdf.density_at_offset(j * step);
    }
    return values;
}

std::vector<double> trapezoid_convolve(const std::vector<double>& f, const std::vector<double>& g,
                                       double step) {
    const std::size_t size = f.size();
    std::vector<double> out(size, 0.0);
    for (std::size_t n = 1; n < size; ++n) {
        detail::CompensatedSum acc;
        acc.add(0.5 * (f[0] * g[n] + f[n] * g[0]));
        for (std::size_t j = 1; j < n; ++j) {
            acc.add(f[j] * g[n - j]);
        }
        out[n] = step * acc.value();
    }
    return out;
}

std::vector<double> convolve_chain(const std::vector<SupportedPdf>& pdfs, double span, int intervals) {
    const double step = span / intervals;
    auto result = on_grid(pdfs.front(), step, intervals);
    for (std::size_t i = 1; i < pdfs.size(); ++i) {
        result = trapezoid_convolve(result, on_grid(pdfs[i], step, intervals), step);
    }
    return result;
}

const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::standard_errors: return "standard_errors";
        case Criterion::distance: return "distance";
        case Criterion::relative: return "relative";
        case Criterion::interval: return "interval";
    }
    return "unknown";
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<double> sample_channel_gain(const Pearson3Params& fading, std::uint64_t seed,
                                        std::size_t count) {
    fading.validate();
    detail::require(fading.shift == 0.0 && fading.rate > 0.0,
                    "channel gain sampling needs shift 0 and rate b > 0");
    return gamma_draws(fading.shape, 1.0 / fading.rate, seed, count);
}

std::vector<double> sample_pearson3(const Pearson3Params& params, std::uint64_t seed,
                                    std::size_t count) {
    params.validate();
    auto out = gamma_draws(params.shape, 1.0, seed, count);
    for (auto& x : out) x = params.shift + x / params.rate;
    return out;
}

std::vector<double> sample_pearson3_sum(const std::vector<Pearson3Params>& terms,
                                        std::uint64_t seed, std::size_t count) {
    detail::require(!terms.empty(), "sum sampling needs at least one term");
    std::vector<double> total(count, 0.0);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto draws = sample_pearson3(terms[i], derive_seed(seed, i), count);
        for (std::size_t j = 0; j < count; ++j) total[j] += draws[j];
    }
    return total;
}

double empirical_cdf(const std::vector<double>& samples, double x) {
    detail::require(!samples.empty(), "empirical CDF needs samples");
    const auto below = std::count_if(samples.begin(), samples.end(), [x](double s) { return s <= x; });
    return static_cast<double>(below) / samples.size();
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
    detail::require(!samples.empty(), "KS distance needs samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        sup = std::max({sup, std::abs((i + 1) / n - f), std::abs(f - i / n)});
    }
    return sup;
}

double ks_threshold(std::size_t count) {
    detail::require(count > 0, "KS threshold needs a positive count");
    return 1.63 / std::sqrt(static_cast<double>(count));
}

MomentEstimate empirical_moment(const std::vector<double>& samples, int n) {
    detail::require(!samples.empty(), "empirical moment needs samples");
    detail::require(n >= 0, "moment order must be >= 0");
    detail::CompensatedSum sum;
    for (double x : samples) sum.add(std::pow(x, n));
    const double count = static_cast<double>(samples.size());
    const double mean = sum.value() / count;
    detail::CompensatedSum squares;
    for (double x : samples) {
        const double d = std::pow(x, n) - mean;
        squares.add(d * d);
    }
    const double variance = samples.size() > 1 ? squares.value() / (count - 1.0) : 0.0;
    return {mean, std::sqrt(variance / count)};
}

double integrate(const std::function<double(double)>& f, double lower, double upper,
                 double rel_tol) {
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lower, upper, 15,
                                                                          rel_tol);
}

double integrate_singular(const std::function<double(double)>& f, double lower, double upper,
                          double rel_tol) {
    boost::math::quadrature::tanh_sinh<double> rule;
    return rule.integrate(f, lower, upper, rel_tol);
}

double integrate_to_infinity(const std::function<double(double)>& f, double lower,
                             double rel_tol) {
    boost::math::quadrature::exp_sinh<double> rule;
    return rule.integrate([&](double t) { return f(lower + t); }, 0.0,
                          std::numeric_limits<double>::infinity(), rel_tol);
}

double GriddedPdf::at(double x) const {
    const double t = direction * (x - origin);
    if (values.empty() || t < 0.0) return 0.0;
    const double pos = t / step;
    const auto j = static_cast<std::size_t>(pos);
    if (j + 1 >= values.size()) {
        return j + 1 == values.size() && pos == j ? values.back() : 0.0;
    }
    const double frac = pos - j;
    return values[j] * (1.0 - frac) + values[j + 1] * frac;
}

double GriddedPdf::mass() const {
    if (values.size() < 2) return 0.0;
    const std::size_t intervals = values.size() - 1;
    detail::CompensatedSum acc;
    if (intervals % 2 == 0) {
        // composite Simpson
        acc.add(values.front() + values.back());
        for (std::size_t j = 1; j < intervals; ++j) acc.add((j % 2 == 1 ? 4.0 : 2.0) * values[j]);
        return step * acc.value() / 3.0;
    }
    acc.add(0.5 * (values.front() + values.back()));
    for (std::size_t j = 1; j < intervals; ++j) acc.add(values[j]);
    return step * acc.value();
}

GriddedPdf convolve_pdfs_numeric(const std::vector<SupportedPdf>& pdfs, const GridSpec& grid) {
    detail::require(!pdfs.empty(), "convolution needs at least one density");
    detail::require(grid.span > 0.0 && grid.intervals >= 2, "convolution grid needs span > 0");
    GriddedPdf out;
    out.direction = pdfs.front().direction;
    detail::require(out.direction == 1 || out.direction == -1, "support direction must be +1 or -1");
    for (const auto& pdf : pdfs) {
        if (pdf.direction != out.direction) {
            throw DomainError("convolution needs supports that extend in the same direction");
        }
        out.origin += pdf.origin;
    }
    out.step = grid.span / grid.intervals;
    const auto coarse = convolve_chain(pdfs, grid.span, grid.intervals);
    if (pdfs.size() == 1) {
        out.values = coarse;
        return out;
    }
    const auto fine = convolve_chain(pdfs, grid.span, 2 * grid.intervals);
    out.values.resize(coarse.size());
    for (std::size_t j = 0; j < coarse.size(); ++j) {
        out.values[j] = (4.0 * fine[2 * j] - coarse[j]) / 3.0;
    }
    return out;
}

BinomialCheck binomial_consistency(double p, std::uint64_t hits, std::uint64_t trials) {
    detail::require(trials > 0, "binomial check needs trials > 0");
    detail::require(hits <= trials, "hits cannot exceed trials");
    detail::require(p >= 0.0 && p <= 1.0, "binomial check needs 0 <= p <= 1");
    BinomialCheck check;
    const double n = static_cast<double>(trials);
    check.probability = p;
    check.observed = hits / n;
    check.standard_error = std::sqrt(p * (1.0 - p) / n);
    if (p == 0.0 || p == 1.0) {
        check.lower = check.upper = p;
    } else {
        const boost::math::binomial_distribution<double> dist(n, p);
        check.lower = boost::math::quantile(dist, kThreeSigmaTail) / n;
        check.upper = boost::math::quantile(boost::math::complement(dist, kThreeSigmaTail)) / n;
    }
    check.pass = check.observed >= check.lower && check.observed <= check.upper;
    return check;
}

bool OracleReport::pass() const {
    const double gap = std::abs(analytic - empirical);
    switch (criterion) {
        case Criterion::standard_errors: return gap <= tolerance * error;
        case Criterion::distance: return error <= tolerance;
        case Criterion::relative: return gap <= tolerance * std::abs(analytic);
        case Criterion::interval: return empirical >= lower && empirical <= upper;
    }
    return false;
}

std::string OracleReport::to_json_line() const {
    nlohmann::ordered_json j;
    j["statistic"] = statistic;
    j["analytic"] = analytic;
    j["empirical"] = empirical;
    j["error"] = error;
    j["criterion"] = criterion_name(criterion);
    j["tolerance"] = tolerance;
    if (criterion == Criterion::interval) {
        j["lower"] = lower;
        j["upper"] = upper;
    }
    j["samples"] = samples;
    j["seed"] = seed;
    j["pass"] = pass();
    return j.dump();
}

OracleReport report_from(const std::string& statistic, const BinomialCheck& check,
                         std::size_t samples, std::uint64_t seed) {
    OracleReport report;
    report.statistic = statistic;
    report.analytic = check.probability;
    report.empirical = check.observed;
    report.error = check.standard_error;
    report.criterion = Criterion::interval;
    report.tolerance = 3.0;
    report.lower = check.lower;
    report.upper = check.upper;
    report.samples = samples;
    report.seed = seed;
    return report;
}

}  // namespace pt3::oracle
