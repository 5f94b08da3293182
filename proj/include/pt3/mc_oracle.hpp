// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pt3/pearson3.hpp"

// Independent reference computations: seeded sampling, empirical statistics,
// quadrature and numeric convolution. Nothing here calls the closed forms it
// is meant to check.
namespace pt3::oracle {

/// SplitMix64 mix of (seed, stream): independent generator seeds per stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// |h|^2 ~ gamma(a, b) draws; fading must have shift 0 and rate b > 0.
std::vector<double> sample_channel_gain(const Pearson3Params& fading, std::uint64_t seed,
                                        std::size_t count);

/// Draws of m + sign(b) G / |b| with G ~ gamma(a, 1).
std::vector<double> sample_pearson3(const Pearson3Params& params, std::uint64_t seed,
                                    std::size_t count);

/// Draws of X_1 + ... + X_L; term i uses stream derive_seed(seed, i).
std::vector<double> sample_pearson3_sum(const std::vector<Pearson3Params>& terms,
                                        std::uint64_t seed, std::size_t count);

double empirical_cdf(const std::vector<double>& samples, double x);

/// sup_x |F_n(x) - F(x)|, evaluated on both sides of every sample point.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

/// 1.63 / sqrt(count), the asymptotic 1% critical value.
double ks_threshold(std::size_t count);

struct MomentEstimate {
    double value = 0.0;
    double standard_error = 0.0;
};

MomentEstimate empirical_moment(const std::vector<double>& samples, int n);

/// Adaptive Gauss-Kronrod on [lower, upper].
double integrate(const std::function<double(double)>& f, double lower, double upper,
                 double rel_tol = 1e-12);
/// Double-exponential quadrature for integrands with endpoint singularities.
double integrate_singular(const std::function<double(double)>& f, double lower, double upper,
                          double rel_tol = 1e-12);
/// Integral over [lower, inf).
double integrate_to_infinity(const std::function<double(double)>& f, double lower,
                             double rel_tol = 1e-12);

/// Density given on its support through the offset t = |x - origin| >= 0;
/// `direction` is +1 for support (origin, inf) and -1 for (-inf, origin).
struct SupportedPdf {
    std::function<double(double)> density_at_offset;
    double origin = 0.0;
    int direction = 1;
};

/// Offsets 0, h, ..., span with h = span / intervals.
struct GridSpec {
    double span = 0.0;
    int intervals = 0;
};

struct GriddedPdf {
    double origin = 0.0;
    int direction = 1;
    double step = 0.0;
    std::vector<double> values;  // values[j] = density at offset j * step

    /// Linear interpolation; 0 outside the grid.
    double at(double x) const;
    /// Mass of the gridded density: Simpson for an even number of intervals,
    /// trapezoidal otherwise.
    double mass() const;
};

/// Trapezoidal convolution of every density in the list, with one
/// Richardson step (grid h and h/2) to cancel the O(h^2) error.
GriddedPdf convolve_pdfs_numeric(const std::vector<SupportedPdf>& pdfs, const GridSpec& grid);

/// Exact central binomial acceptance region for `hits` out of `trials` at
/// success probability p, two-sided level 2 * 0.00135 (the 3 sigma tails).
struct BinomialCheck {
    double probability = 0.0;
    double observed = 0.0;
    double standard_error = 0.0;
    double lower = 0.0;  // acceptance region in frequency units
    double upper = 0.0;
    bool pass = false;
};

BinomialCheck binomial_consistency(double p, std::uint64_t hits, std::uint64_t trials);

enum class Criterion {
    standard_errors,  // |analytic - empirical| <= tolerance * error
    distance,         // error <= tolerance
    relative,         // |analytic - empirical| <= tolerance * |analytic|
    interval,         // lower <= empirical <= upper
};

struct OracleReport {
    std::string statistic;
    double analytic = 0.0;
    double empirical = 0.0;
    double error = 0.0;  // standard error or sup-distance
    Criterion criterion = Criterion::standard_errors;
    double tolerance = 3.0;
    double lower = 0.0;
    double upper = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    bool pass() const;
    /// One JSON object on one line.
    std::string to_json_line() const;
};

OracleReport report_from(const std::string& statistic, const BinomialCheck& check,
                         std::size_t samples, std::uint64_t seed);

}  // namespace pt3::oracle
