// SPDX-License-Identifier: Apache-2.0
#include "pt3/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pt3/errors.hpp"
#include "numeric_util.hpp"

namespace pt3 {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxKernelIterations = 1'000'000;

// The Euler estimate is refreshed every kEulerStride terms once at least
// kEulerMinTerms partial sums exist.
constexpr int kEulerMinTerms = 8;
constexpr int kEulerStride = 4;

double lgamma_pos(double a) {
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(a, &sign);
#else
    return std::lgamma(a);
#endif
}

// sum_k x^k / (a (a+1) ... (a+k)), the series part of gamma(a, x).
double lower_series_sum(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < kMaxKernelIterations; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) {
            return sum;
        }
    }
    throw ConvergenceError("incomplete gamma series did not converge for a=" +
                           std::to_string(a) + ", x=" + std::to_string(x));
}

// Continued fraction h with Gamma(a, x) = e^-x x^a h (modified Lentz).
double upper_continued_fraction(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxKernelIterations; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) {
            return h;
        }
    }
    throw ConvergenceError("incomplete gamma continued fraction did not converge for a=" +
                           std::to_string(a) + ", x=" + std::to_string(x));
}

void check_gamma_args(double a, double x) {
    detail::require(a > 0.0 && std::isfinite(a), "incomplete gamma requires a > 0");
    detail::require(x >= 0.0 && !std::isnan(x), "incomplete gamma requires x >= 0");
}

// ln of sum_k z^k / (k! (a + k)) for z > 0; every term is positive.
double log_positive_kummer_sum(double a, double z) {
    double power = 1.0;  // z^k / k!, rescaled
    double sum = 1.0 / a;
    double log_scale = 0.0;
    for (int k = 1; k < kMaxKernelIterations; ++k) {
        power *= z / k;
        const double term = power / (a + k);
        sum += term;
        if (sum > 1e280) {
            sum *= 1e-280;
            power *= 1e-280;
            log_scale += 280.0 * std::log(10.0);
        }
        if (k > z && term < sum * kEps) {
            return std::log(sum) + log_scale;
        }
    }
    throw ConvergenceError("negative-rate gamma integral did not converge");
}

double euler_estimate(const std::vector<double>& partial) {
    const int n = static_cast<int>(partial.size()) - 1;
    // weights C(n, i) / 2^n, accumulated in log space
    double log_w = -n * std::log(2.0);
    detail::CompensatedSum acc;
    for (int i = 0; i <= n; ++i) {
        acc.add(std::exp(log_w) * partial[i]);
        if (i < n) {
            log_w += std::log(static_cast<double>(n - i) / (i + 1));
        }
    }
    return acc.value();
}

}  // namespace

void SeriesControl::validate() const {
    detail::require(rel_tol > 0.0 && rel_tol < 1.0, "SeriesControl requires 0 < rel_tol < 1");
    detail::require(max_terms >= 1, "SeriesControl requires max_terms >= 1");
    detail::require(consecutive_small >= 1, "SeriesControl requires consecutive_small >= 1");
}

SeriesResult sum_alternating(const std::function<double(int)>& magnitude,
                             const SeriesControl& ctl) {
    ctl.validate();
    std::vector<double> partial;
    partial.reserve(128);
    detail::CompensatedSum sum;
    double max_abs_partial = 0.0;
    double previous_estimate = std::numeric_limits<double>::quiet_NaN();
    int small_run = 0;
    int stable_run = 0;

    for (int k = 0; k < ctl.max_terms; ++k) {
        const double mag = magnitude(k);
        if (!std::isfinite(mag)) {
            throw ConvergenceError("series term " + std::to_string(k) + " is not finite");
        }
        const double term = (k % 2 == 0) ? mag : -mag;
        sum.add(term);
        const double s = sum.value();
        partial.push_back(s);
        max_abs_partial = std::max(max_abs_partial, std::abs(s));
        const double floor = 16.0 * kEps * max_abs_partial;

        if (std::abs(term) <= ctl.rel_tol * std::abs(s) || std::abs(term) <= floor) {
            if (++small_run >= ctl.consecutive_small) {
                return {s, k + 1, false};
            }
        } else {
            small_run = 0;
        }

        if (k + 1 >= kEulerMinTerms && (k + 1) % kEulerStride == 0) {
            const double estimate = euler_estimate(partial);
            if (std::isfinite(previous_estimate) &&
                std::abs(estimate - previous_estimate) <=
                    ctl.rel_tol * std::abs(estimate) + floor) {
                if (++stable_run >= ctl.consecutive_small) {
                    return {estimate, k + 1, true};
                }
            } else {
                stable_run = 0;
            }
            previous_estimate = estimate;
        }
    }
    throw ConvergenceError("alternating series did not converge within " +
                           std::to_string(ctl.max_terms) + " terms");
}

double ln_gamma(double a) {
    detail::require(a > 0.0 && std::isfinite(a), "ln_gamma requires a > 0");
    return lgamma_pos(a);
}

double reg_lower_gamma(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < a + 1.0) {
        return std::exp(a * std::log(x) - x - lgamma_pos(a)) * lower_series_sum(a, x);
    }
    return 1.0 - std::exp(a * std::log(x) - x - lgamma_pos(a)) * upper_continued_fraction(a, x);
}

double reg_upper_gamma(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    if (x < a + 1.0) {
        return 1.0 - std::exp(a * std::log(x) - x - lgamma_pos(a)) * lower_series_sum(a, x);
    }
    return std::exp(a * std::log(x) - x - lgamma_pos(a)) * upper_continued_fraction(a, x);
}

double log_lower_gamma(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    if (x < a + 1.0) {
        return a * std::log(x) - x + std::log(lower_series_sum(a, x));
    }
    return lgamma_pos(a) + std::log1p(-reg_upper_gamma(a, x));
}

double log_upper_gamma(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) return lgamma_pos(a);
    if (std::isinf(x)) return -std::numeric_limits<double>::infinity();
    if (x < a + 1.0) {
        return lgamma_pos(a) + std::log1p(-reg_lower_gamma(a, x));
    }
    return -x + a * std::log(x) + std::log(upper_continued_fraction(a, x));
}

double log_gamma_integral_lower(double a, double s, double T) {
    detail::require(a > 0.0 && std::isfinite(a), "gamma integral requires a > 0");
    detail::require(T >= 0.0 && std::isfinite(T), "gamma integral requires finite T >= 0");
    detail::require(std::isfinite(s), "gamma integral requires a finite rate");
    if (T == 0.0) return -std::numeric_limits<double>::infinity();
    if (s > 0.0) {
        return log_lower_gamma(a, s * T) - a * std::log(s);
    }
    if (s == 0.0) {
        return a * std::log(T) - std::log(a);
    }
    return a * std::log(T) + log_positive_kummer_sum(a, -s * T);
}

double log_gamma_integral_upper(double a, double s, double T) {
    detail::require(a > 0.0 && std::isfinite(a), "gamma integral requires a > 0");
    detail::require(T >= 0.0 && !std::isnan(T), "gamma integral requires T >= 0");
    if (!(s > 0.0)) {
        throw DivergenceError("upper gamma integral diverges for rate s <= 0");
    }
    return log_upper_gamma(a, s * T) - a * std::log(s);
}

double gamma_integral_lower(double a, double s, double T) {
    return std::exp(log_gamma_integral_lower(a, s, T));
}

double gamma_integral_upper(double a, double s, double T) {
    return std::exp(log_gamma_integral_upper(a, s, T));
}

double lerch_phi(double z, double s, double alpha, const SeriesControl& ctl) {
    detail::require(z >= -1.0 && z <= 0.0, "lerch_phi requires -1 <= z <= 0");
    detail::require(s > 0.0, "lerch_phi requires s > 0");
    detail::require(alpha > 0.0, "lerch_phi requires alpha > 0");
    if (z == 0.0) {
        return std::pow(alpha, -s);
    }
    const double log_abs_z = std::log(-z);
    return sum_alternating(
               [&](int k) { return std::exp(k * log_abs_z - s * std::log(k + alpha)); }, ctl)
        .value;
}

double log_neg_binom_coeff(int n, int l) {
    detail::require(n >= 1, "neg_binom_coeff requires n >= 1");
    detail::require(l >= 0, "neg_binom_coeff requires l >= 0");
    if (l == 0 || n == 1) return 0.0;
    return lgamma_pos(n + l) - lgamma_pos(l + 1.0) - lgamma_pos(n);
}

double neg_binom_coeff(int n, int l) {
    detail::require(n >= 1, "neg_binom_coeff requires n >= 1");
    detail::require(l >= 0, "neg_binom_coeff requires l >= 0");
    if (l > 50 || n > 50) {
        return std::exp(log_neg_binom_coeff(n, l));
    }
    // each partial product is itself a binomial coefficient, so stays exact
    double value = 1.0;
    for (int j = 1; j <= l; ++j) {
        value = value * (n - 1 + j) / j;
    }
    return value;
}

double pochhammer(double x, int k) {
    detail::require(k >= 0, "pochhammer requires k >= 0");
    double value = 1.0;
    for (int i = 0; i < k; ++i) {
        value *= x + i;
    }
    return value;
}

double binomial_split_expectation(double a, double beta, double log_eps, int n,
                                  const SeriesControl& ctl) {
    detail::require(a > 0.0, "binomial_split_expectation requires a > 0");
    detail::require(beta > 0.0, "binomial_split_expectation requires beta > 0");
    detail::require(n >= 0, "binomial_split_expectation requires n >= 0");
    detail::require(std::isfinite(log_eps), "binomial_split_expectation requires finite eps");
    if (n == 0) return 1.0;

    if (log_eps >= 0.0) {
        return sum_alternating(
                   [&](int l) {
                       return std::exp(log_neg_binom_coeff(n, l) - (n + l) * log_eps -
                                       a * std::log1p(l / beta));
                   },
                   ctl)
            .value;
    }

    const double split = -beta * log_eps;
    const double log_gamma_a = lgamma_pos(a);
    return sum_alternating(
               [&](int l) {
                   const double below =
                       l * log_eps + log_gamma_integral_lower(a, 1.0 - (n + l) / beta, split);
                   const double above =
                       -(n + l) * log_eps + log_gamma_integral_upper(a, 1.0 + l / beta, split);
                   return std::exp(log_neg_binom_coeff(n, l) - log_gamma_a +
                                   detail::log_add_exp(below, above));
               },
               ctl)
        .value;
}

}  // namespace pt3
