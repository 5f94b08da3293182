// SPDX-License-Identifier: Apache-2.0
#include "pt3/logitp3.hpp"

#include <cmath>
#include <string>

#include "numeric_util.hpp"
#include "pt3/errors.hpp"

namespace pt3 {
namespace {

Pearson3Params logit_gamma_params(double a, double b) {
    detail::require(b > 0.0, "logit-gamma requires b > 0");
    return {a, b, 0.0};
}

}  // namespace

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double logit(double z) {
    detail::require(z > 0.0 && z < 1.0, "logit requires 0 < z < 1");
    return std::log(z) - std::log1p(-z);
}

double ltp3_cdf(const Pearson3Params& params, double z) {
    params.validate();
    detail::require(z > 0.0 && z < 1.0, "ltp3_cdf requires 0 < z < 1");
    return p3_cdf(params, logit(z));
}

double ltp3_pdf(const Pearson3Params& params, double z) {
    params.validate();
    if (!(z > 0.0 && z < 1.0) || !p3_in_support(params, logit(z))) {
        throw SupportError("ltp3_pdf: z=" + std::to_string(z) +
                           " is not strictly inside the support");
    }
    const double a = params.shape;
    const double b = params.rate;
    const double u = b * (logit(z) - params.shift);
    const double log_density = std::log(std::abs(b)) + b * params.shift - ln_gamma(a) +
                               (a == 1.0 ? 0.0 : (a - 1.0) * std::log(u)) -
                               (b + 1.0) * std::log(z) + (b - 1.0) * std::log1p(-z);
    return std::exp(log_density);
}

double ltp3_moment(const Pearson3Params& params, int n, const SeriesControl& ctl) {
    params.validate();
    ctl.validate();
    detail::require(n >= 0, "ltp3_moment requires n >= 0");
    if (n == 0) return 1.0;
    if (params.rate < 0.0) {
        // E[Z^n] = E[(1 - Z')^n] with Z' ~ (a, -b, -m)
        const Pearson3Params mirrored{params.shape, -params.rate, -params.shift};
        detail::CompensatedSum sum;
        double binom = 1.0;
        for (int j = 0; j <= n; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            sum.add(sign * binom * ltp3_moment(mirrored, j, ctl));
            binom = binom * (n - j) / (j + 1);
        }
        return sum.value();
    }
    // (1 + e^{-x/b - m})^{-n} = e^{mn} (e^m + e^{-x/b})^{-n}, x ~ Gamma(a, 1)
    return std::exp(params.shift * n) *
           binomial_split_expectation(params.shape, params.rate, params.shift, n, ctl);
}

double ltp3_mean_closed(const Pearson3Params& params, const SeriesControl& ctl) {
    params.validate();
    detail::require(params.rate > 0.0, "ltp3_mean_closed requires b > 0");
    detail::require(params.shift >= 0.0, "ltp3_mean_closed requires m >= 0");
    const double a = params.shape;
    const double b = params.rate;
    return std::pow(b, a) * lerch_phi(-std::exp(-params.shift), a, b, ctl);
}

double ltp3_second_moment_closed(const Pearson3Params& params, const SeriesControl& ctl) {
    params.validate();
    detail::require(params.rate > 0.0, "ltp3_second_moment_closed requires b > 0");
    detail::require(params.shift >= 0.0, "ltp3_second_moment_closed requires m >= 0");
    const double a = params.shape;
    const double b = params.rate;
    if (a <= 1.0) {
        return ltp3_moment(params, 2, ctl);
    }
    const double z = -std::exp(-params.shift);
    return std::pow(b, a) * (lerch_phi(z, a - 1.0, b, ctl) - (b - 1.0) * lerch_phi(z, a, b, ctl));
}

double logit_gamma_cdf(double a, double b, double z) {
    return ltp3_cdf(logit_gamma_params(a, b), z);
}

double logit_gamma_pdf(double a, double b, double z) {
    return ltp3_pdf(logit_gamma_params(a, b), z);
}

double logit_gamma_moment(double a, double b, int n, const SeriesControl& ctl) {
    return ltp3_moment(logit_gamma_params(a, b), n, ctl);
}

}  // namespace pt3
