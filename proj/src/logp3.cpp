// SPDX-License-Identifier: Apache-2.0
#include "pt3/logp3.hpp"

#include <cmath>
#include <string>

#include "pt3/errors.hpp"

namespace pt3 {

double lp3_pdf(const Pearson3Params& params, double y) {
    params.validate();
    if (!(y > 0.0) || std::isinf(y) || !p3_in_support(params, std::log(y))) {
        throw SupportError("lp3_pdf: y=" + std::to_string(y) +
                           " is not strictly inside the support");
    }
    const double a = params.shape;
    const double b = params.rate;
    const double u = b * (std::log(y) - params.shift);
    const double log_density = std::log(std::abs(b)) + b * params.shift - ln_gamma(a) +
                               (a == 1.0 ? 0.0 : (a - 1.0) * std::log(u)) -
                               (b + 1.0) * std::log(y);
    return std::exp(log_density);
}

double lp3_cdf(const Pearson3Params& params, double y) {
    params.validate();
    detail::require(y > 0.0, "lp3_cdf requires y > 0");
    return p3_cdf(params, std::log(y));
}

double lp3_moment(const Pearson3Params& params, int n) {
    params.validate();
    detail::require(n >= 0, "lp3_moment requires n >= 0");
    if (n == 0) return 1.0;
    const double b = params.rate;
    if (b > 0.0 && b <= n) {
        throw DivergenceError("lp3_moment: moment of order " + std::to_string(n) +
                              " requires b > n (b=" + std::to_string(b) + ")");
    }
    return std::exp(params.shift * n + params.shape * std::log(b / (b - n)));
}

std::complex<double> lp3_char_fn_series(const Pearson3Params& params, double t,
                                        const SeriesControl& ctl) {
    params.validate();
    ctl.validate();
    if (!(params.rate < 0.0)) {
        throw DomainError("lp3_char_fn_series is only valid for b < 0");
    }
    if (t == 0.0) return {1.0, 0.0};
    const double a = params.shape;
    const double b = params.rate;
    const double log_abs_t = std::log(std::abs(t));
    const double sign_t = t > 0.0 ? 1.0 : -1.0;

    std::complex<double> sum{0.0, 0.0};
    int small_run = 0;
    for (int n = 0; n < ctl.max_terms; ++n) {
        const double log_mag = n * (log_abs_t + params.shift) - ln_gamma(n + 1.0) +
                               a * std::log(b / (b - n));
        const double mag = std::exp(log_mag) * (n % 2 == 0 ? 1.0 : sign_t);
        // j^n cycles through 1, j, -1, -j
        std::complex<double> term;
        switch (n % 4) {
            case 0: term = {mag, 0.0}; break;
            case 1: term = {0.0, mag}; break;
            case 2: term = {-mag, 0.0}; break;
            default: term = {0.0, -mag}; break;
        }
        sum += term;
        if (std::abs(term) < ctl.rel_tol * std::abs(sum)) {
            if (++small_run >= ctl.consecutive_small) return sum;
        } else {
            small_run = 0;
        }
    }
    throw ConvergenceError("lp3_char_fn_series did not converge within " +
                           std::to_string(ctl.max_terms) + " terms");
}

}  // namespace pt3
