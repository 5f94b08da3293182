// SPDX-License-Identifier: Apache-2.0
#include "pt3/pearson3.hpp"

#include <cmath>
#include <random>
#include <string>

#include "numeric_util.hpp"
#include "pt3/errors.hpp"
#include "pt3/specfun.hpp"

namespace pt3 {

void Pearson3Params::validate() const {
    detail::require(std::isfinite(shape) && shape > 0.0, "Pearson III shape a must be > 0");
    detail::require(std::isfinite(rate) && rate != 0.0, "Pearson III rate b must be nonzero");
    detail::require(std::isfinite(shift), "Pearson III shift m must be finite");
}

bool p3_in_support(const Pearson3Params& params, double x) {
    return params.rate > 0.0 ? x > params.shift : x < params.shift;
}

double p3_pdf(const Pearson3Params& params, double x) {
    params.validate();
    if (!p3_in_support(params, x) || std::isinf(x)) {
        throw SupportError("p3_pdf: x=" + std::to_string(x) +
                           " is not strictly inside the support");
    }
    const double y = params.rate * (x - params.shift);
    const double log_density = std::log(std::abs(params.rate)) - ln_gamma(params.shape) +
                               (params.shape == 1.0 ? 0.0 : (params.shape - 1.0) * std::log(y)) -
                               y;
    return std::exp(log_density);
}

double p3_cdf(const Pearson3Params& params, double x) {
    params.validate();
    detail::require(!std::isnan(x), "p3_cdf: x is NaN");
    if (params.rate > 0.0) {
        if (x <= params.shift) return 0.0;
        return reg_lower_gamma(params.shape, params.rate * (x - params.shift));
    }
    if (x >= params.shift) return 1.0;
    return reg_upper_gamma(params.shape, params.rate * (x - params.shift));
}

double p3_moment(const Pearson3Params& params, int n) {
    params.validate();
    detail::require(n >= 0, "p3_moment requires n >= 0");
    detail::CompensatedSum sum;
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
        const double shift_power = (n - k == 0) ? 1.0 : std::pow(params.shift, n - k);
        sum.add(binom * shift_power * pochhammer(params.shape, k) / std::pow(params.rate, k));
        binom = binom * (n - k) / (k + 1);
    }
    return sum.value();
}

std::complex<double> p3_char_fn(const Pearson3Params& params, double t) {
    params.validate();
    using namespace std::complex_literals;
    const std::complex<double> base = 1.0 - 1i * t / params.rate;
    return std::exp(1i * params.shift * t) * std::pow(base, -params.shape);
}

Pearson3Params p3_scale(const Pearson3Params& params, double c) {
    params.validate();
    if (c == 0.0 || !std::isfinite(c)) {
        throw DomainError("p3_scale: scaling by c=0 gives a degenerate distribution");
    }
    return {params.shape, params.rate / c, params.shift * c};
}

std::vector<double> p3_sample(const Pearson3Params& params, std::uint64_t seed,
                              std::size_t count) {
    params.validate();
    detail::require(count >= 1, "p3_sample requires count >= 1");
    std::mt19937_64 engine(seed);
    std::gamma_distribution<double> gamma(params.shape, 1.0 / std::abs(params.rate));
    const double sign = params.rate > 0.0 ? 1.0 : -1.0;
    std::vector<double> out(count);
    for (auto& v : out) {
        v = params.shift + sign * gamma(engine);
    }
    return out;
}

}  // namespace pt3
