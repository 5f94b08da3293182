// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "pt3/pearson3.hpp"
#include "pt3/specfun.hpp"

namespace pt3 {

// Log-Pearson type III: Y = e^X with X ~ Pearson III. Support is
// (e^m, inf) for b > 0 and (0, e^m) for b < 0.

double lp3_pdf(const Pearson3Params& params, double y);

/// Throws DomainError for y <= 0; saturates outside the support.
double lp3_cdf(const Pearson3Params& params, double y);

/// e^{mn} (b / (b - n))^a. For b > 0 the moment exists only when b > n;
/// otherwise DivergenceError is thrown.
double lp3_moment(const Pearson3Params& params, int n);

/// Characteristic function as the moment power series; defined for b < 0.
std::complex<double> lp3_char_fn_series(const Pearson3Params& params, double t,
                                        const SeriesControl& ctl = {});

}  // namespace pt3
