// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pt3/pearson3.hpp"
#include "pt3/specfun.hpp"

namespace pt3 {

/// 1 / (1 + e^{-x}).
double logistic(double x);
/// ln(z / (1 - z)) for z in (0, 1).
double logit(double z);

// Logit-Pearson type III: Z = logistic(X) with X ~ Pearson III. Support is
// (logistic(m), 1) for b > 0 and (0, logistic(m)) for b < 0.

/// Throws DomainError unless 0 < z < 1; saturates outside the support.
double ltp3_cdf(const Pearson3Params& params, double z);

/// Density. Throws SupportError on or outside the support boundary.
double ltp3_pdf(const Pearson3Params& params, double z);

/// n-th moment. For b > 0 this is the negative-binomial series in e^{-m}
/// (m >= 0) or its split incomplete-gamma form (m < 0). For b < 0 the
/// moment is obtained from the mirrored variate 1 - Z ~ (a, -b, -m).
double ltp3_moment(const Pearson3Params& params, int n, const SeriesControl& ctl = {});

/// b^a Phi(-e^{-m}, a, b); requires b > 0 and m >= 0.
double ltp3_mean_closed(const Pearson3Params& params, const SeriesControl& ctl = {});

/// b^a (Phi(-e^{-m}, a-1, b) - (b-1) Phi(-e^{-m}, a, b)); requires b > 0 and
/// m >= 0. For a <= 1 the Lerch form is outside its domain and the
/// moment series is used instead.
double ltp3_second_moment_closed(const Pearson3Params& params, const SeriesControl& ctl = {});

// Logit-gamma: the b > 0, m = 0 member, supported on (1/2, 1).
double logit_gamma_cdf(double a, double b, double z);
double logit_gamma_pdf(double a, double b, double z);
double logit_gamma_moment(double a, double b, int n, const SeriesControl& ctl = {});

}  // namespace pt3
