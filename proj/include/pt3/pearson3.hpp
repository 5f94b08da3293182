// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pt3 {

/// Shape, inverse scale and shift of a Pearson type III variate. The same
/// triple parameterizes the log (e^X) and logit (logistic(X)) members.
///
/// Support is (shift, inf) for rate > 0 and (-inf, shift) for rate < 0.
struct Pearson3Params {
    double shape = 1.0;  // a > 0
    double rate = 1.0;   // b != 0
    double shift = 0.0;  // m

    /// Throws DomainError unless shape > 0, rate != 0 and all are finite.
    void validate() const;

    bool upper_tailed() const { return rate > 0.0; }
    friend bool operator==(const Pearson3Params&, const Pearson3Params&) = default;
};

/// True iff x lies strictly inside the open support.
bool p3_in_support(const Pearson3Params& params, double x);

/// Density. Throws SupportError on or outside the support boundary.
double p3_pdf(const Pearson3Params& params, double x);

/// Distribution function; saturates to 0 or 1 outside the support.
double p3_cdf(const Pearson3Params& params, double x);

/// n-th raw moment.
double p3_moment(const Pearson3Params& params, int n);

/// Characteristic function e^{jmt} (1 - jt/b)^{-a}, principal branch.
std::complex<double> p3_char_fn(const Pearson3Params& params, double t);

/// Parameters of c X when X has `params`; c must be nonzero.
Pearson3Params p3_scale(const Pearson3Params& params, double c);

/// i.i.d. draws m + sign(b) G with G ~ Gamma(a, |b|), deterministic in seed.
std::vector<double> p3_sample(const Pearson3Params& params, std::uint64_t seed,
                              std::size_t count);

}  // namespace pt3
