// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace pt3 {

/// Truncation policy shared by every infinite series in the library.
///
/// A series stops once `consecutive_small` successive terms are below
/// `rel_tol` times the running sum. Alternating series are additionally
/// tracked through repeated pairwise averaging of their partial sums (the
/// Euler transform); that estimate is accepted once `consecutive_small`
/// successive checkpoints agree to `rel_tol`.
struct SeriesControl {
    double rel_tol = 1e-12;
    int max_terms = 10'000;
    int consecutive_small = 3;

    /// Throws DomainError unless 0 < rel_tol < 1, max_terms >= 1 and
    /// consecutive_small >= 1.
    void validate() const;
};

struct SeriesResult {
    double value = 0.0;
    int terms = 0;
    bool accelerated = false;
};

/// Sums sum_{k>=0} (-1)^k g(k). Terms may grow polynomially as long as the
/// series is Euler (Abel) summable; the accelerated estimate is returned in
/// that case. Throws ConvergenceError if neither criterion is met within
/// ctl.max_terms terms.
SeriesResult sum_alternating(const std::function<double(int)>& magnitude,
                             const SeriesControl& ctl = {});

double ln_gamma(double a);

/// Regularized lower incomplete gamma P(a, x).
double reg_lower_gamma(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double reg_upper_gamma(double a, double x);

/// ln of the unregularized lower incomplete gamma, ln gamma(a, x), x > 0.
double log_lower_gamma(double a, double x);
/// ln of the unregularized upper incomplete gamma, ln Gamma(a, x). Stays
/// finite where Gamma(a, x) itself underflows.
double log_upper_gamma(double a, double x);

/// Integral of x^(a-1) e^(-s x) over [0, T] for any real rate s. Negative
/// rates are handled in real arithmetic.
double gamma_integral_lower(double a, double s, double T);
/// Integral of x^(a-1) e^(-s x) over [T, inf); requires s > 0.
double gamma_integral_upper(double a, double s, double T);
/// Logarithms of the two integrals above (-inf when the integral is 0).
double log_gamma_integral_lower(double a, double s, double T);
double log_gamma_integral_upper(double a, double s, double T);

/// Lerch transcendent Phi(z, s, alpha) = sum_k z^k / (k + alpha)^s for
/// z in [-1, 0], s > 0, alpha > 0.
double lerch_phi(double z, double s, double alpha, const SeriesControl& ctl = {});

/// C(n + l - 1, l), the coefficients of (1 + u)^(-n) = sum_l C(n+l-1,l)(-u)^l.
double neg_binom_coeff(int n, int l);
double log_neg_binom_coeff(int n, int l);

/// Rising factorial (x)_k = Gamma(x + k) / Gamma(x).
double pochhammer(double x, int k);

/// E[(eps + e^(-G / beta))^(-n)] for G ~ Gamma(a, 1), eps = exp(log_eps).
///
/// For eps >= 1 the integrand is expanded in powers of e^(-G/beta)/eps over
/// the whole axis. For eps < 1 the axis is split at T = -beta ln(eps) and the
/// negative-exponent binomial expansion is applied on each side, giving
/// terms gamma_integral_lower(a, 1 - (n+l)/beta, T) and
/// gamma_integral_upper(a, 1 + l/beta, T). Both the logit-Pearson moments
/// and the harvested-power moments reduce to this expectation.
double binomial_split_expectation(double a, double beta, double log_eps, int n,
                                  const SeriesControl& ctl = {});

}  // namespace pt3
