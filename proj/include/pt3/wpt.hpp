// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "pt3/pearson3.hpp"
#include "pt3/specfun.hpp"
#include "pt3/sums.hpp"

namespace pt3 {

/// Speed of light used for the free-space path loss, m/s.
inline constexpr double kSpeedOfLight = 2.998e8;

/// Logistic (saturating) energy-harvesting model.
struct EHModel {
    double A = 150.0;   // 1/W
    double B = 0.014;   // W
    double Ps = 0.024;  // W, saturation power

    void validate() const;
    /// Ps / e^{AB}.
    double c() const;
};

/// One transmitter-to-harvester branch. Channel gain |h|^2 ~ gamma(a, b),
/// i.e. Pearson III (a, b, 0) with b > 0.
struct LinkBudget {
    double tx_aperture = 0.5;    // m^2
    double rx_aperture = 0.01;   // m^2
    double carrier_hz = 2.4e9;   // Hz
    double distance = 10.0;      // m
    double power = 1.0;          // W
    Pearson3Params fading{3.0, 1.0, 0.0};

    void validate() const;
};

struct MisoScenario {
    EHModel model;
    std::vector<LinkBudget> branches;

    void validate() const;
};

/// l = 1 - exp(-a_t a_r / ((c0 / f_c)^2 d^2)).
double path_loss(const LinkBudget& link);

/// b / (A l p): rate of A times the received power.
double effective_rate(const EHModel& model, const LinkBudget& link);

/// Harvested power for a received RF power r >= 0; 0 at r = 0, tends to Ps.
double harvested_power(const EHModel& model, double received_power);
double harvested_power_siso(const EHModel& model, const LinkBudget& link, double h2);
double harvested_power_miso(const MisoScenario& scenario, const std::vector<double>& h2s);

/// Distribution of the harvested power when A times the received power is
/// gamma(shape, bhat). These kernels carry both the SISO case and each
/// mixture component of the MISO case.
double harvested_cdf(const EHModel& model, double shape, double bhat, double q);
double harvested_pdf(const EHModel& model, double shape, double bhat, double q);
double harvested_moment(const EHModel& model, double shape, double bhat, int n,
                        const SeriesControl& ctl = {});

/// CDF saturates to 0 for q <= 0 and to 1 for q >= Ps.
double q_cdf_siso(const EHModel& model, const LinkBudget& link, double q);
/// Throws SupportError unless 0 < q < Ps.
double q_pdf_siso(const EHModel& model, const LinkBudget& link, double q);
/// Double series (finite binomial outer sum, alternating inner series).
double q_moment_siso(const EHModel& model, const LinkBudget& link, int n,
                     const SeriesControl& ctl = {});
/// Single alternating series for the mean.
double q_mean_siso(const EHModel& model, const LinkBudget& link, const SeriesControl& ctl = {});

/// The branch rates b_i / (l_i p_i) decide the regime. Equal (or snapped)
/// rates reduce to the SISO kernels with shape sum a_i; pairwise-distinct
/// rates use the mixture weights of the sums module and need integer shapes.
RateRegime miso_regime(const MisoScenario& scenario, const SumOptions& options = {});
double q_cdf_miso(const MisoScenario& scenario, double q, const SumOptions& options = {});
double q_pdf_miso(const MisoScenario& scenario, double q, const SumOptions& options = {});
double q_moment_miso(const MisoScenario& scenario, int n, const SeriesControl& ctl = {},
                     const SumOptions& options = {});

/// Probability that the harvested power falls below q_t.
double outage_probability(const EHModel& model, const LinkBudget& link, double q_t);
double outage_probability(const MisoScenario& scenario, double q_t);

}  // namespace pt3
