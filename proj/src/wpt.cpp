// SPDX-License-Identifier: Apache-2.0
#include "pt3/wpt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "numeric_util.hpp"
#include "pt3/errors.hpp"

namespace pt3 {
namespace {

constexpr double kEqualRateTolerance = 1e-9;

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

// AB - ln((Ps - q) / (c + q)): the value of A r at which Q(r) = q.
double inverse_level(const EHModel& model, double q) {
    return model.A * model.B - std::log((model.Ps - q) / (model.c() + q));
}

struct Component {
    double weight;
    double shape;
    double bhat;
};

// Harvested power as a finite mixture of gamma(shape, bhat) kernels.
std::vector<Component> miso_components(const MisoScenario& scenario, const SumOptions& options) {
    scenario.validate();
    const auto& model = scenario.model;
    std::vector<Pearson3Params> terms;
    double total_shape = 0.0;
    double mean_scale = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    for (const auto& link : scenario.branches) {
        const double bhat = effective_rate(model, link);
        terms.push_back({link.fading.shape, bhat, 0.0});
        total_shape += link.fading.shape;
        mean_scale += link.fading.shape / bhat;
        lo = terms.size() == 1 ? bhat : std::min(lo, bhat);
        hi = terms.size() == 1 ? bhat : std::max(hi, bhat);
    }
    if ((hi - lo) / hi <= std::max(kEqualRateTolerance, options.snap_tolerance)) {
        return {{1.0, total_shape, total_shape / mean_scale}};
    }
    const SumSpec spec(std::move(terms), options);
    std::vector<Component> out;
    for (const auto& term : spec.mixture()) {
        out.push_back({term.weight, term.component.shape, term.component.rate});
    }
    return out;
}

template <typename F>
double mix(const std::vector<Component>& parts, F&& kernel) {
    detail::CompensatedSum acc;
    for (const auto& part : parts) {
        acc.add(part.weight * kernel(part.shape, part.bhat));
    }
    return acc.value();
}

}  // namespace

void EHModel::validate() const {
    detail::require(positive_finite(A), "EH model requires A > 0");
    detail::require(positive_finite(B), "EH model requires B > 0");
    detail::require(positive_finite(Ps), "EH model requires Ps > 0");
}

double EHModel::c() const { return Ps * std::exp(-A * B); }

void LinkBudget::validate() const {
    detail::require(positive_finite(tx_aperture), "link requires transmit aperture > 0");
    detail::require(positive_finite(rx_aperture), "link requires receive aperture > 0");
    detail::require(positive_finite(carrier_hz), "link requires carrier frequency > 0");
    detail::require(positive_finite(distance), "link requires distance > 0");
    detail::require(positive_finite(power), "link requires transmit power > 0");
    fading.validate();
    detail::require(fading.shift == 0.0 && fading.rate > 0.0,
                    "channel gain must be gamma(a, b): shift 0 and rate b > 0");
}

void MisoScenario::validate() const {
    model.validate();
    detail::require(!branches.empty(), "scenario requires at least one branch");
    for (const auto& link : branches) link.validate();
}

double path_loss(const LinkBudget& link) {
    link.validate();
    const double wavelength = kSpeedOfLight / link.carrier_hz;
    const double exponent =
        link.tx_aperture * link.rx_aperture / (wavelength * wavelength * link.distance * link.distance);
    return -std::expm1(-exponent);
}

double effective_rate(const EHModel& model, const LinkBudget& link) {
    model.validate();
    return link.fading.rate / (model.A * path_loss(link) * link.power);
}

double harvested_power(const EHModel& model, double received_power) {
    model.validate();
    detail::require(received_power >= 0.0, "received power must be >= 0");
    const double e_ab = std::exp(model.A * model.B);
    const double logistic_term = (1.0 + e_ab) / (1.0 + std::exp(-model.A * (received_power - model.B)));
    return model.c() * (logistic_term - 1.0);
}

double harvested_power_siso(const EHModel& model, const LinkBudget& link, double h2) {
    detail::require(h2 >= 0.0, "channel gain must be >= 0");
    return harvested_power(model, path_loss(link) * link.power * h2);
}

double harvested_power_miso(const MisoScenario& scenario, const std::vector<double>& h2s) {
    scenario.validate();
    detail::require(h2s.size() == scenario.branches.size(),
                    "expected one channel gain per branch (got " + std::to_string(h2s.size()) +
                        " for " + std::to_string(scenario.branches.size()) + " branches)");
    double received = 0.0;
    for (std::size_t i = 0; i < h2s.size(); ++i) {
        detail::require(h2s[i] >= 0.0, "channel gain must be >= 0");
        const auto& link = scenario.branches[i];
        received += path_loss(link) * link.power * h2s[i];
    }
    return harvested_power(scenario.model, received);
}

double harvested_cdf(const EHModel& model, double shape, double bhat, double q) {
    model.validate();
    detail::require(positive_finite(shape) && positive_finite(bhat),
                    "harvested-power kernel requires shape > 0 and rate > 0");
    if (!(q > 0.0)) return 0.0;
    if (q >= model.Ps) return 1.0;
    return reg_lower_gamma(shape, bhat * inverse_level(model, q));
}

double harvested_pdf(const EHModel& model, double shape, double bhat, double q) {
    model.validate();
    detail::require(positive_finite(shape) && positive_finite(bhat),
                    "harvested-power kernel requires shape > 0 and rate > 0");
    if (!(q > 0.0 && q < model.Ps)) {
        throw SupportError("harvested-power density needs 0 < q < Ps");
    }
    const double c = model.c();
    const double u = inverse_level(model, q);
    // gamma density of A r at u, times du/dq
    const double log_value = shape * std::log(bhat) + (shape - 1.0) * std::log(u) - bhat * u -
                             ln_gamma(shape) + std::log(model.Ps + c) -
                             std::log(model.Ps - q) - std::log(c + q);
    return std::exp(log_value);
}

double harvested_moment(const EHModel& model, double shape, double bhat, int n,
                        const SeriesControl& ctl) {
    model.validate();
    detail::require(positive_finite(shape) && positive_finite(bhat),
                    "harvested-power kernel requires shape > 0 and rate > 0");
    detail::require(n >= 0, "moment order must be >= 0");
    if (n == 0) return 1.0;
    // Q = c ((1 + eps) / (eps + e^{-X}) - 1) with eps = e^{-AB}, X ~ gamma(shape, bhat)
    const double log_eps = -model.A * model.B;
    const double one_plus_eps = 1.0 + std::exp(log_eps);
    detail::CompensatedSum acc;
    double binom = 1.0;  // C(n, l1)
    for (int l1 = 0; l1 <= n; ++l1) {
        if (l1 > 0) binom = binom * (n - l1 + 1) / l1;
        const double expectation = binomial_split_expectation(shape, bhat, log_eps, l1, ctl);
        const double sign = ((n - l1) % 2 == 0) ? 1.0 : -1.0;
        acc.add(sign * binom * std::pow(one_plus_eps, l1) * expectation);
    }
    return std::pow(model.c(), n) * acc.value();
}

double q_cdf_siso(const EHModel& model, const LinkBudget& link, double q) {
    return harvested_cdf(model, link.fading.shape, effective_rate(model, link), q);
}

double q_pdf_siso(const EHModel& model, const LinkBudget& link, double q) {
    return harvested_pdf(model, link.fading.shape, effective_rate(model, link), q);
}

double q_moment_siso(const EHModel& model, const LinkBudget& link, int n, const SeriesControl& ctl) {
    detail::require(n >= 1, "moment order must be >= 1");
    return harvested_moment(model, link.fading.shape, effective_rate(model, link), n, ctl);
}

double q_mean_siso(const EHModel& model, const LinkBudget& link, const SeriesControl& ctl) {
    const double a = link.fading.shape;
    const double bhat = effective_rate(model, link);
    const double ab = model.A * model.B;
    const double split = ab * bhat;
    const double log_gamma_a = ln_gamma(a);
    // k-th term: e^{-ABk} I_low(1 - (k+1)/bhat) + e^{AB(k+1)} I_up(1 + k/bhat), over Gamma(a)
    const double series =
        sum_alternating(
            [&](int k) {
                const double below =
                    -ab * k + log_gamma_integral_lower(a, 1.0 - (k + 1.0) / bhat, split);
                const double above = ab * (k + 1.0) + log_gamma_integral_upper(a, 1.0 + k / bhat, split);
                return std::exp(detail::log_add_exp(below, above) - log_gamma_a);
            },
            ctl)
            .value;
    const double c = model.c();
    return c * (1.0 + std::exp(-ab)) * series - c;
}

RateRegime miso_regime(const MisoScenario& scenario, const SumOptions& options) {
    // the distinct regime always has at least two components
    return miso_components(scenario, options).size() == 1 ? RateRegime::equal
                                                           : RateRegime::distinct;
}

double q_cdf_miso(const MisoScenario& scenario, double q, const SumOptions& options) {
    const auto parts = miso_components(scenario, options);
    if (!(q > 0.0)) return 0.0;
    if (q >= scenario.model.Ps) return 1.0;
    const double value = mix(parts, [&](double shape, double bhat) {
        return harvested_cdf(scenario.model, shape, bhat, q);
    });
    return std::clamp(value, 0.0, 1.0);
}

double q_pdf_miso(const MisoScenario& scenario, double q, const SumOptions& options) {
    const auto parts = miso_components(scenario, options);
    return std::max(0.0, mix(parts, [&](double shape, double bhat) {
                        return harvested_pdf(scenario.model, shape, bhat, q);
                    }));
}

double q_moment_miso(const MisoScenario& scenario, int n, const SeriesControl& ctl,
                     const SumOptions& options) {
    detail::require(n >= 1, "moment order must be >= 1");
    const auto parts = miso_components(scenario, options);
    return mix(parts, [&](double shape, double bhat) {
        return harvested_moment(scenario.model, shape, bhat, n, ctl);
    });
}

double outage_probability(const EHModel& model, const LinkBudget& link, double q_t) {
    return q_cdf_siso(model, link, q_t);
}

double outage_probability(const MisoScenario& scenario, double q_t) {
    return q_cdf_miso(scenario, q_t);
}

}  // namespace pt3
