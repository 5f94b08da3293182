// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "pt3/pearson3.hpp"
#include "pt3/specfun.hpp"

namespace pt3 {

enum class RateRegime { equal, distinct };

struct SumOptions {
    /// Rates whose relative spread is below this are treated as one common
    /// rate; the same threshold decides whether two rates coincide.
    double snap_tolerance = 1e-6;
    /// Largest sum of |Xi| for which the signed mixture is evaluated. Above
    /// it the mixture would lose more than ~12 digits to cancellation and the
    /// positive gamma series is used instead.
    double max_condition = 1e4;
};

/// How the density of the sum is expanded into Pearson III components.
enum class Representation {
    single,             // equal regime: one Pearson III
    partial_fractions,  // weights Xi(i, k) on (k, b_i, sm_L)
    gamma_series,       // positive weights on (sa_L + k, b_max, sm_L), k >= 0
};

struct MixtureTerm {
    double weight;
    Pearson3Params component;
};

/// Independent Pearson III summands with integer shapes and same-sign rates.
///
/// Either all rates coincide (equal regime: the sum is Pearson III with
/// shape sum a_i) or all are pairwise distinct (distinct regime: the sum is
/// a finite mixture of Pearson III densities with weights Xi(i, k)).
/// Construction rejects anything in between. Weights are computed once at
/// construction, so a SumSpec is an immutable value.
class SumSpec {
public:
    explicit SumSpec(std::vector<Pearson3Params> terms, SumOptions options = {});

    const std::vector<Pearson3Params>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    RateRegime regime() const { return regime_; }

    /// True when near-equal (but not identical) rates were merged.
    bool snapped() const { return snapped_; }

    bool upper_tailed() const { return terms_.front().rate > 0.0; }
    int total_shape() const { return total_shape_; }
    double total_shift() const { return total_shift_; }

    /// Rate of the reduced Pearson III in the equal regime.
    double common_rate() const;

    /// The sum itself when the regime is equal.
    Pearson3Params reduced() const;

    /// Mixture weight of the (shape k, rate b_i) component; i is 0-based and
    /// 1 <= k <= a_i. Distinct regime (or L = 1) only.
    double weight(std::size_t i, int k) const;

    /// Component (k, b_i, sm_L) paired with weight(i, k).
    Pearson3Params component(std::size_t i, int k) const;

    /// Sum of |Xi(i, k)|; 1 in the equal regime.
    double condition() const { return condition_; }
    Representation representation() const { return representation_; }

    /// The expansion every density, CDF and moment of the sum is built from.
    /// The gamma series is truncated once its weights reach 1 - 1e-15.
    const std::vector<MixtureTerm>& mixture() const { return mixture_; }

private:
    std::vector<Pearson3Params> terms_;
    RateRegime regime_ = RateRegime::equal;
    bool snapped_ = false;
    int total_shape_ = 0;
    double total_shift_ = 0.0;
    double common_rate_ = 0.0;
    std::vector<std::vector<double>> weights_;  // weights_[i][k - 1]
    double condition_ = 1.0;
    Representation representation_ = Representation::single;
    std::vector<MixtureTerm> mixture_;
};

/// Mixture weight from the nested closed-form sum over the j-chain.
double xi0_closed(const SumSpec& spec, std::size_t i, int k);

/// Mixture weight from the descending recursion started at k = a_i.
double xi0_recursive(const SumSpec& spec, std::size_t i, int k);

/// Weight of the (shape l, rate b_i, shift m_i) component when the
/// (k, b_i, sm_L) component is re-expanded around its own shift m_i; needs
/// 1 <= l <= k <= a_i.
double xi_shifted(const SumSpec& spec, std::size_t i, int k, int l);

/// Mass of the (l, b_i, m_i) component over the support of the sum. The
/// component density is taken as the entire function of x it is for
/// integer l, so the mass can be negative or exceed 1.
double shifted_component_mass(const SumSpec& spec, std::size_t i, int l);

/// Density of the sum rebuilt from the shifted expansion (distinct regime).
double sum_pdf_shifted(const SumSpec& spec, double x);

double sum_pdf(const SumSpec& spec, double x);
double sum_cdf(const SumSpec& spec, double x);
double sum_moment(const SumSpec& spec, int n);

/// e^{SX_L}.
double logsum_pdf(const SumSpec& spec, double y);
double logsum_cdf(const SumSpec& spec, double y);
double logsum_moment(const SumSpec& spec, int n);

/// logistic(SX_L).
double logitsum_pdf(const SumSpec& spec, double z);
double logitsum_cdf(const SumSpec& spec, double z);
/// Requires b_i > 0 for every term.
double logitsum_moment(const SumSpec& spec, int n, const SeriesControl& ctl = {});

}  // namespace pt3
