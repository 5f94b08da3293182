// SPDX-License-Identifier: Apache-2.0
#include "pt3/sums.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "numeric_util.hpp"
#include "pt3/errors.hpp"
#include "pt3/logitp3.hpp"
#include "pt3/logp3.hpp"

namespace pt3 {
namespace {

// Rates within this relative distance are the same rate, no snapping involved.
constexpr double kEqualRateTolerance = 1e-9;

using LongSum = detail::BasicCompensatedSum<long double>;

bool is_positive_integer(double a) {
    return a >= 1.0 && a == std::floor(a) && a < 1e6;
}

double relative_gap(double x, double y) {
    return std::abs(x - y) / std::max(std::abs(x), std::abs(y));
}

// prod_w b_w^{a_w} / b_i^{k}, the prefactor shared by every weight of term i.
long double weight_prefactor(const std::vector<Pearson3Params>& terms, std::size_t i, int k) {
    long double log_abs = 0.0L;
    int negatives = 0;
    for (const auto& t : terms) {
        log_abs += t.shape * std::log(std::abs(static_cast<long double>(t.rate)));
        if (t.rate < 0.0) negatives += static_cast<int>(t.shape);
    }
    log_abs -= k * std::log(std::abs(static_cast<long double>(terms[i].rate)));
    if (terms[i].rate < 0.0) negatives -= k;
    const long double magnitude = std::exp(log_abs);
    return (negatives % 2 == 0) ? magnitude : -magnitude;
}

std::vector<long double> recursive_weights(const std::vector<Pearson3Params>& terms,
                                           std::size_t i) {
    const int ai = static_cast<int>(terms[i].shape);
    const long double bi = terms[i].rate;

    // e[j] = sum_{q != i} a_q b_i^j (b_i - b_q)^{-j}
    std::vector<long double> e(ai, 0.0L);
    for (int j = 1; j < ai; ++j) {
        LongSum acc;
        for (std::size_t q = 0; q < terms.size(); ++q) {
            if (q == i) continue;
            const long double ratio = bi / (bi - static_cast<long double>(terms[q].rate));
            acc.add(terms[q].shape * std::pow(ratio, j));
        }
        e[j] = acc.value();
    }

    // xi[n] holds Xi(i, a_i - n)
    std::vector<long double> xi(ai, 0.0L);
    long double base = weight_prefactor(terms, i, ai);
    for (std::size_t q = 0; q < terms.size(); ++q) {
        if (q == i) continue;
        base *= std::pow(static_cast<long double>(terms[q].rate) - bi, -terms[q].shape);
    }
    xi[0] = base;
    for (int n = 1; n < ai; ++n) {
        LongSum acc;
        for (int j = 1; j <= n; ++j) {
            acc.add(e[j] * xi[n - j]);
        }
        xi[n] = acc.value() / n;
    }

    std::vector<long double> by_shape(ai);
    for (int k = 1; k <= ai; ++k) {
        by_shape[k - 1] = xi[ai - k];
    }
    return by_shape;
}

// Sum over r_q >= 0 (q != i) with sum r_q = remaining of
// prod_q C(a_q + r_q - 1, r_q) (b_i - b_q)^{-a_q - r_q}.
void accumulate_compositions(const std::vector<Pearson3Params>& terms, std::size_t i,
                             std::size_t q, int remaining, long double product, LongSum& acc) {
    if (q == terms.size()) {
        if (remaining == 0) acc.add(product);
        return;
    }
    if (q == i) {
        accumulate_compositions(terms, i, q + 1, remaining, product, acc);
        return;
    }
    const int aq = static_cast<int>(terms[q].shape);
    const long double gap = static_cast<long double>(terms[i].rate) - terms[q].rate;
    long double factor = std::pow(gap, -aq);
    long double binom = 1.0L;
    for (int r = 0; r <= remaining; ++r) {
        if (r > 0) {
            binom = binom * (aq + r - 1) / r;
            factor /= gap;
        }
        accumulate_compositions(terms, i, q + 1, remaining - r, product * binom * factor, acc);
    }
}

void check_term_index(const SumSpec& spec, std::size_t i, int k) {
    detail::require(i < spec.size(), "term index out of range");
    detail::require(k >= 1 && k <= static_cast<int>(spec.terms()[i].shape),
                    "shape index k must satisfy 1 <= k <= a_i");
}

void require_distinct(const SumSpec& spec) {
    detail::require(spec.size() == 1 || spec.regime() == RateRegime::distinct,
                    "mixture weights exist only for pairwise distinct rates");
}

// Entire-function form of the integer-shape density: valid on either side of m.
double raw_component_pdf(int l, double b, double m, double x) {
    const double u = b * (x - m);
    const double value = std::exp(-u - ln_gamma(l)) * std::pow(u, l - 1) * std::abs(b);
    return value;
}

// Q(l, y) = e^{-y} sum_{j<l} y^j / j!, which continues to y < 0 for integer l.
double poisson_tail(int l, double y) {
    detail::CompensatedSum acc;
    double term = 1.0;
    for (int j = 0; j < l; ++j) {
        if (j > 0) term *= y / j;
        acc.add(term);
    }
    return std::exp(-y) * acc.value();
}

// Positive-weight expansion of a sum of gammas around the largest rate |b|:
// weights C delta_k with C = prod (b_j / b_max)^{a_j} and
// delta_{k+1} = sum_{i=1}^{k+1} g_i delta_{k+1-i} / (k+1), g_i = sum_j a_j r_j^i,
// r_j = 1 - b_j / b_max. No cancellation; converges like max r_j^k.
std::vector<MixtureTerm> gamma_series(const std::vector<Pearson3Params>& terms, int total_shape,
                                      double total_shift) {
    constexpr int kMaxTerms = 20000;
    constexpr double kTailMass = 1e-15;
    double b_max = 0.0;
    for (const auto& t : terms) b_max = std::max(b_max, std::abs(t.rate));
    const double sign = terms.front().rate > 0.0 ? 1.0 : -1.0;

    long double log_c = 0.0L;
    for (const auto& t : terms) log_c += t.shape * std::log(std::abs(t.rate) / b_max);
    const long double c = std::exp(log_c);

    std::vector<long double> g{0.0L};
    std::vector<long double> delta{1.0L};
    std::vector<MixtureTerm> out{{static_cast<double>(c), {double(total_shape), sign * b_max, total_shift}}};
    LongSum mass;
    mass.add(c);
    for (int k = 1; 1.0L - mass.value() > kTailMass; ++k) {
        if (k >= kMaxTerms) {
            throw ConvergenceError("gamma series of the sum needs more than " +
                                   std::to_string(kMaxTerms) +
                                   " terms; the rates are both close and widely spread");
        }
        LongSum gk;
        for (const auto& t : terms) gk.add(t.shape * std::pow(1.0L - std::abs(t.rate) / b_max, k));
        g.push_back(gk.value());
        LongSum acc;
        for (int i = 1; i <= k; ++i) acc.add(g[i] * delta[k - i]);
        delta.push_back(acc.value() / k);
        const long double w = c * delta.back();
        mass.add(w);
        out.push_back({static_cast<double>(w), {double(total_shape + k), sign * b_max, total_shift}});
    }
    return out;
}

}  // namespace

SumSpec::SumSpec(std::vector<Pearson3Params> terms, SumOptions options)
    : terms_(std::move(terms)) {
    detail::require(!terms_.empty(), "a sum needs at least one term");
    detail::require(options.snap_tolerance >= 0.0 && options.snap_tolerance < 1.0,
                    "snap tolerance must lie in [0, 1)");
    detail::require(options.max_condition >= 1.0, "max condition must be >= 1");
    for (const auto& t : terms_) {
        t.validate();
        detail::require(is_positive_integer(t.shape), "sum terms need positive integer shapes");
    }
    const bool positive = terms_.front().rate > 0.0;
    for (const auto& t : terms_) {
        detail::require((t.rate > 0.0) == positive,
                        "sum terms need rates of one sign (all positive or all negative)");
    }

    total_shape_ = 0;
    total_shift_ = 0.0;
    double sum_mean_scale = 0.0;  // sum a_i / b_i
    double lo = terms_.front().rate;
    double hi = lo;
    for (const auto& t : terms_) {
        total_shape_ += static_cast<int>(t.shape);
        total_shift_ += t.shift;
        sum_mean_scale += t.shape / t.rate;
        lo = std::min(lo, t.rate);
        hi = std::max(hi, t.rate);
    }

    const double spread = relative_gap(lo, hi);
    const double coincide = std::max(kEqualRateTolerance, options.snap_tolerance);
    if (spread <= coincide) {
        regime_ = RateRegime::equal;
        snapped_ = spread > kEqualRateTolerance;
        // matches the mean of the sum, and is b itself when rates are identical
        common_rate_ = total_shape_ / sum_mean_scale;
    } else {
        regime_ = RateRegime::distinct;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            for (std::size_t j = i + 1; j < terms_.size(); ++j) {
                if (relative_gap(terms_[i].rate, terms_[j].rate) <= coincide) {
                    std::ostringstream msg;
                    msg.precision(12);
                    msg << "terms " << i + 1 << " and " << j + 1 << " share the rate "
                        << terms_[i].rate
                        << " while others differ; mixed rate multiplicities are not supported";
                    throw DomainError(msg.str());
                }
            }
        }
    }

    if (regime_ == RateRegime::distinct) {
        weights_.resize(terms_.size());
        condition_ = 0.0;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto xi = recursive_weights(terms_, i);
            weights_[i].assign(xi.begin(), xi.end());
            for (double w : weights_[i]) condition_ += std::abs(w);
        }
        if (condition_ <= options.max_condition) {
            representation_ = Representation::partial_fractions;
            for (std::size_t i = 0; i < terms_.size(); ++i) {
                for (int k = 1; k <= static_cast<int>(terms_[i].shape); ++k) {
                    if (weights_[i][k - 1] != 0.0) mixture_.push_back({weights_[i][k - 1], component(i, k)});
                }
            }
        } else {
            representation_ = Representation::gamma_series;
            mixture_ = gamma_series(terms_, total_shape_, total_shift_);
        }
        return;
    }
    if (terms_.size() == 1) {
        weights_.assign(1, std::vector<double>(total_shape_, 0.0));
        weights_[0].back() = 1.0;
    }
    mixture_.push_back({1.0, reduced()});
}

double SumSpec::common_rate() const {
    detail::require(regime_ == RateRegime::equal, "common_rate needs the equal-rate regime");
    return common_rate_;
}

Pearson3Params SumSpec::reduced() const {
    return {static_cast<double>(total_shape_), common_rate(), total_shift_};
}

double SumSpec::weight(std::size_t i, int k) const {
    require_distinct(*this);
    check_term_index(*this, i, k);
    return weights_[i][k - 1];
}

Pearson3Params SumSpec::component(std::size_t i, int k) const {
    check_term_index(*this, i, k);
    return {static_cast<double>(k), terms_[i].rate, total_shift_};
}

double xi0_closed(const SumSpec& spec, std::size_t i, int k) {
    require_distinct(spec);
    check_term_index(spec, i, k);
    const auto& terms = spec.terms();
    if (terms.size() == 1) {
        return k == static_cast<int>(terms[0].shape) ? 1.0 : 0.0;
    }
    const int ai = static_cast<int>(terms[i].shape);
    LongSum acc;
    accumulate_compositions(terms, i, 0, ai - k, 1.0L, acc);
    const int sign_exponent = spec.total_shape() - ai;
    const long double sign = (sign_exponent % 2 == 0) ? 1.0L : -1.0L;
    return static_cast<double>(sign * weight_prefactor(terms, i, k) * acc.value());
}

double xi0_recursive(const SumSpec& spec, std::size_t i, int k) {
    require_distinct(spec);
    check_term_index(spec, i, k);
    if (spec.size() == 1) {
        return k == static_cast<int>(spec.terms()[0].shape) ? 1.0 : 0.0;
    }
    return static_cast<double>(recursive_weights(spec.terms(), i)[k - 1]);
}

double xi_shifted(const SumSpec& spec, std::size_t i, int k, int l) {
    const double w = spec.weight(i, k);
    detail::require(l >= 1 && l <= k, "shifted weight needs 1 <= l <= k");
    const auto& t = spec.terms()[i];
    const double delta = t.shift - spec.total_shift();
    const int power = k - l;
    const double factor =
        (power == 0) ? 1.0 : std::pow(t.rate * delta, power) / std::exp(ln_gamma(power + 1.0));
    return w * std::exp(-t.rate * delta) * factor;
}

double shifted_component_mass(const SumSpec& spec, std::size_t i, int l) {
    check_term_index(spec, i, l);
    const auto& t = spec.terms()[i];
    return poisson_tail(l, t.rate * (spec.total_shift() - t.shift));
}

double sum_pdf_shifted(const SumSpec& spec, double x) {
    require_distinct(spec);
    const bool inside = spec.upper_tailed() ? x > spec.total_shift() : x < spec.total_shift();
    if (!inside) {
        throw SupportError("sum density queried outside the open support");
    }
    detail::CompensatedSum acc;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const auto& t = spec.terms()[i];
        for (int k = 1; k <= static_cast<int>(t.shape); ++k) {
            for (int l = 1; l <= k; ++l) {
                acc.add(xi_shifted(spec, i, k, l) * raw_component_pdf(l, t.rate, t.shift, x));
            }
        }
    }
    return acc.value();
}

namespace {

template <typename F>
double mix(const SumSpec& spec, F&& component_value) {
    detail::CompensatedSum acc;
    for (const auto& term : spec.mixture()) acc.add(term.weight * component_value(term.component));
    return acc.value();
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

double sum_pdf(const SumSpec& spec, double x) {
    return std::max(0.0, mix(spec, [x](const Pearson3Params& c) { return p3_pdf(c, x); }));
}

double sum_cdf(const SumSpec& spec, double x) {
    return clamp_probability(mix(spec, [x](const Pearson3Params& c) { return p3_cdf(c, x); }));
}

double sum_moment(const SumSpec& spec, int n) {
    detail::require(n >= 0, "moment order must be >= 0");
    return mix(spec, [n](const Pearson3Params& c) { return p3_moment(c, n); });
}

double logsum_pdf(const SumSpec& spec, double y) {
    detail::require(y > 0.0, "log-sum density needs y > 0");
    return std::max(0.0, mix(spec, [y](const Pearson3Params& c) { return lp3_pdf(c, y); }));
}

double logsum_cdf(const SumSpec& spec, double y) {
    detail::require(y > 0.0, "log-sum CDF needs y > 0");
    return sum_cdf(spec, std::log(y));
}

double logsum_moment(const SumSpec& spec, int n) {
    detail::require(n >= 0, "moment order must be >= 0");
    if (spec.upper_tailed()) {
        for (const auto& t : spec.terms()) {
            if (t.rate <= n) {
                throw DivergenceError("log-sum moment of order " + std::to_string(n) +
                                      " requires every rate b_i > n");
            }
        }
    }
    if (spec.representation() == Representation::gamma_series) {
        // the truncated series tail is amplified by (b / (b - n))^k here;
        // independence gives the product exactly
        double product = 1.0;
        for (const auto& t : spec.terms()) product *= lp3_moment(t, n);
        return product;
    }
    return mix(spec, [n](const Pearson3Params& c) { return lp3_moment(c, n); });
}

double logitsum_pdf(const SumSpec& spec, double z) {
    detail::require(z > 0.0 && z < 1.0, "logit-sum density needs 0 < z < 1");
    return std::max(0.0, mix(spec, [z](const Pearson3Params& c) { return ltp3_pdf(c, z); }));
}

double logitsum_cdf(const SumSpec& spec, double z) {
    detail::require(z > 0.0 && z < 1.0, "logit-sum CDF needs 0 < z < 1");
    return sum_cdf(spec, logit(z));
}

double logitsum_moment(const SumSpec& spec, int n, const SeriesControl& ctl) {
    detail::require(n >= 0, "moment order must be >= 0");
    detail::require(spec.upper_tailed(), "logit-sum moments need every rate b_i > 0");
    return mix(spec, [n, &ctl](const Pearson3Params& c) { return ltp3_moment(c, n, ctl); });
}

}  // namespace pt3
