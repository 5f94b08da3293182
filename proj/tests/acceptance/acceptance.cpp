// SPDX-License-Identifier: Apache-2.0
// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
// followed by indented detail lines; exits non-zero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pt3/errors.hpp"
#include "pt3/logitp3.hpp"
#include "pt3/logp3.hpp"
#include "pt3/mc_oracle.hpp"
#include "pt3/pearson3.hpp"
#include "pt3/presets.hpp"
#include "pt3/sums.hpp"
#include "pt3/wpt.hpp"
#include "test_support.hpp"

using namespace pt3;
using namespace pt3::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            details.push_back("failed: " + what);
        }
    }
    void note(const std::string& text) { details.push_back(text); }
};

std::string fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof buffer, format, args);
    va_end(args);
    return buffer;
}

// ---------------------------------------------------------------- 1

Outcome logit_figures() {
    Outcome out;
    const std::size_t n = kMillion;
    int exceedances = 0;
    int bins_checked = 0;
    std::uint64_t stream = 100;
    for (const auto& p : presets::logit_family()) {
        auto z = oracle::sample_pearson3(p, oracle::derive_seed(kSeed, stream++), n);
        for (auto& v : z) v = logistic(v);

        const double ks = oracle::ks_distance(z, [&](double t) { return ltp3_cdf(p, t); });
        out.expect(ks < 0.005, fmt("KS %.5f for a=%g b=%g", ks, p.shape, p.rate));

        const double lo = p.rate > 0 ? 0.5 : 0.0;
        const double width = 0.5 / 100;
        std::vector<std::size_t> counts(100, 0);
        for (double v : z) {
            const auto k = static_cast<long>(std::floor((v - lo) / width));
            if (k >= 0 && k < 100) ++counts[k];
        }
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double a = lo + k * width;
            const double prob = oracle::integrate(zero_outside([&](double t) { return ltp3_pdf(p, t); }), a,
                                                  a + width, 1e-12);
            const double se = std::sqrt(prob * (1.0 - prob) / n) / width;
            const double deviation = std::abs(static_cast<double>(counts[k]) / n / width - prob / width) / se;
            worst = std::max(worst, deviation);
            exceedances += deviation > 3.0;
            ++bins_checked;
        }
        out.note(fmt("a=%g b=%g: KS %.5f, worst bin %.2f SE", p.shape, p.rate, ks, worst));
    }
    out.note(fmt("%d of %d bins beyond 3 SE (expected about %.1f by chance)", exceedances, bins_checked,
                 bins_checked * 0.0027));
    out.expect(exceedances == 0, "histogram bins beyond 3 SE");
    return out;
}

// ---------------------------------------------------------------- 2

Outcome lerch_agreement() {
    Outcome out;
    double worst = 0.0;
    for (double a : {2.0, 3.0}) {
        for (double b : {0.5, 1.5, 3.0}) {
            for (double m : {0.0, 0.5, 2.0}) {
                const Pearson3Params p{a, b, m};
                const double e1 = rel_err(ltp3_mean_closed(p), ltp3_moment(p, 1));
                const double e2 = rel_err(ltp3_second_moment_closed(p), ltp3_moment(p, 2));
                worst = std::max({worst, e1, e2});
                out.expect(e1 <= 1e-9 && e2 <= 1e-9, fmt("closed vs series at a=%g b=%g m=%g", a, b, m));
            }
        }
    }
    const double ln2 = std::log(2.0);
    const double series = std::abs(ltp3_moment({1, 1, 0}, 1) - ln2);
    const double closed = std::abs(ltp3_mean_closed({1, 1, 0}) - ln2);
    out.expect(series <= 1e-9 && closed <= 1e-9, "ln 2 at a=1 b=1 m=0");
    out.note(fmt("worst closed/series relative difference %.2e; |E[Z]-ln2| series %.2e closed %.2e", worst,
                 series, closed));
    return out;
}

// ---------------------------------------------------------------- 3

std::vector<Pearson3Params> random_spec(std::mt19937_64& rng, bool positive) {
    std::uniform_int_distribution<int> terms(2, 5);
    std::uniform_int_distribution<int> shape(1, 4);
    std::uniform_real_distribution<double> rate(0.2, 5.0);
    std::uniform_real_distribution<double> shift(-1.0, 1.0);
    const int L = terms(rng);
    std::vector<double> rates;
    while (static_cast<int>(rates.size()) < L) {
        const double r = rate(rng);
        const bool separated = std::all_of(rates.begin(), rates.end(), [r](double o) {
            return std::abs(r - o) / std::max(r, o) >= 0.1;
        });
        if (separated) rates.push_back(r);
    }
    std::vector<Pearson3Params> spec;
    for (double r : rates) {
        const double a = shape(rng);
        spec.push_back({a, positive ? r : -r, shift(rng)});
    }
    return spec;
}

Outcome sum_machinery() {
    Outcome out;
    std::mt19937_64 rng(kSeed);
    double worst_sum = 0.0;
    double worst_recursion = 0.0;
    double worst_density = 0.0;
    double worst_condition = 0.0;
    int sum_failures = 0;
    int convolved = 0;
    for (int s = 0; s < 50; ++s) {
        const auto terms = random_spec(rng, s % 2 == 0);
        const SumSpec spec(terms);

        long double total = 0.0L;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            for (int k = 1; k <= static_cast<int>(terms[i].shape); ++k) {
                total += spec.weight(i, k);
                const double closed = xi0_closed(spec, i, k);
                const double recursive = xi0_recursive(spec, i, k);
                const double r = closed == 0.0 ? std::abs(recursive) : rel_err(recursive, closed);
                worst_recursion = std::max(worst_recursion, r);
                out.expect(r <= 1e-10, fmt("spec %d: recursion vs closed form %.2e at i=%zu k=%d", s, r, i, k));
            }
        }
        const double sum_error = static_cast<double>(std::abs(total - 1.0L));
        worst_sum = std::max(worst_sum, sum_error);
        worst_condition = std::max(worst_condition, spec.condition());
        if (sum_error > 1e-10) {
            ++sum_failures;
            out.expect(false, fmt("spec %d (L=%zu, condition %.2e): |sum Xi - 1| = %.2e", s, terms.size(),
                                  spec.condition(), sum_error));
        }

        if (terms.size() <= 3) {
            std::vector<oracle::SupportedPdf> pdfs;
            double mean = 0.0;
            double variance = 0.0;
            for (const auto& t : terms) {
                const double a = t.shape;
                const double b = std::abs(t.rate);
                pdfs.push_back({[a, b](double u) {
                                    if (u == 0.0) return a == 1.0 ? b : 0.0;
                                    return b * std::exp((a - 1.0) * std::log(b * u) - b * u - std::lgamma(a));
                                },
                                t.shift, t.rate > 0 ? 1 : -1});
                mean += a / b;
                variance += a / (b * b);
            }
            const double span = mean + 12.0 * std::sqrt(variance);
            const int intervals = 2 * static_cast<int>(std::ceil(span / 0.04));
            const auto grid = oracle::convolve_pdfs_numeric(pdfs, {span, intervals});
            double sup = 0.0;
            for (std::size_t j = 1; j < grid.values.size(); ++j) {
                const double x = grid.origin + grid.direction * grid.step * static_cast<double>(j);
                sup = std::max(sup, std::abs(sum_pdf(spec, x) - grid.values[j]));
            }
            worst_density = std::max(worst_density, sup);
            out.expect(sup <= 1e-6, fmt("spec %d: sup |sum_pdf - convolution| = %.2e", s, sup));
            ++convolved;
        }
    }
    out.note(fmt("worst |sum Xi - 1| %.2e (%d of 50 above 1e-10), largest condition sum|Xi| %.2e", worst_sum,
                 sum_failures, worst_condition));
    out.note(fmt("worst recursion/closed relative difference %.2e", worst_recursion));
    out.note(fmt("worst density sup-difference %.2e over %d convolved specs", worst_density, convolved));
    return out;
}

// ---------------------------------------------------------------- 4

Outcome wpt_siso() {
    Outcome out;
    const EHModel model = presets::reference_model();
    const LinkBudget link = presets::reference_link(10.0, 2.0);
    const auto h2 = oracle::sample_channel_gain(link.fading, oracle::derive_seed(kSeed, 200), kMillion);
    std::vector<double> q(h2.size());
    for (std::size_t j = 0; j < h2.size(); ++j) q[j] = harvested_power_siso(model, link, h2[j]);

    for (double frac : {0.1, 0.05}) {
        const double qt = frac * model.Ps;
        const auto hits = static_cast<std::uint64_t>(std::count_if(q.begin(), q.end(), [qt](double v) { return v < qt; }));
        const auto check = oracle::binomial_consistency(q_cdf_siso(model, link, qt), hits, q.size());
        out.expect(check.pass, fmt("outage at Ps*%g", frac));
        out.note(fmt("outage at Ps*%g: analytic %.6f, MC %.6f, region [%.6f, %.6f]", frac, check.probability,
                     check.observed, check.lower, check.upper));
    }
    const double mean = q_mean_siso(model, link);
    const double mc = oracle::empirical_moment(q, 1).value;
    out.expect(std::abs(mean - mc) <= 0.01 * mean, "mean within 1%");
    const double series = rel_err(q_moment_siso(model, link, 1), mean);
    out.expect(series <= 1e-9, "moment series at n=1 vs mean");
    out.note(fmt("mean: analytic %.8e, MC %.8e (%.3f%%); n=1 moment vs mean %.2e", mean, mc,
                 100.0 * std::abs(mean - mc) / mean, series));
    return out;
}

// ---------------------------------------------------------------- 5

Outcome wpt_miso() {
    Outcome out;
    const EHModel model = presets::reference_model();
    const auto distances = presets::sweep_points(presets::kDistanceSweep);
    const auto powers = presets::sweep_points(presets::kPowerSweep);
    int checks = 0;
    int failures = 0;
    double worst = 0.0;  // |analytic - MC| in binomial standard errors

    // one set of gains per (preset, L), reused at every point of the sweep
    const auto run = [&](const std::string& name, int L, const std::vector<double>& points,
                         const std::function<MisoScenario(double)>& scenario_at, std::uint64_t stream) {
        const auto base = scenario_at(points.front());
        std::vector<std::vector<double>> gains;
        for (std::size_t i = 0; i < base.branches.size(); ++i) {
            gains.push_back(oracle::sample_channel_gain(base.branches[i].fading,
                                                        oracle::derive_seed(oracle::derive_seed(kSeed, stream), i),
                                                        kMillion));
        }
        std::vector<double> q(kMillion);
        for (double x : points) {
            const auto s = scenario_at(x);
            std::vector<double> weight;
            for (const auto& link : s.branches) weight.push_back(path_loss(link) * link.power);
            for (std::size_t j = 0; j < kMillion; ++j) {
                double r = 0.0;
                for (std::size_t i = 0; i < weight.size(); ++i) r += weight[i] * gains[i][j];
                q[j] = harvested_power(s.model, r);
            }
            for (double frac : presets::kThresholdFractions) {
                const double qt = frac * model.Ps;
                const auto hits =
                    static_cast<std::uint64_t>(std::count_if(q.begin(), q.end(), [qt](double v) { return v < qt; }));
                const auto check = oracle::binomial_consistency(outage_probability(s, qt), hits, kMillion);
                ++checks;
                if (check.standard_error > 0.0) {
                    worst = std::max(worst, std::abs(check.observed - check.probability) / check.standard_error);
                }
                if (!check.pass) {
                    ++failures;
                    out.expect(false, fmt("%s L=%d at %g, q_t=Ps*%g: analytic %.6g, MC %.6g", name.c_str(), L, x,
                                          frac, check.probability, check.observed));
                }
            }
        }
    };
    for (int L : {2, 3}) {
        run("fig3", L, distances, [L](double d) { return presets::single_beacon(L, d); }, 300 + L);
        run("fig4", L, powers, [L](double p) { return presets::beacon_set(L, p); }, 400 + L);
    }
    out.note(fmt("%d of %d swept outage points outside the 3 sigma binomial region; largest deviation %.2f sigma",
                 failures, checks, worst));

    int order_violations = 0;
    const auto ordered = [&](const std::vector<double>& points, const std::function<MisoScenario(int, double)>& at) {
        for (double x : points) {
            for (double frac : presets::kThresholdFractions) {
                const double qt = frac * model.Ps;
                const double o1 = outage_probability(at(1, x), qt);
                const double o2 = outage_probability(at(2, x), qt);
                const double o3 = outage_probability(at(3, x), qt);
                if (!(o3 <= o2 && o2 <= o1)) ++order_violations;
            }
        }
    };
    ordered(distances, [](int L, double d) { return presets::single_beacon(L, d); });
    ordered(powers, [](int L, double p) { return presets::beacon_set(L, p); });
    out.expect(order_violations == 0, fmt("%d points violate L=3 <= L=2 <= L=1", order_violations));
    out.note(fmt("ordering L=3 <= L=2 <= L=1 checked at %zu points, %d violations",
                 2 * (distances.size() + powers.size()), order_violations));
    return out;
}

// ---------------------------------------------------------------- 6

struct DensityCase {
    std::string name;
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    double lower;  // -inf / +inf mark an infinite support end
    double upper;
    std::vector<double> probes;
};

double total_mass(const DensityCase& c) {
    const auto f = zero_outside(c.pdf);
    const double inf = std::numeric_limits<double>::infinity();
    if (c.upper == inf) return oracle::integrate_to_infinity([&](double t) { return f(c.lower + t); }, 0.0, 1e-12);
    if (c.lower == -inf) return oracle::integrate_to_infinity([&](double t) { return f(c.upper - t); }, 0.0, 1e-12);
    return oracle::integrate_singular(f, c.lower, c.upper, 1e-12);
}

std::vector<DensityCase> density_cases() {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<DensityCase> cases;
    const auto p3_case = [&](Pearson3Params p) {
        const double m = p.shift;
        const double s = 1.0 / p.rate;
        cases.push_back({fmt("p3_pdf a=%g b=%g m=%g", p.shape, p.rate, p.shift),
                         [p](double x) { return p3_pdf(p, x); }, [p](double x) { return p3_cdf(p, x); },
                         p.rate > 0 ? m : -inf, p.rate > 0 ? inf : m, {m + 0.5 * s, m + 2.0 * s, m + 5.0 * s}});
    };
    for (auto p : std::vector<Pearson3Params>{{3, 1.5, 0}, {3, -1.5, 0}, {2, 1.5, -0.5}, {0.7, 3, 0.4}}) p3_case(p);

    for (auto p : std::vector<Pearson3Params>{{2, 1.5, 0.3}, {3, 2, 0}, {2, -1.5, 0}, {1, -1, 0.2}}) {
        const double edge = std::exp(p.shift);
        std::vector<double> probes;
        for (double u : {0.5, 1.5, 3.0}) probes.push_back(std::exp(p.shift + u / p.rate));
        cases.push_back({fmt("lp3_pdf a=%g b=%g m=%g", p.shape, p.rate, p.shift),
                         [p](double y) { return lp3_pdf(p, y); }, [p](double y) { return lp3_cdf(p, y); },
                         p.rate > 0 ? edge : 0.0, p.rate > 0 ? inf : edge, probes});
    }

    auto logit_params = presets::logit_family();
    logit_params.push_back({2, 1.5, -0.5});
    for (auto p : logit_params) {
        const double edge = logistic(p.shift);
        std::vector<double> probes;
        for (double u : {0.3, 1.0, 2.5}) probes.push_back(logistic(p.shift + u / p.rate));
        cases.push_back({fmt("ltp3_pdf a=%g b=%g m=%g", p.shape, p.rate, p.shift),
                         [p](double z) { return ltp3_pdf(p, z); }, [p](double z) { return ltp3_cdf(p, z); },
                         p.rate > 0 ? edge : 0.0, p.rate > 0 ? 1.0 : edge, probes});
    }
    cases.push_back({"logit_gamma_pdf a=2 b=1.5", [](double z) { return logit_gamma_pdf(2, 1.5, z); },
                     [](double z) { return logit_gamma_cdf(2, 1.5, z); }, 0.5, 1.0, {0.6, 0.8, 0.95}});

    // sums: a well-conditioned mixture, a mirrored one and the equal regime
    const std::vector<std::vector<Pearson3Params>> specs = {
        {{1, 1, 0}, {1, 2, 0}}, {{2, -1.5, 0.3}, {1, -3, -0.2}, {3, -0.8, 0.5}}, {{2, 2, 0.1}, {1, 2, 0.4}}};
    for (const auto& terms : specs) {
        const auto spec = std::make_shared<SumSpec>(terms);
        const double sm = spec->total_shift();
        const bool up = spec->upper_tailed();
        const double dir = up ? 1.0 : -1.0;
        const std::string label = fmt("L=%zu b1=%g", terms.size(), terms.front().rate);
        cases.push_back({"sum_pdf " + label, [spec](double x) { return sum_pdf(*spec, x); },
                         [spec](double x) { return sum_cdf(*spec, x); }, up ? sm : -inf, up ? inf : sm,
                         {sm + dir * 0.5, sm + dir * 1.5, sm + dir * 4.0}});
        cases.push_back({"logitsum_pdf " + label, [spec](double z) { return logitsum_pdf(*spec, z); },
                         [spec](double z) { return logitsum_cdf(*spec, z); }, up ? logistic(sm) : 0.0,
                         up ? 1.0 : logistic(sm),
                         {logistic(sm + dir * 0.5), logistic(sm + dir * 1.5), logistic(sm + dir * 4.0)}});
        if (!up) {
            // the log transform of an upper-tailed sum is heavy tailed; the
            // mirrored specs give a finite support
            cases.push_back({"logsum_pdf " + label, [spec](double y) { return logsum_pdf(*spec, y); },
                             [spec](double y) { return logsum_cdf(*spec, y); }, 0.0, std::exp(sm),
                             {std::exp(sm - 0.5), std::exp(sm - 1.5), std::exp(sm - 4.0)}});
        }
    }
    const auto heavy = std::make_shared<SumSpec>(std::vector<Pearson3Params>{{1, 3, 0}, {2, 4, 0.2}});
    cases.push_back({"logsum_pdf L=2 b1=3", [heavy](double y) { return logsum_pdf(*heavy, y); },
                     [heavy](double y) { return logsum_cdf(*heavy, y); }, std::exp(heavy->total_shift()), inf,
                     {1.5, 2.5, 5.0}});

    const EHModel model = presets::reference_model();
    const double Ps = model.Ps;
    const std::vector<double> q_probes{Ps / 20, Ps / 10, Ps / 2};
    const LinkBudget link = presets::reference_link(10.0, 2.0);
    cases.push_back({"q_pdf_siso d=10", [=](double q) { return q_pdf_siso(model, link, q); },
                     [=](double q) { return q_cdf_siso(model, link, q); }, 0.0, Ps, q_probes});
    for (int L : {2, 3}) {
        const auto equal = presets::single_beacon(L, 10.0);
        cases.push_back({fmt("q_pdf_miso equal L=%d", L), [=](double q) { return q_pdf_miso(equal, q); },
                         [=](double q) { return q_cdf_miso(equal, q); }, 0.0, Ps, q_probes});
        const auto distinct = presets::beacon_set(L, 2.0);
        cases.push_back({fmt("q_pdf_miso distinct L=%d", L), [=](double q) { return q_pdf_miso(distinct, q); },
                         [=](double q) { return q_cdf_miso(distinct, q); }, 0.0, Ps, q_probes});
    }
    const double bhat = effective_rate(model, link);
    cases.push_back({"harvested_pdf shape=2.5", [=](double q) { return harvested_pdf(model, 2.5, bhat, q); },
                     [=](double q) { return harvested_cdf(model, 2.5, bhat, q); }, 0.0, Ps, q_probes});
    return cases;
}

Outcome calculus_suite() {
    Outcome out;
    double worst_mass = 0.0;
    double worst_derivative = 0.0;
    const auto cases = density_cases();
    for (const auto& c : cases) {
        const double mass_error = std::abs(total_mass(c) - 1.0);
        worst_mass = std::max(worst_mass, mass_error);
        out.expect(mass_error <= 1e-8, fmt("%s integrates to 1 %+.2e", c.name.c_str(), mass_error));
        for (double x : c.probes) {
            // a step proportional to the distance from the support edge keeps
            // the difference quotient clear of CDF rounding near 0 and 1
            const double edge = std::min(std::abs(x - c.lower), std::abs(c.upper - x));
            const double h = 1e-3 * std::min(edge, std::max(1.0, std::abs(x)));
            const double r = rel_err(derivative(c.cdf, x, h), c.pdf(x));
            worst_derivative = std::max(worst_derivative, r);
            out.expect(r <= 1e-6, fmt("%s derivative at %g: %.2e", c.name.c_str(), x, r));
        }
    }
    out.note(fmt("%zu densities: worst |mass - 1| %.2e, worst derivative relative error %.2e", cases.size(),
                 worst_mass, worst_derivative));

    const EHModel model = presets::reference_model();
    const double Ps = model.Ps;
    const LinkBudget link = presets::reference_link(10.0, 2.0);
    const std::vector<std::pair<std::string, std::function<double(double)>>> cdfs = {
        {"q_cdf_siso", [&](double q) { return q_cdf_siso(model, link, q); }},
        {"q_cdf_miso equal", [&](double q) { return q_cdf_miso(presets::single_beacon(3, 10.0), q); }},
        {"q_cdf_miso distinct", [&](double q) { return q_cdf_miso(presets::beacon_set(3, 2.0), q); }},
    };
    const double below_ps = std::nextafter(Ps, 0.0);
    for (const auto& [name, cdf] : cdfs) {
        out.expect(cdf(0.0) == 0.0 && cdf(-1.0) == 0.0, name + " is exactly 0 for q <= 0");
        out.expect(cdf(std::numeric_limits<double>::denorm_min()) == 0.0, name + " is 0 at the smallest q > 0");
        out.expect(cdf(Ps) == 1.0 && cdf(2.0 * Ps) == 1.0, name + " is exactly 1 for q >= Ps");
        out.note(fmt("%s: 1 - F(nextafter(Ps, 0)) = %.2e", name.c_str(), 1.0 - cdf(below_ps)));
    }
    return out;
}

// ---------------------------------------------------------------- 7

Outcome log_mean_guard() {
    Outcome out;
    std::uint64_t stream = 700;
    for (const Pearson3Params p : {Pearson3Params{2, 3, 0.2}, Pearson3Params{3, 2.5, -0.3},
                                   Pearson3Params{2, -1.5, 0.0}}) {
        auto y = oracle::sample_pearson3(p, oracle::derive_seed(kSeed, stream++), kMillion);
        for (auto& v : y) v = std::exp(v);
        const auto est = oracle::empirical_moment(y, 1);
        const double analytic = lp3_moment(p, 1);
        const double corollary = p.shape / p.rate + p.shift;
        const double z_moment = std::abs(analytic - est.value) / est.standard_error;
        const double z_corollary = std::abs(corollary - est.value) / est.standard_error;
        out.expect(z_moment <= 3.0, fmt("n=1 moment at a=%g b=%g m=%g is %.2f SE from MC", p.shape, p.rate, p.shift,
                                         z_moment));
        out.expect(z_corollary > 3.0, fmt("a/b+m agrees with MC at a=%g b=%g m=%g", p.shape, p.rate, p.shift));
        out.note(fmt("a=%g b=%g m=%g: E[e^X] %.6f, MC %.6f (%.2f SE); a/b+m = %.6f (%.0f SE off)", p.shape, p.rate,
                     p.shift, analytic, est.value, z_moment, corollary, z_corollary));
    }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        const char* title;
        double budget_seconds;
        Outcome (*run)();
    };
    const double none = std::numeric_limits<double>::infinity();
    const Criterion criteria[] = {
        {"AC1", "logit Pearson III figures against 10^6 samples", 30.0, logit_figures},
        {"AC2", "Lerch closed forms against the moment series", 5.0, lerch_agreement},
        {"AC3", "sum weights, recursion and convolution on 50 random specs", 60.0, sum_machinery},
        {"AC4", "SISO harvested power against Monte Carlo", 60.0, wpt_siso},
        {"AC5", "MISO outage sweeps against Monte Carlo and L ordering", 300.0, wpt_miso},
        {"AC6", "density normalization, CDF derivatives and endpoints", none, calculus_suite},
        {"AC7", "log-P3 mean is the n=1 moment, not a/b+m", none, log_mean_guard},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.expect(false, std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(start);
        if (elapsed > c.budget_seconds) outcome.expect(false, fmt("runtime %.1f s over %.0f s", elapsed, c.budget_seconds));
        failed += !outcome.pass;
        std::printf("%s %s  %s (%.1f s)\n", c.label, outcome.pass ? "PASS" : "FAIL", c.title, elapsed);
        for (const auto& line : outcome.details) std::printf("    %s\n", line.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
