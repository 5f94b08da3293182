// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "pt3/pearson3.hpp"
#include "pt3/wpt.hpp"

// Input parameters of the reference figures. Only inputs live here; every
// plotted value is computed by the library.
namespace pt3::presets {

/// A = 150 1/W, B = 0.014 W, Ps = 24 mW.
EHModel reference_model();

/// a_t = 0.5 m^2, a_r = 0.01 m^2, f_c = 2.4 GHz, |h|^2 ~ gamma(3, 1).
LinkBudget reference_link(double distance, double power);

/// Total power available to the transmitters in the distance sweeps, W.
inline constexpr double kTotalPower = 2.0;

/// Beacon distances of the multi-beacon scenario, m.
inline const std::vector<double> kBeaconDistances{12.0, 10.0, 8.0};

/// One beacon with `antennas` antennas at `distance`, total power split
/// equally (equal-rate regime).
MisoScenario single_beacon(int antennas, double distance, double total_power = kTotalPower);

/// The first `beacons` single-antenna beacons of kBeaconDistances, total
/// power split equally (distinct-rate regime for two or more).
MisoScenario beacon_set(int beacons, double total_power);

struct Sweep {
    double start;
    double stop;
    double step;
};

inline constexpr Sweep kDistanceSweep{4.0, 20.0, 0.5};
inline constexpr Sweep kPowerSweep{0.5, 4.0, 0.25};

/// Outage thresholds as fractions of Ps.
inline const std::vector<double> kThresholdFractions{0.1, 0.05};

/// (shape, rate) pairs of the logit Pearson III curves, shift 0.
std::vector<Pearson3Params> logit_family();

/// Points start, start + step, ... up to stop (inclusive within step/1e6).
std::vector<double> sweep_points(const Sweep& sweep);

}  // namespace pt3::presets
