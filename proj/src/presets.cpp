// SPDX-License-Identifier: Apache-2.0
#include "pt3/presets.hpp"

#include <cmath>

#include "pt3/errors.hpp"

namespace pt3::presets {

EHModel reference_model() { return {150.0, 0.014, 0.024}; }

LinkBudget reference_link(double distance, double power) {
    LinkBudget link;
    link.tx_aperture = 0.5;
    link.rx_aperture = 0.01;
    link.carrier_hz = 2.4e9;
    link.distance = distance;
    link.power = power;
    link.fading = {3.0, 1.0, 0.0};
    return link;
}

MisoScenario single_beacon(int antennas, double distance, double total_power) {
    detail::require(antennas >= 1, "a beacon needs at least one antenna");
    MisoScenario scenario{reference_model(), {}};
    for (int i = 0; i < antennas; ++i) {
        scenario.branches.push_back(reference_link(distance, total_power / antennas));
    }
    return scenario;
}

MisoScenario beacon_set(int beacons, double total_power) {
    detail::require(beacons >= 1 && beacons <= static_cast<int>(kBeaconDistances.size()),
                    "beacon count must be 1, 2 or 3");
    MisoScenario scenario{reference_model(), {}};
    for (int i = 0; i < beacons; ++i) {
        scenario.branches.push_back(reference_link(kBeaconDistances[i], total_power / beacons));
    }
    return scenario;
}

std::vector<Pearson3Params> logit_family() {
    return {{3.0, 1.5, 0.0}, {3.0, -1.5, 0.0}, {2.0, 1.5, 0.0}, {2.0, -1.5, 0.0}};
}

std::vector<double> sweep_points(const Sweep& sweep) {
    detail::require(sweep.step > 0.0, "sweep step must be > 0");
    detail::require(sweep.start < sweep.stop, "sweep start must be below stop");
    const double span = (sweep.stop - sweep.start) / sweep.step;
    detail::require(span <= 1e6, "sweep has more than 10^6 points");
    const auto count = static_cast<long>(std::floor(span + 1e-6));
    std::vector<double> points;
    points.reserve(count + 1);
    for (long i = 0; i <= count; ++i) {
        points.push_back(sweep.start + i * sweep.step);
    }
    return points;
}

}  // namespace pt3::presets
