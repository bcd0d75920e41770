// Copyright 2026 The infolab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Non-ideal spin measurement with overall detection efficiency eta.
//
// The ideal state is spin up along x. Each of the x, y, z measurements has
// three outcomes (+, -, 0 = no detection):
//   x: (eta, 0, 1 - eta)
//   y, z: (eta/2, eta/2, 1 - eta)
// With n = 3 the quadratic measure gives
//   I1 = N [(eta - 1/3)^2 + (eta - 2/3)^2 + 1/9]
//   I2 = I3 = N (3/2) (eta - 2/3)^2
//   I_total = N (5 eta^2 - 6 eta + 2),      N = 3 log2(3) / 2
// and the Shannon uncertainties are Hx = h(eta), Hy = Hz = Hx + eta with h
// the binary entropy.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "infolab/errors.hpp"
#include "infolab/measures.hpp"
#include "infolab/state.hpp"

namespace infolab {

/// log2(3): the most bits a three-outcome measurement can encode.
inline const double kTernaryBits = std::log2(3.0);

class EfficiencyModel {
public:
    explicit EfficiencyModel(double eta) : eta_(eta) {
        if (!(eta >= 0.0 && eta <= 1.0))
            throw domain_error("efficiency outside [0, 1]: " + std::to_string(eta));
    }
    double eta() const { return eta_; }

private:
    double eta_;
};

/// Outcome distributions along x, y, z, each ordered (+, -, 0).
inline std::array<ProbDist, 3> outcome_probabilities(const EfficiencyModel& m) {
    const double eta = m.eta();
    const double miss = 1.0 - eta;
    return {ProbDist{eta, 0.0, miss}, ProbDist{0.5 * eta, 0.5 * eta, miss},
            ProbDist{0.5 * eta, 0.5 * eta, miss}};
}

inline std::array<double, 3> bz_components(const EfficiencyModel& m) {
    const double eta = m.eta();
    const double pref = 1.5 * kTernaryBits;
    const double a = eta - 1.0 / 3.0;
    const double b = eta - 2.0 / 3.0;
    const double i1 = pref * (a * a + b * b + 1.0 / 9.0);
    const double i23 = pref * 1.5 * b * b;
    return {i1, i23, i23};
}

inline double bz_total_closed(const EfficiencyModel& m) {
    const double eta = m.eta();
    return 1.5 * kTernaryBits * (5.0 * eta * eta - 6.0 * eta + 2.0);
}

/// Same total from the generic measure applied to each outcome distribution.
inline double bz_total_generic(const EfficiencyModel& m) {
    double sum = 0.0;
    for (const ProbDist& p : outcome_probabilities(m)) sum += bz_measure(p);
    return sum;
}

/// Ideal mode: no non-detection outcome, so each direction is a two-outcome
/// measurement of the spin-up-x state and Im = (p+ - p-)^2. This is a
/// separate model from eta = 1 in the three-outcome one, where n stays 3.
inline std::array<double, 3> bz_components_ideal() {
    return {bz_elementary(1.0, 0.0), bz_elementary(0.5, 0.5), bz_elementary(0.5, 0.5)};
}

inline double bz_total_ideal() {
    const auto c = bz_components_ideal();
    return c[0] + c[1] + c[2];
}

/// (Hx, Hy, Hz) with 0 log 0 = 0.
inline std::array<double, 3> shannon_components(const EfficiencyModel& m) {
    const double eta = m.eta();
    const double detected = eta > 0.0 ? eta * std::log2(eta) : 0.0;
    // log1p keeps (1 - eta) log2(1 - eta) accurate for small eta
    const double missed = eta < 1.0 ? (1.0 - eta) * std::log1p(-eta) / std::numbers::ln2 : 0.0;
    const double hx = -detected - missed;
    const double hy = hx + eta;
    return {hx, hy, hy};
}

struct SweepRow {
    double eta = 0.0;
    double i1 = 0.0, i2 = 0.0, i3 = 0.0;
    double i_total = 0.0;
    double ratio = 0.0; ///< i_total / log2(3)
    double hx = 0.0, hy = 0.0, hz = 0.0;
};

inline SweepRow sweep_row(double eta) {
    const EfficiencyModel m(eta);
    const auto i = bz_components(m);
    const auto h = shannon_components(m);
    SweepRow row;
    row.eta = eta;
    row.i1 = i[0];
    row.i2 = i[1];
    row.i3 = i[2];
    row.i_total = bz_total_closed(m);
    row.ratio = row.i_total / kTernaryBits;
    row.hx = h[0];
    row.hy = h[1];
    row.hz = h[2];
    return row;
}

struct SweepTable {
    double k = kTernaryBits;
    std::vector<SweepRow> rows;
};

/// Uniform grid over [eta_min, eta_max], both endpoints included.
inline SweepTable ratio_sweep(double eta_min, double eta_max, std::size_t steps) {
    if (!(eta_min >= 0.0 && eta_max <= 1.0 && eta_min < eta_max))
        throw usage_error("sweep range must satisfy 0 <= min < max <= 1");
    if (steps < 2) throw usage_error("sweep needs at least 2 steps");
    SweepTable table;
    table.rows.reserve(steps);
    const double span = eta_max - eta_min;
    const double last = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        const double eta = i + 1 == steps ? eta_max : eta_min + span * (static_cast<double>(i) / last);
        table.rows.push_back(sweep_row(eta));
    }
    return table;
}

/// Row-level consistency of a sweep: closed forms against the generic
/// measures, Hy = Hz = Hx + eta, and the component sum. Returns the worst
/// absolute discrepancy.
inline double sweep_self_check(const SweepTable& table) {
    double worst = 0.0;
    const auto track = [&](double a, double b) { worst = std::max(worst, std::abs(a - b)); };
    for (const SweepRow& r : table.rows) {
        const EfficiencyModel m(r.eta);
        const auto dists = outcome_probabilities(m);
        track(r.i1, bz_measure(dists[0]));
        track(r.i2, bz_measure(dists[1]));
        track(r.i3, bz_measure(dists[2]));
        track(r.i_total, r.i1 + r.i2 + r.i3);
        track(r.hx, shannon(dists[0]));
        track(r.hy, shannon(dists[1]));
        track(r.hz, shannon(dists[2]));
        track(r.hy, r.hz);
        track(r.hy, r.hx + r.eta);
        track(r.ratio * table.k, r.i_total);
    }
    return worst;
}

/// Efficiencies where I_total equals log2(3): roots of 15 eta^2 - 18 eta + 4,
/// (9 -+ sqrt(21)) / 15. I_total exceeds log2(3) outside [low, high].
inline std::pair<double, double> thresholds() {
    const double s = std::sqrt(21.0);
    // the smaller root via Vieta avoids cancellation in 9 - sqrt(21)
    const double high = (9.0 + s) / 15.0;
    const double low = (4.0 / 15.0) / high;
    return {low, high};
}

} // namespace infolab
