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

// Property checks over random and gridded inputs, one per documented
// invariant. Each check is deterministic for a given seed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "infolab/efficiency.hpp"
#include "infolab/entanglement.hpp"
#include "infolab/infospace.hpp"
#include "infolab/measures.hpp"
#include "infolab/random.hpp"
#include "infolab/state.hpp"

namespace infolab::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Uniform on the (n-1)-simplex via normalized exponential spacings.
inline ProbDist random_distribution(Rng& rng, std::size_t n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) {
        x = -std::log(1.0 - rng.uniform());
        sum += x;
    }
    for (auto& x : w) x /= sum;
    return ProbDist(std::move(w));
}

/// Two distributions on the n = 3 simplex where the orderings disagree:
/// `less_uncertain` has lower Shannon entropy yet also lower quadratic
/// information than `more_uncertain`.
struct OrderingWitness {
    std::array<int, 3> less_uncertain{};  ///< grid counts, sum = resolution
    std::array<int, 3> more_uncertain{};
    int resolution = 100;
    double margin = 0.0; ///< min(dH, dI) of the pair
};

/// Brute force over every ordered pair of grid points (step 1/resolution).
/// Picks the largest margin; pairs within 1e-9 of it resolve to the first in
/// enumeration order (p1 count, then p2 count, for each member).
inline OrderingWitness find_ordering_witness(int resolution = 100) {
    struct Point {
        std::array<int, 3> c;
        double h, i;
    };
    std::vector<Point> pts;
    for (int a = 0; a <= resolution; ++a)
        for (int b = 0; a + b <= resolution; ++b) {
            const int c = resolution - a - b;
            const double r = resolution;
            const ProbDist p{a / r, b / r, c / r};
            pts.push_back({{a, b, c}, shannon(p), bz_measure(p)});
        }
    const auto margin = [](const Point& p, const Point& q) { return std::min(q.h - p.h, q.i - p.i); };
    double best = -1.0;
    for (const auto& p : pts)
        for (const auto& q : pts) best = std::max(best, margin(p, q));
    for (const auto& p : pts)
        for (const auto& q : pts)
            if (margin(p, q) >= best - 1e-9) return {p.c, q.c, resolution, margin(p, q)};
    return {};
}

namespace detail {

inline CheckResult make(std::string name, double worst, double tol) {
    std::ostringstream d;
    d.precision(3);
    d << "worst " << worst << " (tol " << tol << ")";
    return {std::move(name), worst <= tol, d.str()};
}

inline CheckResult make_bool(std::string name, bool ok, std::string detail) {
    return {std::move(name), ok, std::move(detail)};
}

} // namespace detail

inline std::vector<CheckResult> run_all(std::uint64_t seed) {
    std::vector<CheckResult> out;
    Rng rng(seed);

    // core_state
    {
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const QubitState s = random_mixed_state(rng);
            const ProbDist p = born_probabilities(s, random_direction(rng));
            worst = std::max({worst, std::abs(p[0] + p[1] - 1.0), std::max(0.0, -p[0]), std::max(0.0, p[0] - 1.0)});
        }
        out.push_back(detail::make("born probabilities normalized", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const QubitState s = random_mixed_state(rng);
            const QubitState back = density_from_bloch(bloch_from_density(s));
            worst = std::max(worst, max_abs_diff(s.density(), back.density()));
        }
        out.push_back(detail::make("density <-> Bloch round trip", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const QubitState s = random_pure_state(rng);
            const ProbDist p = born_probabilities(s, Direction::normalized(s.bloch()));
            worst = std::max(worst, std::abs(p[0] - 1.0));
        }
        out.push_back(detail::make("pure state certain along its own axis", worst, 1e-12));
    }

    // measures
    {
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const ProbDist p = random_distribution(rng, 4);
            std::vector<double> v(p.values().begin(), p.values().end());
            std::reverse(v.begin(), v.end());
            std::rotate(v.begin(), v.begin() + 1, v.end());
            const ProbDist q(v);
            worst = std::max({worst, std::abs(shannon(p) - shannon(q)), std::abs(bz_measure(p) - bz_measure(q))});
        }
        out.push_back(detail::make("measures permutation invariant", worst, 1e-15));
    }
    {
        double worst = 0.0;
        for (std::size_t n : {2u, 3u, 4u, 8u}) {
            const double k = std::log2(static_cast<double>(n));
            for (int t = 0; t < 10000; ++t) {
                const ProbDist p = random_distribution(rng, n);
                for (double v : {shannon(p), bz_measure(p)}) worst = std::max({worst, -v, v - k});
            }
        }
        out.push_back(detail::make("measures within [0, log2 n]", std::max(0.0, worst), 1e-12));
    }
    {
        bool ok = true;
        for (std::size_t n : {2u, 3u, 4u, 8u}) {
            const double k = std::log2(static_cast<double>(n));
            for (std::size_t hot = 0; hot < n; ++hot) {
                std::vector<double> v(n, 0.0);
                v[hot] = 1.0;
                const ProbDist p(v);
                ok = ok && std::abs(bz_measure(p) - k) < 1e-12 && shannon(p) == 0.0;
            }
            std::vector<double> v(n, 0.0);
            v[0] = 1.0 - 1e-6;
            v[1] = 1e-6;
            const ProbDist near(v);
            ok = ok && bz_measure(near) < k - 1e-9 && shannon(near) > 0.0;
        }
        out.push_back(detail::make_bool("extremes coincide", ok, "certain <=> H = 0 <=> I = log2 n"));
    }
    {
        double worst = 0.0;
        for (int k = 0; k <= 10000; ++k) {
            const double p1 = k / 10000.0;
            worst = std::max(worst, std::abs(bz_elementary(p1, 1.0 - p1) - bz_measure(ProbDist{p1, 1.0 - p1})));
        }
        out.push_back(detail::make("two-outcome forms agree", worst, 1e-14));
    }
    {
        const OrderingWitness w = find_ordering_witness();
        out.push_back(detail::make_bool("Shannon / quadratic orderings disagree", w.margin > 0.0,
                                        "margin " + std::to_string(w.margin)));
    }

    // infospace
    {
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const QubitState s = k % 2 ? random_pure_state(rng) : random_mixed_state(rng);
            const MeasurementTriad t = random_triad(rng);
            const MeasurementTriad rt = rotate_triad(t, random_direction(rng), rng.uniform(-10.0, 10.0));
            worst = std::max(worst, std::abs(total_information(info_vector(s, rt)) - total_information(info_vector(s, t))));
        }
        out.push_back(detail::make("total information triad invariant", worst, 1e-10));
    }
    {
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const QubitState s = k % 2 ? random_pure_state(rng) : random_mixed_state(rng);
            const Hamiltonian h = Hamiltonian::from_field(rng.uniform(0.0, 3.0) * rng.unit_vector(), rng.normal());
            std::vector<double> times(50);
            for (std::size_t j = 0; j < times.size(); ++j) times[j] = 0.4 * static_cast<double>(j);
            worst = std::max(worst, conservation_check(s, h, random_triad(rng), times).max_drift);
        }
        out.push_back(detail::make("unitary evolution conserves total information", worst, 1e-10));
    }
    {
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            const QubitState s = random_mixed_state(rng);
            const Hamiltonian h = Hamiltonian::from_field(rng.uniform(0.1, 2.0) * rng.unit_vector());
            const double t = rng.uniform(-5.0, 5.0);
            const MeasurementTriad tr = random_triad(rng);
            const InfoVector schr = info_vector(evolve(s, h, t), tr);
            const double mag = norm(h.field());
            const MeasurementTriad back = rotate_triad(tr, Direction::normalized(h.field()), -2.0 * mag * t);
            const InfoVector heis = info_vector(s, back);
            for (std::size_t m = 0; m < 3; ++m) worst = std::max(worst, std::abs(schr[m] - heis[m]));
        }
        out.push_back(detail::make("Schroedinger and Heisenberg pictures agree", worst, 1e-10));
    }
    {
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const QubitState s = random_mixed_state(rng);
            const Vec3 r = s.bloch();
            worst = std::max(worst, std::abs(total_information(info_vector(s, random_triad(rng))) - dot(r, r)));
        }
        out.push_back(detail::make("total information = |r|^2", worst, 1e-12));
    }

    // efficiency
    {
        double worst = 0.0;
        for (int k = 0; k <= 1000; ++k) {
            const EfficiencyModel m(k / 1000.0);
            const auto d = outcome_probabilities(m);
            const auto h = shannon_components(m);
            worst = std::max(worst, std::abs(bz_total_closed(m) - bz_total_generic(m)));
            for (std::size_t c = 0; c < 3; ++c) worst = std::max(worst, std::abs(h[c] - shannon(d[c])));
            worst = std::max(worst, std::abs(h[1] - (h[0] + m.eta())));
        }
        out.push_back(detail::make("efficiency closed forms match generic measures", worst, 1e-12));
    }
    {
        const auto [lo, hi] = thresholds();
        bool ok = true;
        for (int k = 1; k <= 100; ++k) {
            const auto ratio = [](double eta) { return sweep_row(eta).ratio; };
            ok = ok && ratio(lo * k / 101.0) > 1.0;
            ok = ok && ratio(lo + (hi - lo) * k / 101.0) <= 1.0;
            ok = ok && ratio(hi + (1.0 - hi) * k / 101.0) > 1.0;
        }
        out.push_back(detail::make_bool("ratio exceeds 1 exactly outside the thresholds", ok, "100 points per region"));
    }
    {
        bool ok = true;
        for (int k = 0; k < 600; ++k)
            ok = ok && bz_total_closed(EfficiencyModel(k / 1000.0)) > bz_total_closed(EfficiencyModel((k + 1) / 1000.0));
        for (int k = 600; k < 1000; ++k)
            ok = ok && bz_total_closed(EfficiencyModel(k / 1000.0)) < bz_total_closed(EfficiencyModel((k + 1) / 1000.0));
        out.push_back(detail::make_bool("I_total decreasing then increasing around 0.6", ok, "grid step 0.001"));
    }
    {
        const double ideal = bz_total_ideal();
        const double three = bz_total_closed(EfficiencyModel(1.0));
        out.push_back(detail::make_bool("ideal and three-outcome totals differ at eta = 1",
                                        std::abs(ideal - 1.0) < 1e-15 && std::abs(three - 1.5 * kTernaryBits) < 1e-12,
                                        "ideal " + std::to_string(ideal) + " vs " + std::to_string(three)));
    }

    // entanglement
    {
        const TwoQubitState singlet = bell_state(BellKind::psi_minus);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const Direction a = random_direction(rng);
            worst = std::max(worst, std::abs(correlation(singlet, a, a) + 1.0));
        }
        out.push_back(detail::make("singlet anti-correlated along every axis", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const TwoQubitState s = k % 2 ? werner_state(rng.uniform()) : TwoQubitState::product(random_mixed_state(rng), random_mixed_state(rng));
            const MeasurementTriad t = random_triad(rng);
            const Direction axis = random_direction(rng);
            const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
            const Matrix2 u = propagator(Hamiltonian::from_field(0.5 * angle * axis.vec()), 1.0);
            const Matrix4 uu = kron(u, u);
            Matrix4 rho = uu * s.density() * adjoint(uu);
            const TwoQubitState rotated = TwoQubitState::from_density(0.5 * (rho + adjoint(rho)));
            const MeasurementTriad rt = rotate_triad(t, axis, angle);
            worst = std::max(worst, std::abs(i_corr(rotated, rt[0], rt[1]).i_corr - i_corr(s, t[0], t[1]).i_corr));
        }
        out.push_back(detail::make("I_corr invariant under joint rotation", worst, 1e-10));
    }
    {
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const TwoQubitState s = TwoQubitState::product(random_mixed_state(rng), random_mixed_state(rng));
            for (int j = 0; j < 20; ++j) {
                const MeasurementTriad t = random_triad(rng);
                worst = std::max(worst, i_corr(s, t[0], t[1]).i_corr - 1.0);
            }
        }
        out.push_back(detail::make("product states carry at most one correlation bit", std::max(0.0, worst), 1e-9));
    }
    {
        const double v = max_i_corr(bell_state(BellKind::psi_minus)).i_corr;
        out.push_back(detail::make("singlet maximum I_corr = 2", std::abs(v - 2.0), 1e-6));
    }
    return out;
}

} // namespace infolab::verify
