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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails. Tolerances and runtime limits are
// fixed here and not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "infolab/cli.hpp"
#include "infolab/efficiency.hpp"
#include "infolab/entanglement.hpp"
#include "infolab/infospace.hpp"
#include "infolab/measures.hpp"
#include "infolab/random.hpp"
#include "infolab/report.hpp"
#include "infolab/verify.hpp"
#include "oracles.hpp"

namespace {

using namespace infolab;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Criterion {
    const char* id;
    const char* name;
    double time_limit_s;
    std::function<Outcome()> body;
};

const double kLog2Of3 = std::log2(3.0);

Outcome thresholds_criterion() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto [lo, hi] = thresholds();
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double want_lo = (9.0 - std::sqrt(21.0)) / 15.0;
    const double want_hi = (9.0 + std::sqrt(21.0)) / 15.0;
    o.require(std::abs(lo - want_lo) <= 1e-9, "low root " + num(lo));
    o.require(std::abs(hi - want_hi) <= 1e-9, "high root " + num(hi));
    o.require(std::abs(15 * lo * lo - 18 * lo + 4) <= 1e-12, "low root residual");
    o.require(std::abs(15 * hi * hi - 18 * hi + 4) <= 1e-12, "high root residual");
    o.require(std::round(lo * 100) == 29 && std::round(hi * 100) == 91, "2-decimal rounding");
    o.require(elapsed < 1e-3, "analytic roots took " + num(elapsed) + " s");

    // the CLI path at full precision
    const char* argv[] = {"infolab", "--precision", "15", "efficiency", "thresholds"};
    std::ostringstream out, err;
    const int code = cli::parse_and_dispatch(5, argv, out, err);
    double cli_lo = 0, cli_hi = 0;
    std::istringstream(out.str()) >> cli_lo >> cli_hi;
    o.require(code == 0, "CLI exit code " + std::to_string(code));
    o.require(std::abs(cli_lo - want_lo) <= 1e-9 && std::abs(cli_hi - want_hi) <= 1e-9, "CLI output " + out.str());
    o.detail = o.ok ? "eta_low=" + std::to_string(lo) + " eta_high=" + std::to_string(hi) : o.detail;
    return o;
}

Outcome figure1_criterion() {
    Outcome o;
    const SweepTable t = ratio_sweep(0.0, 1.0, report::kFigurePoints);
    o.require(t.rows.size() == 201, "row count");
    const auto [lo, hi] = thresholds();
    double worst_closed = 0.0, worst_generic = 0.0;
    bool sign_ok = true;
    for (const SweepRow& r : t.rows) {
        const double eta = r.eta;
        const double closed = (3.0 * kLog2Of3 / 2.0) * (5 * eta * eta - 6 * eta + 2) / kLog2Of3;
        double generic = 0.0;
        for (const ProbDist& p : outcome_probabilities(EfficiencyModel(eta))) generic += bz_measure(p);
        worst_closed = std::max(worst_closed, std::abs(r.ratio - closed));
        worst_generic = std::max(worst_generic, std::abs(r.ratio - generic / kLog2Of3));
        const bool outside = eta < lo || eta > hi;
        sign_ok = sign_ok && ((r.ratio > 1.0) == outside);
    }
    o.require(worst_closed <= 1e-12, "closed-form deviation " + num(worst_closed));
    o.require(worst_generic <= 1e-12, "generic-oracle deviation " + num(worst_generic));
    o.require(sign_ok, "ratio > 1 region does not match the thresholds");

    // written artifacts
    const auto dir = std::filesystem::temp_directory_path() / "infolab_acceptance_figs";
    std::filesystem::remove_all(dir);
    const auto files = report::reproduce_figures(dir);
    std::ifstream csv(files.fig1_csv);
    std::string line;
    int lines = 0;
    while (std::getline(csv, line)) ++lines;
    o.require(lines == 202, "fig1.csv has " + std::to_string(lines) + " lines");
    o.require(std::filesystem::file_size(files.fig1_svg) > 0, "fig1.svg empty");
    std::filesystem::remove_all(dir);
    if (o.ok) o.detail = "closed " + num(worst_closed) + ", generic " + num(worst_generic);
    return o;
}

Outcome figure2_criterion() {
    Outcome o;
    const SweepTable t = ratio_sweep(0.0, 1.0, report::kFigurePoints);
    std::size_t hx_arg = 0, hy_arg = 0;
    double worst_identity = 0.0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const SweepRow& r = t.rows[i];
        if (r.hx > t.rows[hx_arg].hx) hx_arg = i;
        if (r.hy > t.rows[hy_arg].hy) hy_arg = i;
        worst_identity = std::max({worst_identity, std::abs(r.hy - (r.hx + r.eta)), std::abs(r.hy - r.hz)});
    }
    o.require(t.rows[hx_arg].eta == 0.5, "Hx grid peak at eta=" + num(t.rows[hx_arg].eta));
    o.require(std::abs(t.rows[hx_arg].hx - 1.0) <= 1e-12, "Hx peak value " + num(t.rows[hx_arg].hx));
    // 2/3 is not on the grid: the grid peak must be its nearest neighbour
    o.require(std::abs(t.rows[hy_arg].eta - 2.0 / 3.0) <= 0.0025 + 1e-12, "Hy grid peak at " + num(t.rows[hy_arg].eta));

    const auto hy = [](double eta) { return shannon_components(EfficiencyModel(eta))[1]; };
    o.require(std::abs(hy(2.0 / 3.0) - kLog2Of3) <= 1e-12, "Hy(2/3) = " + num(hy(2.0 / 3.0)));
    o.require(std::abs(shannon_components(EfficiencyModel(0.5))[0] - 1.0) <= 1e-12, "Hx(1/2)");

    // golden-section search for the continuous maxima
    const auto argmax = [](const std::function<double(double)>& f) {
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = 0.0, b = 1.0;
        while (b - a > 1e-10) {
            const double c = b - g * (b - a), d = a + g * (b - a);
            if (f(c) > f(d))
                b = d;
            else
                a = c;
        }
        return 0.5 * (a + b);
    };
    const double hx_peak = argmax([](double e) { return shannon_components(EfficiencyModel(e))[0]; });
    const double hy_peak = argmax(hy);
    o.require(std::abs(hx_peak - 0.5) <= 1e-6, "Hx continuous peak " + num(hx_peak));
    o.require(std::abs(hy_peak - 2.0 / 3.0) <= 1e-6, "Hy continuous peak " + num(hy_peak));
    o.require(worst_identity <= 1e-12, "Hy = Hx + eta deviation " + num(worst_identity));
    if (o.ok) o.detail = "peaks at " + num(hx_peak) + " and " + num(hy_peak) + ", identity " + num(worst_identity);
    return o;
}

Outcome bz_anchor_criterion() {
    Outcome o;
    o.require(bz_measure({1.0, 0.0}) == 1.0, "I(1,0)");
    o.require(bz_measure({0.5, 0.5}) == 0.0, "I(1/2,1/2)");
    o.require(bz_elementary(1.0, 0.0) == 1.0 && bz_elementary(0.5, 0.5) == 0.0, "two-outcome form anchors");
    Rng rng(kDefaultSeed);
    double worst = 0.0;
    for (std::size_t n : {2u, 3u, 4u, 8u}) {
        const double k = std::log2(static_cast<double>(n));
        for (int t = 0; t < 10000; ++t) {
            const ProbDist p = verify::random_distribution(rng, n);
            const double i = bz_measure(p);
            worst = std::max({worst, -i, i - k});
        }
    }
    o.require(worst <= 1e-12, "bound violation " + num(worst));
    if (o.ok) o.detail = "40000 distributions within [0, log2 n]";
    return o;
}

Outcome conservation_criterion() {
    Outcome o;
    Rng rng(kDefaultSeed + 1);
    double worst_drift = 0.0, worst_pure = 0.0, worst_oracle = 0.0;
    std::vector<double> times(50);
    for (std::size_t j = 0; j < times.size(); ++j) times[j] = 0.25 * static_cast<double>(j);
    for (int k = 0; k < 100; ++k) {
        const bool pure = k % 2 == 0;
        const QubitState s = pure ? random_pure_state(rng) : random_mixed_state(rng);
        const Hamiltonian h = Hamiltonian::from_field(rng.uniform(0.0, 3.0) * rng.unit_vector(), rng.normal());
        const MeasurementTriad triad = random_triad(rng);
        const ConservationReport rep = conservation_check(s, h, triad, times);
        worst_drift = std::max(worst_drift, rep.max_drift);
        if (pure)
            for (double v : rep.i_total_values) worst_pure = std::max(worst_pure, std::abs(v - 1.0));
        const double t = times.back();
        const Matrix2 u = oracle::expm(complex(0.0, -t) * h.matrix());
        worst_oracle = std::max(worst_oracle, max_abs_diff(evolve(s, h, t).density(), u * s.density() * adjoint(u)));
    }
    o.require(worst_drift < 1e-10, "max drift " + num(worst_drift));
    o.require(worst_pure <= 1e-12, "pure-state deviation " + num(worst_pure));
    o.require(worst_oracle <= 1e-10, "propagator vs series exponential " + num(worst_oracle));
    if (o.ok) o.detail = "max drift " + num(worst_drift) + ", pure deviation " + num(worst_pure);
    return o;
}

Outcome rotation_criterion() {
    Outcome o;
    Rng rng(kDefaultSeed + 2);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const QubitState s = k % 2 ? random_pure_state(rng) : random_mixed_state(rng);
        const MeasurementTriad t = random_triad(rng);
        const MeasurementTriad r = rotate_triad(t, random_direction(rng), rng.uniform(-std::numbers::pi, std::numbers::pi));
        worst = std::max(worst, std::abs(total_information(info_vector(s, r)) - total_information(info_vector(s, t))));
    }
    o.require(worst < 1e-10, "I_total change " + num(worst));
    if (o.ok) o.detail = "max change " + num(worst);
    return o;
}

Outcome entanglement_criterion() {
    Outcome o;
    const double bell = i_corr(bell_state(BellKind::psi_minus), Direction::x(), Direction::y()).i_corr;
    o.require(std::abs(bell - 2.0) <= 1e-12, "I_corr(psi-, x, y) = " + num(bell));

    Rng rng(kDefaultSeed + 3);
    double worst_product = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const QubitState a = k % 2 ? random_pure_state(rng) : random_mixed_state(rng);
        const QubitState b = k % 3 ? random_pure_state(rng) : random_mixed_state(rng);
        worst_product = std::max(worst_product, max_i_corr(TwoQubitState::product(a, b)).i_corr);
    }
    o.require(worst_product <= 1.0 + 1e-9, "product-state maximum " + num(worst_product));

    const auto excess = [](double w) { return max_i_corr(werner_state(w)).i_corr - 1.0; };
    const double crossing = oracle::bisect(excess, 0.0, 1.0, 1e-7);
    o.require(std::abs(crossing - 1.0 / std::sqrt(2.0)) <= 1e-4, "Werner crossing at " + num(crossing));
    if (o.ok)
        o.detail = "bell " + num(bell) + ", product max " + num(worst_product) + ", Werner crossing " +
                   std::to_string(crossing);
    return o;
}

Outcome witness_criterion() {
    Outcome o;
    std::ifstream in(std::string(INFOLAB_FIXTURE_DIR) + "/ordering_witness.json");
    if (!in) {
        o.require(false, "fixture missing");
        return o;
    }
    const nlohmann::json fx = nlohmann::json::parse(in);
    const verify::OrderingWitness w = verify::find_ordering_witness(fx.at("resolution").get<int>());
    const auto less = fx.at("less_uncertain").get<std::array<int, 3>>();
    const auto more = fx.at("more_uncertain").get<std::array<int, 3>>();
    o.require(w.less_uncertain == less && w.more_uncertain == more, "search result differs from fixture");
    o.require(std::abs(w.margin - fx.at("margin").get<double>()) <= 1e-12, "margin " + num(w.margin));

    const auto to_p = [&](const std::array<int, 3>& c) {
        const double r = fx.at("resolution").get<double>();
        return std::vector<double>{c[0] / r, c[1] / r, c[2] / r};
    };
    const auto p = to_p(less), q = to_p(more);
    const double hp = oracle::shannon_ln(p), hq = oracle::shannon_ln(q);
    const double ip = oracle::bz_expanded(p), iq = oracle::bz_expanded(q);
    o.require(hp < hq && ip < iq, "fixture pair does not witness the disagreement");
    if (o.ok)
        o.detail = "H " + num(hp) + " < " + num(hq) + " while I " + num(ip) + " < " + num(iq);
    return o;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "threshold reproduction", 0.5, thresholds_criterion},
        {"AC2", "figure 1 ratio sweep", 1.0, figure1_criterion},
        {"AC3", "figure 2 Shannon uncertainties", 1.0, figure2_criterion},
        {"AC4", "quadratic measure anchors and bounds", 5.0, bz_anchor_criterion},
        {"AC5", "conservation under unitary evolution", 5.0, conservation_criterion},
        {"AC6", "triad-rotation invariance", 5.0, rotation_criterion},
        {"AC7", "entanglement anchors and Werner crossing", 60.0, entanglement_criterion},
        {"AC8", "Shannon/quadratic ordering witness", 10.0, witness_criterion},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.time_limit_s) {
            o.ok = false;
            o.detail += " [runtime " + num(elapsed) + " s over limit " + num(c.time_limit_s) + " s]";
        }
        std::printf("[%s] %s %s: %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), elapsed);
        failed += o.ok ? 0 : 1;
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
