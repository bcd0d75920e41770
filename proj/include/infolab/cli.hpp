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

// Command-line front end. Exit codes: 0 success, 2 usage error (including
// any input that fails validation), 1 computation or I/O error. Errors go to
// the error stream as a single line starting with "error:".

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "infolab/efficiency.hpp"
#include "infolab/entanglement.hpp"
#include "infolab/errors.hpp"
#include "infolab/infospace.hpp"
#include "infolab/measures.hpp"
#include "infolab/parse.hpp"
#include "infolab/random.hpp"
#include "infolab/report.hpp"
#include "infolab/verify.hpp"

namespace infolab::cli {

inline constexpr const char* kSeedEnv = "INFOLAB_SEED";

struct RunConfig {
    std::string subcommand;
    std::optional<std::uint64_t> seed_flag;
    int precision = 6;
    std::string out_path;

    /// --seed, then $INFOLAB_SEED, then kDefaultSeed.
    std::uint64_t seed() const {
        if (seed_flag) return *seed_flag;
        if (const char* env = std::getenv(kSeedEnv); env && *env) {
            char* end = nullptr;
            errno = 0;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (*end != '\0' || errno == ERANGE) throw usage_error(std::string(kSeedEnv) + " is not an unsigned integer");
            return v;
        }
        return kDefaultSeed;
    }
};

namespace detail {

/// Runs input construction, reporting any invariant failure as a usage error.
template <class F>
auto as_input(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const usage_error&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    } catch (const std::domain_error& e) {
        throw usage_error(e.what());
    }
}

inline std::string vec_text(const Vec3& v, int precision) {
    return report::display_number(v[0], precision) + ',' + report::display_number(v[1], precision) + ',' +
           report::display_number(v[2], precision);
}

/// Writes to `path`, or to `fallback` when the path is empty.
template <class Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& w) {
    if (path.empty()) {
        w(fallback);
        return;
    }
    std::ostringstream buf;
    w(buf);
    report::write_file(path, buf.str());
}

} // namespace detail

inline int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Quadratic and Shannon information for qubits", "infolab"};
    app.require_subcommand(1);
    app.add_option("--precision", cfg.precision, "decimal places for displayed values")->check(CLI::Range(1, 17));
    app.add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& s) { cfg.seed_flag = s; },
                                           "random seed (default: $INFOLAB_SEED, else built-in)");

    // measure
    std::string probs;
    auto* measure = app.add_subcommand("measure", "evaluate an information measure on a distribution");
    measure->require_subcommand(1);
    auto* m_shannon = measure->add_subcommand("shannon", "Shannon entropy in bits");
    auto* m_bz = measure->add_subcommand("bz", "quadratic information measure in bits");
    for (auto* sc : {m_shannon, m_bz}) sc->add_option("--probs", probs, "comma-separated probabilities")->required();

    // qubit
    std::string state_text, triad_text;
    auto* qubit = app.add_subcommand("qubit", "single-qubit views");
    qubit->require_subcommand(1);
    auto* q_info = qubit->add_subcommand("info-vector", "information vector and total information");
    q_info->add_option("--state", state_text, "Bloch triple or named state")->required();
    q_info->add_option("--triad", triad_text, "three ';'-separated axes (default x;y;z)");

    // evolve
    std::string hamiltonian_text, times_text;
    double t_final = 0.0;
    bool report_conservation = false;
    auto* evolve_cmd = app.add_subcommand("evolve", "unitary evolution under H = h . sigma");
    evolve_cmd->add_option("--state", state_text, "initial state")->required();
    evolve_cmd->add_option("--hamiltonian", hamiltonian_text, "field hx,hy,hz")->required();
    evolve_cmd->add_option("--t", t_final, "evolution time (hbar = 1)");
    evolve_cmd->add_flag("--report-conservation", report_conservation, "tabulate total information over --times");
    evolve_cmd->add_option("--times", times_text, "start:stop:step");
    evolve_cmd->add_option("--triad", triad_text, "measurement axes (default x;y;z)");
    evolve_cmd->add_option("--out", cfg.out_path, "CSV output path (default stdout)");

    // efficiency
    double eta_min = 0.0, eta_max = 1.0;
    std::size_t steps = 201;
    std::string out_dir = "figs";
    auto* eff = app.add_subcommand("efficiency", "three-outcome measurement with detection efficiency");
    eff->require_subcommand(1);
    auto* e_sweep = eff->add_subcommand("sweep", "tabulate information and uncertainty against eta");
    e_sweep->add_option("--min", eta_min, "lowest eta");
    e_sweep->add_option("--max", eta_max, "highest eta");
    e_sweep->add_option("--steps", steps, "grid points, endpoints included");
    e_sweep->add_option("--out", cfg.out_path, "CSV output path (default stdout)");
    auto* e_thresholds = eff->add_subcommand("thresholds", "efficiencies where I_total equals log2(3)");
    auto* e_figures = eff->add_subcommand("figures", "write fig1/fig2 CSV and SVG files");
    e_figures->add_option("--out-dir", out_dir, "output directory");

    // entangle
    std::string d1_text = "1,0,0", d2_text = "0,1,0";
    auto* ent = app.add_subcommand("entangle", "two-qubit correlation information");
    ent->require_subcommand(1);
    auto* en_icorr = ent->add_subcommand("icorr", "I_corr for a direction pair");
    en_icorr->add_option("--state", state_text, "bell:<kind>, werner:<w> or product:<a>/<b>")->required();
    en_icorr->add_option("--d1", d1_text, "first direction");
    en_icorr->add_option("--d2", d2_text, "second direction");
    auto* en_check = ent->add_subcommand("check", "maximize I_corr and test I_corr > 1");
    en_check->add_option("--state", state_text, "two-qubit state")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const int prec = cfg.precision;
    const auto show = [prec](double v) { return report::display_number(v, prec); };

    try {
        if (m_shannon->parsed() || m_bz->parsed()) {
            const MeasureKind kind = m_bz->parsed() ? MeasureKind::bz : MeasureKind::shannon;
            cfg.subcommand = std::string("measure ") + std::string(to_string(kind));
            const ProbDist p = detail::as_input([&] { return ProbDist(parse::number_list(probs)); });
            const MeasureResult r = evaluate(kind, p);
            out << show(r.value) << '\n';
            err << "measure=" << to_string(kind) << " n=" << r.n << " k=" << show(r.k) << '\n';
            return 0;
        }

        if (q_info->parsed()) {
            cfg.subcommand = "qubit info-vector";
            const QubitState s = detail::as_input([&] { return parse::qubit_state(state_text); });
            const MeasurementTriad t = detail::as_input(
                [&] { return triad_text.empty() ? MeasurementTriad::canonical() : parse::triad(triad_text); });
            const InfoVector iv = info_vector(s, t);
            out << "info_vector " << show(iv[0]) << ' ' << show(iv[1]) << ' ' << show(iv[2]) << '\n';
            out << "I_total " << show(total_information(iv)) << '\n';
            return 0;
        }

        if (evolve_cmd->parsed()) {
            cfg.subcommand = "evolve";
            const QubitState s = detail::as_input([&] { return parse::qubit_state(state_text); });
            const Hamiltonian h = detail::as_input([&] { return Hamiltonian::from_field(parse::vec3(hamiltonian_text)); });
            const MeasurementTriad t = detail::as_input(
                [&] { return triad_text.empty() ? MeasurementTriad::canonical() : parse::triad(triad_text); });
            if (!std::isfinite(t_final)) throw usage_error("--t must be finite");
            if (!report_conservation) {
                const QubitState final_state = evolve(s, h, t_final);
                out << "bloch " << detail::vec_text(final_state.bloch(), prec) << '\n';
                out << "I_total " << show(total_information(info_vector(final_state, t))) << '\n';
                return 0;
            }
            if (times_text.empty()) throw usage_error("--report-conservation needs --times start:stop:step");
            const std::vector<double> times = detail::as_input([&] { return parse::time_grid(times_text); });
            const ConservationReport rep = conservation_check(s, h, t, times);
            detail::emit(cfg.out_path, out, [&](std::ostream& os) { report::write_conservation_csv(os, rep); });
            err << "max_drift=" << report::csv_number(rep.max_drift) << '\n';
            return 0;
        }

        if (e_sweep->parsed()) {
            cfg.subcommand = "efficiency sweep";
            const SweepTable table = ratio_sweep(eta_min, eta_max, steps);
            detail::emit(cfg.out_path, out, [&](std::ostream& os) { report::write_sweep_csv(os, table); });
            return 0;
        }

        if (e_thresholds->parsed()) {
            cfg.subcommand = "efficiency thresholds";
            const auto [lo, hi] = thresholds();
            out << show(lo) << ' ' << show(hi) << '\n';
            return 0;
        }

        if (e_figures->parsed()) {
            cfg.subcommand = "efficiency figures";
            const report::FigureFiles f = report::reproduce_figures(out_dir);
            for (const auto& p : {f.fig1_csv, f.fig1_svg, f.fig2_csv, f.fig2_svg}) out << p.string() << '\n';
            return 0;
        }

        if (en_icorr->parsed()) {
            cfg.subcommand = "entangle icorr";
            const TwoQubitState s = detail::as_input([&] { return parse::two_qubit_state(state_text); });
            const Direction d1 = detail::as_input([&] { return Direction::normalized(parse::vec3(d1_text)); });
            const Direction d2 = detail::as_input([&] { return Direction::normalized(parse::vec3(d2_text)); });
            const CorrInfoResult r = detail::as_input([&] { return i_corr(s, d1, d2); });
            out << "i_corr " << show(r.i_corr) << '\n';
            out << "info " << show(r.info[0]) << ' ' << show(r.info[1]) << '\n';
            return 0;
        }

        if (en_check->parsed()) {
            cfg.subcommand = "entangle check";
            const TwoQubitState s = detail::as_input([&] { return parse::two_qubit_state(state_text); });
            const EntanglementVerdict v = info_condition_entangled(s);
            out << "entangled " << (v.entangled ? "true" : "false") << '\n';
            out << "i_corr " << show(v.best.i_corr) << '\n';
            out << "d1 " << detail::vec_text(v.best.directions[0].vec(), prec) << '\n';
            out << "d2 " << detail::vec_text(v.best.directions[1].vec(), prec) << '\n';
            return 0;
        }

        if (verify_cmd->parsed()) {
            cfg.subcommand = "verify";
            const auto results = verify::run_all(cfg.seed());
            std::size_t failed = 0;
            for (const auto& r : results) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
                failed += r.passed ? 0 : 1;
            }
            out << results.size() - failed << '/' << results.size() << " properties passed\n";
            return failed == 0 ? 0 : 1;
        }
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    err << "error: no subcommand selected\n";
    return 2;
}

} // namespace infolab::cli
