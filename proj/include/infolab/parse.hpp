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

// Text forms accepted on the command line.
//
//   vectors      "rx,ry,rz"
//   qubit state  Bloch triple, or plus-x | minus-x | plus-y | minus-y |
//                plus-z | minus-z | mixed
//   two qubits   bell:phi+ | bell:phi- | bell:psi+ | bell:psi- | werner:<w> |
//                product:<qubit>/<qubit>
//   time grid    start:stop:step (stop included when on the grid)
//   triad        "x1,y1,z1;x2,y2,z2;x3,y3,z3"

#include <cerrno>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "infolab/entanglement.hpp"
#include "infolab/errors.hpp"
#include "infolab/state.hpp"

namespace infolab::parse {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline double number(std::string_view text) {
    const std::string s = trim(text);
    if (s.empty()) throw usage_error("empty number");
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
        throw usage_error("not a finite number: '" + s + "'");
    return v;
}

inline std::vector<double> number_list(std::string_view text) {
    std::vector<double> out;
    for (const auto& item : split(text, ',')) out.push_back(number(item));
    return out;
}

inline Vec3 vec3(std::string_view text) {
    const auto v = number_list(text);
    if (v.size() != 3) throw usage_error("expected three comma-separated numbers, got '" + std::string(text) + "'");
    return {v[0], v[1], v[2]};
}

inline QubitState qubit_state(std::string_view text) {
    const std::string s = trim(text);
    if (s == "mixed") return QubitState::maximally_mixed();
    struct Named {
        std::string_view name;
        Vec3 r;
    };
    static constexpr Named kNamed[] = {{"plus-x", {1, 0, 0}},  {"minus-x", {-1, 0, 0}}, {"plus-y", {0, 1, 0}},
                                       {"minus-y", {0, -1, 0}}, {"plus-z", {0, 0, 1}},  {"minus-z", {0, 0, -1}}};
    for (const auto& n : kNamed)
        if (s == n.name) return QubitState::from_bloch(n.r);
    if (s.find(',') != std::string::npos) return QubitState::from_bloch(vec3(s));
    throw usage_error("unknown qubit state '" + s + "'");
}

inline BellKind bell_kind(std::string_view text) {
    if (text == "phi+") return BellKind::phi_plus;
    if (text == "phi-") return BellKind::phi_minus;
    if (text == "psi+") return BellKind::psi_plus;
    if (text == "psi-") return BellKind::psi_minus;
    throw usage_error("unknown Bell state '" + std::string(text) + "'");
}

inline TwoQubitState two_qubit_state(std::string_view text) {
    const std::string s = trim(text);
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw usage_error("two-qubit state needs a 'kind:' prefix, got '" + s + "'");
    const std::string kind = s.substr(0, colon);
    const std::string arg = s.substr(colon + 1);
    if (kind == "bell") return bell_state(bell_kind(arg));
    if (kind == "werner") return werner_state(number(arg));
    if (kind == "product") {
        const auto parts = split(arg, '/');
        if (parts.size() != 2) throw usage_error("product state needs two qubits separated by '/'");
        return TwoQubitState::product(qubit_state(parts[0]), qubit_state(parts[1]));
    }
    throw usage_error("unknown two-qubit state kind '" + kind + "'");
}

inline MeasurementTriad triad(std::string_view text) {
    const auto rows = split(text, ';');
    if (rows.size() != 3) throw usage_error("triad needs three ';'-separated directions");
    return {Direction::normalized(vec3(rows[0])), Direction::normalized(vec3(rows[1])),
            Direction::normalized(vec3(rows[2]))};
}

inline std::vector<double> time_grid(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw usage_error("time grid must be start:stop:step");
    const double start = number(parts[0]), stop = number(parts[1]), step = number(parts[2]);
    if (!(step > 0.0) || stop < start) throw usage_error("time grid needs step > 0 and stop >= start");
    const double span = (stop - start) / step;
    if (span > 1e7) throw usage_error("time grid has too many points");
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
}

} // namespace infolab::parse
