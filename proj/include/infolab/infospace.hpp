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

// Information vector ("catalog of knowledge") of a qubit, its total
// information, triad rotations, and unitary evolution under a
// time-independent Hamiltonian (hbar = 1).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "infolab/errors.hpp"
#include "infolab/linalg.hpp"
#include "infolab/state.hpp"

namespace infolab {

/// (i1, i2, i3) with im = p+ - p- along triad axis m.
struct InfoVector {
    std::array<double, 3> c{};

    double operator[](std::size_t m) const { return c[m]; }
    double& operator[](std::size_t m) { return c[m]; }
};

inline InfoVector info_vector(const QubitState& state, const MeasurementTriad& triad) {
    InfoVector out;
    for (std::size_t m = 0; m < 3; ++m) {
        const ProbDist p = born_probabilities(state, triad[m]);
        out[m] = p[0] - p[1];
    }
    return out;
}

/// I1 + I2 + I3 with Im = im^2.
inline double total_information(const InfoVector& i) {
    return i[0] * i[0] + i[1] * i[1] + i[2] * i[2];
}

inline MeasurementTriad rotate_triad(const MeasurementTriad& triad, const Direction& axis, double angle) {
    const Mat3 r = rotation_matrix(axis.vec(), angle);
    return {Direction::normalized(r * triad[0].vec()), Direction::normalized(r * triad[1].vec()),
            Direction::normalized(r * triad[2].vec())};
}

/// Time-independent qubit Hamiltonian H = h0 I + h . sigma, hbar = 1.
class Hamiltonian {
public:
    static Hamiltonian from_matrix(const Matrix2& h) {
        if (!is_hermitian(h, kStateTol)) throw validation_error("Hamiltonian is not Hermitian");
        const complex half_tr = 0.5 * trace(h);
        Vec3 field{};
        for (std::size_t k = 0; k < 3; ++k) field[k] = 0.5 * trace(h * pauli(k)).real();
        return Hamiltonian(half_tr.real(), field);
    }

    static Hamiltonian from_field(const Vec3& field, double offset = 0.0) {
        for (double f : field)
            if (!std::isfinite(f)) throw validation_error("Hamiltonian field is not finite");
        return Hamiltonian(offset, field);
    }

    Matrix2 matrix() const { return offset_ * Matrix2::identity() + pauli_dot(field_); }
    const Vec3& field() const { return field_; }
    double offset() const { return offset_; }

private:
    Hamiltonian(double offset, const Vec3& field) : offset_(offset), field_(field) {}

    double offset_;
    Vec3 field_;
};

/// U = exp(-i H t) = e^{-i h0 t} (cos(|h| t) I - i sin(|h| t) h^ . sigma).
inline Matrix2 propagator(const Hamiltonian& h, double t) {
    const double mag = norm(h.field());
    const complex phase = std::exp(complex(0.0, -h.offset() * t));
    Matrix2 u = std::cos(mag * t) * Matrix2::identity();
    if (mag > 0.0) {
        const Vec3 axis = (1.0 / mag) * h.field();
        u -= complex(0.0, std::sin(mag * t)) * pauli_dot(axis);
    }
    return phase * u;
}

/// The SO(3) action of propagator(h, t) on Bloch vectors: a right-handed
/// rotation by 2|h|t about h^.
inline Mat3 bloch_rotation(const Hamiltonian& h, double t) {
    const double mag = norm(h.field());
    if (mag == 0.0) return rotation_matrix({0, 0, 1}, 0.0);
    return rotation_matrix((1.0 / mag) * h.field(), 2.0 * mag * t);
}

inline QubitState evolve(const QubitState& state, const Hamiltonian& h, double t) {
    if (!std::isfinite(t)) throw validation_error("evolution time is not finite");
    const Matrix2 u = propagator(h, t);
    Matrix2 rho = u * state.density() * adjoint(u);
    rho = 0.5 * (rho + adjoint(rho));
    return QubitState::from_density(rho);
}

struct ConservationReport {
    std::vector<double> times;
    std::vector<InfoVector> info_vectors;
    std::vector<double> i_total_values;
    double max_drift = 0.0; ///< max |I_total(t) - I_total(t0)|
};

inline ConservationReport conservation_check(const QubitState& state, const Hamiltonian& h,
                                             const MeasurementTriad& triad, std::span<const double> times) {
    if (times.empty()) throw validation_error("no time points given");
    if (!std::is_sorted(times.begin(), times.end())) throw validation_error("time points are not sorted");
    ConservationReport report;
    report.times.assign(times.begin(), times.end());
    for (double t : times) {
        const InfoVector iv = info_vector(evolve(state, h, t), triad);
        report.info_vectors.push_back(iv);
        report.i_total_values.push_back(total_information(iv));
    }
    const double first = report.i_total_values.front();
    for (double v : report.i_total_values) report.max_drift = std::max(report.max_drift, std::abs(v - first));
    return report;
}

/// Fixed-step RK4 integration of d rho / dt = -i [H, rho]. Only for comparing
/// integrator drift against the exact propagator; the result is a raw matrix
/// since purity is not preserved exactly.
inline Matrix2 integrate_commutator(const QubitState& state, const Hamiltonian& h, double t, std::size_t steps) {
    if (steps == 0) throw validation_error("integrator needs at least one step");
    const Matrix2 hm = h.matrix();
    const complex minus_i(0.0, -1.0);
    auto rhs = [&](const Matrix2& rho) { return minus_i * (hm * rho - rho * hm); };
    const double dt = t / static_cast<double>(steps);
    Matrix2 rho = state.density();
    for (std::size_t s = 0; s < steps; ++s) {
        const Matrix2 k1 = rhs(rho);
        const Matrix2 k2 = rhs(rho + (0.5 * dt) * k1);
        const Matrix2 k3 = rhs(rho + (0.5 * dt) * k2);
        const Matrix2 k4 = rhs(rho + dt * k3);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return rho;
}

} // namespace infolab
