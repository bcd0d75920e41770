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

// State representations and the Born-rule bridge to outcome probabilities.
//
// Density matrices are canonical; Bloch vectors are a derived view with
// r_k = tr(rho sigma_k), so rho = (I + r . sigma) / 2.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "infolab/errors.hpp"
#include "infolab/linalg.hpp"

namespace infolab {

/// Tolerance for algebraic identities (normalization, Hermiticity, trace).
inline constexpr double kStateTol = 1e-12;
/// Tolerance for orthonormality of measurement triads.
inline constexpr double kTriadTol = 1e-10;

/// Validated discrete probability vector over n >= 2 outcomes.
class ProbDist {
public:
    explicit ProbDist(std::vector<double> probs) : probs_(std::move(probs)) {
        if (probs_.size() < 2)
            throw validation_error("probability vector needs at least 2 outcomes");
        double sum = 0.0;
        for (double p : probs_) {
            if (!std::isfinite(p) || p < -kStateTol || p > 1.0 + kStateTol)
                throw validation_error("probability outside [0, 1]: " + std::to_string(p));
            sum += p;
        }
        if (std::abs(sum - 1.0) > kStateTol)
            throw validation_error("probabilities sum to " + std::to_string(sum) + ", not 1");
    }
    ProbDist(std::initializer_list<double> probs) : ProbDist(std::vector<double>(probs)) {}

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    std::span<const double> values() const { return probs_; }

    friend bool operator==(const ProbDist&, const ProbDist&) = default;

private:
    std::vector<double> probs_;
};

/// Unit vector in real 3-space.
class Direction {
public:
    explicit Direction(const Vec3& v) : v_(v) {
        if (!(std::abs(norm(v) - 1.0) <= kStateTol))
            throw validation_error("direction is not a unit vector");
    }

    /// Rescales any non-zero vector to unit length.
    static Direction normalized(const Vec3& v) {
        const double n = norm(v);
        if (!(n > 0.0) || !std::isfinite(n)) throw validation_error("cannot normalize a zero vector");
        return Direction(Vec3{v[0] / n, v[1] / n, v[2] / n});
    }

    static Direction x() { return Direction(Vec3{1, 0, 0}); }
    static Direction y() { return Direction(Vec3{0, 1, 0}); }
    static Direction z() { return Direction(Vec3{0, 0, 1}); }

    const Vec3& vec() const { return v_; }
    double operator[](std::size_t i) const { return v_[i]; }

private:
    Vec3 v_;
};

/// Three mutually orthogonal directions forming a right-handed frame.
///
/// Convention: the triad lists the measurement axes n1, n2, n3 in lab
/// coordinates. Component m of an information vector is measured along nm,
/// and rotating a triad applies the rotation to each axis.
class MeasurementTriad {
public:
    MeasurementTriad(Direction n1, Direction n2, Direction n3) : axes_{n1, n2, n3} {
        const auto& a = axes_;
        if (std::abs(dot(a[0].vec(), a[1].vec())) > kTriadTol ||
            std::abs(dot(a[0].vec(), a[2].vec())) > kTriadTol ||
            std::abs(dot(a[1].vec(), a[2].vec())) > kTriadTol)
            throw validation_error("triad directions are not mutually orthogonal");
        if (std::abs(determinant(as_matrix()) - 1.0) > kTriadTol)
            throw validation_error("triad is not right-handed");
    }

    static MeasurementTriad canonical() {
        return {Direction::x(), Direction::y(), Direction::z()};
    }

    const Direction& operator[](std::size_t m) const { return axes_[m]; }

    /// Rows are the three axes.
    Mat3 as_matrix() const { return {axes_[0].vec(), axes_[1].vec(), axes_[2].vec()}; }

private:
    std::array<Direction, 3> axes_;
};

/// Qubit density matrix: Hermitian, unit trace, positive semidefinite.
class QubitState {
public:
    static QubitState from_density(const Matrix2& rho) {
        if (!is_hermitian(rho, kStateTol)) throw validation_error("density matrix is not Hermitian");
        const complex tr = trace(rho);
        if (std::abs(tr - 1.0) > kStateTol) throw validation_error("density matrix trace is not 1");
        // eigenvalues of a unit-trace Hermitian 2x2 are (1 +- |r|) / 2
        if (norm(bloch_of(rho)) > 1.0 + 2.0 * kStateTol)
            throw validation_error("density matrix has a negative eigenvalue");
        return QubitState(rho);
    }

    static QubitState from_bloch(const Vec3& r) {
        if (!std::isfinite(norm(r))) throw validation_error("Bloch vector is not finite");
        if (norm(r) > 1.0 + kStateTol) throw domain_error("Bloch vector lies outside the unit ball");
        Matrix2 rho = 0.5 * (Matrix2::identity() + pauli_dot(r));
        return QubitState(rho);
    }

    static QubitState maximally_mixed() { return from_bloch({0, 0, 0}); }

    /// Pure state with spin up along `d`.
    static QubitState spin_up(const Direction& d) { return from_bloch(d.vec()); }
    static QubitState spin_down(const Direction& d) { return from_bloch(-1.0 * d.vec()); }

    const Matrix2& density() const { return rho_; }
    Vec3 bloch() const { return bloch_of(rho_); }
    double purity() const { return (rho_ * rho_)(0, 0).real() + (rho_ * rho_)(1, 1).real(); }

private:
    explicit QubitState(const Matrix2& rho) : rho_(rho) {}

    static Vec3 bloch_of(const Matrix2& rho) {
        return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(),
                (rho(0, 0) - rho(1, 1)).real()};
    }

    Matrix2 rho_;
};

inline Vec3 bloch_from_density(const QubitState& state) { return state.bloch(); }

inline QubitState density_from_bloch(const Vec3& r) { return QubitState::from_bloch(r); }

/// Spin-up / spin-down probabilities along `dir`: (1 +- dir . r) / 2.
inline ProbDist born_probabilities(const QubitState& state, const Direction& dir) {
    double proj = dot(dir.vec(), state.bloch());
    proj = std::clamp(proj, -1.0, 1.0);
    const double up = 0.5 * (1.0 + proj);
    return ProbDist{up, 1.0 - up};
}

} // namespace infolab
