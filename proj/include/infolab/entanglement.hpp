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

// Two-qubit states and the information carried by joint "the two spins are
// the same along d" propositions.
//
// Each such proposition is dichotomic with probabilities (p_same, p_diff),
// so its information is the two-outcome measure (p_same - p_diff)^2 = E^2
// where E(d, d) is the spin correlation. I_corr sums this over two
// directions. Bell states reach 2, product states never exceed 1.
//
// Note that I_corr > 1 is only a sufficient-style witness: Werner states
// w |psi-><psi-| + (1 - w) I / 4 give 2 w^2 and cross 1 at w = 1/sqrt(2),
// although they are entangled for every w > 1/3.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "infolab/errors.hpp"
#include "infolab/linalg.hpp"
#include "infolab/measures.hpp"
#include "infolab/state.hpp"

namespace infolab {

enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

/// Two-qubit density matrix in the basis |q1 q2>, index 2 q1 + q2.
class TwoQubitState {
public:
    static TwoQubitState from_density(const Matrix4& rho) {
        if (!is_hermitian(rho, kStateTol)) throw validation_error("density matrix is not Hermitian");
        if (std::abs(trace(rho) - 1.0) > kStateTol) throw validation_error("density matrix trace is not 1");
        if (hermitian_eigenvalues(rho)[0] < -kStateTol)
            throw validation_error("density matrix has a negative eigenvalue");
        return TwoQubitState(rho);
    }

    static TwoQubitState product(const QubitState& a, const QubitState& b) {
        return from_density(kron(a.density(), b.density()));
    }

    const Matrix4& density() const { return rho_; }

    double purity() const { return trace(rho_ * rho_).real(); }

private:
    explicit TwoQubitState(const Matrix4& rho) : rho_(rho) {}

    Matrix4 rho_;
};

inline TwoQubitState bell_state(BellKind kind) {
    const double h = 1.0 / std::numbers::sqrt2;
    std::array<double, 4> psi{};
    switch (kind) {
    case BellKind::phi_plus: psi = {h, 0, 0, h}; break;
    case BellKind::phi_minus: psi = {h, 0, 0, -h}; break;
    case BellKind::psi_plus: psi = {0, h, h, 0}; break;
    case BellKind::psi_minus: psi = {0, h, -h, 0}; break;
    }
    Matrix4 rho;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) rho(i, j) = psi[i] * psi[j];
    return TwoQubitState::from_density(rho);
}

/// w |psi-><psi-| + (1 - w) I / 4.
inline TwoQubitState werner_state(double w) {
    if (!(w >= 0.0 && w <= 1.0)) throw domain_error("Werner weight outside [0, 1]");
    Matrix4 rho = w * bell_state(BellKind::psi_minus).density() + (0.25 * (1.0 - w)) * Matrix4::identity();
    return TwoQubitState::from_density(rho);
}

/// Reduced state of qubit `which` (0 or 1).
inline QubitState reduced_state(const TwoQubitState& s, std::size_t which) {
    const Matrix4& r = s.density();
    Matrix2 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                out(i, j) += which == 0 ? r(2 * i + k, 2 * j + k) : r(2 * k + i, 2 * k + j);
    return QubitState::from_density(0.5 * (out + adjoint(out)));
}

/// E(a, b) = p_same - p_diff for spin measurements along a (qubit 1) and
/// b (qubit 2), from the joint outcome probabilities.
inline double correlation(const TwoQubitState& s, const Direction& a, const Direction& b) {
    const Matrix2 id = Matrix2::identity();
    const std::array<Matrix2, 2> pa{0.5 * (id + pauli_dot(a.vec())), 0.5 * (id - pauli_dot(a.vec()))};
    const std::array<Matrix2, 2> pb{0.5 * (id + pauli_dot(b.vec())), 0.5 * (id - pauli_dot(b.vec()))};
    double same = 0.0, diff = 0.0;
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) {
            const double p = trace(s.density() * kron(pa[x], pb[y])).real();
            (x == y ? same : diff) += p;
        }
    return std::clamp(same - diff, -1.0, 1.0);
}

/// T_ij = tr(rho sigma_i (x) sigma_j), so E(a, b) = a^T T b.
inline Mat3 correlation_tensor(const TwoQubitState& s) {
    Mat3 t{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) t[i][j] = trace(s.density() * kron(pauli(i), pauli(j))).real();
    return t;
}

struct CorrInfoResult {
    std::array<Direction, 2> directions{Direction::x(), Direction::y()};
    std::array<double, 2> info{}; ///< bits per "same along d" proposition
    double i_corr = 0.0;
};

inline constexpr double kParallelTol = 1e-9;

inline CorrInfoResult i_corr(const TwoQubitState& s, const Direction& d1, const Direction& d2) {
    if (std::abs(dot(d1.vec(), d2.vec())) > 1.0 - kParallelTol)
        throw validation_error("degenerate direction pair: d1 and d2 are parallel");
    CorrInfoResult r{{d1, d2}, {}, 0.0};
    for (std::size_t m = 0; m < 2; ++m) {
        const double e = correlation(s, r.directions[m], r.directions[m]);
        const double same = 0.5 * (1.0 + e);
        r.info[m] = bz_elementary(same, 1.0 - same);
    }
    r.i_corr = r.info[0] + r.info[1];
    return r;
}

namespace detail {

struct Frame {
    std::array<double, 3> angles; ///< ZYZ Euler angles
    double value;
    Vec3 d1, d2;
};

inline Mat3 euler_zyz(const std::array<double, 3>& a) {
    return rotation_matrix({0, 0, 1}, a[0]) * rotation_matrix({0, 1, 0}, a[1]) * rotation_matrix({0, 0, 1}, a[2]);
}

inline Frame score(const Mat3& t, Frame f) {
    const double e1 = dot(f.d1, t * f.d1);
    const double e2 = dot(f.d2, t * f.d2);
    f.value = e1 * e1 + e2 * e2;
    return f;
}

inline Frame evaluate_frame(const Mat3& t, const std::array<double, 3>& angles) {
    const Mat3 r = euler_zyz(angles);
    return score(t, {angles, 0.0, {r[0][0], r[1][0], r[2][0]}, {r[0][1], r[1][1], r[2][1]}});
}

/// 15 degree grid over ZYZ Euler angles; state independent.
inline const std::vector<Frame>& euler_grid() {
    static const std::vector<Frame> grid = [] {
        const double deg = std::numbers::pi / 180.0;
        const Mat3 zero{};
        std::vector<Frame> g;
        g.reserve(24 * 13 * 24);
        for (int a = 0; a < 360; a += 15)
            for (int b = 0; b <= 180; b += 15)
                for (int c = 0; c < 360; c += 15) g.push_back(evaluate_frame(zero, {a * deg, b * deg, c * deg}));
        return g;
    }();
    return grid;
}

/// Exact ordering for the grid: value descending, then direction pair.
inline bool grid_order(const Frame& a, const Frame& b) {
    if (a.value != b.value) return a.value > b.value;
    return std::tie(a.d1, a.d2) < std::tie(b.d1, b.d2);
}

/// Higher value wins; near-ties go to the lexicographically smaller pair.
inline bool better(const Frame& a, const Frame& b) {
    if (a.value > b.value + 1e-14) return true;
    if (b.value > a.value + 1e-14) return false;
    return std::tie(a.d1, a.d2) < std::tie(b.d1, b.d2);
}

inline Frame refine(const Mat3& t, Frame f, double step, double min_step) {
    while (step >= min_step) {
        bool moved = false;
        for (std::size_t k = 0; k < 3; ++k)
            for (double sgn : {1.0, -1.0}) {
                auto a = f.angles;
                a[k] += sgn * step;
                const Frame g = evaluate_frame(t, a);
                if (g.value > f.value + 1e-15) {
                    f = g;
                    moved = true;
                }
            }
        if (!moved) step *= 0.5;
    }
    return f;
}

} // namespace detail

/// Maximum of I_corr over orthogonal direction pairs: 15 degree grid over
/// ZYZ Euler angles, then compass refinement of the best grid points down to
/// 1e-6 rad.
inline CorrInfoResult max_i_corr(const TwoQubitState& s) {
    const Mat3 t = correlation_tensor(s);
    const double deg = std::numbers::pi / 180.0;

    std::vector<detail::Frame> grid = detail::euler_grid();
    for (auto& f : grid) f = detail::score(t, f);

    constexpr std::size_t kSeeds = 4;
    std::partial_sort(grid.begin(), grid.begin() + kSeeds, grid.end(), detail::grid_order);

    detail::Frame best = detail::refine(t, grid[0], 7.5 * deg, 1e-6);
    for (std::size_t i = 1; i < kSeeds; ++i) {
        const detail::Frame f = detail::refine(t, grid[i], 7.5 * deg, 1e-6);
        if (detail::better(f, best)) best = f;
    }
    return i_corr(s, Direction::normalized(best.d1), Direction::normalized(best.d2));
}

struct EntanglementVerdict {
    bool entangled = false;
    CorrInfoResult best;
};

inline constexpr double kEntanglementMargin = 1e-9;

/// I_corr > 1 over the best orthogonal pair.
inline EntanglementVerdict info_condition_entangled(const TwoQubitState& s) {
    EntanglementVerdict v;
    v.best = max_i_corr(s);
    v.entangled = v.best.i_corr > 1.0 + kEntanglementMargin;
    return v;
}

} // namespace infolab
