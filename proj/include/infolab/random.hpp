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

// Seeded sampling for test harnesses.
//
// The generator is std::mt19937_64, whose output sequence is fixed by the
// standard. The standard library's distributions are implementation-defined,
// so uniforms and normals are derived here directly from the raw stream:
//   uniform  = (x >> 11) * 2^-53           in [0, 1)
//   normal   = Box-Muller on two uniforms   (cosine branch only)
// which makes every sample below reproducible across toolchains.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "infolab/linalg.hpp"
#include "infolab/state.hpp"

namespace infolab {

inline constexpr std::uint64_t kDefaultSeed = 20260415;

class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Uniform on the unit sphere (Archimedes: z uniform in [-1, 1]).
    Vec3 unit_vector() {
        const double z = uniform(-1.0, 1.0);
        const double phi = uniform(0.0, 2.0 * std::numbers::pi);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {s * std::cos(phi), s * std::sin(phi), z};
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline Direction random_direction(Rng& rng) { return Direction::normalized(rng.unit_vector()); }

/// Pure state uniform on the Bloch sphere.
inline QubitState random_pure_state(Rng& rng) { return QubitState::from_bloch(rng.unit_vector()); }

inline QubitState random_pure_state(std::uint64_t seed) {
    Rng rng(seed);
    return random_pure_state(rng);
}

/// Bloch vector uniform in the unit ball.
inline QubitState random_mixed_state(Rng& rng) {
    const Vec3 dir = rng.unit_vector();
    const double r = std::cbrt(rng.uniform());
    return QubitState::from_bloch(r * dir);
}

inline QubitState random_mixed_state(std::uint64_t seed) {
    Rng rng(seed);
    return random_mixed_state(rng);
}

/// Haar-random rotation from a normalized Gaussian quaternion.
inline Mat3 random_rotation(Rng& rng) {
    double w = rng.normal(), x = rng.normal(), y = rng.normal(), z = rng.normal();
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n;
    x /= n;
    y /= n;
    z /= n;
    return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
             {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
             {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

/// Triad whose axes are the columns of a Haar-random rotation.
inline MeasurementTriad random_triad(Rng& rng) {
    const Mat3 r = transpose(random_rotation(rng));
    return {Direction::normalized(r[0]), Direction::normalized(r[1]), Direction::normalized(r[2])};
}

inline MeasurementTriad random_triad(std::uint64_t seed) {
    Rng rng(seed);
    return random_triad(rng);
}

} // namespace infolab
