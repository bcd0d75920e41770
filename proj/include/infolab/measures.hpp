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

// Shannon entropy and the quadratic information measure
// over a discrete probability vector. All values are in bits.

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "infolab/errors.hpp"
#include "infolab/state.hpp"

namespace infolab {

enum class MeasureKind { shannon, bz };

inline std::string_view to_string(MeasureKind k) { return k == MeasureKind::shannon ? "shannon" : "bz"; }

struct MeasureResult {
    double value = 0.0;      ///< bits
    MeasureKind kind = MeasureKind::shannon;
    std::size_t n = 0;       ///< outcome count
    double k = 0.0;          ///< log2(n), the most bits n outcomes can encode
};

/// H(p) = -sum p_i log2 p_i with 0 log 0 = 0.
inline double shannon(const ProbDist& p) {
    double h = 0.0;
    for (double pi : p.values())
        if (pi > 0.0) h -= pi * std::log2(pi);
    return h < 0.0 ? 0.0 : h;
}

/// n log2(n) / (n - 1). For n = 2^k this is 2^k k / (2^k - 1); other n are
/// covered by the same expression, which is what the n = 3 efficiency model
/// uses.
inline double normalization_factor(std::size_t n) {
    if (n < 2) throw domain_error("normalization factor needs n >= 2, got " + std::to_string(n));
    const double nd = static_cast<double>(n);
    return nd * std::log2(nd) / (nd - 1.0);
}

/// I(p) = N sum (p_i - 1/n)^2. Zero iff p is uniform, log2 n iff p is certain.
inline double bz_measure(const ProbDist& p) {
    const double inv_n = 1.0 / static_cast<double>(p.size());
    double s = 0.0;
    for (double pi : p.values()) s += (pi - inv_n) * (pi - inv_n);
    return normalization_factor(p.size()) * s;
}

/// Two-outcome special case: (p1 - p2)^2.
inline double bz_elementary(double p1, double p2) {
    const ProbDist checked{p1, p2};
    const double d = checked[0] - checked[1];
    return d * d;
}

/// sigma^2 / N = p (1 - p) for a dichotomic outcome of probability p.
inline double binomial_uncertainty(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw domain_error("probability outside [0, 1]");
    return p * (1.0 - p);
}

inline MeasureResult evaluate(MeasureKind kind, const ProbDist& p) {
    MeasureResult r;
    r.kind = kind;
    r.n = p.size();
    r.k = std::log2(static_cast<double>(r.n));
    r.value = kind == MeasureKind::shannon ? shannon(p) : bz_measure(p);
    return r;
}

} // namespace infolab
