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

// Fixed-size real 3-vectors and small complex square matrices. Only what the
// qubit and two-qubit code needs: no allocation, no external BLAS.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace infolab {

using complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline constexpr double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline constexpr Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

/// Real 3x3 matrix, row-major.
using Mat3 = std::array<Vec3, 3>;

inline constexpr Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

inline constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return out;
}

inline constexpr Mat3 transpose(const Mat3& m) {
    return {{{m[0][0], m[1][0], m[2][0]}, {m[0][1], m[1][1], m[2][1]}, {m[0][2], m[1][2], m[2][2]}}};
}

inline constexpr double determinant(const Mat3& m) { return dot(m[0], cross(m[1], m[2])); }

/// Active right-handed rotation by `angle` about the unit vector `axis`
/// (Rodrigues form). Rotating x by +pi/2 about z gives y.
inline Mat3 rotation_matrix(const Vec3& axis, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double t = 1.0 - c;
    const double x = axis[0], y = axis[1], z = axis[2];
    return {{{t * x * x + c, t * x * y - s * z, t * x * z + s * y},
             {t * x * y + s * z, t * y * y + c, t * y * z - s * x},
             {t * x * z - s * y, t * y * z + s * x, t * z * z + c}}};
}

/// Dense N x N complex matrix, row-major.
template <std::size_t N>
struct Matrix {
    std::array<complex, N * N> a{};

    static constexpr std::size_t dim = N;

    constexpr complex& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
    constexpr const complex& operator()(std::size_t r, std::size_t c) const { return a[r * N + c]; }

    static constexpr Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    constexpr Matrix& operator+=(const Matrix& o) {
        for (std::size_t i = 0; i < N * N; ++i) a[i] += o.a[i];
        return *this;
    }
    constexpr Matrix& operator-=(const Matrix& o) {
        for (std::size_t i = 0; i < N * N; ++i) a[i] -= o.a[i];
        return *this;
    }
    constexpr Matrix& operator*=(complex s) {
        for (auto& x : a) x *= s;
        return *this;
    }

    friend constexpr Matrix operator+(Matrix l, const Matrix& r) { return l += r; }
    friend constexpr Matrix operator-(Matrix l, const Matrix& r) { return l -= r; }
    friend constexpr Matrix operator*(complex s, Matrix m) { return m *= s; }
    friend constexpr Matrix operator*(double s, Matrix m) { return m *= complex(s); }

    friend constexpr Matrix operator*(const Matrix& l, const Matrix& r) {
        Matrix out;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const complex lik = l(i, k);
                for (std::size_t j = 0; j < N; ++j) out(i, j) += lik * r(k, j);
            }
        return out;
    }

    friend constexpr bool operator==(const Matrix&, const Matrix&) = default;
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

template <std::size_t N>
constexpr Matrix<N> adjoint(const Matrix<N>& m) {
    Matrix<N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

template <std::size_t N>
constexpr complex trace(const Matrix<N>& m) {
    complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += m(i, i);
    return t;
}

/// Largest absolute entrywise difference.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& l, const Matrix<N>& r) {
    double d = 0.0;
    for (std::size_t i = 0; i < N * N; ++i) d = std::max(d, std::abs(l.a[i] - r.a[i]));
    return d;
}

template <std::size_t N>
bool is_hermitian(const Matrix<N>& m, double tol) {
    return max_abs_diff(m, adjoint(m)) <= tol;
}

template <std::size_t N, std::size_t M>
constexpr Matrix<N * M> kron(const Matrix<N>& l, const Matrix<M>& r) {
    Matrix<N * M> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < M; ++k)
                for (std::size_t m = 0; m < M; ++m) out(i * M + k, j * M + m) = l(i, j) * r(k, m);
    return out;
}

/// Pauli matrix sigma_{k+1}, k in {0, 1, 2}.
inline constexpr Matrix2 pauli(std::size_t k) {
    Matrix2 m;
    switch (k) {
    case 0:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case 1:
        m(0, 1) = complex(0.0, -1.0);
        m(1, 0) = complex(0.0, 1.0);
        break;
    default:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    }
    return m;
}

/// v . sigma
inline constexpr Matrix2 pauli_dot(const Vec3& v) {
    Matrix2 m;
    m(0, 0) = v[2];
    m(1, 1) = -v[2];
    m(0, 1) = complex(v[0], -v[1]);
    m(1, 0) = complex(v[0], v[1]);
    return m;
}

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// H = A + iB is embedded as the real symmetric [[A, -B], [B, A]], whose
/// spectrum is that of H with every eigenvalue doubled; cyclic Jacobi sweeps
/// diagonalize the embedding and every second eigenvalue is kept.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& h) {
    constexpr std::size_t M = 2 * N;
    std::array<std::array<double, M>, M> s{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            const complex z = 0.5 * (h(i, j) + std::conj(h(j, i)));
            s[i][j] = z.real();
            s[i + N][j + N] = z.real();
            s[i][j + N] = -z.imag();
            s[i + N][j] = z.imag();
        }

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < M; ++p)
            for (std::size_t q = p + 1; q < M; ++q) off += s[p][q] * s[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < M; ++p)
            for (std::size_t q = p + 1; q < M; ++q) {
                if (std::abs(s[p][q]) < 1e-300) continue;
                const double theta = (s[q][q] - s[p][p]) / (2.0 * s[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (std::size_t k = 0; k < M; ++k) {
                    const double skp = s[k][p], skq = s[k][q];
                    s[k][p] = c * skp - sn * skq;
                    s[k][q] = sn * skp + c * skq;
                }
                for (std::size_t k = 0; k < M; ++k) {
                    const double spk = s[p][k], sqk = s[q][k];
                    s[p][k] = c * spk - sn * sqk;
                    s[q][k] = sn * spk + c * sqk;
                }
            }
    }

    std::array<double, M> diag{};
    for (std::size_t i = 0; i < M; ++i) diag[i] = s[i][i];
    std::sort(diag.begin(), diag.end());
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = 0.5 * (diag[2 * i] + diag[2 * i + 1]);
    return out;
}

} // namespace infolab
