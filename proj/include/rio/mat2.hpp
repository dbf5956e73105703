#pragma once

#include <array>
#include <complex>

#include "rio/errors.hpp"

namespace rio {

using cplx = std::complex<double>;

inline constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

/// 2x2 complex matrix acting on the two paths of a dual-rail photon.
/// Row-major storage; column j is the image of path j.
struct Mat2 {
    std::array<cplx, 4> e{};

    cplx& at(int row, int col) { return e[static_cast<std::size_t>(row * 2 + col)]; }
    cplx at(int row, int col) const { return e[static_cast<std::size_t>(row * 2 + col)]; }

    static Mat2 identity() { return {{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}}}; }
    static Mat2 diagonal(cplx a, cplx d) { return {{a, cplx{0.0}, cplx{0.0}, d}}; }
    static Mat2 antidiagonal(cplx b, cplx c) { return {{cplx{0.0}, b, c, cplx{0.0}}}; }

    Mat2 dagger() const {
        return {{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
    }
};

Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
Mat2 operator+(const Mat2& lhs, const Mat2& rhs);
Mat2 operator-(const Mat2& lhs, const Mat2& rhs);
Mat2 operator*(cplx scale, const Mat2& m);

/// Largest entry magnitude.
double max_abs(const Mat2& m);

/// max_ij |(M†M - I)_ij|.
double unitarity_defect(const Mat2& m);

bool is_unitary(const Mat2& m, double tol = 1e-12);

enum class MatrixShape { Diagonal, Antidiagonal, Neither };

/// Shape of a unitary in the path basis: Diagonal when both off-diagonal
/// entries vanish, Antidiagonal when both diagonal entries vanish.
/// Throws NotUnitary when M†M deviates from I beyond unitary_tol.
MatrixShape classify_rotation(const Mat2& m, double shape_tol = 1e-12,
                              double unitary_tol = 1e-9);

namespace gates {

inline Mat2 identity() { return Mat2::identity(); }
inline Mat2 sigma_z() { return Mat2::diagonal(cplx{1.0}, cplx{-1.0}); }

/// X_S: swaps the two paths.
inline Mat2 path_flip() { return Mat2::antidiagonal(cplx{1.0}, cplx{1.0}); }

/// Z_S: flips the sign of the second path.
inline Mat2 phase_flip() { return Mat2::diagonal(cplx{1.0}, cplx{-1.0}); }

Mat2 rot_y(double theta);
Mat2 rot_z(double theta);

/// Balanced beam splitter mixing (Hadamard): self-inverse path mixing.
inline Mat2 bbs() {
    return {{cplx{kInvSqrt2}, cplx{kInvSqrt2}, cplx{kInvSqrt2}, cplx{-kInvSqrt2}}};
}

/// diag(e^{i phase0}, e^{i phase1}).
Mat2 path_phase(double phase0, double phase1);

}  // namespace gates

}  // namespace rio
