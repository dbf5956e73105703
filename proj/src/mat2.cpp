#include "rio/mat2.hpp"

#include <algorithm>
#include <cmath>

namespace rio {

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
    Mat2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.at(r, c) = lhs.at(r, 0) * rhs.at(0, c) + lhs.at(r, 1) * rhs.at(1, c);
        }
    }
    return out;
}

Mat2 operator+(const Mat2& lhs, const Mat2& rhs) {
    Mat2 out;
    for (std::size_t i = 0; i < 4; ++i) out.e[i] = lhs.e[i] + rhs.e[i];
    return out;
}

Mat2 operator-(const Mat2& lhs, const Mat2& rhs) {
    Mat2 out;
    for (std::size_t i = 0; i < 4; ++i) out.e[i] = lhs.e[i] - rhs.e[i];
    return out;
}

Mat2 operator*(cplx scale, const Mat2& m) {
    Mat2 out;
    for (std::size_t i = 0; i < 4; ++i) out.e[i] = scale * m.e[i];
    return out;
}

double max_abs(const Mat2& m) {
    double best = 0.0;
    for (const cplx& entry : m.e) best = std::max(best, std::abs(entry));
    return best;
}

double unitarity_defect(const Mat2& m) {
    Mat2 gram = m.dagger() * m;
    gram.at(0, 0) -= 1.0;
    gram.at(1, 1) -= 1.0;
    return max_abs(gram);
}

bool is_unitary(const Mat2& m, double tol) { return unitarity_defect(m) <= tol; }

MatrixShape classify_rotation(const Mat2& m, double shape_tol, double unitary_tol) {
    if (!is_unitary(m, unitary_tol)) {
        throw NotUnitary("classify_rotation: matrix is not unitary");
    }
    const bool off_zero =
        std::abs(m.at(0, 1)) <= shape_tol && std::abs(m.at(1, 0)) <= shape_tol;
    const bool diag_zero =
        std::abs(m.at(0, 0)) <= shape_tol && std::abs(m.at(1, 1)) <= shape_tol;
    if (off_zero) return MatrixShape::Diagonal;
    if (diag_zero) return MatrixShape::Antidiagonal;
    return MatrixShape::Neither;
}

namespace gates {

Mat2 rot_y(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {{cplx{c}, cplx{-s}, cplx{s}, cplx{c}}};
}

Mat2 rot_z(double theta) {
    return Mat2::diagonal(std::polar(1.0, -theta / 2.0), std::polar(1.0, theta / 2.0));
}

Mat2 path_phase(double phase0, double phase1) {
    return Mat2::diagonal(std::polar(1.0, phase0), std::polar(1.0, phase1));
}

}  // namespace gates

}  // namespace rio
