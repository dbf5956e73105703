#include "rio/lump.hpp"

#include <cmath>

namespace rio {

LumpOperator make_lump_operator(cplx u, cplx v) {
    // Unit modulus on both entries keeps each sub-operator unitary, so the
    // post-selected output states stay normalized.
    constexpr double kTol = 1e-9;
    if (std::abs(std::abs(u) - 1.0) > kTol || std::abs(std::abs(v) - 1.0) > kTol) {
        throw NonUnimodular("make_lump_operator: |u| and |v| must both be 1");
    }
    return LumpOperator{u, v};
}

Mat2 lump_matrix(const LumpOperator& op) {
    const cplx s{kInvSqrt2};
    return {{s * op.u, s * op.v, s * (-std::conj(op.v)), s * std::conj(op.u)}};
}

std::pair<Mat2, Mat2> decompose(const LumpOperator& op) {
    return {Mat2::diagonal(op.u, std::conj(op.u)),
            Mat2::antidiagonal(op.v, -std::conj(op.v))};
}

Mat2 sub_operator(const LumpOperator& op, int m) {
    auto [diag, antidiag] = decompose(op);
    return m == 0 ? diag : antidiag;
}

}  // namespace rio
