#pragma once

#include <utility>

#include "rio/mat2.hpp"

namespace rio {

/// The (u, v) pair behind a lump operator: a unitary built from a diagonal
/// part diag(u, u*) and an antidiagonal part antidiag(v, -v*), combined as
/// (diagonal + antidiagonal)/sqrt(2). Both moduli must be 1 so that each
/// sub-operator is unitary on its own.
struct LumpOperator {
    cplx u;
    cplx v;
};

/// Validates |u| = |v| = 1 within 1e-9; throws NonUnimodular otherwise.
LumpOperator make_lump_operator(cplx u, cplx v);

/// (1/sqrt(2)) [[u, v], [-v*, u*]].
Mat2 lump_matrix(const LumpOperator& op);

/// {diag(u, u*), antidiag(v, -v*)}.
std::pair<Mat2, Mat2> decompose(const LumpOperator& op);

/// Sub-operator selected by the outcome bit: m = 0 diagonal, m = 1 antidiagonal.
Mat2 sub_operator(const LumpOperator& op, int m);

}  // namespace rio
