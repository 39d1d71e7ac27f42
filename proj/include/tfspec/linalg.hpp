#pragma once

#include <Eigen/Dense>

namespace tfspec {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct LuResult {
    Vector x;
    double rcond = 0.0;         ///< reciprocal 1-norm condition estimate
    double residual_inf = 0.0;  ///< ||A x - b||_inf
};

/// Dense LU with partial pivoting. Throws SingularMatrixError (carrying the
/// condition estimate) when the matrix is numerically singular.
LuResult lu_solve(const Matrix& a, const Vector& b);

}  // namespace tfspec
