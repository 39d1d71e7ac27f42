#include "tfspec/linalg.hpp"

#include "tfspec/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace tfspec {

LuResult lu_solve(const Matrix& a, const Vector& b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw DomainError("lu_solve: dimension mismatch");
    if (!a.allFinite()) throw SingularMatrixError("lu_solve: matrix has non-finite entries", 0.0);
    const Eigen::PartialPivLU<Matrix> lu(a);
    const double rcond = lu.rcond();
    if (!(rcond > std::numeric_limits<double>::epsilon()))
        throw SingularMatrixError("lu_solve: matrix is singular to working precision (rcond = " +
                                      std::to_string(rcond) + ")",
                                  rcond);
    LuResult r;
    r.x = lu.solve(b);
    r.rcond = rcond;
    r.residual_inf = (a * r.x - b).lpNorm<Eigen::Infinity>();
    return r;
}

}  // namespace tfspec
