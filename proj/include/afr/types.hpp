#ifndef AFR_TYPES_HPP
#define AFR_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace afr {

using Real = double;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;

/// Conservative state at a point: (rho, momentum..., total energy).
/// Sized d+2 at run time, stack-allocated (capacity 4).
using StateVec = Eigen::Matrix<Real, Eigen::Dynamic, 1, Eigen::ColMajor, 4, 1>;

/// Raised when a state with non-positive density or pressure is
/// encountered where an admissible one is required. Carries enough
/// context to identify the failing element and time-step stage.
class PositivityError : public std::runtime_error {
public:
    PositivityError(std::string what, int element, long step = -1, int stage = -1)
        : std::runtime_error(std::move(what)), element(element), step(step), stage(stage) {}
    int element;
    long step;
    int stage;
};

/// Kronecker product, slow index from A, fast index from B.
inline Matrix kron(const Matrix& A, const Matrix& B) {
    Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return out;
}

} // namespace afr

#endif
