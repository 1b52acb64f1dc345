#ifndef DLMKIT_JACOBI_HPP
#define DLMKIT_JACOBI_HPP

#include <vector>

#include "dlmkit/int_matrix.hpp"

namespace dlm {

/// Numeric eigensystem of a symmetric matrix, eigenvalues descending;
/// vectors[k] is the eigenvector paired with values[k].
struct JacobiResult {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

/// Cyclic Jacobi rotations. Throws ConvergenceFailure if the fixed sweep
/// budget is exhausted (a bug, not a data condition).
JacobiResult jacobi_eigen(const IntSymMatrix& m);

/// Eigenvalue approximations only, sorted descending.
std::vector<double> numeric_eigenvalues(const IntSymMatrix& m);

} // namespace dlm

#endif
