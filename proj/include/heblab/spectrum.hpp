#pragma once

#include <Eigen/Dense>

#include "heblab/dynamics.hpp"

namespace heblab {

// Eigenvalues of the retrieval Jacobian at x, sorted descending.
//
// J = -Id + Phi*D with Phi = g*F(W) symmetric and D = diag(F'(x_j)) positive,
// so D^{1/2} J D^{-1/2} = -Id + D^{1/2} Phi D^{1/2} is symmetric and similar
// to J. The spectrum is therefore real and computed with a symmetric solver.
Eigen::VectorXd jacobian_spectrum(const RetrievalSystem& sys, const Eigen::VectorXd& x);

// Same transform but also returns eigenvectors of J (columns, matching the
// descending eigenvalue order). Used to seed fold continuation.
void jacobian_eigensystem(const RetrievalSystem& sys, const Eigen::VectorXd& x,
                          Eigen::VectorXd& values, Eigen::MatrixXd& vectors);

}  // namespace heblab
