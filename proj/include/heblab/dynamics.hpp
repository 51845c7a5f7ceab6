#pragma once

#include <Eigen/Dense>

#include "heblab/activation.hpp"
#include "heblab/config.hpp"
#include "heblab/weight_matrix.hpp"

namespace heblab {

// The retrieval system u(x) = -x + g*F(W)*F(x) with weights frozen.
// The coupling matrix g*F(W) is precomputed, so velocity and Jacobian
// evaluations are a matvec / rank-update on top of it.
class RetrievalSystem {
public:
    RetrievalSystem(const WeightMatrix& w, const NetworkConfig& cfg)
        : n_(cfg.N), lambda_(cfg.lambda), phi_(cfg.g * w.activated_dense(cfg.lambda)) {
        if (w.dim() != cfg.N)
            throw ConfigError("RetrievalSystem: weight dimension does not match config N");
    }

    int dim() const { return n_; }
    double lambda() const { return lambda_; }
    const Eigen::MatrixXd& coupling() const { return phi_; }  // g * F(W)

    void velocity(const Eigen::VectorXd& x, Eigen::VectorXd& u) const {
        Eigen::VectorXd f(n_);
        for (int j = 0; j < n_; ++j) f[j] = activation(x[j], lambda_);
        u.noalias() = phi_ * f;
        u -= x;
    }

    Eigen::VectorXd velocity(const Eigen::VectorXd& x) const {
        Eigen::VectorXd u(n_);
        velocity(x, u);
        return u;
    }

    // J = -Id + g*F(W) * diag(F'(x_j))
    void jacobian(const Eigen::VectorXd& x, Eigen::MatrixXd& jac) const {
        jac = phi_;
        for (int j = 0; j < n_; ++j) jac.col(j) *= activation_deriv(x[j], lambda_);
        jac.diagonal().array() -= 1.0;
    }

    Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
        Eigen::MatrixXd jac;
        jacobian(x, jac);
        return jac;
    }

private:
    int n_;
    double lambda_;
    Eigen::MatrixXd phi_;
};

// dx_i/dt = -x_i + g*sum_j F(w_ij)F(x_j) + A*I_i(t)
Eigen::VectorXd retrieval_rhs(const Eigen::VectorXd& x, const WeightMatrix& w,
                              const NetworkConfig& cfg);

Eigen::MatrixXd retrieval_jacobian(const Eigen::VectorXd& x, const WeightMatrix& w,
                                   const NetworkConfig& cfg);

// Right-hand side of the coupled learning system for a fixed input vector:
// dx as above plus dw_ij = (1/B)(-w_ij + F(x_i)F(x_j)) on the stored pairs.
void learning_rhs(const Eigen::VectorXd& x, const WeightMatrix& w,
                  const Eigen::VectorXd& input, const NetworkConfig& cfg,
                  Eigen::VectorXd& dx, WeightMatrix& dw);

// Diagnostic energy V = sum_i [ (x_i - A I_i)^2/2 - g x_i sum_j F(w_ij)F(x_j) ].
// The gradient identity dx/dt = -dV/dx holds only in the lambda->infinity
// limit, so V is reported but never asserted to decrease.
double energy(const Eigen::VectorXd& x, const WeightMatrix& w,
              const Eigen::VectorXd& input, const NetworkConfig& cfg);

}  // namespace heblab
