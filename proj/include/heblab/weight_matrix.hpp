#pragma once

#include <Eigen/Dense>
#include <vector>

#include "heblab/activation.hpp"
#include "heblab/errors.hpp"

namespace heblab {

// Symmetric zero-diagonal coupling state. Only the N(N-1)/2 upper-triangular
// entries are stored; (i,j) and (j,i) read the same cell and (i,i) is 0 by
// construction, so the symmetry invariants cannot be violated.
class WeightMatrix {
public:
    WeightMatrix() = default;
    explicit WeightMatrix(int n) : n_(n), data_(std::size_t(n) * (n - 1) / 2, 0.0) {
        if (n < 2) throw ConfigError("WeightMatrix: dimension must be >= 2");
    }

    int dim() const { return n_; }
    int pair_count() const { return int(data_.size()); }

    double get(int i, int j) const {
        check(i, j);
        if (i == j) return 0.0;
        return data_[index(i, j)];
    }

    void set(int i, int j, double v) {
        check(i, j);
        if (i == j) throw DomainError("WeightMatrix: diagonal entries are fixed at 0");
        data_[index(i, j)] = v;
    }

    // Flat upper-triangular storage, pair order (0,1),(0,2),...,(N-2,N-1).
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    static std::pair<int, int> pair_from_flat(int n, int flat) {
        int i = 0;
        int row_len = n - 1;
        while (flat >= row_len) { flat -= row_len; ++i; --row_len; }
        return {i, i + 1 + flat};
    }

    Eigen::MatrixXd dense() const {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                m(i, j) = m(j, i) = data_[index(i, j)];
        return m;
    }

    // Elementwise F(w), zero diagonal.
    Eigen::MatrixXd activated_dense(double lambda) const {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                m(i, j) = m(j, i) = activation(data_[index(i, j)], lambda);
        return m;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    double mean_abs() const {
        if (data_.empty()) return 0.0;
        double s = 0.0;
        for (double v : data_) s += std::abs(v);
        return s / double(data_.size());
    }

    bool operator==(const WeightMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

private:
    void check(int i, int j) const {
        if (i < 0 || j < 0 || i >= n_ || j >= n_)
            throw DomainError("WeightMatrix: index out of range");
    }

    std::size_t index(int i, int j) const {
        if (i > j) std::swap(i, j);
        // row i holds pairs (i, i+1..n-1)
        return std::size_t(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
    }

    int n_ = 0;
    std::vector<double> data_;
};

}  // namespace heblab
