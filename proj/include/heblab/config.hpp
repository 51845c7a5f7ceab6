#pragma once

#include "heblab/errors.hpp"

namespace heblab {

// Parameters of the coupled neuron/weight system. Defaults reproduce the
// reference protocol for the 81-neuron runs.
struct NetworkConfig {
    int N = 81;              // neuron count
    double g = 0.3;          // coupling gain
    double A = 30.0;         // input strength
    double B = 300.0;        // learning-rate time constant
    double lambda = 1.4;     // activation steepness
    double t_s = 12.0;       // per-pattern exposure time
    double T_train = 6000.0; // total training duration

    int weight_count() const { return N * (N - 1) / 2; }

    void validate() const {
        if (N < 2) throw ConfigError("NetworkConfig: N must be >= 2");
        if (!(g > 0)) throw ConfigError("NetworkConfig: g must be > 0");
        if (A < 0) throw ConfigError("NetworkConfig: A must be >= 0");
        if (!(B > 0)) throw ConfigError("NetworkConfig: B must be > 0");
        if (!(lambda > 0)) throw ConfigError("NetworkConfig: lambda must be > 0");
        if (!(t_s > 0)) throw ConfigError("NetworkConfig: t_s must be > 0");
        if (!(T_train > 0)) throw ConfigError("NetworkConfig: T_train must be > 0");
    }
};

}  // namespace heblab
