#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "heblab/config.hpp"
#include "heblab/errors.hpp"

namespace heblab {

// K pattern vectors with entries in {+1,-1}, regenerable from the recorded seed.
struct TrainingSet {
    int N = 0;
    int K = 0;
    std::uint64_t seed = 0;
    std::vector<Eigen::VectorXd> patterns;

    static TrainingSet random(int N, int K, std::uint64_t seed);

    void save_csv(const std::string& path) const;
    static TrainingSet load_csv(const std::string& path);
};

// Periodic telegraph input built from a training set: pattern k is active on
// [(k-1)*t_s + m*period, k*t_s + m*period), period = K*t_s. Windows are
// half-open so I(t) is single-valued at switch times.
struct StimulusSchedule {
    TrainingSet set;
    double t_s = 12.0;

    double period() const { return set.K * t_s; }

    // 0-based index of the active pattern.
    int window_index(double t) const {
        if (t < 0) throw DomainError("StimulusSchedule: t must be >= 0");
        double local = std::fmod(t, period());
        int k = int(local / t_s);
        if (k >= set.K) k = set.K - 1;  // guards fmod rounding at the period edge
        return k;
    }

    const Eigen::VectorXd& pattern_at(double t) const { return set.patterns[window_index(t)]; }

    // Time of the next window switch strictly after t.
    double next_switch_after(double t) const {
        if (t < 0) throw DomainError("StimulusSchedule: t must be >= 0");
        double n = std::floor(t / t_s + 1e-12) + 1.0;
        double s = n * t_s;
        if (s <= t) s = (n + 1.0) * t_s;
        return s;
    }
};

inline Eigen::VectorXd stimulus_at(const StimulusSchedule& schedule, double t) {
    return schedule.pattern_at(t);
}

}  // namespace heblab
