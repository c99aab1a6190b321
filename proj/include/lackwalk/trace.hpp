#pragma once

#include <vector>

namespace lackwalk {

struct StepSample {
    int step;
    double success_probability;
};

struct TimeSample {
    double time;
    double success_probability;
};

// Success-probability trace of a discrete walk. peak_step is the smallest
// step attaining the global sampled maximum. first_reach_half is the first
// step with p >= 0.5 - 1e-3, or -1 if the trace never gets there (the
// reach-1/2 convention used for the SKW coin).
struct EvolutionTrace {
    std::vector<StepSample> samples;
    int peak_step = 0;
    double peak_probability = 0.0;
    int first_reach_half = -1;
};

// Continuous-time analogue; sampled at caller-supplied times.
struct CtqwTrace {
    std::vector<TimeSample> samples;
    double peak_time = 0.0;
    double peak_probability = 0.0;
};

inline constexpr double kReachHalfThreshold = 0.5 - 1e-3;

} // namespace lackwalk
