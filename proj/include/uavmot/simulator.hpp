#pragma once

#include <cstdint>
#include <vector>

#include "uavmot/core.hpp"
#include "uavmot/metrics.hpp"

namespace uavmot::sim {

enum class SpeedProfile { Slow, Fast };

struct ScenarioConfig {
    uint64_t seed{1};
    int n_frames{300};
    int frame_w{640};
    int frame_h{360};
    /// 1..4 fixes the target count; 0 samples it per the dataset profile
    /// (mean 2.42 trajectories per sequence).
    int n_uavs{0};
    double exit_reentry_rate{1.55};  // mean scheduled exit events per track
    SpeedProfile speed_profile{SpeedProfile::Slow};
    double miss_rate{0.0};
    double fp_rate{0.0};  // expected false positives per frame
    double loc_noise_std{0.0};
    double app_noise_std{0.0};
    int event_pixels_per_target{40};  // scaled by per-frame speed
    /// Clutter mode: false positives become persistent distractors that
    /// shadow a target with near-identical appearance and eventless crops.
    bool clutter{false};
    int app_dim{128};

    void validate() const;
};

enum class Attribute { TT, ET, SV, FM, LI, SC, OO };
const char* attribute_name(Attribute a);

struct AttributeResult {
    Attribute attribute{Attribute::TT};
    bool set{false};
    bool skipped{false};
    double statistic{0.0};  // the measured quantity the rule thresholds
};

/// Inputs for the challenge-attribute classifier. TT/ET require both
/// modalities unless single_modality_ok relaxes them; LI requires the
/// per-frame brightness series.
struct AttributeInputs {
    const metrics::GroundTruth* primary{nullptr};
    const metrics::GroundTruth* secondary{nullptr};
    const std::vector<double>* brightness{nullptr};
    int n_frames{0};  // 0 = infer from the last annotated frame
    bool single_modality_ok{false};
};

std::vector<AttributeResult> classify_attributes(const AttributeInputs& in);

struct Scenario {
    ScenarioConfig config;  // resolved: n_uavs is the concrete count
    metrics::GroundTruth ground_truth;
    std::vector<std::vector<Detection>> detections_by_frame;  // [i] = frame i+1
    EventSequence events;
    std::vector<AttributeResult> attributes;
};

/// Fully seed-determined scenario: spline trajectories with scheduled
/// exit/re-entry gaps, Bernoulli misses, Gaussian localization noise,
/// Poisson false positives, unit-sphere appearance vectors with Gaussian
/// observation noise, and sparse event frames whose per-target pixel count
/// scales with speed.
Scenario generate(const ScenarioConfig& config);

}  // namespace uavmot::sim
