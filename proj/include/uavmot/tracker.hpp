#pragma once

#include <optional>
#include <vector>

#include "uavmot/core.hpp"
#include "uavmot/distance.hpp"
#include "uavmot/kalman.hpp"

namespace uavmot {

struct TrackerConfig {
    double det_conf_min{0.3};
    double new_track_conf{0.7};
    distance::AssociationThresholds thresholds;
    int n_init{3};
    int max_age{30};
    double appearance_momentum{0.9};
    bool use_motion_embedding{true};
    kalman::KalmanParams kalman;

    void validate() const;
};

struct Track {
    int id{0};
    kalman::KalmanState state;
    TrackStatus status{TrackStatus::Tentative};
    std::optional<std::vector<double>> appearance;  // EMA template, unit norm
    std::optional<MotionEmbedding> motion;
    int age{0};
    int time_since_update{0};
    int hits{0};

    double last_confidence{0.0};
    BBox last_box;  // box of the most recently matched detection
};

struct FrameResult {
    int frame{0};
    struct Output {
        int id{0};
        BBox bbox;
        double confidence{0.0};
    };
    std::vector<Output> outputs;  // Confirmed tracks only, ascending id
};

/// MMA-SORT per-frame pipeline: predict, three-stage cascade (IOU+appearance,
/// appearance recovery, tentative-track fusion with gated event motion),
/// lifecycle management, and id assignment. One instance per sequence;
/// deterministic given inputs and config.
class Tracker {
public:
    explicit Tracker(TrackerConfig config = {});

    FrameResult process_frame(const std::vector<Detection>& detections,
                              const std::optional<EventFrame>& event_frame = std::nullopt);

    const std::vector<Track>& tracks() const { return tracks_; }
    int last_frame() const { return last_frame_; }

private:
    struct DetContext;

    distance::CostMatrix stage_costs(const std::vector<int>& track_idx,
                                     const std::vector<int>& det_idx,
                                     const std::vector<DetContext>& dets,
                                     distance::Stage stage, bool motion_active) const;
    void commit_match(Track& track, const DetContext& det, bool motion_active);

    TrackerConfig cfg_;
    std::vector<Track> tracks_;
    int next_id_{1};
    int last_frame_{0};
    bool appearance_seen_{false};  // sticky: any embedded detection so far
};

/// Streams detections grouped by frame (element i holds frame i+1, possibly
/// empty) through one tracker; event frames, when given, are densified one
/// frame at a time.
std::vector<FrameResult> run_sequence(Tracker& tracker,
                                      const std::vector<std::vector<Detection>>& dets_by_frame,
                                      const EventSequence* events = nullptr);

}  // namespace uavmot
