#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "uavmot/core.hpp"
#include "uavmot/motion.hpp"

namespace uavmot::distance {

struct AssociationThresholds {
    double theta_iou{0.9};
    double theta_app{0.2};
    double theta_motion{0.2};
    double match_cost_max{0.999};
};

/// Rectangular track-by-detection cost matrix; every entry lies in [0,1]
/// and an entry of 1 marks a forbidden pair.
struct CostMatrix {
    size_t rows{0};
    size_t cols{0};
    std::vector<double> values;  // row-major

    CostMatrix() = default;
    CostMatrix(size_t r, size_t c, double fill = 0.0) : rows(r), cols(c), values(r * c, fill) {}

    double at(size_t r, size_t c) const { return values[r * cols + c]; }
    double& at(size_t r, size_t c) { return values[r * cols + c]; }
    bool empty() const { return rows == 0 || cols == 0; }
};

/// Halved-cosine appearance distance with the BoT-SORT gate: values above
/// theta_app are pushed to 1 (forbidden).
double appearance_distance(const std::vector<double>& track_emb,
                           const std::vector<double>& det_emb, double theta_app);

double stage1_cost(double d_iou, double d_app);
double stage2_cost(double d_app);

/// Stage-3 fusion: max(d_app, d_motion_gated) when the IOU distance passes
/// the theta_iou gate, 1 otherwise.
double stage3_cost(double d_iou, double d_app, double d_motion_gated, double theta_iou);

enum class Stage { One = 1, Two = 2, Three = 3 };

/// Per-pair inputs for build_cost_matrix. Appearance/motion entries that a
/// stage needs but that are absent for a pair cost 1 in that cell; signals
/// disabled for the whole run are dropped from the stage-3 fusion instead
/// (see Stage3Signals).
struct PairInputs {
    const BBox* track_box{nullptr};
    const BBox* det_box{nullptr};
    const std::vector<double>* track_emb{nullptr};
    const std::vector<double>* det_emb{nullptr};
    const MotionEmbedding* track_motion{nullptr};
    const MotionEmbedding* det_motion{nullptr};
};

/// Which association signals are active for the run at stage 3. With both
/// inactive the stage degrades to plain gated IOU distance, mirroring the
/// baseline tracker this pipeline extends.
struct Stage3Signals {
    bool appearance{true};
    bool motion{true};
};

CostMatrix build_cost_matrix(const std::vector<PairInputs>& pairs, size_t rows, size_t cols,
                             Stage stage, const AssociationThresholds& th,
                             const Stage3Signals& signals = {});

}  // namespace uavmot::distance
