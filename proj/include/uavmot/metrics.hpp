#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "uavmot/core.hpp"
#include "uavmot/tracker.hpp"

namespace uavmot::metrics {

struct GtEntry {
    int id{0};
    BBox bbox;
    bool visible{true};
};

/// Frame-indexed ground truth. Frames present in the map are the annotated
/// ones; evaluation is restricted to them and predictions elsewhere are
/// skipped rather than counted as false positives.
struct GroundTruth {
    std::map<int, std::vector<GtEntry>> frames;

    void add(int frame, int id, const BBox& box, bool visible = true);
    size_t visible_count() const;
};

struct PredEntry {
    int id{0};
    BBox bbox;
};

struct TrackSet {
    std::map<int, std::vector<PredEntry>> frames;

    void add(int frame, int id, const BBox& box);
    static TrackSet from_results(const std::vector<FrameResult>& results);
    size_t box_count() const;
};

inline constexpr int kHotaAlphaSteps = 19;  // 0.05 .. 0.95

struct MetricReport {
    double mota{0.0};
    double idf1{0.0};
    double hota{0.0};
    long id_switches{0};
    long fp{0};
    long fn{0};
    std::array<double, kHotaAlphaSteps> hota_alpha{};
    size_t gt_boxes{0};
};

struct ClearResult {
    double mota{0.0};
    long fp{0};
    long fn{0};
    long idsw{0};
    size_t gt_boxes{0};
};

/// CLEAR counting with the standard continuity rule: previous-frame
/// correspondences are carried over before IOU-optimal matching, so IDSW
/// reflects genuine association changes.
ClearResult clear_mota(const GroundTruth& gt, const TrackSet& pred, double iou_min = 0.5);

/// Sequence-global identity F1: trajectories are assigned one-to-one to
/// maximize per-frame co-detections at the IOU threshold.
double idf1(const GroundTruth& gt, const TrackSet& pred, double iou_min = 0.5);

struct HotaResult {
    double hota{0.0};
    std::array<double, kHotaAlphaSteps> per_alpha{};
};

HotaResult hota(const GroundTruth& gt, const TrackSet& pred);

MetricReport evaluate(const GroundTruth& gt, const TrackSet& pred, double iou_min = 0.5);

/// Micro-average across sequences, weighted by ground-truth box counts;
/// count fields are summed.
MetricReport aggregate(const std::vector<MetricReport>& reports);

/// CSV per the reporting interface: header then one row per sequence plus
/// an "ALL" aggregate row. Columns: seq,MOTA,HOTA,IDF1,IDSW,FP,FN.
std::string to_csv(const std::vector<std::pair<std::string, MetricReport>>& rows);

}  // namespace uavmot::metrics
