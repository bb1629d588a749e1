#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uavmot/core.hpp"
#include "uavmot/fusion.hpp"
#include "uavmot/metrics.hpp"
#include "uavmot/simulator.hpp"
#include "uavmot/tracker.hpp"

namespace uavmot::io {

/// One `frame,id,x,y,w,h,conf,...` line; id = -1 marks a detection.
struct MotEntry {
    int frame{0};
    int id{-1};
    BBox bbox;
    double conf{0.0};
};

std::vector<MotEntry> read_mot(const std::string& path);
std::vector<MotEntry> parse_mot(const std::string& text, const std::string& source);

/// Canonical MOT text: frames ascending, ids ascending within a frame,
/// floats with exactly two decimals.
std::string format_mot(std::vector<MotEntry> entries);
void write_mot(const std::string& path, const std::vector<MotEntry>& entries);

/// Detections grouped per frame, index i = frame i+1, empty frames kept.
std::vector<std::vector<Detection>> group_detections(const std::vector<MotEntry>& entries);
metrics::GroundTruth to_ground_truth(const std::vector<MotEntry>& entries);
metrics::TrackSet to_track_set(const std::vector<MotEntry>& entries);
std::vector<MotEntry> from_results(const std::vector<FrameResult>& results);

EventSequence read_event_frames(const std::string& path);
std::string format_event_frames(const EventSequence& seq);
void write_event_frames(const std::string& path, const EventSequence& seq);

/// Embeddings keyed by (frame, detection index within the frame's file
/// order); vectors are unit-normalized on read.
using EmbeddingMap = std::map<std::pair<int, int>, std::vector<double>>;
EmbeddingMap read_embeddings(const std::string& path);
std::string format_embeddings(const std::vector<std::vector<Detection>>& dets_by_frame);
void write_embeddings(const std::string& path,
                      const std::vector<std::vector<Detection>>& dets_by_frame);
void attach_embeddings(std::vector<std::vector<Detection>>& dets_by_frame,
                       const EmbeddingMap& embeddings);

fusion::FeatureGrid read_grid(const std::string& path);
std::string format_grid(const fusion::FeatureGrid& grid);
void write_grid(const std::string& path, const fusion::FeatureGrid& grid);

std::string format_attributes(const std::vector<sim::AttributeResult>& attrs);
void write_attributes(const std::string& path, const std::vector<sim::AttributeResult>& attrs);

/// Run-level configuration: `key = value` lines, '#' comments, unknown keys
/// rejected, missing keys defaulted.
struct RunConfig {
    TrackerConfig tracker;
    sim::ScenarioConfig scenario;
    double eval_iou_min{0.5};
};

RunConfig parse_run_config(const std::string& text, const std::string& source);
RunConfig read_run_config(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace uavmot::io
