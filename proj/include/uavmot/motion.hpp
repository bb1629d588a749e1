#pragma once

#include <array>

#include "uavmot/core.hpp"

namespace uavmot::motion {

/// Pixels added on every side of a target crop before event statistics are
/// gathered, absorbing sensor misalignment between the event grid and the
/// detection frame.
inline constexpr double kCropExpansion = 20.0;

/// Grows the box by kCropExpansion on each side and clamps to the frame.
/// Throws if the box misses the frame entirely.
BBox crop_expand(const BBox& bbox, int frame_w, int frame_h);

/// 7-dim statistic of the non-background pixels inside the expanded crop;
/// all-zero when the crop contains no events.
MotionEmbedding motion_embedding(const EventFrame& frame, const BBox& bbox);

/// 1 - cosine over the raw 7-vectors; 1 when either vector is all-zero.
double motion_distance(const MotionEmbedding& a, const MotionEmbedding& b);
double motion_distance(const std::array<double, 7>& a, const std::array<double, 7>& b);

/// Threshold filter: d_m passes through when <= theta_motion, else 1.
double gated_motion_distance(double d_m, double theta_motion);

}  // namespace uavmot::motion
