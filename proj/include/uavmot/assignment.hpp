#pragma once

#include <vector>

#include "uavmot/distance.hpp"

namespace uavmot::assignment {

struct Match {
    int track{-1};
    int detection{-1};
    double cost{0.0};
};

/// Partition of the input indices: every track/detection index appears in
/// exactly one of the three lists (matches count for both sides).
struct Assignment {
    std::vector<Match> matches;
    std::vector<int> unmatched_tracks;
    std::vector<int> unmatched_detections;

    double total_cost() const {
        double s = 0.0;
        for (const Match& m : matches) s += m.cost;
        return s;
    }
};

/// Minimum-cost one-to-one assignment (Hungarian / shortest augmenting
/// path). Rectangular inputs are padded square internally; the full
/// assignment is solved first and matches with cost >= match_cost_max are
/// stripped afterwards. Ties between equal-cost optimal assignments are
/// broken toward the lowest row index, then the lowest column index.
Assignment solve(const distance::CostMatrix& costs, double match_cost_max);

}  // namespace uavmot::assignment
