#pragma once

#include <Eigen/Dense>

#include "uavmot/core.hpp"

namespace uavmot::kalman {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

/// Constant-velocity state in BoT-SORT parameterization:
/// (x_c, y_c, w, h, vx, vy, vw, vh), one frame per time step.
struct KalmanState {
    Vec8 mean{Vec8::Zero()};
    Mat8 covariance{Mat8::Zero()};
};

/// Noise scales relative to box size, BoT-SORT defaults.
struct KalmanParams {
    double pos_weight{1.0 / 20.0};
    double vel_weight{1.0 / 160.0};
};

KalmanState init(const BBox& measurement, const KalmanParams& params = {});
KalmanState predict(const KalmanState& state, const KalmanParams& params = {});

/// Standard correction step (Joseph-form covariance update). Throws on a
/// non-finite or degenerate measurement.
KalmanState update(const KalmanState& state, const BBox& measurement,
                   const KalmanParams& params = {});

/// Current (left, top, w, h) box implied by the state mean.
BBox state_box(const KalmanState& state);

/// Smallest eigenvalue of the (symmetrized) covariance, for PSD checks.
double min_covariance_eigenvalue(const KalmanState& state);

}  // namespace uavmot::kalman
