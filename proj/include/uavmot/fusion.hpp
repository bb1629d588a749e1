#pragma once

#include <cstddef>
#include <vector>

namespace uavmot::fusion {

/// Dense C x H x W feature tensor, row-major within each channel.
struct FeatureGrid {
    int channels{0};
    int height{0};
    int width{0};
    std::vector<double> values;

    FeatureGrid() = default;
    FeatureGrid(int c, int h, int w)
        : channels(c), height(h), width(w),
          values(static_cast<size_t>(c) * h * w, 0.0) {}

    double at(int c, int y, int x) const {
        return values[(static_cast<size_t>(c) * height + y) * width + x];
    }
    double& at(int c, int y, int x) {
        return values[(static_cast<size_t>(c) * height + y) * width + x];
    }
    bool same_shape(const FeatureGrid& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }
};

/// 2x3 affine matrix [a b c; d e f] acting on align-corners normalized
/// coordinates in [-1,1]^2.
struct AffineMatrix {
    double a{1.0}, b{0.0}, c{0.0};
    double d{0.0}, e{1.0}, f{0.0};

    static AffineMatrix identity() { return {}; }
    double det2() const { return a * e - b * d; }
};

/// Per-output-location, per-tap (dx, dy) sampling offsets in pixels.
struct OffsetField {
    int n_taps{0};
    int height{0};
    int width{0};
    std::vector<double> values;  // [tap][y][x][2], dx then dy

    OffsetField() = default;
    OffsetField(int taps, int h, int w)
        : n_taps(taps), height(h), width(w),
          values(static_cast<size_t>(taps) * h * w * 2, 0.0) {}

    double dx(int tap, int y, int x) const {
        return values[((static_cast<size_t>(tap) * height + y) * width + x) * 2];
    }
    double dy(int tap, int y, int x) const {
        return values[((static_cast<size_t>(tap) * height + y) * width + x) * 2 + 1];
    }
    double& dx(int tap, int y, int x) {
        return values[((static_cast<size_t>(tap) * height + y) * width + x) * 2];
    }
    double& dy(int tap, int y, int x) {
        return values[((static_cast<size_t>(tap) * height + y) * width + x) * 2 + 1];
    }
};

/// Base tap positions and aggregation weights of the sampling kernel.
/// Default layouts use weights summing to 1 so sampling is mean-preserving;
/// the single center tap has unit weight.
struct TapLayout {
    std::vector<std::pair<double, double>> taps;  // (dx, dy) in pixels
    std::vector<double> weights;

    static TapLayout center();
    static TapLayout grid3x3();
};

/// Per-channel fusion weights, sigmoid-range by construction.
struct FusionWeights {
    std::vector<double> w_self;
    std::vector<double> w_other;
};

/// Parameters of the channel-attention head: a hidden projection with ReLU
/// followed by two independent sigmoid projections.
struct AttentionProjection {
    int in_dim{0};      // 2C
    int hidden_dim{0};  // H
    int out_dim{0};     // C
    std::vector<double> w1, b1;  // hidden x in, hidden
    std::vector<double> w2, b2;  // out x hidden, out   -> W_self
    std::vector<double> w3, b3;  // out x hidden, out   -> W_other

    static AttentionProjection zeros(int in_dim, int hidden_dim, int out_dim);
};

AffineMatrix compose_affine(const AffineMatrix& m0, const AffineMatrix& delta);

/// Spatial-transformer warp: each output location's normalized coordinate is
/// mapped through m to a source coordinate and sampled bilinearly; samples
/// outside the grid contribute 0.
FeatureGrid affine_warp(const FeatureGrid& grid, const AffineMatrix& m);

/// Deformable sampling: at each output location, each tap samples the input
/// bilinearly at base position + offset and the taps are combined with the
/// layout weights. Zero padding outside bounds.
FeatureGrid deformable_sample(const FeatureGrid& grid, const OffsetField& offsets,
                              const TapLayout& kernel);

/// Attention-weighted residual fusion: out_c = x_self_c*w_self_c
/// + x_other_c*w_other_c + x_self_c.
FeatureGrid adfm_fuse(const FeatureGrid& x_self, const FeatureGrid& x_other_aligned,
                      const FusionWeights& w);

/// Channel-wise global average pooling.
std::vector<double> global_avg_pool(const FeatureGrid& grid);

FusionWeights attention_weights_from_gap(const std::vector<double>& concat_stats,
                                         const AttentionProjection& projection);

}  // namespace uavmot::fusion
