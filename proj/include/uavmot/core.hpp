#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uavmot {

/// Axis-aligned box in (left, top, width, height) pixel convention,
/// matching MOT text files directly.
struct BBox {
    double x{0.0};
    double y{0.0};
    double w{0.0};
    double h{0.0};

    BBox() = default;
    BBox(double x_, double y_, double w_, double h_) : x(x_), y(y_), w(w_), h(h_) {}

    double area() const { return w * h; }
    double cx() const { return x + 0.5 * w; }
    double cy() const { return y + 0.5 * h; }
    double right() const { return x + w; }
    double bottom() const { return y + h; }

    bool valid() const;
};

enum class Modality { RGB, IR };

struct Detection {
    int frame{0};
    BBox bbox;
    double confidence{0.0};
    std::optional<std::vector<double>> appearance;  // unit vector when present
    Modality modality{Modality::RGB};
};

/// 7-dim statistic of non-background event pixels in an expanded crop:
/// [count, mean_x, std_x, mean_y, std_y, range_x, range_y], the spatial
/// stats normalized by the crop dimensions. An empty crop is all zeros.
struct MotionEmbedding {
    double n_nonbg{0.0};
    double mu_x{0.0};
    double sigma_x{0.0};
    double mu_y{0.0};
    double sigma_y{0.0};
    double range_x{0.0};
    double range_y{0.0};

    std::array<double, 7> to_array() const {
        return {n_nonbg, mu_x, sigma_x, mu_y, sigma_y, range_x, range_y};
    }
    bool is_zero() const;
};

/// Dense signed event-accumulation grid; a pixel is non-background iff
/// its value is non-zero.
struct EventFrame {
    int width{0};
    int height{0};
    std::vector<int32_t> values;  // row-major, size width*height

    EventFrame() = default;
    EventFrame(int w, int h) : width(w), height(h), values(static_cast<size_t>(w) * h, 0) {}

    int32_t at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
    void set(int x, int y, int32_t v) { values[static_cast<size_t>(y) * width + x] = v; }
    bool consistent() const {
        return width > 0 && height > 0 &&
               values.size() == static_cast<size_t>(width) * static_cast<size_t>(height);
    }
};

/// Sparse per-sequence event storage; frames are densified one at a time
/// so long sequences never hold all dense grids in memory.
struct EventSequence {
    struct Pixel {
        int x{0};
        int y{0};
        int32_t v{0};
    };
    int width{0};
    int height{0};
    std::vector<std::vector<Pixel>> frames;  // frames[i] holds frame i+1

    int n_frames() const { return static_cast<int>(frames.size()); }
    /// frame is 1-based; out-of-range frames densify to all-background.
    EventFrame densify(int frame) const;
};

enum class TrackStatus { Tentative, Confirmed, Lost, Removed };

double iou(const BBox& a, const BBox& b);
double center_distance(const BBox& a, const BBox& b);

/// L2-normalizes in place; throws on zero or non-finite norm.
void normalize(std::vector<double>& v);
bool is_unit(const std::vector<double>& v, double tol = 1e-6);
double cosine(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace uavmot
