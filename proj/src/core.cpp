#include "uavmot/core.hpp"

#include <algorithm>
#include <cmath>

namespace uavmot {

bool BBox::valid() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(w) && std::isfinite(h) &&
           w > 0.0 && h > 0.0;
}

bool MotionEmbedding::is_zero() const {
    for (double c : to_array()) {
        if (c != 0.0) return false;
    }
    return true;
}

EventFrame EventSequence::densify(int frame) const {
    EventFrame out(width, height);
    if (frame < 1 || frame > n_frames()) return out;
    for (const Pixel& p : frames[static_cast<size_t>(frame) - 1]) out.set(p.x, p.y, p.v);
    return out;
}

double iou(const BBox& a, const BBox& b) {
    const double ix = std::max(a.x, b.x);
    const double iy = std::max(a.y, b.y);
    const double ix2 = std::min(a.right(), b.right());
    const double iy2 = std::min(a.bottom(), b.bottom());
    const double iw = ix2 - ix;
    const double ih = iy2 - iy;
    if (iw <= 0.0 || ih <= 0.0) return 0.0;
    const double inter = iw * ih;
    const double uni = a.area() + b.area() - inter;
    return inter / uni;
}

double center_distance(const BBox& a, const BBox& b) {
    const double dx = a.cx() - b.cx();
    const double dy = a.cy() - b.cy();
    return std::sqrt(dx * dx + dy * dy);
}

void normalize(std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    s = std::sqrt(s);
    if (!std::isfinite(s) || s <= 0.0) throw std::invalid_argument("cannot normalize zero or non-finite vector");
    for (double& c : v) c /= s;
}

bool is_unit(const std::vector<double>& v, double tol) {
    double s = 0.0;
    for (double c : v) {
        if (!std::isfinite(c)) return false;
        s += c * c;
    }
    return std::fabs(std::sqrt(s) - 1.0) <= tol;
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("cosine: dimension mismatch");
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na <= 0.0 || nb <= 0.0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace uavmot
