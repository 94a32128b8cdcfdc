#pragma once

#include <cmath>

namespace morphevo {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::hypot(x, y); }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Unit quaternion, scalar-first. The surrogate only produces rotations
// about the vertical axis but the type is a full quaternion so trajectory
// files stay compatible with richer backends.
struct Quat {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static Quat from_yaw(double yaw) {
        return {std::cos(yaw / 2.0), 0.0, 0.0, std::sin(yaw / 2.0)};
    }

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

    Quat conjugate() const { return {w, -x, -y, -z}; }

    Quat operator*(const Quat& q) const {
        return {w * q.w - x * q.x - y * q.y - z * q.z,
                w * q.x + x * q.w + y * q.z - z * q.y,
                w * q.y - x * q.z + y * q.w + z * q.x,
                w * q.z + x * q.y - y * q.x + z * q.w};
    }

    // yaw of the rotation, in (-pi, pi]
    double yaw() const {
        return std::atan2(2.0 * (w * z + x * y), 1.0 - 2.0 * (y * y + z * z));
    }
};

// signed angle wrapped to (-pi, pi]
inline double wrap_angle(double a) {
    const double two_pi = 2.0 * M_PI;
    a = std::fmod(a + M_PI, two_pi);
    if (a <= 0.0) a += two_pi;
    return a - M_PI;
}

} // namespace morphevo
