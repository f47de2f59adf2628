#pragma once

#include <array>
#include <cmath>

#include "owd/core/error.hpp"

namespace owd {

struct Vec3 {
  double x{0.0};
  double y{0.0};
  double z{0.0};

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
};

// Row-major 3x3 matrix, just enough for extrinsics and box frames.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return Mat3{}; }

  // Rotation about the up (z) axis by angle radians.
  static Mat3 rotation_z(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return Mat3{{c, -s, 0, s, c, 0, 0, 0, 1}};
  }

  double at(int r, int c) const { return m[static_cast<size_t>(r) * 3 + static_cast<size_t>(c)]; }
  double& at(int r, int c) { return m[static_cast<size_t>(r) * 3 + static_cast<size_t>(c)]; }

  Vec3 operator*(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        double acc = 0.0;
        for (int k = 0; k < 3; ++k) acc += at(i, k) * o.at(k, j);
        r.at(i, j) = acc;
      }
    }
    return r;
  }

  Mat3 transposed() const {
    return Mat3{{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
  }

  // Max absolute deviation of R^T R from the identity.
  double orthonormality_error() const {
    const Mat3 g = transposed() * (*this);
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double want = (i == j) ? 1.0 : 0.0;
        err = std::max(err, std::abs(g.at(i, j) - want));
      }
    }
    return err;
  }

  bool all_finite() const {
    for (double v : m) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }
};

inline bool finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

}  // namespace owd
