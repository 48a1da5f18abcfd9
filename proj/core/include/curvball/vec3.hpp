#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <type_traits>

namespace curvball {

/// Three-component vector. The scalar is a template parameter so parametric
/// maps can be evaluated either on plain doubles or on differentiation jets.
template <class T>
struct BasicVec3 {
  T x{};
  T y{};
  T z{};

  constexpr BasicVec3() = default;
  constexpr BasicVec3(T x_, T y_, T z_) : x(x_), y(y_), z(z_) {}

  constexpr BasicVec3& operator+=(const BasicVec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr BasicVec3& operator-=(const BasicVec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr BasicVec3& operator*=(const T& s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
};

using Vec3 = BasicVec3<double>;

template <class T>
constexpr BasicVec3<T> operator+(BasicVec3<T> a, const BasicVec3<T>& b) {
  return a += b;
}
template <class T>
constexpr BasicVec3<T> operator-(BasicVec3<T> a, const BasicVec3<T>& b) {
  return a -= b;
}
// Mixed double/jet sums, for maps that offset a jet-valued vector by a constant.
template <class T>
  requires(!std::is_same_v<T, double>)
constexpr BasicVec3<T> operator+(const BasicVec3<double>& a, const BasicVec3<T>& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
template <class T>
constexpr BasicVec3<T> operator-(const BasicVec3<T>& a) {
  return {-a.x, -a.y, -a.z};
}
template <class T, class S>
constexpr BasicVec3<T> operator*(const S& s, const BasicVec3<T>& a) {
  return {s * a.x, s * a.y, s * a.z};
}
template <class T, class S>
constexpr BasicVec3<T> operator*(const BasicVec3<T>& a, const S& s) {
  return {a.x * s, a.y * s, a.z * s};
}
template <class T, class S>
constexpr BasicVec3<T> operator/(const BasicVec3<T>& a, const S& s) {
  return {a.x / s, a.y / s, a.z / s};
}

template <class T>
constexpr T dot(const BasicVec3<T>& a, const BasicVec3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
constexpr BasicVec3<T> cross(const BasicVec3<T>& a, const BasicVec3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::hypot(a.x, a.y, a.z); }
inline double squaredNorm(const Vec3& a) { return dot(a, a); }

/// Returns the zero vector unchanged.
inline Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  return n > 0.0 ? a / n : a;
}

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// Unsigned angle in [0, pi]; atan2 form stays accurate near 0 and pi.
inline double angleBetween(const Vec3& a, const Vec3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

inline bool operator==(const Vec3& a, const Vec3& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}

inline std::array<double, 3> toArray(const Vec3& a) { return {a.x, a.y, a.z}; }

inline std::ostream& operator<<(std::ostream& os, const Vec3& a) {
  return os << '(' << a.x << ", " << a.y << ", " << a.z << ')';
}

/// Proper rigid motion x -> R x + t. R is stored row-major.
struct RigidMotion {
  std::array<std::array<double, 3>, 3> rotation{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Vec3 translation{};

  static RigidMotion translationBy(const Vec3& t) {
    RigidMotion m;
    m.translation = t;
    return m;
  }

  /// Rodrigues rotation about a (normalized internally) axis through O.
  static RigidMotion rotationAbout(const Vec3& axis, double angle) {
    const Vec3 k = normalized(axis);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double v = 1.0 - c;
    RigidMotion m;
    m.rotation = {{{c + k.x * k.x * v, k.x * k.y * v - k.z * s, k.x * k.z * v + k.y * s},
                   {k.y * k.x * v + k.z * s, c + k.y * k.y * v, k.y * k.z * v - k.x * s},
                   {k.z * k.x * v - k.y * s, k.z * k.y * v + k.x * s, c + k.z * k.z * v}}};
    return m;
  }

  Vec3 rotate(const Vec3& a) const {
    const auto& r = rotation;
    return {r[0][0] * a.x + r[0][1] * a.y + r[0][2] * a.z,
            r[1][0] * a.x + r[1][1] * a.y + r[1][2] * a.z,
            r[2][0] * a.x + r[2][1] * a.y + r[2][2] * a.z};
  }

  Vec3 apply(const Vec3& a) const { return rotate(a) + translation; }
};

}  // namespace curvball
