#pragma once

#include <cmath>

namespace curvball {

/// Second-order forward-mode jet in two variables (u, v).
///
/// Carries a value, its gradient and its Hessian (uu, uv, vv). Arithmetic and
/// the elementary functions below propagate them exactly, so a parametric map
/// written once as a template yields analytic first and second partials.
struct Jet2 {
  double val = 0.0;
  double du = 0.0;
  double dv = 0.0;
  double duu = 0.0;
  double duv = 0.0;
  double dvv = 0.0;

  constexpr Jet2() = default;
  constexpr Jet2(double c) : val(c) {}  // NOLINT: implicit constant lift
  constexpr Jet2(double v, double gu, double gv, double huu, double huv, double hvv)
      : val(v), du(gu), dv(gv), duu(huu), duv(huv), dvv(hvv) {}

  static constexpr Jet2 variableU(double u) { return {u, 1.0, 0.0, 0.0, 0.0, 0.0}; }
  static constexpr Jet2 variableV(double v) { return {v, 0.0, 1.0, 0.0, 0.0, 0.0}; }

  constexpr Jet2& operator+=(const Jet2& o) {
    val += o.val;
    du += o.du;
    dv += o.dv;
    duu += o.duu;
    duv += o.duv;
    dvv += o.dvv;
    return *this;
  }
  constexpr Jet2& operator-=(const Jet2& o) {
    val -= o.val;
    du -= o.du;
    dv -= o.dv;
    duu -= o.duu;
    duv -= o.duv;
    dvv -= o.dvv;
    return *this;
  }
  constexpr Jet2& operator*=(const Jet2& o) {
    *this = Jet2{val * o.val,
                 du * o.val + val * o.du,
                 dv * o.val + val * o.dv,
                 duu * o.val + 2.0 * du * o.du + val * o.duu,
                 duv * o.val + du * o.dv + dv * o.du + val * o.duv,
                 dvv * o.val + 2.0 * dv * o.dv + val * o.dvv};
    return *this;
  }
  constexpr Jet2& operator/=(const Jet2& o);
};

/// Chain rule for a scalar function with value f0, first derivative f1 and
/// second derivative f2 at a.val.
constexpr Jet2 chain(const Jet2& a, double f0, double f1, double f2) {
  return {f0,
          f1 * a.du,
          f1 * a.dv,
          f2 * a.du * a.du + f1 * a.duu,
          f2 * a.du * a.dv + f1 * a.duv,
          f2 * a.dv * a.dv + f1 * a.dvv};
}

constexpr Jet2 operator-(const Jet2& a) { return {-a.val, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv}; }
constexpr Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
constexpr Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
constexpr Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
constexpr Jet2 operator+(Jet2 a, double b) { return a += Jet2(b); }
constexpr Jet2 operator+(double a, Jet2 b) { return b += Jet2(a); }
constexpr Jet2 operator-(Jet2 a, double b) { return a -= Jet2(b); }
constexpr Jet2 operator-(double a, const Jet2& b) { return Jet2(a) - b; }
constexpr Jet2 operator*(Jet2 a, double b) {
  return {a.val * b, a.du * b, a.dv * b, a.duu * b, a.duv * b, a.dvv * b};
}
constexpr Jet2 operator*(double a, const Jet2& b) { return b * a; }

constexpr Jet2 reciprocal(const Jet2& a) {
  const double inv = 1.0 / a.val;
  return chain(a, inv, -inv * inv, 2.0 * inv * inv * inv);
}

constexpr Jet2& Jet2::operator/=(const Jet2& o) { return *this *= reciprocal(o); }
constexpr Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
constexpr Jet2 operator/(const Jet2& a, double b) { return a * (1.0 / b); }
constexpr Jet2 operator/(double a, const Jet2& b) { return a * reciprocal(b); }

constexpr bool operator<(const Jet2& a, const Jet2& b) { return a.val < b.val; }
constexpr bool operator>(const Jet2& a, const Jet2& b) { return a.val > b.val; }

inline Jet2 sqrt(const Jet2& a) {
  const double s = std::sqrt(a.val);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.val));
}
inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.val);
  const double c = std::cos(a.val);
  return chain(a, s, c, -s);
}
inline Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.val);
  const double c = std::cos(a.val);
  return chain(a, c, -s, -c);
}
inline Jet2 tan(const Jet2& a) {
  const double t = std::tan(a.val);
  const double sec2 = 1.0 + t * t;
  return chain(a, t, sec2, 2.0 * t * sec2);
}
inline Jet2 atan(const Jet2& a) {
  const double d = 1.0 / (1.0 + a.val * a.val);
  return chain(a, std::atan(a.val), d, -2.0 * a.val * d * d);
}
inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.val);
  return chain(a, e, e, e);
}

inline double valueOf(double a) { return a; }
inline double valueOf(const Jet2& a) { return a.val; }

}  // namespace curvball
