#pragma once

#include <array>
#include <cmath>

namespace earring {

struct ImQuat {
  double x = 0, y = 0, z = 0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  ImQuat operator*(double t) const { return {x * t, y * t, z * t}; }
  ImQuat operator+(const ImQuat& o) const { return {x + o.x, y + o.y, z + o.z}; }
  ImQuat operator-(const ImQuat& o) const { return {x - o.x, y - o.y, z - o.z}; }
  ImQuat operator-() const { return {-x, -y, -z}; }
};

inline double dot(const ImQuat& a, const ImQuat& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline ImQuat cross(const ImQuat& a, const ImQuat& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

struct Quat {
  double w = 1, x = 0, y = 0, z = 0;

  Quat() = default;
  constexpr Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  static Quat pure(const ImQuat& v) { return {0, v.x, v.y, v.z}; }

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  bool is_unit(double tol = 1e-12) const { return std::abs(norm() - 1) <= tol; }
  bool is_traceless(double tol = 1e-12) const { return std::abs(w) <= tol; }

  Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  Quat operator-() const { return {-w, -x, -y, -z}; }
  Quat operator*(double t) const { return {w * t, x * t, y * t, z * t}; }
  std::array<double, 4> coeffs() const { return {w, x, y, z}; }
};

inline constexpr Quat kOne{1, 0, 0, 0};
inline constexpr Quat kI{0, 1, 0, 0};
inline constexpr Quat kJ{0, 0, 1, 0};
inline constexpr Quat kK{0, 0, 0, 1};

inline Quat mul(const Quat& p, const Quat& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}
inline Quat operator*(const Quat& p, const Quat& q) { return mul(p, q); }

inline double re(const Quat& q) { return q.w; }
inline ImQuat im(const Quat& q) { return {q.x, q.y, q.z}; }
inline Quat conj(const Quat& q) { return {q.w, -q.x, -q.y, -q.z}; }

// real part of a product, without forming the rest
inline double re_mul(const Quat& p, const Quat& q) { return p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z; }

inline Quat normalized(const Quat& q) {
  double n = q.norm();
  return {q.w / n, q.x / n, q.y / n, q.z / n};
}

Quat exp_im(const ImQuat& v);

// g q g^{-1} for unit g
Quat rotate(const Quat& g, const Quat& q);

// e^{t k} and friends
inline Quat exp_k(double t) { return {std::cos(t), 0, 0, std::sin(t)}; }
inline Quat exp_i(double t) { return {std::cos(t), std::sin(t), 0, 0}; }

// product of a chain, renormalizing every 16 factors
template <class It>
Quat chain(It first, It last) {
  Quat acc = kOne;
  int n = 0;
  for (; first != last; ++first) {
    acc = acc * *first;
    if (++n % 16 == 0) acc = normalized(acc);
  }
  return acc;
}

}  // namespace earring
