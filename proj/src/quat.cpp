#include "earring/quat.hpp"

namespace earring {

Quat exp_im(const ImQuat& v) {
  const double n = v.norm();
  if (n < 1e-8) {
    // second order Taylor: cos n ~ 1 - n^2/2, sin(n)/n ~ 1
    return {1 - 0.5 * n * n, v.x, v.y, v.z};
  }
  const double c = std::sin(n) / n;
  return {std::cos(n), c * v.x, c * v.y, c * v.z};
}

Quat rotate(const Quat& g, const Quat& q) { return g * q * conj(g); }

}  // namespace earring
