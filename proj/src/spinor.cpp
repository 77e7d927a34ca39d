#include "monopole_lab/spinor.hpp"

#include <cmath>

#include "monopole_lab/errors.hpp"

namespace monopole_lab {

namespace {
constexpr std::complex<double> I(0.0, 1.0);
}

Mat2c pauli(int a) {
  Mat2c s;
  switch (a) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I, I, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw ArgumentError("pauli: index must be 0..3");
  }
  return s;
}

Mat4c gamma(int mu) {
  Mat4c g = Mat4c::Zero();
  if (mu == 0) {
    g.block<2, 2>(0, 2) = Mat2c::Identity();
    g.block<2, 2>(2, 0) = Mat2c::Identity();
  } else if (mu >= 1 && mu <= 3) {
    g.block<2, 2>(0, 2) = -pauli(mu);
    g.block<2, 2>(2, 0) = pauli(mu);
  } else {
    throw ArgumentError("gamma: index must be 0..3");
  }
  return g;
}

Mat4c gamma5() {
  Mat4c g = Mat4c::Zero();
  g.diagonal() << -1.0, -1.0, 1.0, 1.0;
  return g;
}

Mat4c sigma_ab(int a, int b) { return 0.25 * (gamma(a) * gamma(b) - gamma(b) * gamma(a)); }

Mat4c i_sigma12() { return I * sigma_ab(1, 2); }

double spin_projection(int c) {
  if (c < 0 || c > 3) throw ArgumentError("spin_projection: component must be 0..3");
  return (c % 2 == 0) ? 0.5 : -0.5;
}

Mat4c parity_spherical() { return -gamma5() * gamma(1); }

Mat2c isospin(int a) { return 0.5 * pauli(a); }

Mat8c iso_spin(const Mat2c& iso, const Mat4c& spin) {
  Mat8c out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out.block<4, 4>(4 * a, 4 * b) = iso(a, b) * spin;
  return out;
}

Mat2c su2_from_gibbs(const Eigen::Vector3d& c) {
  Mat2c u = Mat2c::Identity();
  for (int a = 0; a < 3; ++a) u -= I * c[a] * pauli(a + 1);
  return u / std::sqrt(1.0 + c.squaredNorm());
}

}  // namespace monopole_lab
