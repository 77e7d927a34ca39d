#pragma once
// Dirac matrices in the Weyl (chiral) representation, spin and isospin
// generators, and the spherical-tetrad bispinor parity matrix.
#include <complex>

#include <Eigen/Dense>

namespace monopole_lab {

using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Mat8c = Eigen::Matrix<std::complex<double>, 8, 8>;

/// Pauli matrices sigma_1..3 (index 1..3; index 0 returns the identity).
Mat2c pauli(int a);
/// gamma^0 = [[0, I], [I, 0]], gamma^k = [[0, -sigma_k], [sigma_k, 0]] (k = 1..3).
Mat4c gamma(int mu);
/// gamma^5 = diag(-I, I).
Mat4c gamma5();
/// sigma^{ab} = (gamma^a gamma^b - gamma^b gamma^a) / 4.
Mat4c sigma_ab(int a, int b);
/// i sigma^{12} = diag(1/2, -1/2, 1/2, -1/2).
Mat4c i_sigma12();
/// Diagonal entry c (0..3) of i sigma^{12}.
double spin_projection(int c);
/// Bispinor parity in the spherical tetrad: -gamma^5 gamma^1 (all -1 on the anti-diagonal).
Mat4c parity_spherical();
/// Isospin generator t^a = sigma^a / 2.
Mat2c isospin(int a);

/// Kronecker product iso (x) spin acting on (T_{+1/2}: rows 0..3, T_{-1/2}: rows 4..7).
Mat8c iso_spin(const Mat2c& iso, const Mat4c& spin);

/// SU(2) image of a Gibbs vector: (I - i c.sigma)/sqrt(1 + c^2).
Mat2c su2_from_gibbs(const Eigen::Vector3d& c);

}  // namespace monopole_lab
