#pragma once
// Truncated angular bases of multi-component functions
//   psi_{c,j,m}(theta, phi) = u_c exp(i alpha_c phi) D^j_{-m, sigma_c}(phi, theta, 0)
// and exact matrix representations of first-order angular operators and
// point-map (parity-type) operators on such bases, obtained by quadrature
// projection (Gauss-Legendre in cos(theta) x uniform phi).
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "monopole_lab/halfint.hpp"

namespace monopole_lab {

using cplx = std::complex<double>;
using MatXc = Eigen::MatrixXcd;
using VecXc = Eigen::VectorXcd;

/// Per-component data: lower D-index sigma_c and phi-phase exponent alpha_c.
struct ComponentSpec {
  HalfInt sigma;
  double alpha = 0.0;
};

struct BasisElement {
  int comp;
  HalfInt j;
  HalfInt m;
};

class AngularBasis {
 public:
  /// All (c, j, m) with j in [j_lo, j_hi] (step 1, j - sigma_c integral), |sigma_c| <= j, |m| <= j.
  AngularBasis(std::vector<ComponentSpec> comps, HalfInt j_lo, HalfInt j_hi);

  int components() const { return static_cast<int>(comps_.size()); }
  int size() const { return static_cast<int>(elems_.size()); }
  const BasisElement& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  const ComponentSpec& component(int c) const { return comps_[static_cast<std::size_t>(c)]; }
  /// Index of (c, j, m) or -1.
  int index_of(int comp, HalfInt j, HalfInt m) const;

  /// Scalar angular factor of element i and its theta / phi derivatives.
  cplx value(int i, double theta, double phi) const;
  cplx d_theta(int i, double theta, double phi) const;
  cplx d_phi(int i, double theta, double phi) const;

  /// Quadrature sizes adequate for the basis.
  int quad_theta() const;
  int quad_phi() const;

 private:
  std::vector<ComponentSpec> comps_;
  std::vector<BasisElement> elems_;
  HalfInt j_hi_;
};

/// out = A_theta d_theta psi + A_phi d_phi psi + B psi, coefficients n x n matrices.
struct FirstOrderOperator {
  std::function<MatXc(double, double)> A_theta;  ///< may be empty (zero)
  std::function<MatXc(double, double)> A_phi;    ///< may be empty (zero)
  std::function<MatXc(double, double)> B;        ///< may be empty (zero)
};

/// out(theta, phi) = C psi(pi - theta, phi + pi).
struct PointMapOperator {
  MatXc C;
};

struct OperatorMatrix {
  MatXc M;               ///< M(i', i): coefficient of element i' in op(psi_i)
  double closure = 0.0;  ///< largest relative quadrature norm of op(psi_i) outside the span
};

OperatorMatrix operator_matrix(const AngularBasis& basis, const FirstOrderOperator& op);
OperatorMatrix operator_matrix(const AngularBasis& basis, const PointMapOperator& op);
/// Constant matrix acting on the component index.
OperatorMatrix operator_matrix(const AngularBasis& basis, const MatXc& constant);

/// Evaluates the multi-component function with coefficient vector `coef` at (theta, phi).
VecXc evaluate(const AngularBasis& basis, const VecXc& coef, double theta, double phi);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace monopole_lab
