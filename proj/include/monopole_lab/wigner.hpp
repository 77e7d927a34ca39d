#pragma once
// Wigner d/D-functions with exact half-integer indices, ladder recursions,
// the Pauli admissibility criterion and spinor monopole harmonics.
#include <complex>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "monopole_lab/halfint.hpp"

namespace monopole_lab {

using cplx = std::complex<double>;

/// True iff j >= 0, |m| <= j and j - m is an integer.
bool valid_projection(HalfInt j, HalfInt m);

/// d^j_{m' m}(theta) = <j m'| exp(-i theta J_y) |j m>.
/// Product (sum) formula for j <= 5/2, three-term recurrence in j above.
double d_small(HalfInt j, HalfInt mp, HalfInt m, double theta);
/// Direct sum formula, evaluated in extended precision (intended for j <= 12).
double d_small_sum(HalfInt j, HalfInt mp, HalfInt m, double theta);
/// Three-term upward recurrence in j seeded at max(|m|,|m'|).
double d_small_recurrence(HalfInt j, HalfInt mp, HalfInt m, double theta);
/// d/dtheta of d^j_{m' m}: term-wise derivative of the sum formula for j <= 12,
/// column-ladder identity above.
double d_small_dtheta(HalfInt j, HalfInt mp, HalfInt m, double theta);

/// D^j_{m_row m_col}(phi, theta, 0) = exp(-i m_row phi) d^j_{m_row m_col}(theta).
cplx D_function(HalfInt j, HalfInt m_row, HalfInt m_col, double phi, double theta);

/// Short-hand used throughout: D_sigma = D^j_{-m, sigma}(phi, theta, 0).
/// Returns 0 when (j, sigma) is not a valid pair.
cplx D_sigma(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi);
cplx D_sigma_dtheta(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi);

/// Full (2j+1)x(2j+1) matrix d^j(theta) via the spectral decomposition of J_y;
/// row/column index i corresponds to projection j - i.
Eigen::MatrixXd wigner_d_matrix_spectral(HalfInt j, double theta);

// --- Pauli criterion ---------------------------------------------------------

struct PauliRejected {};
struct AllowedJSet {
  HalfInt min_j;
  bool contains(HalfInt j) const { return j >= min_j && (j - min_j).is_integer(); }
};
using PauliResult = std::variant<PauliRejected, AllowedJSet>;

PauliResult pauli_allowed(double lambda);
PauliResult pauli_allowed(HalfInt lambda);

/// Expands (1+x)^{j+lambda}(1-x)^{j-lambda} with exact integer coefficients and
/// reports whether its (2j+1)-th derivative vanishes identically.  Returns false
/// when j +- lambda are not non-negative integers.
bool pauli_derivative_check(HalfInt j, HalfInt lambda);
/// Closed-form rule: 2 lambda integer, j in {|lambda|, |lambda|+1, ...}.
bool pauli_closed_form(HalfInt j, HalfInt lambda);

/// Admissibility of an Abelian monopole charge k = eg: every bispinor component
/// D_{k -+ 1/2} must carry a Pauli-allowed lambda; j_min is the smallest j any
/// component admits.
struct ChargeAdmissibility {
  bool admissible = false;
  HalfInt j_min{};
};
ChargeAdmissibility abelian_charge_admissibility(double k);

// --- Recursion identities ----------------------------------------------------

struct RecursionReport {
  double max_defect = 0.0;
  int identities_checked = 0;
  std::vector<std::string> skipped;
  void add(double defect) {
    if (defect > max_defect) max_defect = defect;
    ++identities_checked;
  }
};

/// Ladder identities for arbitrary sigma:
///   d_theta D_s = (1/2)[sqrt((j+s)(j-s+1)) D_{s-1} - sqrt((j-s)(j+s+1)) D_{s+1}]
///   (m + s cos)/sin D_s = (1/2)[sqrt((j+s)(j-s+1)) D_{s-1} + sqrt((j-s)(j+s+1)) D_{s+1}]
RecursionReport recursion_check_ladder(HalfInt j, HalfInt m, HalfInt sigma, double theta);
/// Abelian-monopole identities for D_{k +- 1/2} with coefficients
/// a = sqrt((j+1/2)^2 - k^2)/2, b = sqrt((j-k-1/2)(j+k+3/2))/2,
/// c = sqrt((j+k-1/2)(j-k+3/2))/2, plus the j_min identities when j = |k| - 1/2.
RecursionReport recursion_check_abelian(HalfInt j, HalfInt m, HalfInt k, double theta);
/// Integer-sigma identities for D_{-1}, D_0, D_{+1} with nu = sqrt(j(j+1)),
/// omega = sqrt((j-1)(j+2)).
RecursionReport recursion_check_doublet(HalfInt j, HalfInt m, double theta);

/// |D_sigma(pi - theta, phi + pi) - exp(i pi j) D_{-sigma}(theta, phi)|.
double parity_identity_defect(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi);

// --- Spinor harmonics ----------------------------------------------------------

using Spinor2 = Eigen::Vector2cd;

/// Helicity spinors: chi_{+1/2} = (cos(t/2) e^{-i p/2}, sin(t/2) e^{i p/2}),
/// chi_{-1/2} = (-sin(t/2) e^{-i p/2}, cos(t/2) e^{i p/2}).
Spinor2 helicity_spinor(int twice_s, double theta, double phi);

struct MonopoleHarmonics {
  Spinor2 xi1;
  Spinor2 xi2;
};
/// xi^(1,2) = chi_{-1/2} D_{k+1/2} +- chi_{+1/2} D_{k-1/2}.
MonopoleHarmonics monopole_harmonics(HalfInt j, HalfInt m, HalfInt k, double theta, double phi);

/// Spherical spinor Omega_{j l m} built from Clebsch-Gordan coefficients and
/// spherical harmonics (Condon-Shortley phase); l = j +- 1/2.
Spinor2 spherical_spinor_cg(HalfInt j, int l, HalfInt m, double theta, double phi);
/// Helicity-spinor expansion (-1)^{m+1/2} sqrt((2j+1)/8pi)(chi_{-1/2} D_{1/2} +- chi_{+1/2} D_{-1/2});
/// branch = +1 gives l = j + 1/2, branch = -1 gives l = j - 1/2.
Spinor2 spherical_spinor_helicity(HalfInt j, HalfInt m, int branch, double theta, double phi);

}  // namespace monopole_lab
