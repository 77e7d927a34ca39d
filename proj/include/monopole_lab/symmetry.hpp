#pragma once
// Discrete operators (bispinor parity, N_A, K), SU(2) algebra checks for the
// angular-momentum realizations, the U(A) hidden-symmetry family, and
// selection rules.
#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "monopole_lab/angular.hpp"
#include "monopole_lab/gauge.hpp"
#include "monopole_lab/halfint.hpp"
#include "monopole_lab/spinor.hpp"

namespace monopole_lab {

// --- Angular-momentum realizations ---------------------------------------------

enum class RealizationKind { PauliLambda, AbelianK, DoubletSchwinger, DiracGauge, WuYang };

struct Realization {
  RealizationKind kind = RealizationKind::DoubletSchwinger;
  HalfInt param = 0;  ///< lambda (PauliLambda) or k (AbelianK, DiracGauge, WuYang)
  int chart = +1;     ///< WuYang: +1 northern, -1 southern
};
std::string realization_name(const Realization& r);

/// Per-component (sigma_c, alpha_c) of a realization:
/// J1 = l1 + cos(phi)/sin(theta) L_c(theta), J2 = l2 + sin(phi)/sin(theta) L_c(theta), J3 = l3 + s3.
std::vector<ComponentSpec> realization_components(const Realization& r);
/// Smallest admissible j of a realization.
HalfInt realization_jmin(const Realization& r);
AngularBasis realization_basis(const Realization& r, HalfInt jmax);
/// J1, J2, J3 as first-order angular operators.
std::array<FirstOrderOperator, 3> j_operators(const Realization& r);

struct Su2Report {
  std::string realization;
  int basis_size = 0;
  double commutator_defect = 0.0;  ///< max |[J_a, J_b] - i eps_abc J_c|
  double casimir_defect = 0.0;     ///< max |J^2 - j(j+1)| on basis elements
  double j3_defect = 0.0;          ///< max |J3 - m| (J3 eigenvalue equals the label m)
  double closure = 0.0;            ///< quadrature closure residual of the projections
  std::vector<double> j3_spectrum; ///< sorted eigenvalues of J3 on the truncated space
};

/// Matrix representation of J on the truncated D-function basis (j <= jmax <= 6).
Su2Report su2_algebra_defect(const Realization& r, HalfInt jmax);

/// Largest difference between the sorted J3 spectra of the Schwinger-form
/// Abelian realization and its Dirac / Wu-Yang transports at charge k.
double j3_spectrum_transport_defect(HalfInt k, HalfInt jmax);

// --- States --------------------------------------------------------------------

/// Abelian electron-monopole state (f1 D_{k-1/2}, f2 D_{k+1/2}, f3 D_{k-1/2}, f4 D_{k+1/2})
/// with radial values frozen at one radius; components whose D index is invalid are ignored.
struct AbelianState {
  HalfInt k = 0;
  HalfInt j = kHalf;
  HalfInt m = kHalf;
  std::array<cplx, 4> f{};
};

/// Isotopic-doublet state T_{+1/2} (x) F + T_{-1/2} (x) G in the Schwinger frames.
struct SeparatedDoubletState {
  HalfInt j = 1;
  HalfInt m = 0;
  std::array<cplx, 4> f{};
  std::array<cplx, 4> g{};
  IsoGaugeFrame iso_frame = IsoGaugeFrame::Schwinger;
  std::string tetrad = "spherical";
};

/// The D-index sigma of doublet component c (0..7): T_{+1/2}: (-1, 0, -1, 0); T_{-1/2}: (0, 1, 0, 1).
HalfInt doublet_sigma(int c);

/// Coefficient vectors of states in the realization bases.
VecXc state_coefficients(const AngularBasis& basis, const AbelianState& s);
VecXc state_coefficients(const AngularBasis& basis, const SeparatedDoubletState& s);

/// Electron / Abelian K-eigenstate: f4 = delta f1, f3 = delta f2.
AbelianState abelian_delta_state(HalfInt k, HalfInt j, HalfInt m, int delta, cplx f1, cplx f2);
/// j_min state: (f1, 0, f3, 0) for k > 0, (0, f2, 0, f4) for k < 0.
AbelianState abelian_jmin_state(HalfInt k, HalfInt m, cplx a, cplx b);
/// N_A-constrained doublet state: g_i = delta e^{iA} f_{5-i}.
SeparatedDoubletState constrained_doublet_state(HalfInt j, HalfInt m, double A, int delta, const std::array<cplx, 4>& f);
/// Doublet state with both N_A and K constraints (f4 = mu f1, f3 = mu f2).
SeparatedDoubletState doublet_mu_state(HalfInt j, HalfInt m, double A, int delta, int mu, cplx f1, cplx f2);

// --- Operators -------------------------------------------------------------------

/// Sigma^k = i g1 d_theta + g2 (i d_phi + (i sigma12 - k) cos)/sin (4 x 4).
FirstOrderOperator sigma_operator_abelian(double k);
/// Sigma^S = i g1 d_theta + g2 (i d_phi + (i sigma12 + t3) cos)/sin (8 x 8).
FirstOrderOperator sigma_operator_doublet();
/// K = -i gamma0 gamma3 Sigma (Abelian, 4 x 4) and its doublet analogue (8 x 8).
FirstOrderOperator k_hat_abelian(double k);
FirstOrderOperator k_hat_doublet();
/// pi_A = [[0, e^{-iA}], [e^{iA}, 0]] = cos A sigma1 + sin A sigma2.
Mat2c pi_A(double A);
/// Composite N_A = pi_A (x) Pi_sph (x) P as a point-map operator on doublet functions.
PointMapOperator n_a_operator(double A);

struct EigenFit {
  cplx eigenvalue{};
  double defect = 0.0;   ///< |O psi - lambda psi| / |psi|
  double closure = 0.0;  ///< projection closure of the operator matrix
};

/// K acting on an Abelian state: fitted eigenvalue (expected -delta sqrt((j+1/2)^2 - k^2), 0 for j_min).
EigenFit apply_K_hat(const AbelianState& s);
/// K acting on a doublet state on the W = 0 background (expected -mu sqrt(j(j+1))).
/// Throws UnsupportedError when w_background != 0.
EigenFit apply_K_hat(const SeparatedDoubletState& s, double w_background = 0.0);

struct NAResult {
  VecXc transformed;        ///< coefficients of N_A psi
  cplx fitted{};            ///< Rayleigh-quotient eigenvalue
  int delta = 0;            ///< delta of the closest delta (-1)^{j+1}
  double defect = 0.0;      ///< |N_A psi - delta (-1)^{j+1} psi| / |psi| for that delta
};
/// Applies N_A to a Schwinger-frame doublet state. Throws ArgumentError otherwise.
NAResult apply_N_A(double A, const SeparatedDoubletState& s);

/// Largest |N_A^2 - c I| over the doublet basis up to jmax, with c the fitted phase.
double n_a_square_defect(double A, HalfInt jmax);

// --- Bispinor parity on sampled grids --------------------------------------------

struct SampledSpinorField {
  std::vector<double> theta;  ///< size nt
  std::vector<double> phi;    ///< size np
  std::vector<Eigen::Vector4cd> values;  ///< values[i * np + j]
  int monodromy = 1;  ///< factor picked up under phi -> phi + 2 pi (-1 for half-integer m)
};

/// Midpoint grid theta_i = (i+1/2) pi/nt, phi_j = (j+1/2) 2pi/np (np even).
SampledSpinorField sample_state(const AbelianState& s, int nt, int np);
/// Pi_sph P: out(theta, phi) = Pi_sph psi(pi - theta, phi + pi), exact on symmetric grids.
/// Throws ArgumentError when the grid is not symmetric under the point map.
SampledSpinorField apply_parity_bispinor(const SampledSpinorField& in);
/// Rayleigh-quotient eigenvalue of the sampled parity action and the relative defect.
EigenFit parity_eigen_fit(const SampledSpinorField& in);

/// e^{i pi x} for half-integer x (exact phases).
cplx half_integer_phase(HalfInt x);

/// Two-sector identity: Pi_sph P Psi^{+k} = delta e^{i pi (j+1)} Psi^{-k} with the same radial values.
double two_sector_identity_defect(HalfInt k, HalfInt j, HalfInt m, int delta, cplx f1, cplx f2, int samples = 16);

/// Sigma^k Psi = i nu (-f4 D_{k-1/2}, f3 D_{k+1/2}, f2 D_{k-1/2}, -f1 D_{k+1/2}).
double abelian_sigma_column_defect(const AbelianState& s);
/// |Sigma^k Psi_{j_min}| / |Psi_{j_min}|.
double jmin_annihilation_defect(HalfInt k, HalfInt m);

// --- Hidden symmetry family -------------------------------------------------------

/// U(A): Schwinger diag(1, e^{iA}); Cartesian e^{iA/2} exp(-i (A/2) sigma.n).
/// Throws UnsupportedError for the Dirac frame.
Mat2c U_A_matrix(IsoGaugeFrame frame, double A, double theta, double phi);
/// Printed entrywise Cartesian form.
Mat2c U_A_cartesian_entries(double A, double theta, double phi);
/// |pi_A - U(A) pi_0 U(A)^{-1}| (isotopic factor of N_A = U N_0 U^{-1}).
double n_a_conjugation_defect(double A);
/// min over global phases of |U^C - S^dagger U^S S|, S the SU(2) image of the Cartesian->Schwinger Gibbs vector.
double cartesian_schwinger_transport_defect(double A, double theta, double phi);

struct CommutatorReport {
  double H_t3 = 0.0;      ///< max over W = 0 Hamiltonian pieces of |[H_piece, t3]|
  double H_NA = 0.0;      ///< max over W = 0 Hamiltonian pieces of |[H_piece, N_A]|
  double t3_NA = 0.0;     ///< |[t3, N_A]| (non-zero: hidden symmetry)
  double mixing_NA = 0.0; ///< |[W-mixing piece, N_A]| (vanishes only for e^{2iA} = 1)
  double closure = 0.0;
};
CommutatorReport hamiltonian_commutators(double A, HalfInt jmax);

/// Over-determination residual of the N_A-constrained eight-component radial system at
/// one point: |(I - P_range) M Map|_2 where M is the derivative matrix and Map embeds
/// f -> (f, delta e^{iA} f_{5-i}). Arguments: nu/s, W/s, F~, Phi~ at that point.
double n_a_consistency_residual(double A, int delta, double epsilon, double m, double nu_over_s, double w_over_s,
                                double F_tilde, double Phi_tilde);
/// Values of A = 2 pi i / n (i < n) whose residual is below tol.
std::vector<double> n_a_consistent_angles(int n, double tol, int delta, double epsilon, double m, double nu_over_s,
                                          double w_over_s, double F_tilde, double Phi_tilde);

// --- Selection rules ---------------------------------------------------------------

enum class SelectionOutcome { ForcedZero, Unconstrained };
std::string selection_outcome_name(SelectionOutcome o);
/// Factor 1 + Omega delta delta' (-1)^{J + J'}; ForcedZero iff it vanishes.
int selection_factor(int omega, int delta, int delta_prime, HalfInt J, HalfInt J_prime);
SelectionOutcome selection_rule(int omega, int delta, int delta_prime, HalfInt J, HalfInt J_prime);

}  // namespace monopole_lab
