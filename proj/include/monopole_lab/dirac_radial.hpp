#pragma once
// Radial first-order systems of the Dirac equation in Abelian and non-Abelian
// monopole backgrounds, a fixed-step RK4 integrator, a shooting solver for the
// discrete spectrum on the 3-sphere, the j_min bound-state profile and the
// Abelian factorization of isotopic-doublet solutions.
#include <complex>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "monopole_lab/bps.hpp"
#include "monopole_lab/geometry.hpp"
#include "monopole_lab/halfint.hpp"

namespace monopole_lab {

using cplx = std::complex<double>;
using StateVec = Eigen::VectorXcd;
using RadialMatrix = Eigen::MatrixXcd;
using ScalarProfile = std::function<double(double)>;

// --- Systems ---------------------------------------------------------------------

enum class AbelianForm {
  Full4,    ///< four complex components (f1, f2, f3, f4)
  Reduced,  ///< K-reduced pair (f, g) with f4 = delta f1, f3 = delta f2
};

struct AbelianRadialSystem {
  double epsilon = 1.0;
  double m = 0.0;
  double k = 0.0;   ///< eg
  HalfInt j = kHalf;
  int delta = +1;
  CurvatureModel model{};  ///< Euclid: x = r, Riemann/Lobachevsky: x = chi, s(x) the areal radius
  AbelianForm form = AbelianForm::Full4;
  ScalarProfile e_minus_nu_half;  ///< e^{-nu/2}(x); empty means 1
  ScalarProfile e_minus_mu_half;  ///< e^{-mu/2}(x); empty means 1
  /// nu = sqrt((j+1/2)^2 - k^2); throws ParameterError when negative.
  double nu() const;
  int dimension() const { return form == AbelianForm::Full4 ? 4 : 2; }
};

enum class DoubletForm {
  Full8,       ///< (f1..f4, g1..g4), general background (W, F~, Phi~)
  MuReduced,   ///< (f1, f2) with N_A and K constraints; W must vanish
  WReduced,    ///< (f1..f4) with the N_A constraint at e^{iA} = 1 (any W)
  J0,          ///< (f2, f4) for j = 0
};

struct DoubletRadialSystem {
  CurvatureModel model = make_model(Geometry::Riemann, 1.0);
  double epsilon = 1.0;
  double m = 0.0;
  HalfInt j = 1;
  int delta = +1;
  int mu = +1;
  DoubletForm form = DoubletForm::MuReduced;
  ScalarProfile w_over_s;   ///< W(x)/s(x); empty means W = 0
  ScalarProfile F_tilde;    ///< Full8 only; empty means 0
  ScalarProfile Phi_tilde;  ///< Full8 only; empty means 0
  /// nu = sqrt(j(j+1)); j must be a non-negative integer.
  double nu() const;
  int dimension() const;
};

using RadialSystem = std::variant<AbelianRadialSystem, DoubletRadialSystem>;

int dimension(const RadialSystem& sys);
/// Linear systems: y' = M(x) y. Throws SingularityError where s(x) = 0.
RadialMatrix derivative_matrix(const AbelianRadialSystem& sys, double x);
RadialMatrix derivative_matrix(const DoubletRadialSystem& sys, double x);
RadialMatrix derivative_matrix(const RadialSystem& sys, double x);
/// First-order derivative y'(x). Throws ArgumentError on dimension mismatch.
StateVec rhs(const RadialSystem& sys, double x, const StateVec& y);
/// Derivative matrix of the eight-component doublet system at one point, order (f1..f4, g1..g4),
/// from the pointwise values nu/s, W/s, F~ and Phi~.
RadialMatrix doublet_full8_matrix(double epsilon, double m, double nu_over_s, double w_over_s, double F_tilde,
                                  double Phi_tilde);
/// Returns a copy with the energy replaced.
RadialSystem with_energy(const RadialSystem& sys, double epsilon);

/// W/s for a monopole background: closed form (1/2) a1 f1(a1 chi + C) for TypeI on the
/// unit 3-sphere (valid up to the endpoints), the guarded profile evaluator otherwise; zero for Trivial.
ScalarProfile w_over_s_profile(const MonopoleSolution& sol);

// --- Integration -----------------------------------------------------------------

struct Trajectory {
  std::vector<double> x;
  std::vector<StateVec> y;
};

/// Classical fixed-step RK4 on the given strictly increasing grid.
/// Throws ArgumentError (bad grid / dimension), SingularityError, DomainError (non-finite state).
Trajectory integrate(const RadialSystem& sys, const std::vector<double>& grid, const StateVec& init);
/// Uniform grid with n steps on [a, b].
std::vector<double> uniform_grid(double a, double b, int n);

/// Conserved flux |f1|^2 - |f2|^2 of the mu-reduced doublet pair (and of the Abelian pair (f1, f2)).
double flux_mu_reduced(const StateVec& y);
/// Conserved flux |y0|^2 - |y1|^2 of the j = 0 pair (f2, f4) -> |f4|^2 - |f2|^2.
double flux_j0(const StateVec& y);

// --- Spectrum on S3 -------------------------------------------------------------------

struct SpectralProblem {
  RadialSystem system;
  double chi_min = 1e-3;
  double chi_max = 3.14159265358979323846 - 1e-3;
  int grid_n = 4000;
  double e_min = 1e-6;   ///< scan window
  double e_max = 21.0;
  double scan_step = 0.05;
  int threads = 1;
};

struct SpectrumResult {
  std::vector<double> eigenvalues;          ///< at grid n
  std::vector<double> eigenvalues_refined;  ///< at grid 2n
  std::vector<double> drift;                ///< |refined - coarse| / max(1, |refined|)
  int grid = 0;
  int regular_left = 0;
  int regular_right = 0;
  double complex_residual = 0.0;  ///< max |Im| / max |D| of the phase-fixed matching determinant
  std::string diagnostic;         ///< empty on success
};

/// Default scan window for a system: (1e-6, m + 20).
SpectralProblem make_spectral_problem(const RadialSystem& sys, int grid_n = 4000);
/// Shooting with the matching determinant det[Y_left | Y_right] at chi = pi/2, bisection on
/// sign changes; the lowest `count` eigenvalues in the window are returned.
SpectrumResult spectrum_s3(const SpectralProblem& problem, int count);
/// Matching determinant (phase-unfixed) at energy eps on grid n; exposed for diagnostics.
cplx matching_determinant(const SpectralProblem& problem, double eps, int grid_n);

// --- j_min bound state --------------------------------------------------------------------

struct BoundStateValue {
  double f;          ///< e^{-kappa r}, kappa = sqrt(m^2 - eps^2)
  cplx companion;    ///< (1/m)(eps + i d/dr) f
  double kappa;
};
/// Throws ParameterError unless eps < m on the decaying branch (|eps| < m).
BoundStateValue bound_state_jmin(double epsilon, double m, double r);
/// Residual of (d^2/dr^2 + eps^2 - m^2) f by exact second derivative.
double bound_state_residual(double epsilon, double m, double r);

// --- Abelian factorization of doublet solutions -----------------------------------------

struct AbelianSolution {
  double k;       ///< -1/2 or +1/2
  HalfInt j;
  double epsilon;
  double m;
  int mu;         ///< K-eigen sign (f4 = mu f1, f3 = mu f2 for j > j_min)
  CurvatureModel model;
  Trajectory traj;  ///< four-component (f1..f4)
};

/// Integrates the Abelian four-component system from K-constrained initial data
/// (j > j_min: (a, b, mu b, mu a); j_min: the two non-zero slots a, b).
AbelianSolution solve_abelian(double k, HalfInt j, double epsilon, double m, int mu, const CurvatureModel& model,
                              const std::vector<double>& grid, cplx a, cplx b);

struct FactorizedDoublet {
  Trajectory traj;        ///< eight-component (f1..f4, g1..g4)
  double residual = 0.0;  ///< max |Y' - M Y| / max |Y| with Y' from the Abelian systems
};

/// Psi = T_{+1/2} (x) Phi^{-1/2} + c T_{-1/2} (x) Phi^{+1/2}, c = mu delta e^{iA} (j > 0) or delta e^{iA} (j = 0).
FactorizedDoublet factorize_doublet(const AbelianSolution& minus, const AbelianSolution& plus, double A, int delta,
                                    int mu);

/// Max componentwise difference between the constrained eight-component integration and the
/// mu-reduced pair on the same grid (W = F~ = Phi~ = 0).
double reduction_consistency(HalfInt j, double epsilon, double m, int delta, int mu, double A,
                             const std::vector<double>& grid, cplx f1, cplx f2);

}  // namespace monopole_lab
