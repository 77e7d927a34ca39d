#pragma once
// SO(3) Gibbs-vector rotations, isotopic gauge transformations of the
// hedgehog ansatz (Cartesian -> Dirac -> Schwinger unitary gauges) and the
// Abelian U(1) monopole gauge family.
#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace monopole_lab {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Cross-product matrix: cross_matrix(c) * v = c x v.
Mat3 cross_matrix(const Vec3& c);
/// O(c) = I + 2 (c^x + (c^x)^2) / (1 + c^2); rotation by 2 atan|c| about c.
Mat3 rotation_from_gibbs(const Vec3& c);
/// Inhomogeneous-term matrix Delta(c) = -2 (I + c^x) / (1 + c^2).
Mat3 gibbs_delta(const Vec3& c);
/// Gibbs vector of the composite rotation O(c2) O(c1): (c1 + c2 + c2 x c1)/(1 - c1.c2).
Vec3 gibbs_compose(const Vec3& c1, const Vec3& c2);
/// Gibbs vector c with O(c) B = D for non-zero B, D of equal length; c = (B^ x D^)/(1 + B^.D^).
Vec3 gibbs_between(const Vec3& B, const Vec3& D);

/// Space-time point (t, r, theta, phi).
using Point4 = std::array<double, 4>;
enum Coord : int { kT = 0, kR = 1, kTheta = 2, kPhi = 3 };

/// Isotriplet scalar and isotriplet covector components at one point.
struct GaugeFieldSample {
  Vec3 Phi = Vec3::Zero();
  std::array<Vec3, 4> W{Vec3::Zero(), Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};
};

/// Gibbs-vector valued field with an optional analytic gradient.
struct GibbsField {
  std::string name;
  std::function<Vec3(const Point4&)> c;
  std::function<std::array<Vec3, 4>(const Point4&)> grad;  ///< may be empty
};

enum class GradientMethod { Auto, Analytic, FiniteDifference };

/// Central-difference gradient step used when no analytic gradient is given.
inline constexpr double kGaugeFdStep = 1e-6;

/// Phi' = O(c) Phi, W'_a = O(c) W_a + (1/e) Delta(c) d_a c.
GaugeFieldSample gauge_transform(const GaugeFieldSample& sample, const GibbsField& field, const Point4& x, double e,
                                 GradientMethod method = GradientMethod::Auto);

/// Radial profiles at a fixed radius: K(r), Phi(r) and the dyon f(r) (0 for monopoles).
struct RadialValues {
  double K = 0.0;
  double Phi = 0.0;
  double f = 0.0;
};

/// Hedgehog ansatz in the Cartesian isotopic gauge at (r, theta, phi).
GaugeFieldSample hedgehog_sample(const RadialValues& v, double r, double theta, double phi);
/// Expected form in the Dirac unitary isotopic gauge.
GaugeFieldSample dirac_gauge_form(const RadialValues& v, double r, double theta, double phi, double e);
/// Expected form in the Schwinger unitary isotopic gauge.
GaugeFieldSample schwinger_gauge_form(const RadialValues& v, double r, double theta, double phi, double e);

enum class IsoGaugeFrame { Cartesian, Dirac, Schwinger };
std::string frame_name(IsoGaugeFrame f);
IsoGaugeFrame parse_frame(const std::string& name);

/// c = tan(theta/2) (sin phi, -cos phi, 0): Cartesian -> Dirac.
GibbsField cartesian_to_dirac_field();
/// c' = (0, 0, -tan(phi/2)): Dirac -> Schwinger.
GibbsField dirac_to_schwinger_field();
/// c'' = (tan(theta/2) tan(phi/2), -tan(theta/2), -tan(phi/2)): Cartesian -> Schwinger.
GibbsField cartesian_to_schwinger_field();
/// Gibbs field for a transition between any two frames (inverse transitions use -c).
GibbsField transition_field(IsoGaugeFrame from, IsoGaugeFrame to);
/// The closed-form field sample expected in a frame.
GaugeFieldSample expected_form(IsoGaugeFrame frame, const RadialValues& v, double r, double theta, double phi,
                               double e);

/// Printed matrix relating the Cartesian and Schwinger isotopic gauges.
Mat3 cartesian_schwinger_matrix(double theta, double phi);

/// Covariant derivative D_a Phi = d_a Phi + e W_a x Phi, by central differences of
/// a sample-valued function (step h in every coordinate).
std::array<Vec3, 4> covariant_derivative(const std::function<GaugeFieldSample(const Point4&)>& field,
                                         const Point4& x, double e, double h = 1e-5);

struct GaugeVerifyReport {
  IsoGaugeFrame from = IsoGaugeFrame::Cartesian;
  IsoGaugeFrame to = IsoGaugeFrame::Schwinger;
  int grid = 0;
  double max_defect_Phi = 0.0;
  double max_defect_W = 0.0;
};

/// Transforms the closed-form sample of `from` on the (theta_i, phi_j) midpoint grid
/// ((i+1/2) pi/n, (j+1/2) 2 pi/n) and compares with the closed form of `to`.
GaugeVerifyReport verify_gauge_transition(IsoGaugeFrame from, IsoGaugeFrame to, const RadialValues& v, double r,
                                          double e, int n, GradientMethod method = GradientMethod::Auto,
                                          int threads = 1);

// --- Abelian U(1) gauges ---------------------------------------------------------

enum class AbelianGauge { Schwinger, Dirac, WuYangN, WuYangS };
std::string abelian_gauge_name(AbelianGauge g);
AbelianGauge parse_abelian_gauge(const std::string& name);

/// Half-width of the equatorial overlap band of the two Wu-Yang charts.
inline constexpr double kWuYangOverlap = 0.1;

/// A_phi for magnetic charge g: g cos, g(cos - 1), g(cos - 1) (north), g(cos + 1) (south).
double abelian_potential(AbelianGauge gauge, double g, double theta, double overlap = kWuYangOverlap);

/// Psi^{frame} = exp(i alpha phi) Psi^{Schwinger}: alpha = 0, k, k, -k.
double u1_alpha(AbelianGauge gauge, double k);

struct U1FrameData {
  AbelianGauge gauge;
  double alpha;        ///< phase exponent relative to the Schwinger frame
  double j3_shift;     ///< J3 = l3 + j3_shift
  std::string j3_form; ///< "l3", "l3 - k", "l3 + k"
};
U1FrameData u1_frame_data(AbelianGauge gauge, double k);
/// Phase S(phi) with Psi^{to} = S(phi) Psi^{from}.
std::complex<double> u1_transition_phase(AbelianGauge from, AbelianGauge to, double k, double phi);

}  // namespace monopole_lab
