#pragma once
// Constant-curvature 3-space models: conformal factor and coordinate maps.
#include <cmath>
#include <string>

#include "monopole_lab/errors.hpp"
#include "monopole_lab/jet.hpp"

namespace monopole_lab {

enum class Geometry { Euclid, Riemann, Lobachevsky };

/// A 3-geometry (flat E3, sphere S3, hyperbolic H3) with curvature radius rho.
struct CurvatureModel {
  Geometry kind = Geometry::Euclid;
  double rho = 1.0;
};

/// Validating constructor (rho > 0).
CurvatureModel make_model(Geometry kind, double rho = 1.0);

std::string geometry_name(Geometry kind);
/// Accepts euclid|riemann|lobachevsky (and the aliases e3|s3|h3|flat|sphere|hyperbolic).
Geometry parse_geometry(const std::string& name);

/// Conformal factor of the spatial metric in conformally flat coordinates.
template <class T>
T sigma_of(const CurvatureModel& model, const T& r) {
  const double rv = value_of(r);
  if (rv < 0.0) throw DomainError("sigma: r must be non-negative");
  const double four_rho2 = 4.0 * model.rho * model.rho;
  switch (model.kind) {
    case Geometry::Euclid:
      return T(1.0);
    case Geometry::Riemann:
      return 1.0 + r * r / four_rho2;
    case Geometry::Lobachevsky:
      if (rv >= 2.0 * model.rho) throw DomainError("sigma: Lobachevsky chart requires r < 2*rho");
      return 1.0 - r * r / four_rho2;
  }
  throw DomainError("sigma: unknown geometry");
}

double sigma(const CurvatureModel& model, double r);

/// Geodesic radial coordinate chi from the conformally flat radius r.
double chi_from_r(const CurvatureModel& model, double r);
/// Conformally flat radius r from the geodesic radial coordinate chi.
double r_from_chi(const CurvatureModel& model, double chi);

/// Areal radius of a geodesic sphere: rho*sin(chi/rho), chi, rho*sinh(chi/rho).
double areal_radius(const CurvatureModel& model, double chi);

}  // namespace monopole_lab
