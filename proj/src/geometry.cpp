#include "monopole_lab/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <numbers>

namespace monopole_lab {

CurvatureModel make_model(Geometry kind, double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw ParameterError("curvature radius rho must be positive");
  return CurvatureModel{kind, rho};
}

std::string geometry_name(Geometry kind) {
  switch (kind) {
    case Geometry::Euclid: return "euclid";
    case Geometry::Riemann: return "riemann";
    case Geometry::Lobachevsky: return "lobachevsky";
  }
  return "unknown";
}

Geometry parse_geometry(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "euclid" || s == "e3" || s == "flat") return Geometry::Euclid;
  if (s == "riemann" || s == "s3" || s == "sphere") return Geometry::Riemann;
  if (s == "lobachevsky" || s == "h3" || s == "hyperbolic") return Geometry::Lobachevsky;
  throw ArgumentError("unknown geometry '" + name + "'");
}

double sigma(const CurvatureModel& model, double r) { return sigma_of(model, r); }

double chi_from_r(const CurvatureModel& model, double r) {
  if (r < 0.0) throw DomainError("chi_from_r: r must be non-negative");
  const double two_rho = 2.0 * model.rho;
  switch (model.kind) {
    case Geometry::Euclid: return r;
    case Geometry::Riemann: return two_rho * std::atan(r / two_rho);
    case Geometry::Lobachevsky:
      if (r >= two_rho) throw DomainError("chi_from_r: Lobachevsky chart requires r < 2*rho");
      return two_rho * std::atanh(r / two_rho);
  }
  throw DomainError("chi_from_r: unknown geometry");
}

double r_from_chi(const CurvatureModel& model, double chi) {
  if (chi < 0.0) throw DomainError("r_from_chi: chi must be non-negative");
  const double two_rho = 2.0 * model.rho;
  switch (model.kind) {
    case Geometry::Euclid: return chi;
    case Geometry::Riemann:
      if (chi >= std::numbers::pi * model.rho) throw DomainError("r_from_chi: Riemann chart requires chi < pi*rho");
      return two_rho * std::tan(chi / two_rho);
    case Geometry::Lobachevsky:
      if (!std::isfinite(chi)) throw DomainError("r_from_chi: chi must be finite");
      return two_rho * std::tanh(chi / two_rho);
  }
  throw DomainError("r_from_chi: unknown geometry");
}

double areal_radius(const CurvatureModel& model, double chi) {
  switch (model.kind) {
    case Geometry::Euclid: return chi;
    case Geometry::Riemann: return model.rho * std::sin(chi / model.rho);
    case Geometry::Lobachevsky: return model.rho * std::sinh(chi / model.rho);
  }
  return chi;
}

}  // namespace monopole_lab
