#pragma once
// Closed-form BPS monopole and dyon profiles on E3, S3 and H3, the auxiliary
// (a, b, c, R) profile construction, and residuals of the radial field equations.
#include <string>
#include <utility>
#include <variant>

#include "json.hpp"
#include "monopole_lab/geometry.hpp"
#include "monopole_lab/jet.hpp"

namespace monopole_lab {

enum class SeedKind { Rational, Hyperbolic, Trigonometric };

std::string seed_kind_name(SeedKind kind);
SeedKind parse_seed_kind(const std::string& name);  ///< rational|hyperbolic|trigonometric (rat|hyp|trig)

/// Seed pair (f1, f2) solving f1' = -f1 f2, f2' = -f1^2.
struct SeedFamily {
  SeedKind kind = SeedKind::Hyperbolic;
  double A = 1.0;
  double B = 0.0;
  int sign = +1;  ///< branch of f1
};

/// Minimal distance (in the argument A x + B) to a seed singularity below which
/// evaluation is refused.
inline constexpr double kSeedSingularGuard = 1e-3;
/// Smallest radius accepted by profile evaluators.
inline constexpr double kMinRadius = 1e-6;

struct SeedPair {
  double f1;
  double f2;
};

SeedPair f_pair(const SeedFamily& seed, double x);

template <class T>
std::pair<T, T> f_pair_t(const SeedFamily& seed, const T& x);

struct TypeI {
  double a1 = 1.0;
  double C = 0.0;
  SeedFamily seed{};
};

struct Trivial {
  double b1 = 0.0;
  double b2 = 1.0;
};

/// A (K(r), Phi(r)) monopole profile pair.
struct MonopoleSolution {
  CurvatureModel model{};
  std::variant<TypeI, Trivial> kind = TypeI{};
  double e = 1.0;
};

struct KPhi {
  double K;
  double Phi;
};

template <class T>
struct KPhiT {
  T K;
  T Phi;
};

KPhi eval_K_Phi(const MonopoleSolution& sol, double r);
template <class T>
KPhiT<T> eval_K_Phi_t(const MonopoleSolution& sol, const T& r);

/// Auxiliary profiles entering K = (c f1(R) - 1)/(e r^2), Phi = (a f2(R) + b)/(e r^2).
struct Abcr {
  double a, b, c, R;
};
template <class T>
struct AbcrT {
  T a, b, c, R;
};

Abcr abcr_profiles(const CurvatureModel& model, double a1, double C, double r);
template <class T>
AbcrT<T> abcr_profiles_t(const CurvatureModel& model, double a1, double C, const T& r);

/// Largest defect of the algebraic relations obtained by inserting
/// a = a1 r + a2 (1 - r^2/4rho^2), b = b1 r + b2 (1 - r^2/4rho^2) into the
/// curved profile equation: 2 a2 b2 = delta a2, a1 b2 + a2 b1 = -delta a1,
/// a1 b1 - a2 b2/(2 rho^2) = (5/4) delta a2/rho^2.
double algebraic_relations_defect(double a1, double a2, double b1, double b2, int delta, double rho);

/// Largest defect of the reduced profile system (linear equations for a and b,
/// c = a/Sigma, R' = a/(r Sigma), 2ab = r Sigma(-3a' + 2 Sigma'/Sigma a + a/r)) at r.
double profile_system_defect(const CurvatureModel& model, double a1, double C, double r);

enum class DerivativeMethod {
  Jet,                ///< exact second-order jets (default)
  FiniteDifference5,  ///< 5-point central differences, h = 1e-4 max(1, r)
};

struct FieldResidual {
  double resPhi;
  double resK;
};

/// Left-hand sides of the curved purely-monopole radial equations
///   Phi'' + 4Phi'/r - 2e Phi (2 + e r^2 K) K - (Sigma'/Sigma)(Phi' + Phi/r)
///   K'' + 4K'/r - e Phi^2 (1 + e r^2 K)/Sigma^2 - e K^2 (3 + e r^2 K) + (Sigma'/Sigma)(K' + 2K/r)
FieldResidual residual_field_equations(const MonopoleSolution& sol, double r,
                                       DerivativeMethod method = DerivativeMethod::Jet);

/// Residual of the linear Phi-equation (K fixed to the trivial -1/(e r^2)) for an
/// arbitrary Phi given as a jet-evaluable callable: used for the trivial span check.
double trivial_phi_equation_residual(const CurvatureModel& model, double e, double b1, double b2, double r);

/// Flat dyon obtained from a flat monopole by the scaling reduction.
struct DyonSolution {
  MonopoleSolution base;
  double c = 0.0;
};

struct DyonFields {
  double K;
  double Phi;
  double f;
};

struct DyonResidual {
  double resPhi;
  double resF;
  double resK;
};

DyonSolution dyon_from_monopole(const MonopoleSolution& base, double c);
/// Radial rescale factor (1 - c^2)^{1/4}.
double dyon_scale(double c);
DyonFields eval_dyon(const DyonSolution& dyon, double r);
/// Residuals of the flat dyon system
///   Phi'' + 4Phi'/r - 2e Phi (2 + e r^2 K) K,   same with f,
///   K'' + 4K'/r + e (f^2 - Phi^2)(1 + e r^2 K) - e K^2 (3 + e r^2 K).
DyonResidual residual_dyon_equations(const DyonSolution& dyon, double r,
                                     DerivativeMethod method = DerivativeMethod::Jet);

/// The isotopic mixing profile W = (e r^2 K + 1)/2 at geodesic radius chi.
double W_profile(const MonopoleSolution& sol, double chi);
/// W(chi)/s(chi), s the areal radius; exact for TypeI (1/2) a1 f1(R) on S3 with rho = 1.
double w_over_areal(const MonopoleSolution& sol, double chi);

nlohmann::json to_json(const MonopoleSolution& sol);
MonopoleSolution solution_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Template implementations

namespace detail {
void check_seed_argument(const SeedFamily& seed, double y);
}

template <class T>
std::pair<T, T> f_pair_t(const SeedFamily& seed, const T& x) {
  if (seed.A == 0.0) throw ParameterError("seed parameter A must be non-zero");
  if (seed.sign != 1 && seed.sign != -1) throw ParameterError("seed sign must be +1 or -1");
  const T y = seed.A * x + seed.B;
  detail::check_seed_argument(seed, value_of(y));
  using std::cos;
  using std::sin;
  using std::sinh;
  using std::cosh;
  switch (seed.kind) {
    case SeedKind::Rational: {
      const T f2 = seed.A / y;
      return {double(seed.sign) * f2, f2};
    }
    case SeedKind::Hyperbolic: {
      const T s = sinh(y);
      return {double(seed.sign) * seed.A / s, seed.A * cosh(y) / s};
    }
    case SeedKind::Trigonometric: {
      const T s = sin(y);
      return {double(seed.sign) * seed.A / s, seed.A * cos(y) / s};
    }
  }
  throw ParameterError("unknown seed family");
}

template <class T>
AbcrT<T> abcr_profiles_t(const CurvatureModel& model, double a1, double C, const T& r) {
  using std::atan;
  using std::atanh;
  const double two_rho = 2.0 * model.rho;
  const T q = r * r / (two_rho * two_rho);
  switch (model.kind) {
    case Geometry::Euclid:
      return {a1 * r, T(-1.0), a1 * r, a1 * r + C};
    case Geometry::Riemann: {
      const T sig = sigma_of(model, r);
      return {a1 * r, -(1.0 - q), a1 * r / sig, a1 * two_rho * atan(r / two_rho) + C};
    }
    case Geometry::Lobachevsky: {
      const T sig = sigma_of(model, r);
      return {a1 * r, -(1.0 + q), a1 * r / sig, a1 * two_rho * atanh(r / two_rho) + C};
    }
  }
  throw DomainError("abcr_profiles: unknown geometry");
}

template <class T>
KPhiT<T> eval_K_Phi_t(const MonopoleSolution& sol, const T& r) {
  const double rv = value_of(r);
  if (!(rv >= kMinRadius)) throw SingularityError("profile evaluation requires r >= 1e-6");
  if (sol.e <= 0.0) throw ParameterError("gauge coupling e must be positive");
  (void)sigma_of(sol.model, r);  // chart check
  const T er2 = sol.e * r * r;
  if (const auto* t = std::get_if<TypeI>(&sol.kind)) {
    const auto p = abcr_profiles_t(sol.model, t->a1, t->C, r);
    const auto [f1, f2] = f_pair_t(t->seed, p.R);
    return {(p.c * f1 - 1.0) / er2, (p.a * f2 + p.b) / er2};
  }
  const auto& tr = std::get<Trivial>(sol.kind);
  const double two_rho = 2.0 * sol.model.rho;
  T q(1.0);
  if (sol.model.kind == Geometry::Riemann) q = 1.0 - r * r / (two_rho * two_rho);
  if (sol.model.kind == Geometry::Lobachevsky) q = 1.0 + r * r / (two_rho * two_rho);
  return {T(-1.0) / er2, (tr.b1 * r + tr.b2 * q) / er2};
}

}  // namespace monopole_lab
