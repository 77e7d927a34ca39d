#include "monopole_lab/bps.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>

namespace monopole_lab {

std::string seed_kind_name(SeedKind kind) {
  switch (kind) {
    case SeedKind::Rational: return "rational";
    case SeedKind::Hyperbolic: return "hyperbolic";
    case SeedKind::Trigonometric: return "trigonometric";
  }
  return "unknown";
}

SeedKind parse_seed_kind(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "rational" || s == "rat") return SeedKind::Rational;
  if (s == "hyperbolic" || s == "hyp") return SeedKind::Hyperbolic;
  if (s == "trigonometric" || s == "trig") return SeedKind::Trigonometric;
  throw ArgumentError("unknown seed family '" + name + "'");
}

namespace detail {
void check_seed_argument(const SeedFamily& seed, double y) {
  if (!std::isfinite(y)) throw DomainError("seed argument is not finite");
  double dist = std::abs(y);
  if (seed.kind == SeedKind::Trigonometric) {
    const double k = std::round(y / std::numbers::pi);
    dist = std::abs(y - k * std::numbers::pi);
  }
  if (dist < kSeedSingularGuard) throw SingularityError("seed pair evaluated within 1e-3 of a singular argument");
}
}  // namespace detail

SeedPair f_pair(const SeedFamily& seed, double x) {
  const auto [f1, f2] = f_pair_t(seed, x);
  return {f1, f2};
}

KPhi eval_K_Phi(const MonopoleSolution& sol, double r) {
  const auto v = eval_K_Phi_t(sol, r);
  return {v.K, v.Phi};
}

Abcr abcr_profiles(const CurvatureModel& model, double a1, double C, double r) {
  const auto p = abcr_profiles_t(model, a1, C, r);
  return {p.a, p.b, p.c, p.R};
}

double algebraic_relations_defect(double a1, double a2, double b1, double b2, int delta, double rho) {
  const double d = double(delta);
  const double r1 = 2.0 * a2 * b2 - d * a2;
  const double r2 = a1 * b2 + a2 * b1 + d * a1;
  const double r3 = a1 * b1 - 0.5 * b2 * a2 / (rho * rho) - d * 1.25 * a2 / (rho * rho);
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3)});
}

double profile_system_defect(const CurvatureModel& model, double a1, double C, double r) {
  const Jet rj = Jet::variable(r);
  const auto p = abcr_profiles_t(model, a1, C, rj);
  const Jet sig = sigma_of(model, rj);
  const double sp = sig.d1 / sig.v;
  const double lin_a = p.a.d2 + sp * (p.a.v / r - p.a.d1);
  const double lin_b = p.b.d2 + sp * (p.b.v / r - p.b.d1);
  const double c_rel = p.c.v - p.a.v / sig.v;
  const double R_rel = p.R.d1 - p.a.v / (r * sig.v);
  const double ab_rel = 2.0 * p.a.v * p.b.v - r * sig.v * (-3.0 * p.a.d1 + 2.0 * sp * p.a.v + p.a.v / r);
  return std::max({std::abs(lin_a), std::abs(lin_b), std::abs(c_rel), std::abs(R_rel), std::abs(ab_rel)});
}

namespace {

struct Derivs {
  double v, d1, d2;
};

/// 5-point central differences for value, first and second derivative.
Derivs fd5(const std::function<double(double)>& f, double r) {
  const double h = 1e-4 * std::max(1.0, r);
  const double fm2 = f(r - 2 * h), fm1 = f(r - h), f0 = f(r), fp1 = f(r + h), fp2 = f(r + 2 * h);
  return {f0, (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h), (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)};
}

FieldResidual assemble_field_residual(const CurvatureModel& model, double e, double r, const Derivs& K,
                                      const Derivs& P) {
  const Jet sig = sigma_of(model, Jet::variable(r));
  const double sp = sig.d1 / sig.v;
  const double er2K = e * r * r * K.v;
  FieldResidual out{};
  out.resPhi = P.d2 + 4.0 * P.d1 / r - 2.0 * e * P.v * (2.0 + er2K) * K.v - sp * (P.d1 + P.v / r);
  out.resK = K.d2 + 4.0 * K.d1 / r - e * P.v * P.v * (1.0 + er2K) / (sig.v * sig.v) -
             e * K.v * K.v * (3.0 + er2K) + sp * (K.d1 + 2.0 * K.v / r);
  return out;
}

}  // namespace

FieldResidual residual_field_equations(const MonopoleSolution& sol, double r, DerivativeMethod method) {
  if (method == DerivativeMethod::Jet) {
    const auto v = eval_K_Phi_t(sol, Jet::variable(r));
    return assemble_field_residual(sol.model, sol.e, r, {v.K.v, v.K.d1, v.K.d2}, {v.Phi.v, v.Phi.d1, v.Phi.d2});
  }
  const double h = 1e-4 * std::max(1.0, r);
  if (r - 2 * h < kMinRadius) throw DomainError("finite-difference stencil leaves the chart");
  if (sol.model.kind == Geometry::Lobachevsky && r + 2 * h >= 2.0 * sol.model.rho)
    throw DomainError("finite-difference stencil leaves the chart");
  const auto K = fd5([&](double x) { return eval_K_Phi(sol, x).K; }, r);
  const auto P = fd5([&](double x) { return eval_K_Phi(sol, x).Phi; }, r);
  return assemble_field_residual(sol.model, sol.e, r, K, P);
}

double trivial_phi_equation_residual(const CurvatureModel& model, double e, double b1, double b2, double r) {
  MonopoleSolution sol{model, Trivial{b1, b2}, e};
  return std::abs(residual_field_equations(sol, r).resPhi);
}

double dyon_scale(double c) {
  if (!(std::abs(c) < 1.0)) throw ParameterError("dyon parameter requires |c| < 1");
  return std::pow(1.0 - c * c, 0.25);
}

DyonSolution dyon_from_monopole(const MonopoleSolution& base, double c) {
  if (base.model.kind != Geometry::Euclid) throw ParameterError("dyon construction is only available in flat space");
  (void)dyon_scale(c);
  return DyonSolution{base, c};
}

namespace {
KPhiT<Jet> dyon_jets(const DyonSolution& d, double r, Jet& f) {
  const double s = dyon_scale(d.c);
  const auto base = eval_K_Phi_t(d.base, Jet::variable(r) * s);
  const double kscale = std::sqrt(1.0 - d.c * d.c);
  f = d.c * base.Phi;
  return {kscale * base.K, base.Phi};
}
}  // namespace

DyonFields eval_dyon(const DyonSolution& d, double r) {
  // Plain evaluation keeps c = 0 bit-identical to the monopole profile.
  const KPhi base = eval_K_Phi(d.base, r * dyon_scale(d.c));
  return {std::sqrt(1.0 - d.c * d.c) * base.K, base.Phi, d.c * base.Phi};
}

DyonResidual residual_dyon_equations(const DyonSolution& d, double r, DerivativeMethod method) {
  Derivs K{}, P{}, F{};
  if (method == DerivativeMethod::Jet) {
    Jet f;
    const auto v = dyon_jets(d, r, f);
    K = {v.K.v, v.K.d1, v.K.d2};
    P = {v.Phi.v, v.Phi.d1, v.Phi.d2};
    F = {f.v, f.d1, f.d2};
  } else {
    K = fd5([&](double x) { return eval_dyon(d, x).K; }, r);
    P = fd5([&](double x) { return eval_dyon(d, x).Phi; }, r);
    F = fd5([&](double x) { return eval_dyon(d, x).f; }, r);
  }
  const double e = d.base.e;
  const double er2K = e * r * r * K.v;
  DyonResidual out{};
  out.resPhi = P.d2 + 4.0 * P.d1 / r - 2.0 * e * P.v * (2.0 + er2K) * K.v;
  out.resF = F.d2 + 4.0 * F.d1 / r - 2.0 * e * F.v * (2.0 + er2K) * K.v;
  out.resK = K.d2 + 4.0 * K.d1 / r + e * (F.v * F.v - P.v * P.v) * (1.0 + er2K) - e * K.v * K.v * (3.0 + er2K);
  return out;
}

double W_profile(const MonopoleSolution& sol, double chi) {
  const double r = r_from_chi(sol.model, chi);
  if (const auto* t = std::get_if<TypeI>(&sol.kind)) {
    const auto p = abcr_profiles(sol.model, t->a1, t->C, r);
    return 0.5 * p.c * f_pair(t->seed, p.R).f1;
  }
  return 0.0;  // e r^2 K = -1 identically
}

double w_over_areal(const MonopoleSolution& sol, double chi) {
  if (const auto* t = std::get_if<TypeI>(&sol.kind)) {
    const double r = r_from_chi(sol.model, chi);
    const auto p = abcr_profiles(sol.model, t->a1, t->C, r);
    // c = a1 r / Sigma and r / Sigma equals the areal radius for S3 and H3, so
    // W / s = (1/2) a1 f1(R) without cancellation near chi = 0.
    return 0.5 * t->a1 * f_pair(t->seed, p.R).f1;
  }
  return 0.0;
}

nlohmann::json to_json(const MonopoleSolution& sol) {
  nlohmann::json j;
  j["model"] = geometry_name(sol.model.kind);
  j["rho"] = sol.model.rho;
  j["e"] = sol.e;
  if (const auto* t = std::get_if<TypeI>(&sol.kind)) {
    j["kind"] = "typeI";
    j["family"] = seed_kind_name(t->seed.kind);
    j["A"] = t->seed.A;
    j["B"] = t->seed.B;
    j["sign"] = t->seed.sign;
    j["a1"] = t->a1;
    j["C"] = t->C;
  } else {
    const auto& tr = std::get<Trivial>(sol.kind);
    j["kind"] = "trivial";
    j["b1"] = tr.b1;
    j["b2"] = tr.b2;
  }
  return j;
}

MonopoleSolution solution_from_json(const nlohmann::json& j) {
  MonopoleSolution sol;
  sol.model = make_model(parse_geometry(j.at("model").get<std::string>()), j.value("rho", 1.0));
  sol.e = j.value("e", 1.0);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "typeI" || kind == "typei") {
    TypeI t;
    t.seed.kind = parse_seed_kind(j.value("family", std::string("hyperbolic")));
    t.seed.A = j.value("A", 1.0);
    t.seed.B = j.value("B", 0.0);
    t.seed.sign = j.value("sign", 1);
    t.a1 = j.value("a1", 1.0);
    t.C = j.value("C", 0.0);
    sol.kind = t;
  } else if (kind == "trivial") {
    sol.kind = Trivial{j.value("b1", 0.0), j.value("b2", 1.0)};
  } else {
    throw ArgumentError("unknown solution kind '" + kind + "'");
  }
  return sol;
}

}  // namespace monopole_lab
