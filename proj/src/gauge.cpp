#include "monopole_lab/gauge.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

#include "monopole_lab/errors.hpp"
#include "monopole_lab/parallel.hpp"

namespace monopole_lab {

Mat3 cross_matrix(const Vec3& c) {
  Mat3 m;
  m << 0.0, -c.z(), c.y(), c.z(), 0.0, -c.x(), -c.y(), c.x(), 0.0;
  return m;
}

Mat3 rotation_from_gibbs(const Vec3& c) {
  const Mat3 cx = cross_matrix(c);
  return Mat3::Identity() + 2.0 * (cx + cx * cx) / (1.0 + c.squaredNorm());
}

Mat3 gibbs_delta(const Vec3& c) { return -2.0 * (Mat3::Identity() + cross_matrix(c)) / (1.0 + c.squaredNorm()); }

Vec3 gibbs_compose(const Vec3& c1, const Vec3& c2) {
  const double den = 1.0 - c1.dot(c2);
  if (std::abs(den) < 1e-300) throw DomainError("gibbs_compose: composite rotation by pi has no Gibbs vector");
  return (c1 + c2 + c2.cross(c1)) / den;
}

Vec3 gibbs_between(const Vec3& B, const Vec3& D) {
  const double nb = B.norm(), nd = D.norm();
  if (nb == 0.0 || nd == 0.0) throw ArgumentError("gibbs_between: vectors must be non-zero");
  const Vec3 b = B / nb, d = D / nd;
  const double den = 1.0 + b.dot(d);
  if (den < 1e-12) throw DomainError("gibbs_between: antiparallel vectors (rotation by pi is singular)");
  return b.cross(d) / den;
}

GaugeFieldSample gauge_transform(const GaugeFieldSample& s, const GibbsField& field, const Point4& x, double e,
                                 GradientMethod method) {
  const Vec3 c = field.c(x);
  const Mat3 O = rotation_from_gibbs(c);
  const Mat3 Dl = gibbs_delta(c);
  std::array<Vec3, 4> grad;
  const bool analytic = method == GradientMethod::Analytic || (method == GradientMethod::Auto && field.grad);
  if (analytic) {
    if (!field.grad) throw ArgumentError("gauge_transform: analytic gradient requested but not available");
    grad = field.grad(x);
  } else {
    for (int a = 0; a < 4; ++a) {
      Point4 xp = x, xm = x;
      xp[a] += kGaugeFdStep;
      xm[a] -= kGaugeFdStep;
      grad[a] = (field.c(xp) - field.c(xm)) / (2.0 * kGaugeFdStep);
    }
  }
  GaugeFieldSample out;
  out.Phi = O * s.Phi;
  for (int a = 0; a < 4; ++a) out.W[a] = O * s.W[a] + Dl * grad[a] / e;
  return out;
}

GaugeFieldSample hedgehog_sample(const RadialValues& v, double r, double th, double ph) {
  const double st = std::sin(th), ct = std::cos(th), sp = std::sin(ph), cp = std::cos(ph);
  const Vec3 n(st * cp, st * sp, ct);
  GaugeFieldSample s;
  s.Phi = r * v.Phi * n;
  s.W[kT] = r * v.f * n;
  s.W[kR] = Vec3::Zero();
  s.W[kTheta] = r * r * v.K * Vec3(-sp, cp, 0.0);
  s.W[kPhi] = r * r * v.K * st * Vec3(-ct * cp, -ct * sp, st);
  return s;
}

GaugeFieldSample dirac_gauge_form(const RadialValues& v, double r, double th, double ph, double e) {
  const double st = std::sin(th), ct = std::cos(th), sp = std::sin(ph), cp = std::cos(ph);
  const double q = r * r * v.K + 1.0 / e;
  GaugeFieldSample s;
  s.Phi = Vec3(0.0, 0.0, r * v.Phi);
  s.W[kT] = Vec3(0.0, 0.0, r * v.f);
  s.W[kR] = Vec3::Zero();
  s.W[kTheta] = q * Vec3(-sp, cp, 0.0);
  s.W[kPhi] = Vec3(-q * st * cp, -q * st * sp, (ct - 1.0) / e);
  return s;
}

GaugeFieldSample schwinger_gauge_form(const RadialValues& v, double r, double th, double /*ph*/, double e) {
  const double st = std::sin(th), ct = std::cos(th);
  const double q = r * r * v.K + 1.0 / e;
  GaugeFieldSample s;
  s.Phi = Vec3(0.0, 0.0, r * v.Phi);
  s.W[kT] = Vec3(0.0, 0.0, r * v.f);
  s.W[kR] = Vec3::Zero();
  s.W[kTheta] = Vec3(0.0, q, 0.0);
  s.W[kPhi] = Vec3(-q * st, 0.0, ct / e);
  return s;
}

std::string frame_name(IsoGaugeFrame f) {
  switch (f) {
    case IsoGaugeFrame::Cartesian: return "cartesian";
    case IsoGaugeFrame::Dirac: return "dirac";
    case IsoGaugeFrame::Schwinger: return "schwinger";
  }
  return "unknown";
}

IsoGaugeFrame parse_frame(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "cartesian" || s == "c") return IsoGaugeFrame::Cartesian;
  if (s == "dirac" || s == "d") return IsoGaugeFrame::Dirac;
  if (s == "schwinger" || s == "s") return IsoGaugeFrame::Schwinger;
  throw ArgumentError("unknown isotopic frame '" + name + "'");
}

namespace {
double half_sec2(double a) {
  const double c = std::cos(0.5 * a);
  return 0.5 / (c * c);
}
GibbsField negate(const GibbsField& f) {
  GibbsField g;
  g.name = "-(" + f.name + ")";
  auto c = f.c;
  g.c = [c](const Point4& x) -> Vec3 { return -c(x); };
  if (f.grad) {
    auto gr = f.grad;
    g.grad = [gr](const Point4& x) {
      auto v = gr(x);
      for (auto& w : v) w = -w;
      return v;
    };
  }
  return g;
}
}  // namespace

GibbsField cartesian_to_dirac_field() {
  GibbsField f;
  f.name = "cartesian->dirac";
  f.c = [](const Point4& x) -> Vec3 {
    const double t = std::tan(0.5 * x[kTheta]);
    return t * Vec3(std::sin(x[kPhi]), -std::cos(x[kPhi]), 0.0);
  };
  f.grad = [](const Point4& x) {
    const double t = std::tan(0.5 * x[kTheta]);
    const double sp = std::sin(x[kPhi]), cp = std::cos(x[kPhi]);
    std::array<Vec3, 4> g{Vec3::Zero(), Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};
    g[kTheta] = half_sec2(x[kTheta]) * Vec3(sp, -cp, 0.0);
    g[kPhi] = t * Vec3(cp, sp, 0.0);
    return g;
  };
  return f;
}

GibbsField dirac_to_schwinger_field() {
  GibbsField f;
  f.name = "dirac->schwinger";
  f.c = [](const Point4& x) -> Vec3 { return Vec3(0.0, 0.0, -std::tan(0.5 * x[kPhi])); };
  f.grad = [](const Point4& x) {
    std::array<Vec3, 4> g{Vec3::Zero(), Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};
    g[kPhi] = Vec3(0.0, 0.0, -half_sec2(x[kPhi]));
    return g;
  };
  return f;
}

GibbsField cartesian_to_schwinger_field() {
  GibbsField f;
  f.name = "cartesian->schwinger";
  f.c = [](const Point4& x) -> Vec3 {
    const double t = std::tan(0.5 * x[kTheta]), u = std::tan(0.5 * x[kPhi]);
    return Vec3(t * u, -t, -u);
  };
  f.grad = [](const Point4& x) {
    const double t = std::tan(0.5 * x[kTheta]), u = std::tan(0.5 * x[kPhi]);
    const double st = half_sec2(x[kTheta]), sp = half_sec2(x[kPhi]);
    std::array<Vec3, 4> g{Vec3::Zero(), Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};
    g[kTheta] = Vec3(st * u, -st, 0.0);
    g[kPhi] = Vec3(t * sp, 0.0, -sp);
    return g;
  };
  return f;
}

GibbsField transition_field(IsoGaugeFrame from, IsoGaugeFrame to) {
  using F = IsoGaugeFrame;
  if (from == to) {
    GibbsField id;
    id.name = "identity";
    id.c = [](const Point4&) -> Vec3 { return Vec3::Zero(); };
    id.grad = [](const Point4&) { return std::array<Vec3, 4>{Vec3::Zero(), Vec3::Zero(), Vec3::Zero(), Vec3::Zero()}; };
    return id;
  }
  if (from == F::Cartesian && to == F::Dirac) return cartesian_to_dirac_field();
  if (from == F::Dirac && to == F::Schwinger) return dirac_to_schwinger_field();
  if (from == F::Cartesian && to == F::Schwinger) return cartesian_to_schwinger_field();
  return negate(transition_field(to, from));
}

GaugeFieldSample expected_form(IsoGaugeFrame frame, const RadialValues& v, double r, double th, double ph, double e) {
  switch (frame) {
    case IsoGaugeFrame::Cartesian: return hedgehog_sample(v, r, th, ph);
    case IsoGaugeFrame::Dirac: return dirac_gauge_form(v, r, th, ph, e);
    case IsoGaugeFrame::Schwinger: return schwinger_gauge_form(v, r, th, ph, e);
  }
  throw ArgumentError("unknown frame");
}

Mat3 cartesian_schwinger_matrix(double th, double ph) {
  const double st = std::sin(th), ct = std::cos(th), sp = std::sin(ph), cp = std::cos(ph);
  Mat3 m;
  m << ct * cp, ct * sp, -st, -sp, cp, 0.0, st * cp, st * sp, ct;
  return m;
}

std::array<Vec3, 4> covariant_derivative(const std::function<GaugeFieldSample(const Point4&)>& field, const Point4& x,
                                         double e, double h) {
  const GaugeFieldSample s0 = field(x);
  std::array<Vec3, 4> out;
  for (int a = 0; a < 4; ++a) {
    Point4 xp = x, xm = x;
    xp[a] += h;
    xm[a] -= h;
    const Vec3 d = (field(xp).Phi - field(xm).Phi) / (2.0 * h);
    out[a] = d + e * s0.W[a].cross(s0.Phi);
  }
  return out;
}

GaugeVerifyReport verify_gauge_transition(IsoGaugeFrame from, IsoGaugeFrame to, const RadialValues& v, double r,
                                          double e, int n, GradientMethod method, int threads) {
  if (n < 1) throw ArgumentError("grid size must be positive");
  const GibbsField field = transition_field(from, to);
  std::vector<double> dphi(n, 0.0), dw(n, 0.0);
  parallel_for(n, threads, [&](int i) {
    const double th = (i + 0.5) * std::numbers::pi / n;
    for (int jj = 0; jj < n; ++jj) {
      const double ph = (jj + 0.5) * 2.0 * std::numbers::pi / n;
      const Point4 x{0.0, r, th, ph};
      const auto got = gauge_transform(expected_form(from, v, r, th, ph, e), field, x, e, method);
      const auto want = expected_form(to, v, r, th, ph, e);
      dphi[i] = std::max(dphi[i], (got.Phi - want.Phi).cwiseAbs().maxCoeff());
      for (int a = 0; a < 4; ++a) dw[i] = std::max(dw[i], (got.W[a] - want.W[a]).cwiseAbs().maxCoeff());
    }
  });
  GaugeVerifyReport rep;
  rep.from = from;
  rep.to = to;
  rep.grid = n;
  rep.max_defect_Phi = *std::max_element(dphi.begin(), dphi.end());
  rep.max_defect_W = *std::max_element(dw.begin(), dw.end());
  return rep;
}

// --- U(1) ---------------------------------------------------------------------

std::string abelian_gauge_name(AbelianGauge g) {
  switch (g) {
    case AbelianGauge::Schwinger: return "schwinger";
    case AbelianGauge::Dirac: return "dirac";
    case AbelianGauge::WuYangN: return "wu-yang-n";
    case AbelianGauge::WuYangS: return "wu-yang-s";
  }
  return "unknown";
}

AbelianGauge parse_abelian_gauge(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "schwinger") return AbelianGauge::Schwinger;
  if (s == "dirac") return AbelianGauge::Dirac;
  if (s == "wu-yang-n" || s == "wuyang-n" || s == "n") return AbelianGauge::WuYangN;
  if (s == "wu-yang-s" || s == "wuyang-s" || s == "s") return AbelianGauge::WuYangS;
  throw ArgumentError("unknown U(1) gauge '" + name + "'");
}

double abelian_potential(AbelianGauge gauge, double g, double theta, double overlap) {
  if (theta < 0.0 || theta > std::numbers::pi) throw DomainError("abelian_potential: theta outside [0, pi]");
  const double ct = std::cos(theta);
  switch (gauge) {
    case AbelianGauge::Schwinger: return g * ct;
    case AbelianGauge::Dirac: return g * (ct - 1.0);
    case AbelianGauge::WuYangN:
      if (theta >= 0.5 * std::numbers::pi + overlap) throw DomainError("abelian_potential: outside the northern chart");
      return g * (ct - 1.0);
    case AbelianGauge::WuYangS:
      if (theta <= 0.5 * std::numbers::pi - overlap) throw DomainError("abelian_potential: outside the southern chart");
      return g * (ct + 1.0);
  }
  throw ArgumentError("unknown gauge");
}

double u1_alpha(AbelianGauge gauge, double k) {
  switch (gauge) {
    case AbelianGauge::Schwinger: return 0.0;
    case AbelianGauge::Dirac: return k;
    case AbelianGauge::WuYangN: return k;
    case AbelianGauge::WuYangS: return -k;
  }
  return 0.0;
}

U1FrameData u1_frame_data(AbelianGauge gauge, double k) {
  const double a = u1_alpha(gauge, k);
  std::string form = "l3";
  if (gauge == AbelianGauge::Dirac || gauge == AbelianGauge::WuYangN) form = "l3 - k";
  if (gauge == AbelianGauge::WuYangS) form = "l3 + k";
  return {gauge, a, -a, form};
}

std::complex<double> u1_transition_phase(AbelianGauge from, AbelianGauge to, double k, double phi) {
  return std::polar(1.0, (u1_alpha(to, k) - u1_alpha(from, k)) * phi);
}

}  // namespace monopole_lab
