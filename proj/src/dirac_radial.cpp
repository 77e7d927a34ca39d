#include "monopole_lab/dirac_radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "monopole_lab/errors.hpp"
#include "monopole_lab/parallel.hpp"

namespace monopole_lab {

namespace {

constexpr cplx kI(0.0, 1.0);

double areal(const CurvatureModel& model, double x) {
  if (!(x > 0.0)) throw SingularityError("radial system evaluated at the origin");
  if (model.kind == Geometry::Riemann && x >= std::numbers::pi * model.rho)
    throw SingularityError("radial system evaluated at the antipode chi = pi");
  const double s = areal_radius(model, x);
  if (!(s > 0.0)) throw SingularityError("vanishing areal radius");
  return s;
}

double eval_or(const ScalarProfile& f, double x, double fallback) { return f ? f(x) : fallback; }

int sign_of(int s) {
  if (s != 1 && s != -1) throw ParameterError("quantum signs must be +1 or -1");
  return s;
}

}  // namespace

// --- Systems ----------------------------------------------------------------------

double AbelianRadialSystem::nu() const {
  const double jh = j.value() + 0.5;
  const double v = jh * jh - k * k;
  if (v < -1e-12) throw ParameterError("Abelian radial system: j below |k| - 1/2");
  return std::sqrt(std::max(0.0, v));
}

double DoubletRadialSystem::nu() const {
  if (!j.is_integer() || j < HalfInt(0)) throw ParameterError("doublet radial system: j must be a non-negative integer");
  const double jj = j.value();
  return std::sqrt(jj * (jj + 1.0));
}

int DoubletRadialSystem::dimension() const {
  switch (form) {
    case DoubletForm::Full8: return 8;
    case DoubletForm::MuReduced: return 2;
    case DoubletForm::WReduced: return 4;
    case DoubletForm::J0: return 2;
  }
  return 0;
}

int dimension(const RadialSystem& sys) {
  return std::visit([](const auto& s) { return s.dimension(); }, sys);
}

RadialMatrix doublet_full8_matrix(double epsilon, double m, double n, double w, double F, double Phi) {
  RadialMatrix M = RadialMatrix::Zero(8, 8);
  const cplx ep = epsilon + F, em = epsilon - F;
  const double mp = m + Phi, mm = m - Phi;
  enum { f1, f2, f3, f4, g1, g2, g3, g4 };
  M(f3, f3) = -kI * ep; M(f3, f4) = -n; M(f3, f1) = kI * mp;
  M(f4, f4) = kI * ep;  M(f4, f3) = -n; M(f4, g3) = -w; M(f4, f2) = -kI * mp;
  M(f1, f1) = kI * ep;  M(f1, f2) = -n; M(f1, f3) = -kI * mp;
  M(f2, f2) = -kI * ep; M(f2, f1) = -n; M(f2, g1) = -w; M(f2, f4) = kI * mp;
  M(g3, g3) = -kI * em; M(g3, g4) = -n; M(g3, f4) = -w; M(g3, g1) = kI * mm;
  M(g4, g4) = kI * em;  M(g4, g3) = -n; M(g4, g2) = -kI * mm;
  M(g1, g1) = kI * em;  M(g1, g2) = -n; M(g1, f2) = -w; M(g1, g3) = -kI * mm;
  M(g2, g2) = -kI * em; M(g2, g1) = -n; M(g2, g4) = kI * mm;
  return M;
}

RadialMatrix derivative_matrix(const AbelianRadialSystem& sys, double x) {
  const double s = areal(sys.model, x);
  const double n = sys.nu() / s;
  const double en = eval_or(sys.e_minus_nu_half, x, 1.0);
  const double emu = eval_or(sys.e_minus_mu_half, x, 1.0);
  if (!(emu > 0.0)) throw DomainError("metric factor e^{-mu/2} must be positive");
  const double eps = sys.epsilon * en, m = sys.m;
  RadialMatrix M;
  if (sys.form == AbelianForm::Full4) {
    M = RadialMatrix::Zero(4, 4);
    // (f1, f2, f3, f4) -> indices 0..3
    M(2, 2) = -kI * eps; M(2, 3) = -n; M(2, 0) = kI * m;
    M(3, 3) = kI * eps;  M(3, 2) = -n; M(3, 1) = -kI * m;
    M(0, 0) = kI * eps;  M(0, 1) = -n; M(0, 2) = -kI * m;
    M(1, 1) = -kI * eps; M(1, 0) = -n; M(1, 3) = kI * m;
  } else {
    const double d = sign_of(sys.delta);
    M = RadialMatrix::Zero(2, 2);
    M(0, 0) = -n; M(0, 1) = -(eps + d * m);
    M(1, 1) = n;  M(1, 0) = eps - d * m;
  }
  return M / emu;
}

RadialMatrix derivative_matrix(const DoubletRadialSystem& sys, double x) {
  const double s = areal(sys.model, x);
  const double n = sys.nu() / s;
  const double w = eval_or(sys.w_over_s, x, 0.0);
  const double eps = sys.epsilon, m = sys.m;
  RadialMatrix M;
  switch (sys.form) {
    case DoubletForm::Full8:
      return doublet_full8_matrix(eps, m, n, w, eval_or(sys.F_tilde, x, 0.0), eval_or(sys.Phi_tilde, x, 0.0));
    case DoubletForm::MuReduced: {
      if (w != 0.0) throw UnsupportedError("the mu-reduced doublet system requires W = 0");
      const double mu = sign_of(sys.mu);
      M = RadialMatrix::Zero(2, 2);
      M(0, 0) = kI * eps;  M(0, 1) = -n - kI * mu * m;
      M(1, 1) = -kI * eps; M(1, 0) = -n + kI * mu * m;
      return M;
    }
    case DoubletForm::WReduced: {
      const double d = sign_of(sys.delta);
      M = RadialMatrix::Zero(4, 4);
      M(2, 2) = -kI * eps; M(2, 3) = -n; M(2, 0) = kI * m;
      M(3, 3) = kI * eps;  M(3, 2) = -n; M(3, 1) = -kI * m - d * w;
      M(0, 0) = kI * eps;  M(0, 1) = -n; M(0, 2) = -kI * m;
      M(1, 1) = -kI * eps; M(1, 0) = -n; M(1, 3) = kI * m - d * w;
      return M;
    }
    case DoubletForm::J0: {
      if (sys.j != HalfInt(0)) throw ParameterError("the j = 0 doublet system requires j = 0");
      const double d = sign_of(sys.delta);
      // state (f2, f4)
      M = RadialMatrix::Zero(2, 2);
      M(0, 0) = -kI * eps; M(0, 1) = kI * m - d * w;
      M(1, 1) = kI * eps;  M(1, 0) = -kI * m - d * w;
      return M;
    }
  }
  throw ArgumentError("unknown doublet form");
}

RadialMatrix derivative_matrix(const RadialSystem& sys, double x) {
  return std::visit([x](const auto& s) { return derivative_matrix(s, x); }, sys);
}

StateVec rhs(const RadialSystem& sys, double x, const StateVec& y) {
  if (y.size() != dimension(sys)) throw ArgumentError("rhs: state dimension does not match the system");
  return derivative_matrix(sys, x) * y;
}

RadialSystem with_energy(const RadialSystem& sys, double epsilon) {
  return std::visit(
      [epsilon](auto s) -> RadialSystem {
        s.epsilon = epsilon;
        return s;
      },
      sys);
}

ScalarProfile w_over_s_profile(const MonopoleSolution& sol) {
  if (std::holds_alternative<Trivial>(sol.kind)) return {};
  const TypeI t = std::get<TypeI>(sol.kind);
  if (sol.model.kind == Geometry::Riemann && sol.model.rho == 1.0) {
    if (t.seed.A == 0.0) throw ParameterError("seed parameter A must be non-zero");
    return [t](double chi) {
      const double y = t.seed.A * (t.a1 * chi + t.C) + t.seed.B;
      double f1 = 0.0;
      switch (t.seed.kind) {
        case SeedKind::Rational: f1 = t.seed.A / y; break;
        case SeedKind::Hyperbolic: f1 = t.seed.A / std::sinh(y); break;
        case SeedKind::Trigonometric: f1 = t.seed.A / std::sin(y); break;
      }
      if (!std::isfinite(f1)) throw SingularityError("W profile singular inside the domain");
      return 0.5 * t.a1 * t.seed.sign * f1;
    };
  }
  return [sol](double chi) { return w_over_areal(sol, chi); };
}

// --- Integration -----------------------------------------------------------------------

std::vector<double> uniform_grid(double a, double b, int n) {
  if (n < 1) throw ArgumentError("uniform_grid: n must be positive");
  std::vector<double> g(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) g[static_cast<std::size_t>(i)] = a + (b - a) * i / n;
  g.back() = b;
  return g;
}

Trajectory integrate(const RadialSystem& sys, const std::vector<double>& grid, const StateVec& init) {
  if (grid.size() < 2) throw ArgumentError("integrate: grid needs at least two points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw ArgumentError("integrate: grid must be strictly increasing");
  if (init.size() != dimension(sys)) throw ArgumentError("integrate: initial state dimension mismatch");
  Trajectory t;
  t.x = grid;
  t.y.reserve(grid.size());
  t.y.push_back(init);
  StateVec y = init;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double x0 = grid[i - 1], h = grid[i] - grid[i - 1];
    const RadialMatrix M0 = derivative_matrix(sys, x0);
    const RadialMatrix Mh = derivative_matrix(sys, x0 + 0.5 * h);
    const RadialMatrix M1 = derivative_matrix(sys, x0 + h);
    const StateVec k1 = M0 * y;
    const StateVec k2 = Mh * (y + 0.5 * h * k1);
    const StateVec k3 = Mh * (y + 0.5 * h * k2);
    const StateVec k4 = M1 * (y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!y.allFinite()) throw DomainError("integrate: non-finite state");
    t.y.push_back(y);
  }
  return t;
}

double flux_mu_reduced(const StateVec& y) {
  if (y.size() < 2) throw ArgumentError("flux: state too short");
  return std::norm(y(0)) - std::norm(y(1));
}

double flux_j0(const StateVec& y) {
  if (y.size() != 2) throw ArgumentError("flux: j = 0 state must have two components");
  return std::norm(y(1)) - std::norm(y(0));
}

// --- Spectrum --------------------------------------------------------------------------------

namespace {

// Precomputed pieces of one half-interval in u = ln tan(chi/2): K(u) = P_a + eps P_b,
// sampled at u_0 + k h/2, k = 0..2 steps.
struct HalfSide {
  int steps = 0;
  double h = 0.0;
  std::vector<RadialMatrix> Pa, Pb;
  RadialMatrix R;                 // leading singular coefficient at the endpoint
  std::vector<cplx> lambda;       // regular exponents
  std::vector<Eigen::VectorXcd> v;
  double x_end = 0.0;             // distance of the start point from the singular endpoint
  int sign = 1;                   // +1 left end (x = chi), -1 right end (x = pi - chi)
};

struct Shooter {
  RadialSystem sys;
  int dim = 0;
  HalfSide left, right;
};

// M(chi) split as M_a + eps M_b.
void split(const RadialSystem& sys, double chi, RadialMatrix& Ma, RadialMatrix& Mb) {
  Ma = derivative_matrix(with_energy(sys, 0.0), chi);
  Mb = derivative_matrix(with_energy(sys, 1.0), chi) - Ma;
}

// Endpoint analysis in the local variable x (distance to the endpoint), with
// dy/dx = sign * M(chi(x)) y.
void analyse_endpoint(const RadialSystem& sys, HalfSide& side, double x_start) {
  auto chi_of = [&](double x) { return side.sign > 0 ? x : std::numbers::pi - x; };
  auto Ma_local = [&](double x) {
    RadialMatrix a, b;
    split(sys, chi_of(x), a, b);
    return RadialMatrix(double(side.sign) * a);
  };
  const double xr = 1e-6;
  const RadialMatrix h1 = xr * Ma_local(xr), h2 = 0.5 * xr * Ma_local(0.5 * xr);
  side.R = 2.0 * h2 - h1;
  side.x_end = x_start;
  Eigen::ComplexEigenSolver<RadialMatrix> es(side.R);
  side.lambda.clear();
  side.v.clear();
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i).real() > 1e-9) {
      side.lambda.push_back(es.eigenvalues()(i));
      side.v.push_back(es.eigenvectors().col(i).normalized());
    }
  }
}

RadialMatrix initial_block(const RadialSystem& sys, const HalfSide& side, double eps, int dim) {
  auto chi_of = [&](double x) { return side.sign > 0 ? x : std::numbers::pi - x; };
  auto M_local = [&](double x) {
    return RadialMatrix(double(side.sign) * derivative_matrix(with_energy(sys, eps), chi_of(x)));
  };
  const double x1 = 1e-4;
  const RadialMatrix g1 = M_local(x1) - side.R / x1;
  const RadialMatrix g2 = M_local(0.5 * x1) - side.R / (0.5 * x1);
  const RadialMatrix M0 = 2.0 * g2 - g1;
  RadialMatrix Y(dim, static_cast<int>(side.v.size()));
  const RadialMatrix Id = RadialMatrix::Identity(dim, dim);
  for (std::size_t c = 0; c < side.v.size(); ++c) {
    const RadialMatrix A = (side.lambda[c] + 1.0) * Id - side.R;
    Eigen::FullPivLU<RadialMatrix> lu(A);
    Eigen::VectorXcd c1 = Eigen::VectorXcd::Zero(dim);
    if (lu.isInvertible()) c1 = lu.solve(M0 * side.v[c]);
    Y.col(static_cast<int>(c)) = side.v[c] + side.x_end * c1;
  }
  return Y;
}

HalfSide build_side(const RadialSystem& sys, double chi_start, int steps, int sign) {
  HalfSide side;
  side.sign = sign;
  side.steps = steps;
  const double u0 = std::log(std::tan(0.5 * chi_start));
  side.h = (0.0 - u0) / steps;
  side.Pa.resize(static_cast<std::size_t>(2 * steps + 1));
  side.Pb.resize(static_cast<std::size_t>(2 * steps + 1));
  for (int k = 0; k <= 2 * steps; ++k) {
    const double u = u0 + 0.5 * side.h * k;
    const double chi = 2.0 * std::atan(std::exp(u));
    RadialMatrix a, b;
    split(sys, chi, a, b);
    const double s = std::sin(chi);
    side.Pa[static_cast<std::size_t>(k)] = s * a;
    side.Pb[static_cast<std::size_t>(k)] = s * b;
  }
  analyse_endpoint(sys, side, sign > 0 ? chi_start : std::numbers::pi - chi_start);
  return side;
}

RadialMatrix propagate(const HalfSide& side, RadialMatrix Y, double eps) {
  const double h = side.h;
  for (int i = 0; i < side.steps; ++i) {
    const auto a = static_cast<std::size_t>(2 * i);
    const RadialMatrix K0 = side.Pa[a] + eps * side.Pb[a];
    const RadialMatrix Kh = side.Pa[a + 1] + eps * side.Pb[a + 1];
    const RadialMatrix K1 = side.Pa[a + 2] + eps * side.Pb[a + 2];
    const RadialMatrix k1 = K0 * Y;
    const RadialMatrix k2 = Kh * (Y + 0.5 * h * k1);
    const RadialMatrix k3 = Kh * (Y + 0.5 * h * k2);
    const RadialMatrix k4 = K1 * (Y + h * k3);
    Y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return Y;
}

Shooter make_shooter(const SpectralProblem& p, int grid_n) {
  if (grid_n < 64) throw ArgumentError("spectrum: grid_n must be >= 64");
  if (!(p.chi_min > 0.0) || !(p.chi_max < std::numbers::pi) || !(p.chi_min < 0.5 * std::numbers::pi) ||
      !(p.chi_max > 0.5 * std::numbers::pi))
    throw ArgumentError("spectrum: need 0 < chi_min < pi/2 < chi_max < pi");
  const CurvatureModel model = std::visit([](const auto& s) { return s.model; }, p.system);
  if (model.kind != Geometry::Riemann || model.rho != 1.0)
    throw UnsupportedError("spectrum: only the unit 3-sphere has a discrete spectrum to compute");
  Shooter sh;
  sh.sys = p.system;
  sh.dim = dimension(p.system);
  sh.left = build_side(p.system, p.chi_min, grid_n / 2, +1);
  sh.right = build_side(p.system, p.chi_max, grid_n - grid_n / 2, -1);
  return sh;
}

cplx determinant(const Shooter& sh, double eps) {
  const RadialMatrix YL = propagate(sh.left, initial_block(sh.sys, sh.left, eps, sh.dim), eps);
  const RadialMatrix YR = propagate(sh.right, initial_block(sh.sys, sh.right, eps, sh.dim), eps);
  RadialMatrix D(sh.dim, sh.dim);
  D << YL, YR;
  return D.determinant();
}

double bisect(const Shooter& sh, double a, double b, cplx phase, double fa) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (b - a <= 1e-14 * std::max(1.0, std::abs(mid))) break;
    const double fm = (std::conj(phase) * determinant(sh, mid)).real();
    if (fm == 0.0) return mid;
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

struct Bracket {
  double a, b, fa;
};

}  // namespace

SpectralProblem make_spectral_problem(const RadialSystem& sys, int grid_n) {
  SpectralProblem p{sys};
  p.grid_n = grid_n;
  const double m = std::visit([](const auto& s) { return s.m; }, sys);
  p.e_min = 1e-6;
  p.e_max = m + 20.0;
  return p;
}

cplx matching_determinant(const SpectralProblem& problem, double eps, int grid_n) {
  const Shooter sh = make_shooter(problem, grid_n);
  if (static_cast<int>(sh.left.v.size()) * 2 != sh.dim || static_cast<int>(sh.right.v.size()) * 2 != sh.dim)
    throw DomainError("matching determinant undefined: endpoint not regular-singular");
  return determinant(sh, eps);
}

SpectrumResult spectrum_s3(const SpectralProblem& problem, int count) {
  if (count < 1) throw ArgumentError("spectrum: count must be >= 1");
  if (!(problem.e_max > problem.e_min)) throw ArgumentError("spectrum: empty energy window");
  if (!(problem.scan_step > 0.0)) throw ArgumentError("spectrum: scan step must be positive");
  SpectrumResult res;
  res.grid = problem.grid_n;
  const Shooter sh = make_shooter(problem, problem.grid_n);
  res.regular_left = static_cast<int>(sh.left.v.size());
  res.regular_right = static_cast<int>(sh.right.v.size());
  if (res.regular_left * 2 != sh.dim || res.regular_right * 2 != sh.dim) {
    res.diagnostic = "endpoint not regular-singular / BC undetermined (j_min-type)";
    return res;
  }
  const int npts = static_cast<int>(std::ceil((problem.e_max - problem.e_min) / problem.scan_step)) + 1;
  std::vector<double> es(static_cast<std::size_t>(npts));
  std::vector<cplx> ds(static_cast<std::size_t>(npts));
  for (int i = 0; i < npts; ++i)
    es[static_cast<std::size_t>(i)] = std::min(problem.e_max, problem.e_min + i * problem.scan_step);
  parallel_for(npts, problem.threads, [&](int i) {
    ds[static_cast<std::size_t>(i)] = determinant(sh, es[static_cast<std::size_t>(i)]);
  });
  std::size_t imax = 0;
  double dmax = 0.0;
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (std::abs(ds[i]) > dmax) dmax = std::abs(ds[i]), imax = i;
  if (!(dmax > 0.0) || !std::isfinite(dmax)) {
    res.diagnostic = "matching determinant vanishes or overflows on the scan";
    return res;
  }
  const cplx phase = ds[imax] / std::abs(ds[imax]);
  double imag_max = 0.0;
  std::vector<Bracket> brackets;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const cplx r = std::conj(phase) * ds[i];
    imag_max = std::max(imag_max, std::abs(r.imag()));
    if (i > 0) {
      const double f0 = (std::conj(phase) * ds[i - 1]).real(), f1 = r.real();
      if ((f0 < 0) != (f1 < 0) || f1 == 0.0) brackets.push_back({es[i - 1], es[i], f0});
    }
  }
  res.complex_residual = imag_max / dmax;
  if (brackets.empty()) {
    res.diagnostic = "no sign change of the matching determinant in the scanned window";
    return res;
  }
  if (static_cast<int>(brackets.size()) > count) brackets.resize(static_cast<std::size_t>(count));
  res.eigenvalues.resize(brackets.size());
  parallel_for(static_cast<int>(brackets.size()), problem.threads, [&](int i) {
    const auto& b = brackets[static_cast<std::size_t>(i)];
    res.eigenvalues[static_cast<std::size_t>(i)] = bisect(sh, b.a, b.b, phase, b.fa);
  });
  // Refinement on the doubled grid.
  const Shooter sh2 = make_shooter(problem, 2 * problem.grid_n);
  const cplx d2 = determinant(sh2, es[imax]);
  const cplx phase2 = d2 / std::abs(d2);
  res.eigenvalues_refined.assign(res.eigenvalues.size(), std::numeric_limits<double>::quiet_NaN());
  res.drift.assign(res.eigenvalues.size(), std::numeric_limits<double>::quiet_NaN());
  parallel_for(static_cast<int>(brackets.size()), problem.threads, [&](int i) {
    double a = brackets[static_cast<std::size_t>(i)].a, b = brackets[static_cast<std::size_t>(i)].b;
    for (int grow = 0; grow < 4; ++grow) {
      const double fa = (std::conj(phase2) * determinant(sh2, a)).real();
      const double fb = (std::conj(phase2) * determinant(sh2, b)).real();
      if ((fa < 0) != (fb < 0) || fb == 0.0) {
        const double e2 = bisect(sh2, a, b, phase2, fa);
        const double e1 = res.eigenvalues[static_cast<std::size_t>(i)];
        res.eigenvalues_refined[static_cast<std::size_t>(i)] = e2;
        res.drift[static_cast<std::size_t>(i)] = std::abs(e2 - e1) / std::max(1.0, std::abs(e2));
        return;
      }
      const double w = b - a;
      a -= 0.5 * w;
      b += 0.5 * w;
    }
  });
  if (static_cast<int>(res.eigenvalues.size()) < count)
    res.diagnostic = "only " + std::to_string(res.eigenvalues.size()) + " eigenvalue(s) found in the scanned window";
  return res;
}

// --- Bound state -------------------------------------------------------------------------------

BoundStateValue bound_state_jmin(double epsilon, double m, double r) {
  if (!(m > 0.0)) throw ParameterError("bound_state_jmin: mass must be positive");
  if (!(std::abs(epsilon) < m)) throw ParameterError("bound_state_jmin: decaying branch needs |epsilon| < m");
  if (!(r >= 0.0)) throw DomainError("bound_state_jmin: r must be non-negative");
  const double kappa = std::sqrt((m - epsilon) * (m + epsilon));
  const double f = std::exp(-kappa * r);
  return {f, (epsilon - kI * kappa) * f / m, kappa};
}

double bound_state_residual(double epsilon, double m, double r) {
  const auto b = bound_state_jmin(epsilon, m, r);
  const double f2 = b.kappa * b.kappa * b.f;  // exact second derivative
  return std::abs(f2 + (epsilon * epsilon - m * m) * b.f);
}

// --- Factorization -------------------------------------------------------------------------------

AbelianSolution solve_abelian(double k, HalfInt j, double epsilon, double m, int mu, const CurvatureModel& model,
                              const std::vector<double>& grid, cplx a, cplx b) {
  AbelianRadialSystem sys;
  sys.epsilon = epsilon;
  sys.m = m;
  sys.k = k;
  sys.j = j;
  sys.model = model;
  sys.form = AbelianForm::Full4;
  const double u = sign_of(mu);
  const bool jmin = std::abs(j.value() - (std::abs(k) - 0.5)) < 1e-12;
  StateVec y0(4);
  if (jmin) {
    if (k > 0) y0 << a, 0.0, b, 0.0;
    else y0 << 0.0, a, 0.0, b;
  } else {
    y0 << a, b, u * b, u * a;
  }
  return AbelianSolution{k, j, epsilon, m, mu, model, integrate(RadialSystem(sys), grid, y0)};
}

FactorizedDoublet factorize_doublet(const AbelianSolution& minus, const AbelianSolution& plus, double A, int delta,
                                    int mu) {
  if (minus.k != -0.5 || plus.k != 0.5) throw ParameterError("factorize_doublet: expects eg = -1/2 and eg = +1/2 inputs");
  if (minus.j != plus.j || minus.epsilon != plus.epsilon || minus.m != plus.m || minus.mu != plus.mu ||
      minus.model.kind != plus.model.kind || minus.model.rho != plus.model.rho)
    throw ParameterError("factorize_doublet: the two Abelian solutions must share (epsilon, j, m, mu, model)");
  if (minus.traj.x != plus.traj.x) throw ParameterError("factorize_doublet: Abelian solutions on different grids");
  const bool j0 = minus.j == HalfInt(0);
  const cplx c = (j0 ? 1.0 : double(sign_of(mu))) * double(sign_of(delta)) * std::polar(1.0, A);
  AbelianRadialSystem am;
  am.epsilon = minus.epsilon;
  am.m = minus.m;
  am.k = -0.5;
  am.j = minus.j;
  am.model = minus.model;
  AbelianRadialSystem ap = am;
  ap.k = 0.5;
  DoubletRadialSystem ds;
  ds.model = minus.model;
  ds.epsilon = minus.epsilon;
  ds.m = minus.m;
  ds.j = minus.j;
  ds.form = DoubletForm::Full8;
  FactorizedDoublet out;
  out.traj.x = minus.traj.x;
  double worst = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < minus.traj.x.size(); ++i) {
    const double x = minus.traj.x[i];
    StateVec Y(8), dY(8);
    const StateVec dm = rhs(RadialSystem(am), x, minus.traj.y[i]);
    const StateVec dp = rhs(RadialSystem(ap), x, plus.traj.y[i]);
    Y << minus.traj.y[i], c * plus.traj.y[i];
    dY << dm, c * dp;
    out.traj.y.push_back(Y);
    worst = std::max(worst, (dY - rhs(RadialSystem(ds), x, Y)).cwiseAbs().maxCoeff());
    scale = std::max(scale, Y.cwiseAbs().maxCoeff());
  }
  out.residual = scale > 0.0 ? worst / scale : worst;
  return out;
}

double reduction_consistency(HalfInt j, double epsilon, double m, int delta, int mu, double A,
                             const std::vector<double>& grid, cplx f1, cplx f2) {
  DoubletRadialSystem full;
  full.epsilon = epsilon;
  full.m = m;
  full.j = j;
  full.delta = delta;
  full.mu = mu;
  full.form = DoubletForm::Full8;
  DoubletRadialSystem red = full;
  red.form = DoubletForm::MuReduced;
  const double u = sign_of(mu);
  const cplx ph = double(sign_of(delta)) * std::polar(1.0, A);
  StateVec y8(8), y2(2);
  const cplx f3 = u * f2, f4 = u * f1;
  y8 << f1, f2, f3, f4, ph * f4, ph * f3, ph * f2, ph * f1;
  y2 << f1, f2;
  const Trajectory t8 = integrate(RadialSystem(full), grid, y8);
  const Trajectory t2 = integrate(RadialSystem(red), grid, y2);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const StateVec& a = t8.y[i];
    const StateVec& b = t2.y[i];
    const cplx g3 = u * b(1), g4 = u * b(0);
    StateVec expect(8);
    expect << b(0), b(1), g3, g4, ph * g4, ph * g3, ph * b(1), ph * b(0);
    worst = std::max(worst, (a - expect).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace monopole_lab
