#include "monopole_lab/angular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "monopole_lab/errors.hpp"
#include "monopole_lab/wigner.hpp"

namespace monopole_lab {

namespace {
constexpr cplx kI(0.0, 1.0);
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  if (n < 1) throw ArgumentError("gauss_legendre: n must be positive");
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0, p1 = z;
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    double p0 = 1.0, p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (z * p1 - p0) / (z * z - 1.0);
    x[static_cast<std::size_t>(i)] = z;
    w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

AngularBasis::AngularBasis(std::vector<ComponentSpec> comps, HalfInt j_lo, HalfInt j_hi)
    : comps_(std::move(comps)), j_hi_(j_hi) {
  if (comps_.empty()) throw ArgumentError("AngularBasis: no components");
  if (j_hi < j_lo) throw ArgumentError("AngularBasis: empty j range");
  for (HalfInt j = j_lo; j <= j_hi; j = j + HalfInt(1)) {
    for (int c = 0; c < components(); ++c) {
      const HalfInt s = comps_[static_cast<std::size_t>(c)].sigma;
      if (!valid_projection(j, s)) continue;
      for (HalfInt m = -j; m <= j; m = m + HalfInt(1)) elems_.push_back({c, j, m});
    }
  }
  if (elems_.empty()) throw ArgumentError("AngularBasis: no admissible (j, sigma) pairs in range");
}

int AngularBasis::index_of(int comp, HalfInt j, HalfInt m) const {
  for (int i = 0; i < size(); ++i) {
    const auto& e = elems_[static_cast<std::size_t>(i)];
    if (e.comp == comp && e.j == j && e.m == m) return i;
  }
  return -1;
}

cplx AngularBasis::value(int i, double theta, double phi) const {
  const auto& e = element(i);
  const auto& c = component(e.comp);
  return std::polar(1.0, c.alpha * phi) * D_sigma(e.j, e.m, c.sigma, theta, phi);
}

cplx AngularBasis::d_theta(int i, double theta, double phi) const {
  const auto& e = element(i);
  const auto& c = component(e.comp);
  return std::polar(1.0, c.alpha * phi) * D_sigma_dtheta(e.j, e.m, c.sigma, theta, phi);
}

cplx AngularBasis::d_phi(int i, double theta, double phi) const {
  const auto& e = element(i);
  const auto& c = component(e.comp);
  return kI * (e.m.value() + c.alpha) * value(i, theta, phi);
}

int AngularBasis::quad_theta() const { return 2 * (j_hi_.doubled() / 2 + 1) + 8; }

int AngularBasis::quad_phi() const {
  double amax = 0.0;
  for (const auto& c : comps_) amax = std::max(amax, std::abs(c.alpha));
  return 4 * (j_hi_.doubled() / 2 + 1) + 8 + 4 * static_cast<int>(std::ceil(amax));
}

namespace {

struct Quadrature {
  std::vector<double> theta, phi, w;  // flattened grid
};

Quadrature make_quadrature(const AngularBasis& basis) {
  std::vector<double> x, wx;
  gauss_legendre(basis.quad_theta(), x, wx);
  const int nphi = basis.quad_phi();
  Quadrature q;
  for (std::size_t a = 0; a < x.size(); ++a) {
    const double th = std::acos(x[a]);
    for (int b = 0; b < nphi; ++b) {
      q.theta.push_back(th);
      q.phi.push_back((b + 0.5) * 2.0 * std::numbers::pi / nphi);
      q.w.push_back(wx[a] * 2.0 * std::numbers::pi / nphi);
    }
  }
  return q;
}

// Projects sampled images (per element: n_comp x n_points) onto the basis.
OperatorMatrix project(const AngularBasis& basis, const Quadrature& q, const std::vector<MatXc>& images) {
  const int N = basis.size();
  const int P = static_cast<int>(q.w.size());
  MatXc V(N, P);  // basis values
  for (int i = 0; i < N; ++i)
    for (int p = 0; p < P; ++p) V(i, p) = basis.value(i, q.theta[static_cast<std::size_t>(p)], q.phi[static_cast<std::size_t>(p)]);
  // Gram matrix (block diagonal in component).
  MatXc G = MatXc::Zero(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      if (basis.element(a).comp != basis.element(b).comp) continue;
      cplx s = 0.0;
      for (int p = 0; p < P; ++p) s += q.w[static_cast<std::size_t>(p)] * std::conj(V(a, p)) * V(b, p);
      G(a, b) = s;
    }
  Eigen::FullPivLU<MatXc> lu(G);
  OperatorMatrix out;
  out.M = MatXc::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    const MatXc& img = images[static_cast<std::size_t>(i)];
    VecXc rhs(N);
    for (int a = 0; a < N; ++a) {
      const int c = basis.element(a).comp;
      cplx s = 0.0;
      for (int p = 0; p < P; ++p) s += q.w[static_cast<std::size_t>(p)] * std::conj(V(a, p)) * img(c, p);
      rhs(a) = s;
    }
    const VecXc coef = lu.solve(rhs);
    out.M.col(i) = coef;
    // Closure: quadrature norm of the part outside the span.
    double norm2 = 0.0, res2 = 0.0;
    VecXc rec(basis.components());
    for (int p = 0; p < P; ++p) {
      rec.setZero();
      for (int a = 0; a < N; ++a) rec(basis.element(a).comp) += coef(a) * V(a, p);
      const double wp = q.w[static_cast<std::size_t>(p)];
      norm2 += wp * img.col(p).squaredNorm();
      res2 += wp * (img.col(p) - rec).squaredNorm();
    }
    if (norm2 > 1e-300) out.closure = std::max(out.closure, std::sqrt(res2 / norm2));
  }
  return out;
}

}  // namespace

OperatorMatrix operator_matrix(const AngularBasis& basis, const FirstOrderOperator& op) {
  const Quadrature q = make_quadrature(basis);
  const int n = basis.components();
  const int P = static_cast<int>(q.w.size());
  std::vector<MatXc> images(static_cast<std::size_t>(basis.size()), MatXc::Zero(n, P));
  std::vector<MatXc> At(static_cast<std::size_t>(P)), Ap(static_cast<std::size_t>(P)), Bm(static_cast<std::size_t>(P));
  for (int p = 0; p < P; ++p) {
    const double th = q.theta[static_cast<std::size_t>(p)], ph = q.phi[static_cast<std::size_t>(p)];
    At[static_cast<std::size_t>(p)] = op.A_theta ? op.A_theta(th, ph) : MatXc::Zero(n, n);
    Ap[static_cast<std::size_t>(p)] = op.A_phi ? op.A_phi(th, ph) : MatXc::Zero(n, n);
    Bm[static_cast<std::size_t>(p)] = op.B ? op.B(th, ph) : MatXc::Zero(n, n);
  }
  for (int i = 0; i < basis.size(); ++i) {
    const int c = basis.element(i).comp;
    MatXc& img = images[static_cast<std::size_t>(i)];
    for (int p = 0; p < P; ++p) {
      const double th = q.theta[static_cast<std::size_t>(p)], ph = q.phi[static_cast<std::size_t>(p)];
      const cplx v = basis.value(i, th, ph);
      const cplx dt = op.A_theta ? basis.d_theta(i, th, ph) : cplx(0.0);
      const cplx dp = op.A_phi ? basis.d_phi(i, th, ph) : cplx(0.0);
      const auto sp = static_cast<std::size_t>(p);
      img.col(p) = At[sp].col(c) * dt + Ap[sp].col(c) * dp + Bm[sp].col(c) * v;
    }
  }
  return project(basis, q, images);
}

OperatorMatrix operator_matrix(const AngularBasis& basis, const PointMapOperator& op) {
  const Quadrature q = make_quadrature(basis);
  const int n = basis.components();
  if (op.C.rows() != n || op.C.cols() != n) throw ArgumentError("operator_matrix: point-map dimension mismatch");
  const int P = static_cast<int>(q.w.size());
  std::vector<MatXc> images(static_cast<std::size_t>(basis.size()), MatXc::Zero(n, P));
  for (int i = 0; i < basis.size(); ++i) {
    const int c = basis.element(i).comp;
    for (int p = 0; p < P; ++p) {
      const double th = q.theta[static_cast<std::size_t>(p)], ph = q.phi[static_cast<std::size_t>(p)];
      images[static_cast<std::size_t>(i)].col(p) = op.C.col(c) * basis.value(i, std::numbers::pi - th, ph + std::numbers::pi);
    }
  }
  return project(basis, q, images);
}

OperatorMatrix operator_matrix(const AngularBasis& basis, const MatXc& constant) {
  FirstOrderOperator op;
  op.B = [constant](double, double) { return constant; };
  return operator_matrix(basis, op);
}

VecXc evaluate(const AngularBasis& basis, const VecXc& coef, double theta, double phi) {
  VecXc out = VecXc::Zero(basis.components());
  for (int i = 0; i < basis.size(); ++i)
    if (coef(i) != 0.0) out(basis.element(i).comp) += coef(i) * basis.value(i, theta, phi);
  return out;
}

}  // namespace monopole_lab
