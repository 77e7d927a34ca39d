#include "monopole_lab/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "monopole_lab/dirac_radial.hpp"
#include "monopole_lab/errors.hpp"
#include "monopole_lab/wigner.hpp"

namespace monopole_lab {

namespace {

constexpr cplx kI(0.0, 1.0);

HalfInt spin_half(int c) { return (c % 2 == 0) ? kHalf : -kHalf; }

double max_abs(const MatXc& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

MatXc to_dyn(const Mat4c& m) { return MatXc(m); }
MatXc to_dyn(const Mat8c& m) { return MatXc(m); }

Mat8c iso_identity(const Mat4c& spin) { return iso_spin(Mat2c::Identity(), spin); }

// L_c(theta) and s3 of a realization.
double realization_L(const Realization& r, int c, double theta) {
  const double k = r.param.value();
  switch (r.kind) {
    case RealizationKind::PauliLambda: return k;
    case RealizationKind::AbelianK: return spin_projection(c) - k;
    case RealizationKind::DoubletSchwinger: return spin_projection(c % 4) + (c < 4 ? 0.5 : -0.5);
    case RealizationKind::DiracGauge: return spin_projection(c) - k + k * std::cos(theta);
    case RealizationKind::WuYang:
      return spin_projection(c) - k + (r.chart >= 0 ? 1.0 : -1.0) * k * std::cos(theta);
  }
  return 0.0;
}

double realization_s3(const Realization& r) {
  const double k = r.param.value();
  switch (r.kind) {
    case RealizationKind::DiracGauge: return -k;
    case RealizationKind::WuYang: return r.chart >= 0 ? -k : k;
    default: return 0.0;
  }
}

EigenFit fit(const OperatorMatrix& op, const VecXc& v) {
  const double n2 = v.squaredNorm();
  if (n2 == 0.0) throw ArgumentError("eigen fit: zero state");
  const VecXc w = op.M * v;
  EigenFit f;
  f.eigenvalue = v.dot(w) / n2;
  f.defect = (w - f.eigenvalue * v).norm() / std::sqrt(n2);
  f.closure = op.closure;
  return f;
}

Eigen::Vector4cd eval_abelian(const AbelianState& s, double theta, double phi) {
  Eigen::Vector4cd out;
  for (int c = 0; c < 4; ++c) {
    const HalfInt sigma = s.k - spin_half(c);
    out(c) = valid_projection(s.j, sigma) ? s.f[static_cast<std::size_t>(c)] * D_sigma(s.j, s.m, sigma, theta, phi) : 0.0;
  }
  return out;
}

double phase_aligned_defect(const Mat2c& target, const Mat2c& candidate) {
  const cplx t = (candidate.adjoint() * target).trace();
  const cplx ph = std::abs(t) > 0.0 ? t / std::abs(t) : cplx(1.0);
  return (target - ph * candidate).cwiseAbs().maxCoeff();
}

// Applies a first-order operator to an Abelian state pointwise on a midpoint grid.
// Used where the images of individual components leave the (j, sigma_c) span
// (j_min states) so that a basis projection would be meaningless.
struct PointwiseFit {
  EigenFit fit;
  double image_ratio = 0.0;  // max |O psi| / max |psi|
};

PointwiseFit pointwise_fit(const FirstOrderOperator& op, const AbelianState& s, int n = 24) {
  std::vector<Eigen::Vector4cd> in, out;
  double worst = 0.0, scale = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const double th = (a + 0.5) * std::numbers::pi / n, ph = (b + 0.5) * 2.0 * std::numbers::pi / n;
      Eigen::Vector4cd psi, dth, dph;
      for (int c = 0; c < 4; ++c) {
        const HalfInt sigma = s.k - spin_half(c);
        const cplx f = s.f[static_cast<std::size_t>(c)];
        const bool ok = valid_projection(s.j, sigma) && f != 0.0;
        psi(c) = ok ? f * D_sigma(s.j, s.m, sigma, th, ph) : 0.0;
        dth(c) = ok ? f * D_sigma_dtheta(s.j, s.m, sigma, th, ph) : 0.0;
        dph(c) = kI * s.m.value() * psi(c);
      }
      const Eigen::Vector4cd img = op.A_theta(th, ph) * dth + op.A_phi(th, ph) * dph + op.B(th, ph) * psi;
      in.push_back(psi);
      out.push_back(img);
      worst = std::max(worst, img.cwiseAbs().maxCoeff());
      scale = std::max(scale, psi.cwiseAbs().maxCoeff());
    }
  if (scale == 0.0) throw ArgumentError("pointwise_fit: zero state");
  cplx num = 0.0;
  double den = 0.0;
  for (std::size_t p = 0; p < in.size(); ++p) {
    num += in[p].dot(out[p]);
    den += in[p].squaredNorm();
  }
  PointwiseFit r;
  r.fit.eigenvalue = num / den;
  double res = 0.0;
  for (std::size_t p = 0; p < in.size(); ++p) res += (out[p] - r.fit.eigenvalue * in[p]).squaredNorm();
  r.fit.defect = std::sqrt(res / den);
  r.image_ratio = worst / scale;
  return r;
}

}  // namespace

// --- Realizations ------------------------------------------------------------------

std::string realization_name(const Realization& r) {
  switch (r.kind) {
    case RealizationKind::PauliLambda: return "pauli(lambda=" + r.param.str() + ")";
    case RealizationKind::AbelianK: return "abelian(k=" + r.param.str() + ")";
    case RealizationKind::DoubletSchwinger: return "doublet-schwinger";
    case RealizationKind::DiracGauge: return "dirac-gauge(k=" + r.param.str() + ")";
    case RealizationKind::WuYang:
      return std::string("wu-yang-") + (r.chart >= 0 ? "n" : "s") + "(k=" + r.param.str() + ")";
  }
  return "unknown";
}

std::vector<ComponentSpec> realization_components(const Realization& r) {
  std::vector<ComponentSpec> out;
  const HalfInt k = r.param;
  switch (r.kind) {
    case RealizationKind::PauliLambda: out.push_back({-k, 0.0}); break;
    case RealizationKind::AbelianK:
      for (int c = 0; c < 4; ++c) out.push_back({k - spin_half(c), 0.0});
      break;
    case RealizationKind::DoubletSchwinger:
      for (int c = 0; c < 8; ++c) out.push_back({doublet_sigma(c), 0.0});
      break;
    case RealizationKind::DiracGauge:
      for (int c = 0; c < 4; ++c) out.push_back({k - spin_half(c), k.value()});
      break;
    case RealizationKind::WuYang:
      for (int c = 0; c < 4; ++c) out.push_back({k - spin_half(c), r.chart >= 0 ? k.value() : -k.value()});
      break;
  }
  return out;
}

HalfInt realization_jmin(const Realization& r) {
  HalfInt best = HalfInt::from_doubled(1 << 20);
  for (const auto& c : realization_components(r)) best = std::min(best, c.sigma.abs());
  return best;
}

AngularBasis realization_basis(const Realization& r, HalfInt jmax) {
  const HalfInt jmin = realization_jmin(r);
  HalfInt jhi = jmax;
  if (!(jhi - jmin).is_integer()) jhi = jhi - kHalf;
  if (jhi < jmin) throw ArgumentError("realization_basis: jmax below the smallest admissible j");
  return AngularBasis(realization_components(r), jmin, jhi);
}

std::array<FirstOrderOperator, 3> j_operators(const Realization& r) {
  const int n = static_cast<int>(realization_components(r).size());
  auto Ldiag = [r, n](double th) {
    MatXc L = MatXc::Zero(n, n);
    for (int c = 0; c < n; ++c) L(c, c) = realization_L(r, c, th);
    return L;
  };
  const double s3 = realization_s3(r);
  const MatXc Id = MatXc::Identity(n, n);
  std::array<FirstOrderOperator, 3> J;
  J[0].A_theta = [Id](double, double ph) { return MatXc(kI * std::sin(ph) * Id); };
  J[0].A_phi = [Id](double th, double ph) { return MatXc(kI * std::cos(th) / std::sin(th) * std::cos(ph) * Id); };
  J[0].B = [Ldiag](double th, double ph) { return MatXc(std::cos(ph) / std::sin(th) * Ldiag(th)); };
  J[1].A_theta = [Id](double, double ph) { return MatXc(-kI * std::cos(ph) * Id); };
  J[1].A_phi = [Id](double th, double ph) { return MatXc(kI * std::cos(th) / std::sin(th) * std::sin(ph) * Id); };
  J[1].B = [Ldiag](double th, double ph) { return MatXc(std::sin(ph) / std::sin(th) * Ldiag(th)); };
  J[2].A_phi = [Id](double, double) { return MatXc(-kI * Id); };
  J[2].B = [Id, s3](double, double) { return MatXc(s3 * Id); };
  return J;
}

Su2Report su2_algebra_defect(const Realization& r, HalfInt jmax) {
  if (jmax > HalfInt(6)) throw ArgumentError("su2_algebra_defect: jmax must be <= 6");
  const AngularBasis basis = realization_basis(r, jmax);
  const auto ops = j_operators(r);
  std::array<OperatorMatrix, 3> J;
  for (int a = 0; a < 3; ++a) J[static_cast<std::size_t>(a)] = operator_matrix(basis, ops[static_cast<std::size_t>(a)]);
  Su2Report rep;
  rep.realization = realization_name(r);
  rep.basis_size = basis.size();
  const MatXc &J1 = J[0].M, &J2 = J[1].M, &J3 = J[2].M;
  rep.commutator_defect = std::max({max_abs(J1 * J2 - J2 * J1 - kI * J3), max_abs(J2 * J3 - J3 * J2 - kI * J1),
                                    max_abs(J3 * J1 - J1 * J3 - kI * J2)});
  const MatXc C = J1 * J1 + J2 * J2 + J3 * J3;
  MatXc expect = MatXc::Zero(basis.size(), basis.size());
  MatXc mdiag = MatXc::Zero(basis.size(), basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    const double j = basis.element(i).j.value();
    expect(i, i) = j * (j + 1.0);
    mdiag(i, i) = basis.element(i).m.value();
  }
  rep.casimir_defect = max_abs(C - expect);
  rep.j3_defect = max_abs(J3 - mdiag);
  rep.closure = std::max({J[0].closure, J[1].closure, J[2].closure});
  Eigen::ComplexEigenSolver<MatXc> es(J3, false);
  for (int i = 0; i < es.eigenvalues().size(); ++i) rep.j3_spectrum.push_back(es.eigenvalues()(i).real());
  std::sort(rep.j3_spectrum.begin(), rep.j3_spectrum.end());
  return rep;
}

double j3_spectrum_transport_defect(HalfInt k, HalfInt jmax) {
  const auto ref = su2_algebra_defect({RealizationKind::AbelianK, k, +1}, jmax).j3_spectrum;
  double worst = 0.0;
  for (const Realization& r : {Realization{RealizationKind::DiracGauge, k, +1}, Realization{RealizationKind::WuYang, k, +1},
                               Realization{RealizationKind::WuYang, k, -1}}) {
    const auto sp = su2_algebra_defect(r, jmax).j3_spectrum;
    if (sp.size() != ref.size()) return std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sp.size(); ++i) worst = std::max(worst, std::abs(sp[i] - ref[i]));
  }
  return worst;
}

// --- States ----------------------------------------------------------------------------

HalfInt doublet_sigma(int c) {
  if (c < 0 || c > 7) throw ArgumentError("doublet_sigma: component must be 0..7");
  const HalfInt t = c < 4 ? kHalf : -kHalf;
  return -(spin_half(c % 4) + t);
}

VecXc state_coefficients(const AngularBasis& basis, const AbelianState& s) {
  VecXc v = VecXc::Zero(basis.size());
  for (int c = 0; c < 4; ++c) {
    const int idx = basis.index_of(c, s.j, s.m);
    if (idx >= 0) v(idx) = s.f[static_cast<std::size_t>(c)];
  }
  return v;
}

VecXc state_coefficients(const AngularBasis& basis, const SeparatedDoubletState& s) {
  VecXc v = VecXc::Zero(basis.size());
  for (int c = 0; c < 8; ++c) {
    const int idx = basis.index_of(c, s.j, s.m);
    if (idx >= 0) v(idx) = c < 4 ? s.f[static_cast<std::size_t>(c)] : s.g[static_cast<std::size_t>(c - 4)];
  }
  return v;
}

AbelianState abelian_delta_state(HalfInt k, HalfInt j, HalfInt m, int delta, cplx f1, cplx f2) {
  if (!valid_projection(j, m)) throw ArgumentError("abelian_delta_state: invalid (j, m)");
  const double d = delta >= 0 ? 1.0 : -1.0;
  return AbelianState{k, j, m, {f1, f2, d * f2, d * f1}};
}

AbelianState abelian_jmin_state(HalfInt k, HalfInt m, cplx a, cplx b) {
  if (k == HalfInt(0)) throw ArgumentError("abelian_jmin_state: k must be non-zero");
  const HalfInt j = k.abs() - kHalf;
  if (!valid_projection(j, m)) throw ArgumentError("abelian_jmin_state: invalid m");
  if (k > HalfInt(0)) return AbelianState{k, j, m, {a, 0.0, b, 0.0}};
  return AbelianState{k, j, m, {0.0, a, 0.0, b}};
}

SeparatedDoubletState constrained_doublet_state(HalfInt j, HalfInt m, double A, int delta,
                                                const std::array<cplx, 4>& f) {
  SeparatedDoubletState s;
  s.j = j;
  s.m = m;
  s.f = f;
  const cplx ph = (delta >= 0 ? 1.0 : -1.0) * std::polar(1.0, A);
  for (int i = 0; i < 4; ++i) s.g[static_cast<std::size_t>(i)] = ph * f[static_cast<std::size_t>(3 - i)];
  if (j == HalfInt(0)) {  // only the sigma = 0 blocks exist
    s.f[0] = s.f[2] = 0.0;
    s.g[1] = s.g[3] = 0.0;
  }
  return s;
}

SeparatedDoubletState doublet_mu_state(HalfInt j, HalfInt m, double A, int delta, int mu, cplx f1, cplx f2) {
  const double u = mu >= 0 ? 1.0 : -1.0;
  return constrained_doublet_state(j, m, A, delta, {f1, f2, u * f2, u * f1});
}

// --- Operators ------------------------------------------------------------------------

FirstOrderOperator sigma_operator_abelian(double k) {
  FirstOrderOperator op;
  const MatXc g1 = to_dyn(gamma(1)), g2 = to_dyn(gamma(2));
  const MatXc L = to_dyn(i_sigma12()) - k * MatXc::Identity(4, 4);
  op.A_theta = [g1](double, double) { return MatXc(kI * g1); };
  op.A_phi = [g2](double th, double) { return MatXc(kI * g2 / std::sin(th)); };
  op.B = [g2, L](double th, double) { return MatXc(g2 * L * (std::cos(th) / std::sin(th))); };
  return op;
}

FirstOrderOperator sigma_operator_doublet() {
  FirstOrderOperator op;
  const MatXc g1 = to_dyn(iso_identity(gamma(1))), g2 = to_dyn(iso_identity(gamma(2)));
  const MatXc L = to_dyn(iso_identity(i_sigma12())) + to_dyn(iso_spin(isospin(3), Mat4c::Identity()));
  op.A_theta = [g1](double, double) { return MatXc(kI * g1); };
  op.A_phi = [g2](double th, double) { return MatXc(kI * g2 / std::sin(th)); };
  op.B = [g2, L](double th, double) { return MatXc(g2 * L * (std::cos(th) / std::sin(th))); };
  return op;
}

namespace {
FirstOrderOperator premultiply(const MatXc& P, const FirstOrderOperator& op) {
  FirstOrderOperator out;
  auto at = op.A_theta, ap = op.A_phi, b = op.B;
  if (at) out.A_theta = [P, at](double t, double p) { return MatXc(P * at(t, p)); };
  if (ap) out.A_phi = [P, ap](double t, double p) { return MatXc(P * ap(t, p)); };
  if (b) out.B = [P, b](double t, double p) { return MatXc(P * b(t, p)); };
  return out;
}
}  // namespace

FirstOrderOperator k_hat_abelian(double k) {
  return premultiply(to_dyn(Mat4c(-kI * gamma(0) * gamma(3))), sigma_operator_abelian(k));
}

FirstOrderOperator k_hat_doublet() {
  return premultiply(to_dyn(iso_identity(Mat4c(-kI * gamma(0) * gamma(3)))), sigma_operator_doublet());
}

Mat2c pi_A(double A) {
  Mat2c p;
  p << 0.0, std::polar(1.0, -A), std::polar(1.0, A), 0.0;
  return p;
}

PointMapOperator n_a_operator(double A) { return PointMapOperator{to_dyn(iso_spin(pi_A(A), parity_spherical()))}; }

EigenFit apply_K_hat(const AbelianState& s) { return pointwise_fit(k_hat_abelian(s.k.value()), s).fit; }

EigenFit apply_K_hat(const SeparatedDoubletState& s, double w_background) {
  if (w_background != 0.0)
    throw UnsupportedError("K-hat does not commute with the doublet Hamiltonian on a W != 0 background");
  const Realization r{RealizationKind::DoubletSchwinger, 0, +1};
  const AngularBasis basis(realization_components(r), s.j, s.j);
  const OperatorMatrix K = operator_matrix(basis, k_hat_doublet());
  return fit(K, state_coefficients(basis, s));
}

NAResult apply_N_A(double A, const SeparatedDoubletState& s) {
  if (s.iso_frame != IsoGaugeFrame::Schwinger) throw ArgumentError("apply_N_A: state must be in the Schwinger isotopic frame");
  if (!s.j.is_integer()) throw ArgumentError("apply_N_A: doublet j must be an integer");
  const Realization r{RealizationKind::DoubletSchwinger, 0, +1};
  const AngularBasis basis(realization_components(r), s.j, s.j);
  const OperatorMatrix N = operator_matrix(basis, n_a_operator(A));
  const VecXc v = state_coefficients(basis, s);
  const double n = v.norm();
  if (n == 0.0) throw ArgumentError("apply_N_A: zero state");
  NAResult res;
  res.transformed = N.M * v;
  res.fitted = v.dot(res.transformed) / (n * n);
  const double sign_j1 = ((s.j.doubled() / 2) % 2 == 0) ? -1.0 : 1.0;  // (-1)^{j+1}
  res.defect = std::numeric_limits<double>::infinity();
  for (int d : {+1, -1}) {
    const double def = (res.transformed - d * sign_j1 * v).norm() / n;
    if (def < res.defect) {
      res.defect = def;
      res.delta = d;
    }
  }
  return res;
}

double n_a_square_defect(double A, HalfInt jmax) {
  const AngularBasis basis = realization_basis({RealizationKind::DoubletSchwinger, 0, +1}, jmax);
  const MatXc N = operator_matrix(basis, n_a_operator(A)).M;
  const MatXc N2 = N * N;
  return max_abs(N2 - N2(0, 0) * MatXc::Identity(basis.size(), basis.size()));
}

// --- Sampled parity -------------------------------------------------------------------------

SampledSpinorField sample_state(const AbelianState& s, int nt, int np) {
  if (nt < 1 || np < 2 || np % 2 != 0) throw ArgumentError("sample_state: need nt >= 1 and even np >= 2");
  SampledSpinorField out;
  for (int i = 0; i < nt; ++i) out.theta.push_back((i + 0.5) * std::numbers::pi / nt);
  for (int j = 0; j < np; ++j) out.phi.push_back((j + 0.5) * 2.0 * std::numbers::pi / np);
  out.monodromy = s.m.is_integer() ? 1 : -1;
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < np; ++j) out.values.push_back(eval_abelian(s, out.theta[static_cast<std::size_t>(i)], out.phi[static_cast<std::size_t>(j)]));
  return out;
}

SampledSpinorField apply_parity_bispinor(const SampledSpinorField& in) {
  const int nt = static_cast<int>(in.theta.size()), np = static_cast<int>(in.phi.size());
  if (static_cast<int>(in.values.size()) != nt * np) throw ArgumentError("apply_parity_bispinor: sample count mismatch");
  if (np % 2 != 0) throw ArgumentError("apply_parity_bispinor: asymmetric grid (odd phi count)");
  constexpr double tol = 1e-12;
  for (int i = 0; i < nt; ++i)
    if (std::abs(in.theta[static_cast<std::size_t>(i)] + in.theta[static_cast<std::size_t>(nt - 1 - i)] - std::numbers::pi) > tol)
      throw ArgumentError("apply_parity_bispinor: asymmetric grid in theta");
  for (int j = 0; j < np / 2; ++j)
    if (std::abs(in.phi[static_cast<std::size_t>(j + np / 2)] - in.phi[static_cast<std::size_t>(j)] - std::numbers::pi) > tol)
      throw ArgumentError("apply_parity_bispinor: asymmetric grid in phi");
  const Mat4c P = parity_spherical();
  SampledSpinorField out = in;
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < np; ++j) {
      const int jj = j + np / 2;
      const bool wrap = jj >= np;
      const auto& src = in.values[static_cast<std::size_t>((nt - 1 - i) * np + (wrap ? jj - np : jj))];
      out.values[static_cast<std::size_t>(i * np + j)] = (wrap ? double(in.monodromy) : 1.0) * (P * src);
    }
  return out;
}

EigenFit parity_eigen_fit(const SampledSpinorField& in) {
  const SampledSpinorField out = apply_parity_bispinor(in);
  cplx num = 0.0;
  double den = 0.0;
  for (std::size_t p = 0; p < in.values.size(); ++p) {
    num += in.values[p].dot(out.values[p]);
    den += in.values[p].squaredNorm();
  }
  if (den == 0.0) throw ArgumentError("parity_eigen_fit: zero field");
  EigenFit f;
  f.eigenvalue = num / den;
  double res = 0.0;
  for (std::size_t p = 0; p < in.values.size(); ++p) res += (out.values[p] - f.eigenvalue * in.values[p]).squaredNorm();
  f.defect = std::sqrt(res / den);
  return f;
}

cplx half_integer_phase(HalfInt x) {
  switch (((x.doubled() % 4) + 4) % 4) {
    case 0: return 1.0;
    case 1: return kI;
    case 2: return -1.0;
    default: return -kI;
  }
}

double two_sector_identity_defect(HalfInt k, HalfInt j, HalfInt m, int delta, cplx f1, cplx f2, int samples) {
  const AbelianState plus = abelian_delta_state(k, j, m, delta, f1, f2);
  const AbelianState minus = abelian_delta_state(-k, j, m, delta, f1, f2);
  const cplx factor = double(delta >= 0 ? 1 : -1) * half_integer_phase(j + HalfInt(1));
  const Mat4c P = parity_spherical();
  double worst = 0.0, scale = 0.0;
  for (int a = 0; a < samples; ++a)
    for (int b = 0; b < samples; ++b) {
      const double th = (a + 0.5) * std::numbers::pi / samples, ph = (b + 0.5) * 2.0 * std::numbers::pi / samples;
      const Eigen::Vector4cd lhs = P * eval_abelian(plus, std::numbers::pi - th, ph + std::numbers::pi);
      const Eigen::Vector4cd rhs = factor * eval_abelian(minus, th, ph);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
      scale = std::max(scale, rhs.cwiseAbs().maxCoeff());
    }
  return scale > 0.0 ? worst / scale : worst;
}

double abelian_sigma_column_defect(const AbelianState& s) {
  const Realization r{RealizationKind::AbelianK, s.k, +1};
  const AngularBasis basis(realization_components(r), s.j, s.j);
  const OperatorMatrix S = operator_matrix(basis, sigma_operator_abelian(s.k.value()));
  const double jh = s.j.value() + 0.5, k = s.k.value();
  const double nu = std::sqrt(std::max(0.0, jh * jh - k * k));
  AbelianState expect = s;
  expect.f = {-s.f[3], s.f[2], s.f[1], -s.f[0]};
  for (auto& x : expect.f) x *= kI * nu;
  const VecXc v = state_coefficients(basis, s);
  const double n = v.norm();
  if (n == 0.0) throw ArgumentError("abelian_sigma_column_defect: zero state");
  return std::max((S.M * v - state_coefficients(basis, expect)).norm() / n, S.closure);
}

double jmin_annihilation_defect(HalfInt k, HalfInt m) {
  const AbelianState s = abelian_jmin_state(k, m, cplx(0.8, 0.3), cplx(-0.4, 1.1));
  return pointwise_fit(sigma_operator_abelian(k.value()), s).image_ratio;
}

// --- Hidden symmetry ----------------------------------------------------------------------------

Mat2c U_A_matrix(IsoGaugeFrame frame, double A, double theta, double phi) {
  switch (frame) {
    case IsoGaugeFrame::Schwinger: {
      Mat2c u = Mat2c::Zero();
      u(0, 0) = 1.0;
      u(1, 1) = std::polar(1.0, A);
      return u;
    }
    case IsoGaugeFrame::Cartesian: {
      const Eigen::Vector3d n(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
      Mat2c sn = Mat2c::Zero();
      for (int a = 0; a < 3; ++a) sn += n[a] * pauli(a + 1);
      return std::polar(1.0, 0.5 * A) * (std::cos(0.5 * A) * Mat2c::Identity() - kI * std::sin(0.5 * A) * sn);
    }
    case IsoGaugeFrame::Dirac: break;
  }
  throw UnsupportedError("U_A_matrix: only the Schwinger and Cartesian frames are provided");
}

Mat2c U_A_cartesian_entries(double A, double theta, double phi) {
  const cplx e = std::polar(1.0, A);
  const double s2 = std::pow(std::sin(0.5 * theta), 2), c2 = std::pow(std::cos(0.5 * theta), 2);
  Mat2c u;
  u << e * s2 + c2, 0.5 * (1.0 - e) * std::sin(theta) * std::polar(1.0, -phi), 0.5 * (1.0 - e) * std::sin(theta) * std::polar(1.0, phi),
      s2 + e * c2;
  return u;
}

double n_a_conjugation_defect(double A) {
  const Mat2c U = U_A_matrix(IsoGaugeFrame::Schwinger, A, 0.0, 0.0);
  return (pi_A(A) - U * pi_A(0.0) * U.inverse()).cwiseAbs().maxCoeff();
}

double cartesian_schwinger_transport_defect(double A, double theta, double phi) {
  const Vec3 c = cartesian_to_schwinger_field().c({0.0, 1.0, theta, phi});
  const Mat2c S = su2_from_gibbs(c);
  const Mat2c X = S.adjoint() * U_A_matrix(IsoGaugeFrame::Schwinger, A, theta, phi) * S;
  return phase_aligned_defect(U_A_matrix(IsoGaugeFrame::Cartesian, A, theta, phi), X);
}

CommutatorReport hamiltonian_commutators(double A, HalfInt jmax) {
  const AngularBasis basis = realization_basis({RealizationKind::DoubletSchwinger, 0, +1}, jmax);
  const MatXc g0 = to_dyn(iso_identity(gamma(0)));
  const OperatorMatrix t3 = operator_matrix(basis, to_dyn(iso_spin(isospin(3), Mat4c::Identity())));
  const OperatorMatrix N = operator_matrix(basis, n_a_operator(A));
  std::vector<OperatorMatrix> pieces;
  pieces.push_back(operator_matrix(basis, to_dyn(iso_identity(Mat4c(gamma(0) * gamma(3))))));
  pieces.push_back(operator_matrix(basis, g0));
  pieces.push_back(operator_matrix(basis, premultiply(g0, sigma_operator_doublet())));
  const MatXc mix = g0 * to_dyn(Mat8c(iso_spin(isospin(2), gamma(1)) - iso_spin(isospin(1), gamma(2))));
  const OperatorMatrix mixing = operator_matrix(basis, mix);
  CommutatorReport rep;
  auto comm = [](const MatXc& a, const MatXc& b) { return max_abs(a * b - b * a); };
  for (const auto& p : pieces) {
    rep.H_t3 = std::max(rep.H_t3, comm(p.M, t3.M));
    rep.H_NA = std::max(rep.H_NA, comm(p.M, N.M));
    rep.closure = std::max(rep.closure, p.closure);
  }
  rep.t3_NA = comm(t3.M, N.M);
  rep.mixing_NA = comm(mixing.M, N.M);
  rep.closure = std::max({rep.closure, t3.closure, N.closure, mixing.closure});
  return rep;
}

double n_a_consistency_residual(double A, int delta, double epsilon, double m, double nu_over_s, double w_over_s,
                                double F_tilde, double Phi_tilde) {
  const Eigen::Matrix<cplx, 8, 8> M =
      doublet_full8_matrix(epsilon, m, nu_over_s, w_over_s, F_tilde, Phi_tilde);
  Eigen::Matrix<cplx, 8, 4> Map = Eigen::Matrix<cplx, 8, 4>::Zero();
  const cplx ph = (delta >= 0 ? 1.0 : -1.0) * std::polar(1.0, A);
  for (int i = 0; i < 4; ++i) {
    Map(i, i) = 1.0;
    Map(4 + i, 3 - i) = ph;
  }
  const Eigen::Matrix<cplx, 8, 8> P = Map * (Map.adjoint() * Map).inverse() * Map.adjoint();
  const Eigen::Matrix<cplx, 8, 4> R = (Eigen::Matrix<cplx, 8, 8>::Identity() - P) * M * Map;
  Eigen::JacobiSVD<Eigen::Matrix<cplx, 8, 4>> svd(R);
  return svd.singularValues()(0);
}

std::vector<double> n_a_consistent_angles(int n, double tol, int delta, double epsilon, double m, double nu_over_s,
                                          double w_over_s, double F_tilde, double Phi_tilde) {
  if (n < 1) throw ArgumentError("n_a_consistent_angles: n must be positive");
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    const double A = std::numbers::pi * (2.0 * i / n);
    if (n_a_consistency_residual(A, delta, epsilon, m, nu_over_s, w_over_s, F_tilde, Phi_tilde) < tol) out.push_back(A);
  }
  return out;
}

// --- Selection rules ------------------------------------------------------------------------------

std::string selection_outcome_name(SelectionOutcome o) {
  return o == SelectionOutcome::ForcedZero ? "forced_zero" : "unconstrained";
}

int selection_factor(int omega, int delta, int delta_prime, HalfInt J, HalfInt J_prime) {
  for (int s : {omega, delta, delta_prime})
    if (s != 1 && s != -1) throw ArgumentError("selection_rule: signs must be +1 or -1");
  const HalfInt sum = J + J_prime;
  if (!sum.is_integer()) throw ArgumentError("selection_rule: J + J' must be an integer");
  const int parity = ((sum.doubled() / 2) % 2 == 0) ? 1 : -1;
  return 1 + omega * delta * delta_prime * parity;
}

SelectionOutcome selection_rule(int omega, int delta, int delta_prime, HalfInt J, HalfInt J_prime) {
  return selection_factor(omega, delta, delta_prime, J, J_prime) == 0 ? SelectionOutcome::ForcedZero
                                                                      : SelectionOutcome::Unconstrained;
}

}  // namespace monopole_lab
