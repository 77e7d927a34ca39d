#include "monopole_lab/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include "monopole_lab/errors.hpp"

namespace monopole_lab {

// --- HalfInt -----------------------------------------------------------------

std::optional<HalfInt> HalfInt::try_from_double(double x) {
  if (!std::isfinite(x)) return std::nullopt;
  const double d = 2.0 * x;
  const double n = std::round(d);
  if (std::abs(d - n) > 2e-12 || std::abs(n) > 2e9) return std::nullopt;
  return from_doubled(static_cast<int>(n));
}

HalfInt HalfInt::from_double(double x) {
  auto h = try_from_double(x);
  if (!h) throw ArgumentError("value is not a half-integer");
  return *h;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

HalfInt parse_halfint(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const int num = std::stoi(text.substr(0, slash));
      const int den = std::stoi(text.substr(slash + 1));
      if (den == 1) return HalfInt(num);
      if (den == 2) return HalfInt::from_doubled(num);
      throw ArgumentError("half-integer denominator must be 1 or 2: '" + text + "'");
    }
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw ArgumentError("trailing characters in '" + text + "'");
    return HalfInt::from_double(v);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ArgumentError*>(&e)) throw;
    throw ArgumentError("cannot parse half-integer '" + text + "'");
  }
}

// --- d-functions -------------------------------------------------------------

bool valid_projection(HalfInt j, HalfInt m) {
  return j.doubled() >= 0 && m.abs() <= j && (j - m).is_integer();
}

namespace {

void require_valid(HalfInt j, HalfInt mp, HalfInt m) {
  if (!valid_projection(j, mp) || !valid_projection(j, m))
    throw ArgumentError("invalid Wigner index: j=" + j.str() + " m'=" + mp.str() + " m=" + m.str());
}

long double factorial_ld(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long double ipow(long double x, int n) {
  long double r = 1.0L;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// Sum formula (and its theta-derivative when deriv == true).
long double d_sum_impl(HalfInt j, HalfInt mp, HalfInt m, double theta, bool deriv) {
  const int a = (j + mp).doubled() / 2;  // j + m'
  const int b = (j - mp).doubled() / 2;  // j - m'
  const int c = (j + m).doubled() / 2;   // j + m
  const int d = (j - m).doubled() / 2;   // j - m
  const int mpm = (mp - m).doubled() / 2;  // m' - m (integer)
  const long double ch = std::cos(0.5L * theta);
  const long double sh = std::sin(0.5L * theta);
  const long double pref = std::sqrt(factorial_ld(a) * factorial_ld(b) * factorial_ld(c) * factorial_ld(d));
  const int s_min = std::max(0, -mpm);
  const int s_max = std::min(c, b);
  long double sum = 0.0L;
  for (int s = s_min; s <= s_max; ++s) {
    const int p = c + b - 2 * s;  // cosine power
    const int q = mpm + 2 * s;    // sine power
    const long double denom =
        factorial_ld(c - s) * factorial_ld(s) * factorial_ld(mpm + s) * factorial_ld(b - s);
    const long double sgn = ((mpm + s) % 2 == 0) ? 1.0L : -1.0L;
    long double trig;
    if (!deriv) {
      trig = ipow(ch, p) * ipow(sh, q);
    } else {
      trig = 0.0L;
      if (p > 0) trig -= 0.5L * p * ipow(ch, p - 1) * ipow(sh, q + 1);
      if (q > 0) trig += 0.5L * q * ipow(ch, p + 1) * ipow(sh, q - 1);
    }
    sum += sgn * pref / denom * trig;
  }
  return sum;
}

}  // namespace

double d_small_sum(HalfInt j, HalfInt mp, HalfInt m, double theta) {
  require_valid(j, mp, m);
  return static_cast<double>(d_sum_impl(j, mp, m, theta, false));
}

double d_small_recurrence(HalfInt j, HalfInt mp, HalfInt m, double theta) {
  require_valid(j, mp, m);
  const HalfInt j0 = std::max(mp.abs(), m.abs());
  const double mv = m.value();
  const double mpv = mp.value();
  const double cb = std::cos(theta);
  double prev = 0.0;
  double cur = static_cast<double>(d_sum_impl(j0, mp, m, theta, false));  // single-term seed
  for (HalfInt jj = j0; jj < j; jj = jj + 1) {
    const double x = jj.value();
    const double x1 = x + 1.0;
    const double den = std::sqrt((x1 * x1 - mv * mv) * (x1 * x1 - mpv * mpv));
    double next;
    if (jj.doubled() == 0) {
      next = x1 * (2.0 * x + 1.0) / den * cb * cur;
    } else {
      const double t1 = x1 * (2.0 * x + 1.0) / den * (cb - mv * mpv / (x * x1)) * cur;
      const double t2 = x1 * std::sqrt(std::max(0.0, (x * x - mv * mv) * (x * x - mpv * mpv))) / (x * den) * prev;
      next = t1 - t2;
    }
    prev = cur;
    cur = next;
  }
  return cur;
}

double d_small(HalfInt j, HalfInt mp, HalfInt m, double theta) {
  require_valid(j, mp, m);
  if (j.doubled() <= 5) return static_cast<double>(d_sum_impl(j, mp, m, theta, false));
  return d_small_recurrence(j, mp, m, theta);
}

double d_small_dtheta(HalfInt j, HalfInt mp, HalfInt m, double theta) {
  require_valid(j, mp, m);
  if (j.doubled() <= 24) return static_cast<double>(d_sum_impl(j, mp, m, theta, true));
  const double jv = j.value();
  const double mv = m.value();
  double out = 0.0;
  const HalfInt mlo = m - 1, mhi = m + 1;
  if (valid_projection(j, mlo)) out += 0.5 * std::sqrt((jv + mv) * (jv - mv + 1.0)) * d_small(j, mp, mlo, theta);
  if (valid_projection(j, mhi)) out -= 0.5 * std::sqrt((jv - mv) * (jv + mv + 1.0)) * d_small(j, mp, mhi, theta);
  return out;
}

cplx D_function(HalfInt j, HalfInt m_row, HalfInt m_col, double phi, double theta) {
  const double d = d_small(j, m_row, m_col, theta);
  return std::polar(1.0, -m_row.value() * phi) * d;
}

cplx D_sigma(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi) {
  if (!valid_projection(j, m)) throw ArgumentError("invalid projection m=" + m.str() + " for j=" + j.str());
  if (!valid_projection(j, sigma)) return {0.0, 0.0};
  return D_function(j, -m, sigma, phi, theta);
}

cplx D_sigma_dtheta(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi) {
  if (!valid_projection(j, m)) throw ArgumentError("invalid projection m=" + m.str() + " for j=" + j.str());
  if (!valid_projection(j, sigma)) return {0.0, 0.0};
  return std::polar(1.0, m.value() * phi) * d_small_dtheta(j, -m, sigma, theta);
}

Eigen::MatrixXd wigner_d_matrix_spectral(HalfInt j, double theta) {
  if (j.doubled() < 0) throw ArgumentError("j must be non-negative");
  const int n = j.doubled() + 1;
  const double jv = j.value();
  Eigen::MatrixXcd Jy = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    // |m = j - i> raised to |m + 1> = index i - 1
    const double mv = jv - i;
    const double cp = std::sqrt((jv - mv) * (jv + mv + 1.0));
    // J_y = (J+ - J-)/(2i)
    Jy(i - 1, i) = cp / cplx(0.0, 2.0);
    Jy(i, i - 1) = -cp / cplx(0.0, 2.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Jy);
  const Eigen::VectorXd lam = es.eigenvalues();
  Eigen::VectorXcd ph(n);
  for (int i = 0; i < n; ++i) ph(i) = std::polar(1.0, -theta * lam(i));
  const Eigen::MatrixXcd U = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  return U.real();
}

// --- Pauli criterion ----------------------------------------------------------

PauliResult pauli_allowed(double lambda) {
  const auto h = HalfInt::try_from_double(lambda);
  if (!h) return PauliRejected{};
  return AllowedJSet{h->abs()};
}

PauliResult pauli_allowed(HalfInt lambda) { return AllowedJSet{lambda.abs()}; }

bool pauli_derivative_check(HalfInt j, HalfInt lambda) {
  const HalfInt ap = j + lambda, am = j - lambda;
  if (!ap.is_integer() || !am.is_integer()) return false;
  const int a = ap.doubled() / 2, b = am.doubled() / 2;
  if (a < 0 || b < 0) return false;
  if (a + b > 60) throw ArgumentError("pauli_derivative_check: degree too large for exact coefficients");
  // Exact binomial convolution in 128-bit integers.
  auto binom = [](int n) {
    std::vector<__int128> c(n + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= n; ++i)
      for (int k = i; k >= 1; --k) c[k] += c[k - 1];
    return c;
  };
  const auto ca = binom(a), cb = binom(b);
  std::vector<__int128> poly(a + b + 1, 0);
  for (int i = 0; i <= a; ++i)
    for (int k = 0; k <= b; ++k) poly[i + k] += ca[i] * ((k % 2 == 0) ? cb[k] : -cb[k]);
  // (2j+1)-th derivative: coefficient of x^{d-n} is poly[d] * d!/(d-n)!.
  const int order = j.doubled() + 1;
  for (int d = order; d < static_cast<int>(poly.size()); ++d)
    if (poly[d] != 0) return false;
  return true;
}

bool pauli_closed_form(HalfInt j, HalfInt lambda) {
  return j >= lambda.abs() && (j - lambda.abs()).is_integer();
}

ChargeAdmissibility abelian_charge_admissibility(double k) {
  ChargeAdmissibility out;
  const auto l1 = pauli_allowed(0.5 - k);
  const auto l2 = pauli_allowed(-0.5 - k);
  if (std::holds_alternative<PauliRejected>(l1) || std::holds_alternative<PauliRejected>(l2)) return out;
  out.admissible = true;
  out.j_min = std::min(std::get<AllowedJSet>(l1).min_j, std::get<AllowedJSet>(l2).min_j);
  return out;
}

// --- Recursion identities ----------------------------------------------------------

namespace {
double ladder_coeff_down(double j, double s) { return std::sqrt(std::max(0.0, (j + s) * (j - s + 1.0))); }
double ladder_coeff_up(double j, double s) { return std::sqrt(std::max(0.0, (j - s) * (j + s + 1.0))); }
constexpr double kPhiProbe = 0.37;  // any azimuth: identities hold pointwise

/// (m + s cos t)/sin t * D_s with the ladder limit at the poles.
cplx cot_weighted(HalfInt j, HalfInt m, HalfInt s, double theta, double phi) {
  const double st = std::sin(theta);
  if (std::abs(st) < 1e-12) {
    const double jv = j.value(), sv = s.value();
    return 0.5 * (ladder_coeff_down(jv, sv) * D_sigma(j, m, s - 1, theta, phi) +
                  ladder_coeff_up(jv, sv) * D_sigma(j, m, s + 1, theta, phi));
  }
  return (m.value() + s.value() * std::cos(theta)) / st * D_sigma(j, m, s, theta, phi);
}
}  // namespace

RecursionReport recursion_check_ladder(HalfInt j, HalfInt m, HalfInt sigma, double theta) {
  RecursionReport rep;
  if (!valid_projection(j, m) || !valid_projection(j, sigma)) {
    rep.skipped.push_back("ladder: invalid index");
    return rep;
  }
  const double jv = j.value(), sv = sigma.value();
  const double phi = kPhiProbe;
  const cplx dm = D_sigma(j, m, sigma - 1, theta, phi), dp = D_sigma(j, m, sigma + 1, theta, phi);
  const double a = ladder_coeff_down(jv, sv), b = ladder_coeff_up(jv, sv);
  rep.add(std::abs(D_sigma_dtheta(j, m, sigma, theta, phi) - 0.5 * (a * dm - b * dp)));
  rep.add(std::abs(cot_weighted(j, m, sigma, theta, phi) - 0.5 * (a * dm + b * dp)));
  return rep;
}

RecursionReport recursion_check_abelian(HalfInt j, HalfInt m, HalfInt k, double theta) {
  RecursionReport rep;
  if (!valid_projection(j, m)) {
    rep.skipped.push_back("abelian: invalid m");
    return rep;
  }
  const double jv = j.value(), kv = k.value(), mv = m.value();
  const double phi = kPhiProbe;
  const double a = 0.5 * std::sqrt(std::max(0.0, (jv + 0.5) * (jv + 0.5) - kv * kv));
  const double b = 0.5 * std::sqrt(std::max(0.0, (jv - kv - 0.5) * (jv + kv + 1.5)));
  const double c = 0.5 * std::sqrt(std::max(0.0, (jv + kv - 0.5) * (jv - kv + 1.5)));
  const HalfInt kp = k + kHalf, km = k - kHalf;
  auto D = [&](HalfInt s) { return D_sigma(j, m, s, theta, phi); };
  const double st = std::sin(theta), ct = std::cos(theta);
  auto weighted = [&](HalfInt s) {  // (-m - s cos)/sin * D_s
    return (-mv - s.value() * ct) / st * D(s);
  };
  if (valid_projection(j, kp)) {
    rep.add(std::abs(D_sigma_dtheta(j, m, kp, theta, phi) - (a * D(km) - b * D(k + HalfInt::from_doubled(3)))));
    rep.add(std::abs(weighted(kp) - (-a * D(km) - b * D(k + HalfInt::from_doubled(3)))));
  } else {
    rep.skipped.push_back("abelian: D_{k+1/2} not defined for this j");
  }
  if (valid_projection(j, km)) {
    rep.add(std::abs(D_sigma_dtheta(j, m, km, theta, phi) - (c * D(k - HalfInt::from_doubled(3)) - a * D(kp))));
    rep.add(std::abs(weighted(km) - (-c * D(k - HalfInt::from_doubled(3)) - a * D(kp))));
  } else {
    rep.skipped.push_back("abelian: D_{k-1/2} not defined for this j");
  }
  // j_min identities
  if (kv > 0 && j == k - kHalf && kv >= 0.5) {
    const double g = 0.5 * std::sqrt(2.0 * kv - 1.0);
    rep.add(std::abs(D_sigma_dtheta(j, m, km, theta, phi) - g * D(k - HalfInt::from_doubled(3))));
    rep.add(std::abs(weighted(km) + g * D(k - HalfInt::from_doubled(3))));
  } else if (kv < 0 && j == -k - kHalf) {
    const double g = 0.5 * std::sqrt(-2.0 * kv - 1.0);
    rep.add(std::abs(D_sigma_dtheta(j, m, kp, theta, phi) + g * D(k + HalfInt::from_doubled(3))));
    rep.add(std::abs(weighted(kp) + g * D(k + HalfInt::from_doubled(3))));
  }
  return rep;
}

RecursionReport recursion_check_doublet(HalfInt j, HalfInt m, double theta) {
  RecursionReport rep;
  if (!j.is_integer() || !valid_projection(j, m)) {
    rep.skipped.push_back("doublet: j must be an integer with valid m");
    return rep;
  }
  const double jv = j.value(), mv = m.value();
  const double nu = std::sqrt(jv * (jv + 1.0));
  const double om = std::sqrt(std::max(0.0, (jv - 1.0) * (jv + 2.0)));
  const double phi = kPhiProbe;
  const double st = std::sin(theta), ct = std::cos(theta);
  auto D = [&](int s) { return D_sigma(j, m, HalfInt(s), theta, phi); };
  auto dD = [&](int s) { return D_sigma_dtheta(j, m, HalfInt(s), theta, phi); };
  if (j.doubled() == 0) {
    rep.add(std::abs(dD(0)));
    rep.add(std::abs(mv / st * D(0)));
    return rep;
  }
  rep.add(std::abs(dD(-1) - 0.5 * (om * D(-2) - nu * D(0))));
  rep.add(std::abs((mv - ct) / st * D(-1) - 0.5 * (om * D(-2) + nu * D(0))));
  rep.add(std::abs(dD(0) - 0.5 * (nu * D(-1) - nu * D(1))));
  rep.add(std::abs(mv / st * D(0) - 0.5 * (nu * D(-1) + nu * D(1))));
  rep.add(std::abs(dD(1) - 0.5 * (nu * D(0) - om * D(2))));
  rep.add(std::abs((mv + ct) / st * D(1) - 0.5 * (nu * D(0) + om * D(2))));
  return rep;
}

double parity_identity_defect(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi) {
  const cplx lhs = D_sigma(j, m, sigma, std::numbers::pi - theta, phi + std::numbers::pi);
  const cplx rhs = std::polar(1.0, std::numbers::pi * j.value()) * D_sigma(j, m, -sigma, theta, phi);
  return std::abs(lhs - rhs);
}

// --- Spinor harmonics -------------------------------------------------------------

Spinor2 helicity_spinor(int twice_s, double theta, double phi) {
  const cplx em = std::polar(1.0, -0.5 * phi), ep = std::polar(1.0, 0.5 * phi);
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  Spinor2 out;
  if (twice_s == 1) {
    out << c * em, s * ep;
  } else if (twice_s == -1) {
    out << -s * em, c * ep;
  } else {
    throw ArgumentError("helicity must be +1/2 or -1/2");
  }
  return out;
}

MonopoleHarmonics monopole_harmonics(HalfInt j, HalfInt m, HalfInt k, double theta, double phi) {
  if (!valid_projection(j, m)) throw ArgumentError("monopole_harmonics: invalid m");
  const HalfInt kp = k + kHalf, km = k - kHalf;
  if (!valid_projection(j, kp) && !valid_projection(j, km))
    throw ArgumentError("monopole_harmonics: neither D_{k+1/2} nor D_{k-1/2} is defined");
  const Spinor2 a = helicity_spinor(-1, theta, phi) * D_sigma(j, m, kp, theta, phi);
  const Spinor2 b = helicity_spinor(+1, theta, phi) * D_sigma(j, m, km, theta, phi);
  return {a + b, a - b};
}

namespace {
cplx spherical_harmonic(int l, int m, double theta, double phi) {
  if (std::abs(m) > l) return {0.0, 0.0};
  const double y = std::sph_legendre(static_cast<unsigned>(l), static_cast<unsigned>(std::abs(m)), theta);
  const cplx ym = y * std::polar(1.0, std::abs(m) * phi);
  if (m >= 0) return ym;
  return ((std::abs(m) % 2 == 0) ? 1.0 : -1.0) * std::conj(ym);
}
}  // namespace

Spinor2 spherical_spinor_cg(HalfInt j, int l, HalfInt m, double theta, double phi) {
  if (j.is_integer() || !valid_projection(j, m)) throw ArgumentError("spherical spinor requires half-integer j");
  const double jv = j.value(), mv = m.value(), lv = l;
  const int m_up = (m - kHalf).doubled() / 2, m_dn = (m + kHalf).doubled() / 2;
  Spinor2 out;
  if (std::abs(lv + 0.5 - jv) < 1e-12) {  // j = l + 1/2
    out << std::sqrt((lv + mv + 0.5) / (2 * lv + 1)) * spherical_harmonic(l, m_up, theta, phi),
        std::sqrt((lv - mv + 0.5) / (2 * lv + 1)) * spherical_harmonic(l, m_dn, theta, phi);
  } else if (std::abs(lv - 0.5 - jv) < 1e-12) {  // j = l - 1/2
    out << -std::sqrt((lv - mv + 0.5) / (2 * lv + 1)) * spherical_harmonic(l, m_up, theta, phi),
        std::sqrt((lv + mv + 0.5) / (2 * lv + 1)) * spherical_harmonic(l, m_dn, theta, phi);
  } else {
    throw ArgumentError("spherical spinor requires l = j +- 1/2");
  }
  return out;
}

Spinor2 spherical_spinor_helicity(HalfInt j, HalfInt m, int branch, double theta, double phi) {
  const int p = (m + kHalf).doubled() / 2;
  const double sgn = (p % 2 == 0) ? 1.0 : -1.0;
  const double norm = std::sqrt((2.0 * j.value() + 1.0) / (8.0 * std::numbers::pi));
  const Spinor2 a = helicity_spinor(-1, theta, phi) * D_sigma(j, m, kHalf, theta, phi);
  const Spinor2 b = helicity_spinor(+1, theta, phi) * D_sigma(j, m, -kHalf, theta, phi);
  return sgn * norm * (branch >= 0 ? Spinor2(a + b) : Spinor2(a - b));
}

}  // namespace monopole_lab
