#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "monopole_lab/errors.hpp"
#include "monopole_lab/gauge.hpp"

using namespace monopole_lab;

namespace {

// Rodrigues rotation by angle 2 atan|c| about c, written independently of the Gibbs formula.
Mat3 rodrigues(const Vec3& c) {
  const double n = c.norm();
  if (n == 0.0) return Mat3::Identity();
  const Vec3 u = c / n;
  const double a = 2.0 * std::atan(n);
  Mat3 K;
  K << 0, -u(2), u(1), u(2), 0, -u(0), -u(1), u(0), 0;
  return Mat3::Identity() + std::sin(a) * K + (1 - std::cos(a)) * K * K;
}

const IsoGaugeFrame kFrames[] = {IsoGaugeFrame::Cartesian, IsoGaugeFrame::Dirac, IsoGaugeFrame::Schwinger};

}  // namespace

TEST_SUITE("gauge") {
  TEST_CASE("Gibbs rotations") {
    const Vec3 a(0.3, -0.2, 0.5), b(-0.1, 0.4, 0.25);
    const Mat3 Oa = rotation_from_gibbs(a);
    CHECK((Oa - rodrigues(a)).norm() < 1e-14);
    CHECK((Oa * Oa.transpose() - Mat3::Identity()).norm() < 1e-14);
    CHECK(Oa.determinant() == doctest::Approx(1.0));
    CHECK((rotation_from_gibbs(gibbs_compose(a, b)) - rotation_from_gibbs(b) * Oa).norm() < 1e-14);
    const Vec3 B(0.0, 0.6, 0.8), D(0.8, 0.0, 0.6);
    CHECK((rotation_from_gibbs(gibbs_between(B, D)) * B - D).norm() < 1e-14);
    CHECK((cross_matrix(a) * b - a.cross(b)).norm() < 1e-15);
    CHECK((gibbs_delta(Vec3::Zero()) + 2.0 * Mat3::Identity()).norm() < 1e-15);
  }

  TEST_CASE("Cartesian-to-Schwinger rotation equals the tabulated matrix") {
    for (double th : {0.3, 1.2, 2.6})
      for (double ph : {-2.0, 0.4, 1.9}) {
        const double st = std::sin(th), ct = std::cos(th), sp = std::sin(ph), cp = std::cos(ph);
        Mat3 printed;
        printed << ct * cp, ct * sp, -st, -sp, cp, 0.0, st * cp, st * sp, ct;
        const Vec3 c = cartesian_to_schwinger_field().c({0.0, 1.0, th, ph});
        CHECK((rotation_from_gibbs(c) - printed).cwiseAbs().maxCoeff() < 1e-13);
        CHECK((cartesian_schwinger_matrix(th, ph) - printed).cwiseAbs().maxCoeff() == 0.0);
      }
  }

  TEST_CASE("frame transitions map each canonical form onto the next") {
    const RadialValues v{-0.3, 0.7, 0.2};
    for (IsoGaugeFrame from : kFrames)
      for (IsoGaugeFrame to : kFrames) {
        if (from == to) continue;
        const GaugeVerifyReport r = verify_gauge_transition(from, to, v, 1.3, 1.0, 20);
        CHECK(r.max_defect_Phi < 1e-12);
        CHECK(r.max_defect_W < 1e-12);
        const GaugeVerifyReport fd = verify_gauge_transition(from, to, v, 1.3, 1.0, 8, GradientMethod::FiniteDifference);
        CHECK(fd.max_defect_W < 1e-6);
      }
  }

  TEST_CASE("Phi covariant derivative transforms homogeneously") {
    const RadialValues v{-0.3, 0.7, 0.0};
    const double e = 1.0;
    auto cart = [&](const Point4& x) { return hedgehog_sample(v, x[kR], x[kTheta], x[kPhi]); };
    auto schw = [&](const Point4& x) { return schwinger_gauge_form(v, x[kR], x[kTheta], x[kPhi], e); };
    const Point4 x{0.0, 1.1, 0.8, 0.5};
    const auto Dc = covariant_derivative(cart, x, e);
    const auto Ds = covariant_derivative(schw, x, e);
    const Mat3 O = rotation_from_gibbs(cartesian_to_schwinger_field().c(x));
    for (int a = 0; a < 4; ++a) CHECK((O * Dc[a] - Ds[a]).norm() < 1e-8);
  }

  TEST_CASE("frame names parse") {
    for (IsoGaugeFrame f : kFrames) CHECK(parse_frame(frame_name(f)) == f);
    CHECK_THROWS(parse_frame("polar"));
  }

  TEST_CASE("U(1) monopole gauges") {
    const double k = 1.5;
    CHECK(u1_alpha(AbelianGauge::Schwinger, k) == 0.0);
    CHECK(u1_alpha(AbelianGauge::Dirac, k) == k);
    CHECK(u1_alpha(AbelianGauge::WuYangN, k) == k);
    CHECK(u1_alpha(AbelianGauge::WuYangS, k) == -k);
    const AbelianGauge all[] = {AbelianGauge::Schwinger, AbelianGauge::Dirac, AbelianGauge::WuYangN,
                                AbelianGauge::WuYangS};
    using cplx = std::complex<double>;
    for (AbelianGauge a : all)
      for (AbelianGauge b : all)
        for (AbelianGauge c : all) {
          const cplx lhs = u1_transition_phase(a, b, k, 0.7) * u1_transition_phase(b, c, k, 0.7);
          CHECK(std::abs(lhs - u1_transition_phase(a, c, k, 0.7)) < 1e-14);
        }
    CHECK_THROWS_AS(abelian_potential(AbelianGauge::WuYangN, 1.0, 3.0), DomainError);
    CHECK_THROWS_AS(abelian_potential(AbelianGauge::WuYangS, 1.0, 0.1), DomainError);
    CHECK(abelian_potential(AbelianGauge::Dirac, 1.0, 0.5) == doctest::Approx(std::cos(0.5) - 1.0));
    CHECK(abelian_potential(AbelianGauge::WuYangN, 1.0, 1.0) == doctest::Approx(std::cos(1.0) - 1.0));
    CHECK(abelian_potential(AbelianGauge::WuYangS, 1.0, 2.0) == doctest::Approx(std::cos(2.0) + 1.0));
    CHECK(abelian_potential(AbelianGauge::Schwinger, 1.0, 2.0) == doctest::Approx(std::cos(2.0)));
  }
}
