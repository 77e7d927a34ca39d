#include <doctest.h>

#include <cmath>
#include <numbers>

#include "monopole_lab/bps.hpp"
#include "monopole_lab/errors.hpp"
#include "monopole_lab/geometry.hpp"
#include "oracles.hpp"

using namespace monopole_lab;

namespace {

MonopoleSolution type_one(Geometry g, SeedKind kind, double rho = 1.0) {
  MonopoleSolution s;
  s.model = make_model(g, rho);
  s.kind = TypeI{0.7, 0.2, SeedFamily{kind, 1.3, 0.1, +1}};
  return s;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("model construction validates the curvature radius") {
    CHECK_THROWS_AS(make_model(Geometry::Riemann, 0.0), ParameterError);
    CHECK_THROWS_AS(make_model(Geometry::Lobachevsky, -1.0), ParameterError);
    CHECK(parse_geometry("riemann") == Geometry::Riemann);
    CHECK(geometry_name(Geometry::Lobachevsky) == "lobachevsky");
    CHECK_THROWS(parse_geometry("torus"));
  }

  TEST_CASE("conformal factor in the three geometries") {
    const double r = 0.8, rho = 1.7;
    CHECK(sigma(make_model(Geometry::Euclid, rho), r) == doctest::Approx(1.0));
    CHECK(sigma(make_model(Geometry::Riemann, rho), r) == doctest::Approx(1.0 + r * r / (4 * rho * rho)));
    CHECK(sigma(make_model(Geometry::Lobachevsky, rho), r) == doctest::Approx(1.0 - r * r / (4 * rho * rho)));
    CHECK_THROWS_AS(sigma(make_model(Geometry::Lobachevsky, rho), 2.0 * rho), DomainError);
    CHECK_THROWS_AS(sigma(make_model(Geometry::Riemann, rho), -0.1), DomainError);
  }

  TEST_CASE("geodesic coordinate: round trip, dchi/dr = 1/Sigma, areal radius = r/Sigma") {
    for (Geometry g : {Geometry::Euclid, Geometry::Riemann, Geometry::Lobachevsky}) {
      const CurvatureModel m = make_model(g, 1.3);
      for (double r : {0.05, 0.4, 1.1, 2.2}) {
        if (g == Geometry::Lobachevsky && r >= 2.6) continue;
        const double chi = chi_from_r(m, r);
        CHECK(r_from_chi(m, chi) == doctest::Approx(r).epsilon(1e-13));
        const double dchi = oracle::derivative([&](double x) { return chi_from_r(m, x); }, r, 1e-4);
        CHECK(dchi == doctest::Approx(1.0 / sigma(m, r)).epsilon(1e-9));
        CHECK(areal_radius(m, chi) == doctest::Approx(r / sigma(m, r)).epsilon(1e-13));
      }
    }
  }
}

TEST_SUITE("bps") {
  TEST_CASE("seed pairs solve f1' = -f1 f2 and f2' = -f1^2") {
    for (SeedKind kind : {SeedKind::Rational, SeedKind::Hyperbolic, SeedKind::Trigonometric})
      for (int sign : {+1, -1}) {
        const SeedFamily seed{kind, 1.3, 0.4, sign};
        for (double x : {0.3, 0.9, 1.7}) {
          const SeedPair p = f_pair(seed, x);
          const double d1 = oracle::derivative([&](double y) { return f_pair(seed, y).f1; }, x);
          const double d2 = oracle::derivative([&](double y) { return f_pair(seed, y).f2; }, x);
          CHECK(d1 == doctest::Approx(-p.f1 * p.f2).epsilon(1e-9));
          CHECK(d2 == doctest::Approx(-p.f1 * p.f1).epsilon(1e-9));
        }
      }
  }

  TEST_CASE("seed closed forms") {
    const SeedPair p = f_pair(SeedFamily{SeedKind::Trigonometric, 2.0, 0.5, +1}, 0.3);
    CHECK(p.f1 == doctest::Approx(2.0 / std::sin(1.1)));
    CHECK(p.f2 == doctest::Approx(2.0 / std::tan(1.1)));
    const SeedPair q = f_pair(SeedFamily{SeedKind::Rational, 1.0, 0.0, -1}, 0.5);
    CHECK(q.f1 == doctest::Approx(-2.0));
    CHECK(q.f2 == doctest::Approx(2.0));
  }

  TEST_CASE("seed evaluation refuses arguments next to a singularity") {
    CHECK_THROWS_AS(f_pair(SeedFamily{SeedKind::Trigonometric, 1.0, 0.0, 1}, std::numbers::pi), DomainError);
    CHECK_THROWS_AS(f_pair(SeedFamily{SeedKind::Hyperbolic, 1.0, 0.0, 1}, 0.0), DomainError);
    CHECK_THROWS_AS(f_pair(SeedFamily{SeedKind::Rational, 0.0, 0.0, 1}, 1.0), ParameterError);
  }

  TEST_CASE("field-equation residuals vanish for every geometry and family") {
    for (Geometry g : {Geometry::Euclid, Geometry::Riemann, Geometry::Lobachevsky})
      for (SeedKind kind : {SeedKind::Rational, SeedKind::Hyperbolic, SeedKind::Trigonometric}) {
        const MonopoleSolution s = type_one(g, kind);
        for (double r : {0.2, 0.7, 1.3, 1.8}) {
          const FieldResidual res = residual_field_equations(s, r);
          CHECK(std::abs(res.resPhi) < 1e-9);
          CHECK(std::abs(res.resK) < 1e-9);
          // Near the Lobachevsky boundary the profiles steepen and the five-point stencil loses accuracy.
          if (g == Geometry::Lobachevsky && r > 1.5) continue;
          const FieldResidual fd = residual_field_equations(s, r, DerivativeMethod::FiniteDifference5);
          CHECK(std::abs(fd.resPhi) < 1e-5);
          CHECK(std::abs(fd.resK) < 1e-5);
        }
      }
  }

  TEST_CASE("trivial solution: K = -1/(e r^2), Phi spans the two free constants") {
    MonopoleSolution s;
    s.model = make_model(Geometry::Euclid, 1.0);
    s.kind = Trivial{0.3, 1.2};
    s.e = 2.0;
    const KPhi kp = eval_K_Phi(s, 0.5);
    CHECK(kp.K == doctest::Approx(-1.0 / (2.0 * 0.25)));
    for (Geometry g : {Geometry::Euclid, Geometry::Riemann, Geometry::Lobachevsky}) {
      s.model = make_model(g, 1.0);
      const FieldResidual res = residual_field_equations(s, 0.9);
      CHECK(std::abs(res.resPhi) < 1e-9);
      CHECK(std::abs(res.resK) < 1e-9);
    }
  }

  TEST_CASE("profile evaluation rejects invalid radii and couplings") {
    MonopoleSolution s = type_one(Geometry::Euclid, SeedKind::Hyperbolic);
    CHECK_THROWS_AS(eval_K_Phi(s, 0.0), SingularityError);
    s.e = 0.0;
    CHECK_THROWS_AS(eval_K_Phi(s, 1.0), ParameterError);
  }

  TEST_CASE("dyon: c = 0 reproduces the monopole, c != 0 solves the dyon equations") {
    const MonopoleSolution base = type_one(Geometry::Euclid, SeedKind::Trigonometric);
    const DyonSolution d0 = dyon_from_monopole(base, 0.0);
    for (double r : {0.3, 1.0, 1.6}) {
      const DyonFields f = eval_dyon(d0, r);
      const KPhi kp = eval_K_Phi(base, r);
      CHECK(f.K == kp.K);
      CHECK(f.Phi == kp.Phi);
    }
    const DyonSolution d = dyon_from_monopole(base, 0.4);
    CHECK(dyon_scale(0.4) == doctest::Approx(std::pow(1.0 - 0.16, 0.25)));
    for (double r : {0.3, 1.0, 1.6}) {
      const DyonResidual res = residual_dyon_equations(d, r);
      CHECK(std::abs(res.resPhi) < 1e-9);
      CHECK(std::abs(res.resF) < 1e-9);
      CHECK(std::abs(res.resK) < 1e-9);
    }
    CHECK_THROWS(dyon_from_monopole(base, 1.0));
  }

  TEST_CASE("large curvature radius recovers the flat profiles") {
    for (SeedKind kind : {SeedKind::Rational, SeedKind::Hyperbolic}) {
      const MonopoleSolution flat = type_one(Geometry::Euclid, kind);
      for (Geometry g : {Geometry::Riemann, Geometry::Lobachevsky}) {
        const MonopoleSolution curved = type_one(g, kind, 1e4);
        for (double r : {0.1, 1.0, 2.5}) {
          CHECK(eval_K_Phi(curved, r).K == doctest::Approx(eval_K_Phi(flat, r).K).epsilon(1e-6));
          CHECK(eval_K_Phi(curved, r).Phi == doctest::Approx(eval_K_Phi(flat, r).Phi).epsilon(1e-6));
        }
      }
    }
  }

  TEST_CASE("isotopic mixing profile on the unit sphere") {
    MonopoleSolution s;
    s.model = make_model(Geometry::Riemann, 1.0);
    s.kind = TypeI{1.0, 0.0, SeedFamily{SeedKind::Trigonometric, 1.0, 0.0, 1}};
    for (double chi : {0.4, 1.2, 2.5}) CHECK(w_over_areal(s, chi) == doctest::Approx(0.5 / std::sin(chi)));
  }

  TEST_CASE("solution JSON round trip") {
    const MonopoleSolution s = type_one(Geometry::Lobachevsky, SeedKind::Trigonometric, 2.5);
    const MonopoleSolution t = solution_from_json(to_json(s));
    CHECK(eval_K_Phi(t, 0.7).K == eval_K_Phi(s, 0.7).K);
    CHECK(eval_K_Phi(t, 0.7).Phi == eval_K_Phi(s, 0.7).Phi);
  }
}
