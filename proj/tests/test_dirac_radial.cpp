#include <doctest.h>

#include <cmath>
#include <numbers>

#include "monopole_lab/bps.hpp"
#include "monopole_lab/dirac_radial.hpp"
#include "monopole_lab/errors.hpp"

using namespace monopole_lab;

namespace {

DoubletRadialSystem mu_reduced(int j, double m) {
  DoubletRadialSystem s;
  s.m = m;
  s.j = j;
  s.form = DoubletForm::MuReduced;
  return s;
}

// Exact levels of the W = 0 doublet on the unit sphere: eps^2 = m^2 + (nu + 1/2 + n)^2.
double closed_form_level(int j, double m, int n) {
  const double nu = std::sqrt(j * (j + 1.0));
  return std::sqrt(m * m + std::pow(nu + 0.5 + n, 2));
}

}  // namespace

TEST_SUITE("dirac_radial") {
  TEST_CASE("system dimensions and argument checks") {
    DoubletRadialSystem s = mu_reduced(1, 1.0);
    CHECK(dimension(RadialSystem(s)) == 2);
    s.form = DoubletForm::Full8;
    CHECK(dimension(RadialSystem(s)) == 8);
    s.form = DoubletForm::WReduced;
    CHECK(dimension(RadialSystem(s)) == 4);
    CHECK_THROWS_AS(derivative_matrix(RadialSystem(s), 0.0), SingularityError);
    CHECK_THROWS_AS(derivative_matrix(RadialSystem(s), std::numbers::pi), SingularityError);
    CHECK_THROWS_AS(rhs(RadialSystem(s), 1.0, StateVec::Zero(2)), ArgumentError);
    DoubletRadialSystem w = mu_reduced(1, 1.0);
    w.w_over_s = [](double) { return 0.3; };
    CHECK_THROWS_AS(derivative_matrix(RadialSystem(w), 1.0), UnsupportedError);
    AbelianRadialSystem a;
    a.k = 1.5;
    a.j = kHalf;
    CHECK_THROWS_AS(a.nu(), ParameterError);
    CHECK_THROWS_AS(integrate(RadialSystem(mu_reduced(1, 1.0)), {1.0, 0.5}, StateVec::Ones(2)), ArgumentError);
  }

  TEST_CASE("reduced systems conserve their flux") {
    const auto grid = uniform_grid(0.2, 2.9, 4000);
    const DoubletRadialSystem s = mu_reduced(2, 0.7);
    StateVec y0(2);
    y0 << cplx(0.3, 0.1), cplx(-0.2, 0.5);
    const Trajectory t = integrate(RadialSystem(with_energy(RadialSystem(s), 1.9)), grid, y0);
    for (const auto& y : t.y) CHECK(flux_mu_reduced(y) == doctest::Approx(flux_mu_reduced(y0)).epsilon(1e-6));
    DoubletRadialSystem z;
    z.j = 0;
    z.m = 0.7;
    z.epsilon = 1.2;
    z.form = DoubletForm::J0;
    z.w_over_s = [](double chi) { return 0.5 / std::sin(chi); };
    const Trajectory tz = integrate(RadialSystem(z), grid, y0);
    for (const auto& y : tz.y) CHECK(flux_j0(y) == doctest::Approx(flux_j0(y0)).epsilon(1e-6));
  }

  TEST_CASE("sphere spectrum matches the closed-form levels") {
    for (int j : {1, 2})
      for (double m : {0.0, 1.0}) {
        const SpectrumResult r = spectrum_s3(make_spectral_problem(RadialSystem(mu_reduced(j, m)), 2000), 4);
        REQUIRE(r.eigenvalues.size() == 4);
        for (int n = 0; n < 4; ++n) {
          CHECK(r.eigenvalues_refined[n] == doctest::Approx(closed_form_level(j, m, n)).epsilon(1e-8));
          CHECK(r.drift[n] < 1e-6);
        }
        CHECK(r.complex_residual < 1e-10);
        CHECK(r.diagnostic.empty());
      }
  }

  TEST_CASE("massless spectrum is symmetric under eps -> -eps") {
    SpectralProblem p = make_spectral_problem(RadialSystem(mu_reduced(1, 0.0)), 2000);
    p.e_max = 6.0;
    const SpectrumResult pos = spectrum_s3(p, 3);
    p.e_min = -6.0;
    p.e_max = -1e-6;
    const SpectrumResult neg = spectrum_s3(p, 10);
    REQUIRE(neg.eigenvalues.size() >= 3);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(std::abs(pos.eigenvalues_refined[i] + neg.eigenvalues_refined[neg.eigenvalues.size() - 1 - i]) < 1e-8);
  }

  TEST_CASE("levels rise with the angular momentum") {
    const auto a = spectrum_s3(make_spectral_problem(RadialSystem(mu_reduced(1, 1.0)), 2000), 1);
    const auto b = spectrum_s3(make_spectral_problem(RadialSystem(mu_reduced(2, 1.0)), 2000), 1);
    CHECK(b.eigenvalues[0] > a.eigenvalues[0]);
  }

  TEST_CASE("isotopic mixing background") {
    MonopoleSolution sol;
    sol.model = make_model(Geometry::Riemann, 1.0);
    sol.kind = TypeI{0.7, 0.2, SeedFamily{SeedKind::Trigonometric, 1.3, 0.1, 1}};
    const ScalarProfile w = w_over_s_profile(sol);
    for (double chi : {0.5, 1.5, 2.4}) CHECK(w(chi) == doctest::Approx(w_over_areal(sol, chi)).epsilon(1e-12));
    sol.kind = Trivial{};
    CHECK_FALSE(static_cast<bool>(w_over_s_profile(sol)));

    DoubletRadialSystem s = mu_reduced(1, 1.0);
    s.form = DoubletForm::WReduced;
    s.w_over_s = [](double chi) { return 0.5 / std::sin(chi); };
    const SpectrumResult r = spectrum_s3(make_spectral_problem(RadialSystem(s), 2000), 3);
    REQUIRE(r.eigenvalues.size() == 3);
    for (double d : r.drift) CHECK(d < 1e-6);
    CHECK(r.eigenvalues[0] > 1.0);
  }

  TEST_CASE("j = 0 without mixing has an undetermined boundary condition") {
    DoubletRadialSystem s;
    s.j = 0;
    s.m = 1.0;
    s.form = DoubletForm::J0;
    const SpectrumResult r = spectrum_s3(make_spectral_problem(RadialSystem(s), 1000), 3);
    CHECK(r.eigenvalues.empty());
    CHECK_FALSE(r.diagnostic.empty());
    CHECK_THROWS_AS(spectrum_s3(make_spectral_problem(RadialSystem(mu_reduced(1, 1.0)), 1000), 0), ArgumentError);
    DoubletRadialSystem flat = mu_reduced(1, 1.0);
    flat.model = make_model(Geometry::Euclid, 1.0);
    CHECK_THROWS_AS(spectrum_s3(make_spectral_problem(RadialSystem(flat), 1000), 3), UnsupportedError);
  }

  TEST_CASE("lowest-j bound state") {
    const BoundStateValue b = bound_state_jmin(0.6, 1.0, 2.0);
    CHECK(b.kappa == doctest::Approx(0.8));
    CHECK(b.f == doctest::Approx(std::exp(-1.6)));
    CHECK(std::abs(b.companion - cplx(0.6, -0.8) * b.f) < 1e-15);
    CHECK(bound_state_residual(0.6, 1.0, 2.0) < 1e-15);
    CHECK_THROWS_AS(bound_state_jmin(1.2, 1.0, 1.0), ParameterError);
  }

  TEST_CASE("doublet solutions factorize into Abelian ones") {
    const CurvatureModel sphere = make_model(Geometry::Riemann, 1.0);
    const auto grid = uniform_grid(0.3, 2.8, 400);
    for (int j : {0, 1, 2}) {
      const AbelianSolution minus = solve_abelian(-0.5, j, 1.7, 0.6, 1, sphere, grid, {0.4, 0.1}, {-0.2, 0.3});
      const AbelianSolution plus = solve_abelian(0.5, j, 1.7, 0.6, 1, sphere, grid, {0.1, -0.5}, {0.7, 0.2});
      CHECK(factorize_doublet(minus, plus, 0.8, 1, 1).residual < 1e-8);
    }
    const AbelianSolution a = solve_abelian(-0.5, 1, 1.7, 0.6, 1, sphere, grid, 1.0, 1.0);
    const AbelianSolution b = solve_abelian(0.5, 1, 1.9, 0.6, 1, sphere, grid, 1.0, 1.0);
    CHECK_THROWS_AS(factorize_doublet(a, b, 0.0, 1, 1), ParameterError);
    CHECK(reduction_consistency(1, 1.4, 0.6, 1, -1, 0.5, grid, {0.3, 0.2}, {0.1, -0.4}) < 1e-12);
  }
}
