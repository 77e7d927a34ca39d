#include <doctest.h>

#include <cmath>
#include <numbers>

#include "monopole_lab/errors.hpp"
#include "monopole_lab/symmetry.hpp"
#include "oracles.hpp"

using namespace monopole_lab;

namespace {

const cplx kA(0.6, -0.2), kB(-0.3, 0.8);

}  // namespace

TEST_SUITE("symmetry") {
  TEST_CASE("angular momentum algebra in every realization") {
    const Realization reals[] = {{RealizationKind::PauliLambda, HalfInt::from_doubled(3), 1},
                                 {RealizationKind::AbelianK, HalfInt(-1), 1},
                                 {RealizationKind::DoubletSchwinger, 0, 1},
                                 {RealizationKind::DiracGauge, kHalf, 1},
                                 {RealizationKind::WuYang, HalfInt(1), 1},
                                 {RealizationKind::WuYang, HalfInt(1), -1}};
    for (const auto& r : reals) {
      const Su2Report s = su2_algebra_defect(r, 3);
      CAPTURE(s.realization);
      CHECK(s.commutator_defect < 1e-12);
      CHECK(s.casimir_defect < 1e-12);
      CHECK(s.j3_defect < 1e-12);
    }
    CHECK(j3_spectrum_transport_defect(HalfInt(1), 3) < 1e-12);
    CHECK_THROWS(su2_algebra_defect(reals[0], 7));
  }

  TEST_CASE("K eigenvalues on Abelian states") {
    for (int dk : {1, -1, 3}) {
      const HalfInt k = HalfInt::from_doubled(dk);
      for (int dj = std::abs(dk) + 1; dj <= std::abs(dk) + 3; dj += 2)
        for (int delta : {1, -1}) {
          const HalfInt j = HalfInt::from_doubled(dj);
          const EigenFit fit = apply_K_hat(abelian_delta_state(k, j, j, delta, kA, kB));
          const double jh = j.value() + 0.5, kv = k.value();
          CHECK(std::abs(fit.eigenvalue - cplx(-delta * std::sqrt(jh * jh - kv * kv))) < 1e-12);
          CHECK(fit.defect < 1e-12);
        }
      const EigenFit zero = apply_K_hat(abelian_jmin_state(k, k.abs() - kHalf, kA, kB));
      CHECK(std::abs(zero.eigenvalue) < 1e-12);
      CHECK(zero.defect < 1e-12);
    }
    CHECK(jmin_annihilation_defect(kHalf, 0) < 1e-12);
    CHECK(jmin_annihilation_defect(HalfInt(-1), kHalf) < 1e-12);
  }

  TEST_CASE("K eigenvalues on doublet states") {
    for (int j = 1; j <= 3; ++j)
      for (int mu : {1, -1}) {
        const EigenFit fit = apply_K_hat(doublet_mu_state(j, 0, 0.9, 1, mu, kA, kB));
        CHECK(std::abs(fit.eigenvalue - cplx(-mu * std::sqrt(j * (j + 1.0)))) < 1e-12);
      }
    CHECK_THROWS_AS(apply_K_hat(doublet_mu_state(1, 0, 0.9, 1, 1, kA, kB), 0.3), UnsupportedError);
  }

  TEST_CASE("N_A eigenstates, square and conjugation") {
    for (int j = 0; j <= 3; ++j)
      for (int delta : {1, -1}) {
        const auto st = constrained_doublet_state(j, 0, 1.1, delta, {kA, kB, kB * 0.5, kA * 2.0});
        const NAResult r = apply_N_A(1.1, st);
        CHECK(r.delta == delta);
        CHECK(r.defect < 1e-12);
      }
    CHECK(n_a_square_defect(1.1, 3) < 1e-12);
    CHECK(n_a_conjugation_defect(0.4) < 1e-13);
    CHECK(cartesian_schwinger_transport_defect(0.4, 1.0, 2.0) < 1e-13);
    auto st = constrained_doublet_state(1, 0, 1.1, 1, {kA, kB, kA, kB});
    st.iso_frame = IsoGaugeFrame::Cartesian;
    CHECK_THROWS_AS(apply_N_A(1.1, st), ArgumentError);
    CHECK_THROWS_AS(U_A_matrix(IsoGaugeFrame::Dirac, 0.3, 1.0, 1.0), UnsupportedError);
  }

  TEST_CASE("Hamiltonian commutators") {
    const CommutatorReport r = hamiltonian_commutators(0.7, 2);
    CHECK(r.H_t3 < 1e-12);
    CHECK(r.H_NA < 1e-12);
    CHECK(r.t3_NA > 0.5);
    CHECK(r.mixing_NA > 0.5);
    CHECK(hamiltonian_commutators(0.0, 2).mixing_NA < 1e-12);
    CHECK(hamiltonian_commutators(std::numbers::pi, 2).mixing_NA < 1e-12);
  }

  TEST_CASE("consistency of the constrained radial system") {
    const double w = 0.4, A = 0.9;
    CHECK(n_a_consistency_residual(A, 1, 1.3, 0.8, 1.5, w, 0.0, 0.0) ==
          doctest::Approx(std::sqrt(2.0) * w * std::sin(A)).epsilon(1e-12));
    CHECK(n_a_consistency_residual(A, 1, 1.3, 0.8, 1.5, 0.0, 0.0, 0.0) < 1e-13);
    const auto angles = n_a_consistent_angles(360, 1e-10, 1, 1.3, 0.8, 1.5, w, 0.0, 0.0);
    REQUIRE(angles.size() == 2);
    CHECK(angles[0] == 0.0);
    CHECK(angles[1] == doctest::Approx(std::numbers::pi));
    CHECK(n_a_consistent_angles(360, 1e-10, -1, 1.3, 0.8, 1.5, 0.0, 0.0, 0.0).size() == 360);
  }

  TEST_CASE("parity") {
    const AbelianState electron = abelian_delta_state(0, HalfInt::from_doubled(3), kHalf, 1, kA, kB);
    const EigenFit p = parity_eigen_fit(apply_parity_bispinor(sample_state(electron, 12, 16)));
    CHECK(p.defect < 1e-12);
    CHECK(std::abs(std::abs(p.eigenvalue) - 1.0) < 1e-12);
    const AbelianState monopole = abelian_delta_state(kHalf, 1, 0, 1, kA, kB);
    CHECK(parity_eigen_fit(apply_parity_bispinor(sample_state(monopole, 12, 16))).defect > 0.1);
    CHECK(std::abs(half_integer_phase(HalfInt::from_doubled(1)) - cplx(0, 1)) < 1e-15);
    CHECK(two_sector_identity_defect(kHalf, 1, 0, 1, kA, kB) < 1e-12);
    CHECK(abelian_sigma_column_defect(abelian_delta_state(kHalf, 2, 1, 1, kA, kB)) < 1e-12);
  }

  TEST_CASE("selection rule truth table") {
    for (int omega : {1, -1})
      for (int d : {1, -1})
        for (int dp : {1, -1})
          for (int J = 0; J <= 3; ++J)
            for (int Jp = 0; Jp <= 3; ++Jp) {
              const bool forced = oracle::selection_forced_zero(omega, d, dp, J, Jp);
              CHECK((selection_rule(omega, d, dp, J, Jp) == SelectionOutcome::ForcedZero) == forced);
              CHECK(selection_factor(omega, d, dp, J, Jp) == (forced ? 0 : 2));
            }
    CHECK_THROWS_AS(selection_factor(1, 1, 1, kHalf, 0), ArgumentError);
    CHECK_THROWS_AS(selection_factor(2, 1, 1, 0, 0), ArgumentError);
  }
}
