#include <doctest.h>

#include <array>
#include <cmath>

#include "oracle.hpp"
#include "qdba/des/rng.hpp"
#include "qdba/error.hpp"
#include "qdba/quantum/channel.hpp"
#include "qdba/quantum/density_matrix.hpp"
#include "qdba/quantum/physics.hpp"

using namespace qdba;
using namespace qdba::quantum;

namespace {


double max_diff(const DensityMatrix& rho, const oracle::M4& ref) {
  double d = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(rho(i, j) - ref[i][j]));
  return d;
}

PauliParams random_pauli(des::RngStream& rng) {
  double w[4];
  double s = 0;
  for (double& x : w) s += (x = rng.uniform());
  return {w[0] / s, w[1] / s, w[2] / s, 1.0 - (w[0] + w[1] + w[2]) / s};
}

}  // namespace

TEST_SUITE("quantum") {

TEST_CASE("standard states") {
  const auto psi = make_state(StateKind::PsiPlus);
  CHECK(psi.num_qubits() == 2);
  CHECK(psi.is_valid());
  CHECK(max_diff(psi, oracle::psi_plus()) < 1e-15);
  const auto z = psi.z_distribution();
  CHECK(z == std::vector<double>{0.0, 0.5, 0.5, 0.0});

  const auto plus = make_state(StateKind::Plus);
  CHECK(plus.num_qubits() == 1);
  CHECK(plus.z_distribution() == std::vector<double>{0.5, 0.5});
  CHECK(make_state(StateKind::Zero).z_distribution() == std::vector<double>{1.0, 0.0});
  CHECK(make_state(StateKind::PhiMinus).z_distribution() ==
        std::vector<double>{0.5, 0.0, 0.0, 0.5});
}

TEST_CASE("only 2x2 and 4x4 matrices are states") {
  CHECK_THROWS_AS(DensityMatrix(Matrix::Identity(3, 3) / 3.0), ShapeError);
  CHECK_THROWS_AS(DensityMatrix(Matrix::Identity(1, 1)), ShapeError);
  CHECK_NOTHROW(DensityMatrix(Matrix::Identity(4, 4) / 4.0));
}

TEST_CASE("amplitude damping 0.5 on the second qubit of psi+") {
  const auto out = apply_channel(make_state(StateKind::PsiPlus), amplitude_damping_channel(0.5), 1);
  const auto z = out.z_distribution();
  const std::array<double, 4> expected{0.25, 0.25, 0.5, 0.0};
  for (int k = 0; k < 4; ++k) CHECK(z[k] == doctest::Approx(expected[k]).epsilon(1e-14));
  CHECK(out.is_valid());
}

TEST_CASE("channels agree with brute-force Kraus sums") {
  des::RngStream rng(11, {1});
  for (int trial = 0; trial < 50; ++trial) {
    const PauliParams p = random_pauli(rng);
    const double g1 = rng.uniform();
    const double g2 = rng.uniform();
    for (int target = 0; target < 2; ++target) {
      const auto psi = make_state(StateKind::PsiPlus);
      CHECK(max_diff(apply_channel(psi, pauli_channel(p), target),
                     oracle::apply(oracle::psi_plus(), oracle::pauli(p.p0, p.px, p.py, p.pz),
                                   target)) < 1e-13);
      CHECK(max_diff(apply_channel(psi, amplitude_damping_channel(g1), target),
                     oracle::apply(oracle::psi_plus(), oracle::damping(g1), target)) < 1e-13);
      CHECK(max_diff(apply_channel(psi, dephasing_channel(g2), target),
                     oracle::apply(oracle::psi_plus(), oracle::dephasing(g2), target)) < 1e-13);
    }
  }
}

TEST_CASE("composition equals sequential application") {
  des::RngStream rng(12, {2});
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = amplitude_damping_channel(rng.uniform());
    const auto b = pauli_channel(random_pauli(rng));
    const auto c = compose(a, b);
    CHECK(c.kind() == ChannelKind::Composite);
    CHECK(c.completeness_error() < 1e-12);
    for (int target = 0; target < 2; ++target) {
      const auto psi = make_state(StateKind::PsiPlus);
      const auto seq = apply_channel(apply_channel(psi, a, target), b, target);
      const auto once = apply_channel(psi, c, target);
      CHECK((seq.entries() - once.entries()).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("dephasing and Z errors preserve the diagonal exactly") {
  for (double g : {0.0, 0.3, 0.5, 1.0}) {
    const auto out = apply_channel(make_state(StateKind::PsiPlus), dephasing_channel(g), 1);
    CHECK(out.z_distribution() == std::vector<double>{0.0, 0.5, 0.5, 0.0});
  }
  const auto z = apply_channel(make_state(StateKind::PsiPlus), pauli_channel({0.0, 0, 0, 1.0}), 0);
  CHECK(z.z_distribution() == std::vector<double>{0.0, 0.5, 0.5, 0.0});
  const auto x = apply_channel(make_state(StateKind::PsiPlus), pauli_channel({0.0, 1.0, 0, 0}), 0);
  CHECK(x.z_distribution() == std::vector<double>{0.5, 0.0, 0.0, 0.5});
}

TEST_CASE("property: dephasing never moves populations") {
  des::RngStream rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    auto rho = apply_channel(make_state(StateKind::PsiPlus),
                             amplitude_damping_channel(rng.uniform()), 1);
    rho = apply_channel(rho, pauli_channel(random_pauli(rng)), 0);
    const int target = static_cast<int>(rng.uniform_int(2));
    const auto out = apply_channel(rho, dephasing_channel(rng.uniform()), target);
    CHECK(out.z_distribution() == rho.z_distribution());
  }
}

TEST_CASE("channel parameters are validated") {
  CHECK_THROWS_AS(pauli_channel({0.5, 0.1, 0.1, 0.1}), ParameterError);
  CHECK_THROWS_AS(pauli_channel({1.1, -0.1, 0, 0}), ParameterError);
  CHECK_THROWS_AS(amplitude_damping_channel(-0.01), ParameterError);
  CHECK_THROWS_AS(amplitude_damping_channel(1.01), ParameterError);
  CHECK_THROWS_AS(dephasing_channel(2.0), ParameterError);
  CHECK_THROWS_AS(apply_channel(make_state(StateKind::PsiPlus), identity_channel(), 2), ShapeError);
  CHECK_THROWS_AS(apply_channel(make_state(StateKind::Plus), identity_channel(), 1), ShapeError);
}

TEST_CASE("zero-weight Pauli terms are dropped") {
  CHECK(pauli_channel({1.0, 0, 0, 0}).operators().size() == 1);
  CHECK(pauli_channel({0.5, 0, 0.5, 0}).operators().size() == 2);
}

TEST_CASE("Kraus sets are complete") {
  des::RngStream rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(pauli_channel(random_pauli(rng)).completeness_error() < 1e-12);
    CHECK(amplitude_damping_channel(rng.uniform()).completeness_error() < 1e-12);
    CHECK(dephasing_channel(rng.uniform()).completeness_error() < 1e-12);
  }
}

TEST_CASE("property: channels keep states valid") {
  des::RngStream rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    auto rho = make_state(trial % 2 ? StateKind::PsiPlus : StateKind::PhiMinus);
    for (int step = 0; step < 4; ++step) {
      const int target = static_cast<int>(rng.uniform_int(2));
      switch (rng.uniform_int(3)) {
        case 0: rho = apply_channel(rho, pauli_channel(random_pauli(rng)), target); break;
        case 1: rho = apply_channel(rho, amplitude_damping_channel(rng.uniform()), target); break;
        default: rho = apply_channel(rho, dephasing_channel(rng.uniform()), target); break;
      }
    }
    CHECK(rho.is_valid());
  }
}

TEST_CASE("losing a qubit traces it out") {
  const auto half = lose_qubit(make_state(StateKind::PsiPlus), 0);
  CHECK(half.num_qubits() == 1);
  CHECK(std::abs(half(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(half(1, 1) - 0.5) < 1e-15);
  CHECK(std::abs(half(0, 1)) < 1e-15);
  const auto damped = apply_channel(make_state(StateKind::PsiPlus), amplitude_damping_channel(1.0), 1);
  const auto kept = lose_qubit(damped, 1);
  CHECK(kept.z_distribution()[0] == doctest::Approx(0.5));
  CHECK_THROWS_AS(lose_qubit(half, 0), ShapeError);
  CHECK_THROWS_AS(lose_qubit(make_state(StateKind::PsiPlus), 2), ShapeError);
}

TEST_CASE("measurement samples the diagonal") {
  const auto rho = apply_channel(make_state(StateKind::PsiPlus), amplitude_damping_channel(0.5), 1);
  des::RngStream rng(15);
  std::array<int, 4> counts{};
  const int draws = 20000;
  for (int k = 0; k < draws; ++k) {
    const auto m = measure_z_all(rho, rng);
    REQUIRE(m.bits.size() == 2);
    ++counts[2 * m.bits[0] + m.bits[1]];
    CHECK(m.probability > 0.0);
  }
  const std::array<double, 4> p{0.25, 0.25, 0.5, 0.0};
  for (int k = 0; k < 4; ++k) {
    const double sigma = std::sqrt(draws * p[k] * (1 - p[k]));
    CHECK(std::abs(counts[k] - draws * p[k]) <= 4 * sigma + 1e-9);
  }
}

TEST_CASE("decoherence parameters") {
  const auto g = decoherence_params(0.05e-3, 0.05e-3, 0.05e-3);
  CHECK(g.gamma1 == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-14));
  CHECK(g.gamma2 == doctest::Approx(1 - std::exp(-0.5)).epsilon(1e-14));
  const auto zero = decoherence_params(0.0, 1.0, 1.0);
  CHECK(zero.gamma1 == 0.0);
  CHECK(zero.gamma2 == 0.0);
  // T2 = 2 T1 is the boundary: no extra dephasing.
  CHECK(decoherence_params(1.0, 1.0, 2.0).gamma2 == 0.0);
  CHECK_THROWS_AS(decoherence_params(1.0, 1.0, 3.0), ConstraintError);
  CHECK_THROWS_AS(decoherence_params(-1.0, 1.0, 1.0), ParameterError);
  // tiny t keeps full precision
  CHECK(decoherence_params(0.05e-9, 0.05e-3, 0.05e-3).gamma1 ==
        doctest::Approx(1e-6).epsilon(1e-5));
}

TEST_CASE("fiber survival") {
  CHECK(survival_probability(0.02, 100.0) == doctest::Approx(std::pow(10.0, -0.2)));
  CHECK(survival_probability(0.2, 50.0) == doctest::Approx(0.1));
  CHECK(survival_probability(0.02, 0.0) == 1.0);
  CHECK_THROWS_AS(survival_probability(-0.1, 1.0), ParameterError);
  CHECK_THROWS_AS(survival_probability(0.1, -1.0), ParameterError);
}

}  // TEST_SUITE
