#include "qdba/quantum/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qdba/des/rng.hpp"
#include "qdba/error.hpp"

namespace qdba::quantum {

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  const auto rows = entries_.rows();
  if (rows != entries_.cols() || (rows != 2 && rows != 4)) {
    throw ShapeError("density matrix must be 2x2 or 4x4, got " + std::to_string(rows) + "x" +
                     std::to_string(entries_.cols()));
  }
}

std::vector<double> DensityMatrix::z_distribution() const {
  std::vector<double> probs(static_cast<std::size_t>(dim()));
  for (int k = 0; k < dim(); ++k) probs[static_cast<std::size_t>(k)] = entries_(k, k).real();
  return probs;
}

double DensityMatrix::hermiticity_error() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_error() const { return std::abs(entries_.trace() - Complex(1.0)); }

double DensityMatrix::min_eigenvalue() const {
  const Matrix herm = 0.5 * (entries_ + entries_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_valid() const {
  return hermiticity_error() <= kHermitianTol && trace_error() <= kTraceTol &&
         min_eigenvalue() >= -kPsdTol;
}

DensityMatrix make_state(StateKind kind) {
  Matrix rho;
  switch (kind) {
    case StateKind::PsiPlus:  // (|01> + |10>)/sqrt2
      rho = Matrix::Zero(4, 4);
      rho(1, 1) = rho(1, 2) = rho(2, 1) = rho(2, 2) = 0.5;
      break;
    case StateKind::PhiMinus:  // (|00> - |11>)/sqrt2
      rho = Matrix::Zero(4, 4);
      rho(0, 0) = rho(3, 3) = 0.5;
      rho(0, 3) = rho(3, 0) = -0.5;
      break;
    case StateKind::Plus:
      rho = Matrix::Constant(2, 2, 0.5);
      break;
    case StateKind::Zero:
      rho = Matrix::Zero(2, 2);
      rho(0, 0) = 1.0;
      break;
  }
  return DensityMatrix(std::move(rho));
}

MeasurementOutcome measure_z_all(const DensityMatrix& state, des::RngStream& rng) {
  const std::vector<double> raw = state.z_distribution();
  double total = 0.0;
  std::vector<double> probs(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    probs[k] = std::max(raw[k], 0.0);
    total += probs[k];
  }
  const double u = rng.uniform() * total;
  std::size_t pick = probs.size() - 1;
  double cumulative = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    cumulative += probs[k];
    if (u < cumulative && probs[k] > 0.0) {
      pick = k;
      break;
    }
  }
  // Guard against rounding landing on a zero-probability tail entry.
  while (probs[pick] <= 0.0 && pick > 0) --pick;

  MeasurementOutcome out;
  out.probability = probs[pick] / total;
  const int n = state.num_qubits();
  out.bits.resize(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    out.bits[static_cast<std::size_t>(q)] = static_cast<std::uint8_t>((pick >> (n - 1 - q)) & 1u);
  }
  return out;
}

DensityMatrix lose_qubit(const DensityMatrix& state, int lost) {
  if (state.num_qubits() != 2) throw ShapeError("lose_qubit needs a two-qubit state");
  if (lost != 0 && lost != 1) throw ShapeError("lose_qubit: qubit index must be 0 or 1");
  Matrix reduced = Matrix::Zero(2, 2);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int t = 0; t < 2; ++t) {
        // keep index a/b on the surviving qubit, trace over t on the lost one
        const int row = lost == 0 ? (t << 1) | a : (a << 1) | t;
        const int col = lost == 0 ? (t << 1) | b : (b << 1) | t;
        reduced(a, b) += state(row, col);
      }
    }
  }
  return DensityMatrix(std::move(reduced));
}

}  // namespace qdba::quantum
