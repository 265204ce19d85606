#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qdba::des {
class RngStream;
}

namespace qdba::quantum {

using Complex = std::complex<double>;
// At most two qubits are ever held, so storage stays inline.
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

/// Density matrix of one (dim 2) or two (dim 4) qubits.
///
/// Basis ordering is big-endian: qubit 0 is the most significant bit, so
/// basis index 1 is |01> (qubit 0 in |0>, qubit 1 in |1>).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  int num_qubits() const { return dim() == 2 ? 1 : 2; }
  const Matrix& entries() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  /// Real parts of the diagonal: the computational-basis distribution.
  std::vector<double> z_distribution() const;

  double hermiticity_error() const;
  double trace_error() const;
  double min_eigenvalue() const;
  /// Hermitian, unit trace and PSD within the module tolerances.
  bool is_valid() const;

 private:
  Matrix entries_;
};

enum class StateKind { PsiPlus, PhiMinus, Plus, Zero };

DensityMatrix make_state(StateKind kind);

struct MeasurementOutcome {
  std::vector<std::uint8_t> bits;  // one per qubit, qubit 0 first
  double probability = 0.0;
};

/// Samples a terminal Z-basis measurement of every qubit.
MeasurementOutcome measure_z_all(const DensityMatrix& state, des::RngStream& rng);

/// Partial trace over `lost`; returns the surviving qubit's reduced state.
DensityMatrix lose_qubit(const DensityMatrix& state, int lost);

}  // namespace qdba::quantum
