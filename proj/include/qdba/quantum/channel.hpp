#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qdba/quantum/density_matrix.hpp"

namespace qdba::quantum {

using Operator = Eigen::Matrix2cd;

enum class ChannelKind { Pauli, AmplitudeDamping, Dephasing, Identity, Composite };

struct PauliParams {
  double p0 = 1.0;
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;
};

/// Throws ParameterError unless each probability is in [0,1] and they sum to 1.
void validate(const PauliParams& params);

/// Single-qubit CPTP map in operator-sum form.
class KrausChannel {
 public:
  KrausChannel(ChannelKind kind, std::vector<Operator> operators);

  ChannelKind kind() const { return kind_; }
  const std::vector<Operator>& operators() const { return operators_; }

  /// max |(sum K^dag K - I)_ij|
  double completeness_error() const;

 private:
  ChannelKind kind_;
  std::vector<Operator> operators_;
};

KrausChannel identity_channel();
// Zero-weight Pauli terms are dropped, so Pauli(1,0,0,0) is a single identity.
KrausChannel pauli_channel(const PauliParams& params);
KrausChannel amplitude_damping_channel(double gamma);
KrausChannel dephasing_channel(double gamma);
/// The channel that applies `first` and then `second`.
KrausChannel compose(const KrausChannel& first, const KrausChannel& second);

/// Applies the channel to qubit `target` of the state (identity elsewhere).
DensityMatrix apply_channel(const DensityMatrix& state, const KrausChannel& channel,
                            int target);

}  // namespace qdba::quantum
