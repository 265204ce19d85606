#include "qdba/quantum/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qdba/error.hpp"

namespace qdba::quantum {
namespace {

constexpr double kSumTol = 1e-12;

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError(std::string(name) + " must be in [0,1], got " + std::to_string(p));
  }
}

Matrix lift(const Operator& op, int target, int num_qubits) {
  if (num_qubits == 1) return Matrix(op);
  Matrix out = Matrix::Zero(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const int r0 = r >> 1, r1 = r & 1, c0 = c >> 1, c1 = c & 1;
      if (target == 0) {
        if (r1 == c1) out(r, c) = op(r0, c0);
      } else {
        if (r0 == c0) out(r, c) = op(r1, c1);
      }
    }
  }
  return out;
}

}  // namespace

void validate(const PauliParams& params) {
  require_probability(params.p0, "p0");
  require_probability(params.px, "px");
  require_probability(params.py, "py");
  require_probability(params.pz, "pz");
  const double sum = params.p0 + params.px + params.py + params.pz;
  if (std::abs(sum - 1.0) > kSumTol) {
    throw ParameterError("Pauli probabilities must sum to 1, got " + std::to_string(sum));
  }
}

KrausChannel::KrausChannel(ChannelKind kind, std::vector<Operator> operators)
    : kind_(kind), operators_(std::move(operators)) {
  if (operators_.empty()) throw ShapeError("Kraus channel needs at least one operator");
}

double KrausChannel::completeness_error() const {
  Operator sum = Operator::Zero();
  for (const auto& k : operators_) sum += k.adjoint() * k;
  return (sum - Operator::Identity()).cwiseAbs().maxCoeff();
}

KrausChannel identity_channel() {
  return KrausChannel(ChannelKind::Identity, {Operator::Identity()});
}

KrausChannel pauli_channel(const PauliParams& params) {
  validate(params);
  const Complex i(0.0, 1.0);
  Operator x, y, z;
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;
  std::vector<Operator> ops;
  if (params.p0 > 0) ops.push_back(std::sqrt(params.p0) * Operator::Identity());
  if (params.px > 0) ops.push_back(std::sqrt(params.px) * x);
  if (params.py > 0) ops.push_back(std::sqrt(params.py) * y);
  if (params.pz > 0) ops.push_back(std::sqrt(params.pz) * z);
  return KrausChannel(ChannelKind::Pauli, std::move(ops));
}

KrausChannel amplitude_damping_channel(double gamma) {
  require_probability(gamma, "amplitude damping gamma");
  Operator k0, k1;
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return KrausChannel(ChannelKind::AmplitudeDamping, {k0, k1});
}

KrausChannel dephasing_channel(double gamma) {
  require_probability(gamma, "dephasing gamma");
  Operator k0, k1;
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, 0, 0, std::sqrt(gamma);
  return KrausChannel(ChannelKind::Dephasing, {k0, k1});
}

KrausChannel compose(const KrausChannel& first, const KrausChannel& second) {
  std::vector<Operator> ops;
  ops.reserve(first.operators().size() * second.operators().size());
  for (const auto& b : second.operators()) {
    for (const auto& a : first.operators()) ops.push_back(b * a);
  }
  return KrausChannel(ChannelKind::Composite, std::move(ops));
}

DensityMatrix apply_channel(const DensityMatrix& state, const KrausChannel& channel, int target) {
  const int n = state.num_qubits();
  if (target < 0 || target >= n) {
    throw ShapeError("channel target " + std::to_string(target) + " out of range for " +
                     std::to_string(n) + "-qubit state");
  }
  const Matrix& rho = state.entries();
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : channel.operators()) {
    const Matrix lifted = lift(k, target, n);
    out.noalias() += lifted * rho * lifted.adjoint();
  }
  // Diagonal Kraus sets fix every population; copy them so this holds exactly.
  const bool diagonal = std::all_of(channel.operators().begin(), channel.operators().end(),
                                    [](const Operator& k) { return k(0, 1) == 0.0 && k(1, 0) == 0.0; });
  if (diagonal) out.diagonal() = rho.diagonal();
  return DensityMatrix(std::move(out));
}

}  // namespace qdba::quantum
