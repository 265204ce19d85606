#pragma once

namespace qdba::quantum {

struct DecoherenceParams {
  double t1 = 0.0;  // seconds
  double t2 = 0.0;  // seconds
  double t = 0.0;   // elapsed seconds
};

struct DecoherenceGammas {
  double gamma1 = 0.0;  // amplitude damping
  double gamma2 = 0.0;  // pure dephasing on top of the damping-induced part
};

/// gamma1 = 1 - exp(-t/T1), gamma2 = 1 - exp(-t (2 T1 - T2) / (2 T1 T2)).
/// Requires T1 >= T2/2 (ConstraintError otherwise).
DecoherenceGammas decoherence_params(double t, double t1, double t2);

inline DecoherenceGammas decoherence_params(const DecoherenceParams& p) {
  return decoherence_params(p.t, p.t1, p.t2);
}

/// Fiber transmission probability 10^(-alpha * length / 10).
double survival_probability(double alpha_db_per_km, double length_km);

}  // namespace qdba::quantum
