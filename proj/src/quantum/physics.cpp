#include "qdba/quantum/physics.hpp"

#include <cmath>
#include <string>

#include "qdba/error.hpp"

namespace qdba::quantum {

DecoherenceGammas decoherence_params(double t, double t1, double t2) {
  if (!(t1 > 0.0)) throw ParameterError("T1 must be positive");
  if (!(t2 > 0.0)) throw ParameterError("T2 must be positive");
  if (!(t >= 0.0)) throw ParameterError("elapsed time must be non-negative");
  if (t1 < t2 / 2.0) {
    throw ConstraintError("decoherence model requires T1 >= T2/2 (T1=" + std::to_string(t1) +
                          ", T2=" + std::to_string(t2) + ")");
  }
  DecoherenceGammas g;
  g.gamma1 = -std::expm1(-t / t1);
  g.gamma2 = -std::expm1(-t * (2.0 * t1 - t2) / (2.0 * t1 * t2));
  return g;
}

double survival_probability(double alpha_db_per_km, double length_km) {
  if (!(alpha_db_per_km >= 0.0)) throw ParameterError("attenuation must be non-negative");
  if (!(length_km >= 0.0)) throw ParameterError("fiber length must be non-negative");
  return std::pow(10.0, -alpha_db_per_km * length_km / 10.0);
}

}  // namespace qdba::quantum
