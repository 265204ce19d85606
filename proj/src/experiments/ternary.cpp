#include "qdba/experiments/ternary.hpp"

#include "qdba/error.hpp"

namespace qdba::experiments {

std::vector<quantum::PauliParams> ternary_grid(double total, int resolution) {
  if (resolution < 1) throw ParameterError("ternary resolution must be >= 1");
  if (!(total >= 0.0 && total <= 1.0)) throw ParameterError("ternary total must be in [0,1]");
  std::vector<quantum::PauliParams> out;
  out.reserve(static_cast<std::size_t>(resolution + 1) * (resolution + 2) / 2);
  const double step = total / resolution;
  for (int a = 0; a <= resolution; ++a) {
    for (int b = 0; a + b <= resolution; ++b) {
      const int c = resolution - a - b;
      quantum::PauliParams p;
      p.px = a * step;
      p.py = b * step;
      p.pz = c * step;
      p.p0 = 1.0 - total;
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace qdba::experiments
