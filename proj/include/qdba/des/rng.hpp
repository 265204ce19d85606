#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

namespace qdba::des {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds (Salmon et al., SC'11).
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

/// Splittable counter-based random stream.
///
/// A stream is named by a root seed and a path of labels, e.g.
/// (run, shot, node, purpose). The path is hashed into the Philox key and the
/// upper half of the counter; the lower half counts 128-bit blocks. Streams
/// with different paths are independent, and the same (seed, path) yields the
/// same sequence on every platform. No std:: distributions are used, since
/// their output is implementation-defined.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::vector<std::uint64_t> path = {});

  /// Child stream whose path is this path plus `label`. Does not advance this.
  RngStream fork(std::uint64_t label) const;

  std::uint64_t seed() const { return seed_; }
  const std::vector<std::uint64_t>& path() const { return path_; }

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_int(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next_u64(); }

 private:
  void refill();

  std::uint64_t seed_;
  std::vector<std::uint64_t> path_;
  PhiloxKey key_{};
  std::uint64_t stream_id_ = 0;
  std::uint64_t block_ = 0;
  PhiloxCounter buffer_{};
  int consumed_ = 4;
};

inline RngStream fork_stream(const RngStream& parent, std::uint64_t label) {
  return parent.fork(label);
}

}  // namespace qdba::des
