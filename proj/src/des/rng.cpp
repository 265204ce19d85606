#include "qdba/des/rng.hpp"

#include <utility>

#include "qdba/error.hpp"

namespace qdba::des {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Two independent chains so the key and the counter's stream half differ.
std::pair<std::uint64_t, std::uint64_t> hash_path(std::uint64_t seed,
                                                  const std::vector<std::uint64_t>& path) {
  std::uint64_t a = mix64(seed + 0x9E3779B97F4A7C15ull);
  std::uint64_t b = mix64(seed ^ 0x6A09E667F3BCC909ull);
  for (std::uint64_t label : path) {
    a = mix64(a ^ mix64(label + 0x9E3779B97F4A7C15ull));
    b = mix64(b + mix64(label ^ 0xBB67AE8584CAA73Bull));
  }
  return {a, b};
}

}  // namespace

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

RngStream::RngStream(std::uint64_t seed, std::vector<std::uint64_t> path)
    : seed_(seed), path_(std::move(path)) {
  const auto [k, s] = hash_path(seed_, path_);
  key_ = {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  stream_id_ = s;
}

RngStream RngStream::fork(std::uint64_t label) const {
  std::vector<std::uint64_t> child = path_;
  child.push_back(label);
  return RngStream(seed_, std::move(child));
}

void RngStream::refill() {
  const PhiloxCounter ctr = {
      static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
      static_cast<std::uint32_t>(stream_id_), static_cast<std::uint32_t>(stream_id_ >> 32)};
  buffer_ = philox4x32_10(ctr, key_);
  ++block_;
  consumed_ = 0;
}

std::uint64_t RngStream::next_u64() {
  if (consumed_ > 2) refill();
  const std::uint64_t lo = buffer_[consumed_];
  const std::uint64_t hi = buffer_[consumed_ + 1];
  consumed_ += 2;
  return (hi << 32) | lo;
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_int(std::uint64_t bound) {
  if (bound == 0) throw ParameterError("uniform_int: bound must be positive");
  // Lemire's multiply-shift with rejection of the biased low band.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const unsigned __int128 product =
        static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(bound);
    if (static_cast<std::uint64_t>(product) >= threshold) {
      return static_cast<std::uint64_t>(product >> 64);
    }
  }
}

}  // namespace qdba::des
