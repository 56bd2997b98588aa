#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace pdmplab {

/// Counter-based random stream (Philox 4x32-10).
///
/// A stream is addressed by (seed, stream_id). The 64-bit seed forms the
/// Philox key; the stream id forms the high half of the 128-bit counter, so
/// distinct stream ids index disjoint counter blocks of one keyed
/// permutation and are statistically independent. Draw n of a stream is a
/// pure function of (seed, stream_id, n): replicas can run on any number of
/// workers and still reproduce bit-identical sequences.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const auto block = philox_block(block_index_++, stream_id_, seed_);
    spare_ = (static_cast<std::uint64_t>(block[3]) << 32) | block[2];
    have_spare_ = true;
    return (static_cast<std::uint64_t>(block[1]) << 32) | block[0];
  }

  /// Uniform on (0, 1]. Open at 0 so that -log(u) is always finite.
  double uniform01() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform on (a, a + width].
  double uniform(double a, double width) { return a + uniform01() * width; }

  /// Unit-mean exponential via inverse transform; finite by construction.
  double exponential() { return -std::log(uniform01()); }

  /// Exponential with the given rate.
  double exponential(double rate) { return exponential() / rate; }

  /// One Philox 4x32-10 block. Exposed for the known-answer tests.
  static std::array<std::uint32_t, 4> philox_block(std::uint64_t counter,
                                                   std::uint64_t counter_hi,
                                                   std::uint64_t key) {
    std::array<std::uint32_t, 4> c = {
        static_cast<std::uint32_t>(counter),
        static_cast<std::uint32_t>(counter >> 32),
        static_cast<std::uint32_t>(counter_hi),
        static_cast<std::uint32_t>(counter_hi >> 32)};
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        k0 += 0x9E3779B9u;  // Weyl increments from the Philox reference
        k1 += 0xBB67AE85u;
      }
      const std::uint64_t p0 = 0xD2511F53ull * c[0];
      const std::uint64_t p1 = 0xCD9E8D57ull * c[2];
      c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k0,
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k1,
           static_cast<std::uint32_t>(p0)};
    }
    return c;
  }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t stream_id_ = 0;
  std::uint64_t block_index_ = 0;
  std::uint64_t spare_ = 0;
  bool have_spare_ = false;
};

}  // namespace pdmplab
