#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "pdmplab/rng.hpp"

using pdmplab::RngStream;

TEST_CASE("philox 4x32-10 known-answer vectors") {
  // Random123 reference vectors.
  {
    const auto block = RngStream::philox_block(0, 0, 0);
    CHECK(block[0] == 0x6627e8d5u);
    CHECK(block[1] == 0xe169c58du);
    CHECK(block[2] == 0xbc57ac4cu);
    CHECK(block[3] == 0x9b00dbd8u);
  }
  {
    const auto block = RngStream::philox_block(~0ull, ~0ull, ~0ull);
    CHECK(block[0] == 0x408f276du);
    CHECK(block[1] == 0x41c83b0eu);
    CHECK(block[2] == 0xa20bc7c6u);
    CHECK(block[3] == 0x6d5451fdu);
  }
  {
    const std::uint64_t ctr_lo = (0x85a308d3ull << 32) | 0x243f6a88ull;
    const std::uint64_t ctr_hi = (0x03707344ull << 32) | 0x13198a2eull;
    const std::uint64_t key = (0x299f31d0ull << 32) | 0xa4093822ull;
    const auto block = RngStream::philox_block(ctr_lo, ctr_hi, key);
    CHECK(block[0] == 0xd16cfe09u);
    CHECK(block[1] == 0x94fdccebu);
    CHECK(block[2] == 0x5001e420u);
    CHECK(block[3] == 0x24126ea1u);
  }
}

TEST_CASE("identical (seed, stream) reproduces identical draws") {
  RngStream a(42, 7);
  RngStream b(42, 7);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct streams do not collide") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t stream = 0; stream < 64; ++stream) {
    RngStream rng(123, stream);
    for (int i = 0; i < 64; ++i) seen.insert(rng.next_u64());
  }
  CHECK(seen.size() == 64u * 64u);
}

TEST_CASE("uniform01 lies in (0, 1] and exponential is finite") {
  RngStream rng(1, 0);
  double min_u = 1.0, max_u = 0.0;
  for (int i = 0; i < 200000; ++i) {
    const double u = rng.uniform01();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
    min_u = std::min(min_u, u);
    max_u = std::max(max_u, u);
    const double e = rng.exponential();
    CHECK(std::isfinite(e));
    CHECK(e >= 0.0);
  }
  CHECK(min_u < 0.01);
  CHECK(max_u > 0.99);
}

TEST_CASE("uniform and exponential moments are sane") {
  RngStream rng(2024, 3);
  const int n = 400000;
  double sum_u = 0.0, sum_e = 0.0;
  for (int i = 0; i < n; ++i) {
    sum_u += rng.uniform01();
    sum_e += rng.exponential();
  }
  CHECK(sum_u / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(sum_e / n == doctest::Approx(1.0).epsilon(0.01));
}
