// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0
//
// Counter-based random number generation (Philox4x64-10).
//
// Every harness trial owns an independent stream keyed by
// (seed, stream tag, trial index): the 128-bit Philox key is
// (seed, kKeyConst) and the 256-bit counter is laid out as
// (block, trial index, stream tag, 0), with `block` advancing as the
// trial consumes numbers. Streams never overlap and any trial can be
// generated without sequencing through its predecessors, so batches are
// reproducible under any execution order.

#pragma once

#include <array>
#include <cstdint>

namespace arrow3 {

/// One Philox4x64-10 block: 256 counter bits in, 256 random bits out.
/// Matches the reference constants; verified against numpy.random.Philox.
std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key);

/// Key-schedule constant mixed into the second key word so that a plain
/// integer seed never collides with an all-zero key.
inline constexpr std::uint64_t kKeyConst = 0x9E3779B97F4A7C15ull;

/// A deterministic stream of variates for one (seed, tag, index) triple.
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint64_t stream_tag, std::uint64_t trial_index);

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01();

  /// Standard normal via the Box-Muller transform (pairs are cached).
  double normal01();

  /// Chi-square with one degree of freedom: the square of a standard normal.
  double chisq1();

 private:
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_;
  std::array<std::uint64_t, 4> block_{};
  int pos_ = 4;  // exhausted; first next_u64() generates a block
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace arrow3
