// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0

#include "arrow3/rng.hpp"

#include <cmath>

namespace arrow3 {

namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

inline std::array<std::uint64_t, 4> round_once(const std::array<std::uint64_t, 4>& c,
                                               const std::array<std::uint64_t, 2>& k) {
  std::uint64_t hi0, lo0, hi1, lo1;
  mulhilo(kMul0, c[0], hi0, lo0);
  mulhilo(kMul1, c[2], hi1, lo1);
  return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key) {
  std::array<std::uint64_t, 4> c = counter;
  std::array<std::uint64_t, 2> k = key;
  for (int r = 0; r < 9; ++r) {
    c = round_once(c, k);
    k = {k[0] + kWeyl0, k[1] + kWeyl1};
  }
  return round_once(c, k);
}

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t stream_tag, std::uint64_t trial_index)
    : key_{seed, kKeyConst}, counter_{0, trial_index, stream_tag, 0} {}

std::uint64_t TrialStream::next_u64() {
  if (pos_ == 4) {
    block_ = philox4x64(counter_, key_);
    ++counter_[0];
    pos_ = 0;
  }
  return block_[static_cast<std::size_t>(pos_++)];
}

double TrialStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double TrialStream::normal01() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  // u1 on (0, 1] keeps the log argument away from zero.
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  spare_normal_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

double TrialStream::chisq1() {
  const double z = normal01();
  return z * z;
}

}  // namespace arrow3
