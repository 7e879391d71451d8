// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace bscap::mc {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11): a keyed bijection
/// of a 128-bit counter. Any block can be produced independently of any other,
/// which is what makes batch results independent of scheduling.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key) noexcept;
};

/// Sequential view of one Philox substream. The key is the 64-bit seed, the upper
/// counter half is the 64-bit stream id (the Monte Carlo batch index) and the lower
/// half counts blocks, giving 2^64 blocks of four 32-bit words per stream.
class CounterRng {
public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint32_t next_u32() noexcept;
  /// Uniform on the open interval (0, 1) with 53 random bits.
  double next_u01() noexcept;

  std::uint64_t blocks_used() const noexcept { return block_index_; }

private:
  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  Philox4x32::Counter buffer_{};
  int position_ = 4;
};

} // namespace bscap::mc
