#pragma once

#include <array>
#include <cstdint>

namespace gnm {

// Identifies one reproducible random stream. Parallel trials use distinct
// stream_index values under a shared master seed.
struct SeedSpec {
  std::uint64_t master = 0;
  std::uint64_t stream_index = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

// Philox-2x64 with 10 rounds (Salmon et al., Random123).
//
//   block(master, stream, j) = Philox2x64_10(counter = {j, stream}, key = master)
//   word(master, stream, i)  = block(master, stream, i / 2)[i % 2]
//
// The output is a pure function of its three arguments; nothing depends on
// platform, thread, or call history.
std::array<std::uint64_t, 2> philox2x64(std::uint64_t key, std::uint64_t ctr0, std::uint64_t ctr1) noexcept;

inline std::uint64_t random_word(std::uint64_t master, std::uint64_t stream, std::uint64_t index) noexcept {
  return philox2x64(master, index / 2, stream)[index % 2];
}

// Sequential reader over one stream. Draws consume words in order, so a given
// sequence of calls always sees the same values.
class CounterRng {
 public:
  explicit CounterRng(SeedSpec seed) : seed_(seed) {}

  std::uint64_t next_u64() noexcept {
    if (!(counter_ & 1U)) block_ = philox2x64(seed_.master, counter_ / 2, seed_.stream_index);
    return block_[counter_++ & 1U];
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). bound must be positive. Lemire's multiply-shift with
  // rejection, so the result is exactly uniform.
  std::uint64_t below(std::uint64_t bound) noexcept {
    unsigned __int128 prod = static_cast<unsigned __int128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(prod);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        prod = static_cast<unsigned __int128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(prod);
      }
    }
    return static_cast<std::uint64_t>(prod >> 64);
  }

  std::uint64_t words_consumed() const noexcept { return counter_; }
  const SeedSpec& seed() const noexcept { return seed_; }

 private:
  SeedSpec seed_;
  std::uint64_t counter_ = 0;
  std::array<std::uint64_t, 2> block_{};
};

}  // namespace gnm
