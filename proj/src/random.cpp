#include "gnm/random.hpp"

namespace gnm {

namespace {

constexpr std::uint64_t kPhiloxM = 0xD2B74407B1CE6E93ULL;
constexpr std::uint64_t kPhiloxW = 0x9E3779B97F4A7C15ULL;
constexpr int kRounds = 10;

}  // namespace

std::array<std::uint64_t, 2> philox2x64(std::uint64_t key, std::uint64_t ctr0, std::uint64_t ctr1) noexcept {
  for (int round = 0; round < kRounds; ++round) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(kPhiloxM) * ctr0;
    const auto hi = static_cast<std::uint64_t>(prod >> 64);
    const auto lo = static_cast<std::uint64_t>(prod);
    ctr0 = hi ^ key ^ ctr1;
    ctr1 = lo;
    key += kPhiloxW;
  }
  return {ctr0, ctr1};
}

}  // namespace gnm
