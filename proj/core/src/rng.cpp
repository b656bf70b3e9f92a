#include "flownet/rng.hpp"

namespace flownet {

std::uint64_t draw_u64(Rng& rng, std::uint64_t bound_inclusive) {
  if (bound_inclusive == ~std::uint64_t{0}) return rng();
  const std::uint64_t range = bound_inclusive + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % range;
  while (true) {
    const std::uint64_t raw = rng();
    if (raw < limit) return raw % range;
  }
}

std::int64_t draw_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  draw_u64(rng, static_cast<std::uint64_t>(hi - lo)));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + stream * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace flownet
