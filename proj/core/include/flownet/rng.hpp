#pragma once

#include <cstdint>
#include <random>

namespace flownet {

using Rng = std::mt19937_64;

// Bounded draws are done by rejection on the raw engine output because
// std::uniform_int_distribution is implementation-defined; generated
// instances stay identical across toolchains.
std::uint64_t draw_u64(Rng& rng, std::uint64_t bound_inclusive);
std::int64_t draw_int(Rng& rng, std::int64_t lo, std::int64_t hi);

// splitmix64 step; derives per-instance seeds from a master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace flownet
