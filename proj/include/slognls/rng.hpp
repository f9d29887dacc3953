#pragma once

// Counter-based RNG (Philox4x32-10).  Every draw is a pure function of
// (seed, stream, counter), so ensembles are reproducible and order- and
// thread-independent by construction.

#include <array>
#include <cstdint>

namespace slognls {

std::array<std::uint32_t, 4> philox4x32(std::uint64_t key, std::uint64_t counter,
                                        std::uint64_t stream);

// uniform in (0,1], 53-bit
double u01_from(std::uint32_t hi, std::uint32_t lo);

// one standard normal per (seed, stream, counter) via Box-Muller
double normal_at(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

// two independent standard normals from one counter block
std::array<double, 2> normal_pair_at(std::uint64_t seed, std::uint64_t stream,
                                     std::uint64_t counter);

// independent per-member seed derived from a master seed
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

namespace streams {
// fixed stream ids; recorded behaviour, do not renumber
inline constexpr std::uint64_t white_noise = 0;
inline constexpr std::uint64_t derive = 0x5eedDE51u;
inline constexpr std::uint64_t aux_field = 2;
}  // namespace streams

}  // namespace slognls
