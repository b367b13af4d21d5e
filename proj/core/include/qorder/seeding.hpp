#pragma once

#include <cstdint>

namespace qorder {

// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed splitting used throughout: child stream `stream` of `seed` is
// splitmix64(seed + (stream + 1) * 0x9E3779B97F4A7C15). Restart r of an
// ensemble uses derive_seed(base_seed, r); inside a restart, stream 0 seeds
// the initial state and stream 1 the parameter initialization.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

inline constexpr std::uint64_t kInitialStateStream = 0;
inline constexpr std::uint64_t kParameterStream = 1;

}  // namespace qorder
