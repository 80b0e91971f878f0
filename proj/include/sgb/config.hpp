#pragma once

#include <cstddef>

namespace sgb {

// Default cap on |G| for lattice and B(G) construction.
inline constexpr std::size_t kDefaultMaxOrder = 512;

// Largest order for which a multiplication table is materialized.
inline constexpr std::size_t kMaxTableOrder = 4096;

// Order cap, taken from SGB_MAX_ORDER when set. Values above the default
// print a one-time warning on stderr; values above kMaxTableOrder are clamped.
std::size_t max_order();

// Worker count, taken from SGB_THREADS when set, otherwise the hardware
// concurrency (at least 1).
unsigned worker_threads();

}  // namespace sgb
