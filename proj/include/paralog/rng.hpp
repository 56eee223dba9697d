// Copyright 2026 paralog contributors
#pragma once

#include <cstdint>
#include <random>

namespace paralog {

// All seeded behavior in this project draws from std::mt19937_64 through the
// two mappings below. std::uniform_*_distribution is deliberately avoided:
// the standard pins the raw engine output but not the distributions, and the
// CLI golden tests require byte-identical results everywhere.

// Top 53 bits of one draw, mapped to [0, 1).
inline double unit_draw(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// One draw reduced mod n; the bias is irrelevant for n this small.
inline std::uint64_t bounded_draw(std::mt19937_64& g, std::uint64_t n) {
  return g() % n;
}

}  // namespace paralog
