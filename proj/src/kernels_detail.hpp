#pragma once

#include <cstdint>

#include "abdarg/kernels.hpp"

// Shared between the serial and the OpenMP kernel translation units.

namespace abdarg::kernels::detail {

// Candidate number -> disjoint (true, false) masks: base-3 digits,
// 0 = undecided, 1 = true, 2 = false.
inline MaskInterpretation decode_candidate(std::uint64_t k, int n) {
  std::uint32_t t = 0, f = 0;
  for (int i = 0; i < n; ++i) {
    switch (k % 3) {
      case 1: t |= 1u << i; break;
      case 2: f |= 1u << i; break;
      default: break;
    }
    k /= 3;
  }
  return {t, f};
}

inline std::uint64_t pow3(int n) {
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

}  // namespace abdarg::kernels::detail
