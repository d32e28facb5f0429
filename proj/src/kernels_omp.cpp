// OpenMP twins of the enumeration kernels.  Candidates are split statically
// across threads, hits are collected per thread and merged, and the merge is
// sorted by candidate number so the output is identical to the serial
// reference regardless of thread count.  Without OpenMP these compile to the
// plain loops.

#include <algorithm>

#include "abdarg/kernels.hpp"
#include "kernels_detail.hpp"

namespace abdarg::kernels {

std::vector<std::uint32_t> complete_extension_masks(const AfTables& t) {
  std::vector<std::uint32_t> out;
  const long long limit = 1ll << t.n;
#pragma omp parallel
  {
    std::vector<std::uint32_t> local;
#pragma omp for schedule(static) nowait
    for (long long set = 0; set < limit; ++set) {
      if (is_complete_mask(t, static_cast<std::uint32_t>(set))) {
        local.push_back(static_cast<std::uint32_t>(set));
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MaskInterpretation> partial_stable_masks(const LpTables& t) {
  std::vector<std::uint64_t> hits;
  const long long limit = static_cast<long long>(detail::pow3(t.n));
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (long long k = 0; k < limit; ++k) {
      MaskInterpretation candidate =
          detail::decode_candidate(static_cast<std::uint64_t>(k), t.n);
      if (gamma_masks(t, candidate) == candidate) {
        local.push_back(static_cast<std::uint64_t>(k));
      }
    }
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end());
  std::vector<MaskInterpretation> out;
  out.reserve(hits.size());
  for (std::uint64_t k : hits) out.push_back(detail::decode_candidate(k, t.n));
  return out;
}

}  // namespace abdarg::kernels
