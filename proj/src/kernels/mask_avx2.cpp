#include "crumby/kernels/mask_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace crumby::kernels {

// Eight colourings per iteration, one per 32-bit lane. A lane stays all-ones
// while its colouring is still crumby.
__attribute__((target("avx2"))) void crumby_batch_avx2(const MaskGraph& g, const std::uint32_t* reds,
                                                       std::size_t count, std::uint8_t* out) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i ones = _mm256_set1_epi32(-1);
  const __m256i full = _mm256_set1_epi32(static_cast<int>(g.full()));
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const __m256i red = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(reds + i));
    const __m256i blue = _mm256_andnot_si256(red, full);
    __m256i good = ones;
    for (int v = 0; v < g.n; ++v) {
      const __m256i adj = _mm256_set1_epi32(static_cast<int>(g.adj[static_cast<std::size_t>(v)]));
      const __m256i bit = _mm256_set1_epi32(static_cast<int>(1u << v));
      const __m256i is_red = _mm256_cmpeq_epi32(_mm256_and_si256(red, bit), bit);
      const __m256i rn = _mm256_and_si256(adj, red);
      const __m256i bn = _mm256_and_si256(adj, blue);
      const __m256i red_isolated = _mm256_and_si256(is_red, _mm256_cmpeq_epi32(rn, zero));
      const __m256i two_blue = _mm256_andnot_si256(
          _mm256_cmpeq_epi32(_mm256_and_si256(bn, _mm256_sub_epi32(bn, _mm256_set1_epi32(1))), zero), ones);
      const __m256i blue_bad = _mm256_andnot_si256(is_red, two_blue);
      good = _mm256_andnot_si256(_mm256_or_si256(red_isolated, blue_bad), good);
    }
    for (const Edge& e : g.edges) {
      const __m256i bu = _mm256_set1_epi32(static_cast<int>(1u << e.u));
      const __m256i bv = _mm256_set1_epi32(static_cast<int>(1u << e.v));
      const __m256i both = _mm256_and_si256(_mm256_cmpeq_epi32(_mm256_and_si256(red, bu), bu),
                                            _mm256_cmpeq_epi32(_mm256_and_si256(red, bv), bv));
      const __m256i au = _mm256_set1_epi32(static_cast<int>(g.adj[static_cast<std::size_t>(e.u)] & ~(1u << e.v)));
      const __m256i av = _mm256_set1_epi32(static_cast<int>(g.adj[static_cast<std::size_t>(e.v)] & ~(1u << e.u)));
      const __m256i nb = _mm256_and_si256(au, red);
      const __m256i nc = _mm256_and_si256(av, red);
      const __m256i nb_some = _mm256_andnot_si256(_mm256_cmpeq_epi32(nb, zero), ones);
      const __m256i nc_some = _mm256_andnot_si256(_mm256_cmpeq_epi32(nc, zero), ones);
      const __m256i single = _mm256_cmpeq_epi32(_mm256_and_si256(nb, _mm256_sub_epi32(nb, _mm256_set1_epi32(1))), zero);
      const __m256i same_single = _mm256_and_si256(_mm256_cmpeq_epi32(nb, nc), single);
      const __m256i p4 = _mm256_andnot_si256(same_single, _mm256_and_si256(both, _mm256_and_si256(nb_some, nc_some)));
      good = _mm256_andnot_si256(p4, good);
    }
    const int lanes = _mm256_movemask_ps(_mm256_castsi256_ps(good));
    for (int k = 0; k < 8; ++k) out[i + static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((lanes >> k) & 1);
  }
  for (; i < count; ++i) out[i] = crumby_mask(g, reds[i]) ? 1 : 0;
}

}  // namespace crumby::kernels
#endif
