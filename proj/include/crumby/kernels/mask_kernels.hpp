#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "crumby/graph.hpp"

namespace crumby::kernels {

/// Adjacency as bitmasks for graphs with at most 32 vertices. A colouring is
/// a mask with bit v set iff v is red.
struct MaskGraph {
  int n = 0;
  std::array<std::uint32_t, 32> adj{};
  std::vector<Edge> edges;

  static MaskGraph from(const Graph& g);
  std::uint32_t full() const { return n == 32 ? 0xffffffffu : ((1u << n) - 1u); }
};

/// out[i] = 1 iff reds[i] is a crumby colouring of g.
using BatchFn = void (*)(const MaskGraph& g, const std::uint32_t* reds, std::size_t count, std::uint8_t* out);

void crumby_batch_scalar(const MaskGraph& g, const std::uint32_t* reds, std::size_t count, std::uint8_t* out);
#if defined(__x86_64__) || defined(__i386__)
void crumby_batch_avx2(const MaskGraph& g, const std::uint32_t* reds, std::size_t count, std::uint8_t* out);
#endif

bool crumby_mask(const MaskGraph& g, std::uint32_t red);

enum class KernelKind : std::uint8_t { Scalar, Avx2 };

bool kernel_available(KernelKind kind);
BatchFn kernel(KernelKind kind);
/// Best kernel the CPU supports; CRUMBY_KERNEL=scalar forces the scalar one.
KernelKind best_kernel();
std::string_view to_string(KernelKind kind);

/// Pruning-free reference: tests all 2^n colourings (n <= 30).
std::uint64_t count_crumby_bruteforce(const Graph& g, KernelKind kind = best_kernel());
/// Every crumby colouring as a red mask, in increasing mask order.
std::vector<std::uint32_t> all_crumby_bruteforce(const Graph& g, KernelKind kind = best_kernel());

}  // namespace crumby::kernels
