#include <algorithm>
#include <cstdlib>
#include <string>

#include "crumby/error.hpp"
#include "crumby/kernels/mask_kernels.hpp"

namespace crumby::kernels {

MaskGraph MaskGraph::from(const Graph& g) {
  if (g.vertex_count() > 32) throw Error("mask kernels handle at most 32 vertices");
  MaskGraph m;
  m.n = g.vertex_count();
  for (Vertex v = 0; v < m.n; ++v) {
    for (Vertex w : g.neighbors(v)) m.adj[static_cast<std::size_t>(v)] |= 1u << w;
  }
  m.edges = g.edges();
  return m;
}

bool crumby_mask(const MaskGraph& g, std::uint32_t red) {
  const std::uint32_t blue = ~red & g.full();
  for (int v = 0; v < g.n; ++v) {
    const std::uint32_t a = g.adj[static_cast<std::size_t>(v)];
    if (red >> v & 1u) {
      if ((a & red) == 0) return false;
    } else {
      const std::uint32_t b = a & blue;
      if (b & (b - 1)) return false;
    }
  }
  // A red P4 x-b-c-y exists iff some red edge bc has red neighbours on both
  // sides that are not one and the same vertex.
  for (const Edge& e : g.edges) {
    if (!(red >> e.u & 1u) || !(red >> e.v & 1u)) continue;
    const std::uint32_t nb = g.adj[static_cast<std::size_t>(e.u)] & red & ~(1u << e.v);
    const std::uint32_t nc = g.adj[static_cast<std::size_t>(e.v)] & red & ~(1u << e.u);
    if (nb && nc && !(nb == nc && (nb & (nb - 1)) == 0)) return false;
  }
  return true;
}

void crumby_batch_scalar(const MaskGraph& g, const std::uint32_t* reds, std::size_t count, std::uint8_t* out) {
  for (std::size_t i = 0; i < count; ++i) out[i] = crumby_mask(g, reds[i]) ? 1 : 0;
}

bool kernel_available(KernelKind kind) {
  switch (kind) {
    case KernelKind::Scalar:
      return true;
    case KernelKind::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

BatchFn kernel(KernelKind kind) {
  if (!kernel_available(kind)) throw Error("kernel " + std::string(to_string(kind)) + " not supported on this CPU");
#if defined(__x86_64__) || defined(__i386__)
  if (kind == KernelKind::Avx2) return crumby_batch_avx2;
#endif
  return crumby_batch_scalar;
}

KernelKind best_kernel() {
  if (const char* forced = std::getenv("CRUMBY_KERNEL"); forced && std::string(forced) == "scalar") {
    return KernelKind::Scalar;
  }
  return kernel_available(KernelKind::Avx2) ? KernelKind::Avx2 : KernelKind::Scalar;
}

std::string_view to_string(KernelKind kind) { return kind == KernelKind::Avx2 ? "avx2" : "scalar"; }

namespace {

template <typename Sink>
void sweep(const Graph& g, KernelKind kind, Sink&& sink) {
  if (g.vertex_count() > 30) throw Error("brute force limited to 30 vertices");
  const MaskGraph m = MaskGraph::from(g);
  const BatchFn fn = kernel(kind);
  constexpr std::size_t kChunk = 4096;
  std::vector<std::uint32_t> reds(kChunk);
  std::vector<std::uint8_t> ok(kChunk);
  const std::uint64_t total = std::uint64_t{1} << m.n;
  for (std::uint64_t base = 0; base < total; base += kChunk) {
    const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, total - base));
    for (std::size_t i = 0; i < count; ++i) reds[i] = static_cast<std::uint32_t>(base + i);
    fn(m, reds.data(), count, ok.data());
    for (std::size_t i = 0; i < count; ++i) {
      if (ok[i]) sink(reds[i]);
    }
  }
}

}  // namespace

std::uint64_t count_crumby_bruteforce(const Graph& g, KernelKind kind) {
  std::uint64_t count = 0;
  sweep(g, kind, [&](std::uint32_t) { ++count; });
  return count;
}

std::vector<std::uint32_t> all_crumby_bruteforce(const Graph& g, KernelKind kind) {
  std::vector<std::uint32_t> out;
  sweep(g, kind, [&](std::uint32_t red) { out.push_back(red); });
  return out;
}

}  // namespace crumby::kernels
