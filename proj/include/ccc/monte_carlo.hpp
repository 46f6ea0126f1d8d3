#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace ccc {

/// Seed of replicate `index` under master seed `master` (splitmix64 mixing).
/// Every replicate owns its stream, so results never depend on worker count.
inline std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(master) ^ mix(index + 0x632be59bd9b4e019ULL));
}

using Rng = std::mt19937_64;

inline Rng replicate_rng(std::uint64_t master, std::uint64_t index) {
  return Rng(replicate_seed(master, index));
}

/// Uniform draw on the open interval (0, 1).
inline double open_uniform(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double v;
  do v = u(rng);
  while (v <= 0.0);
  return v;
}

/// Worker count used when callers pass 0.
inline unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs body(i) for i in [0, count) over contiguous blocks on `workers` threads.
template <class Body>
void parallel_for(std::size_t count, Body&& body, unsigned workers = 0) {
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t block = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(count, begin + block);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &body] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
}

/// Common continuous law used to draw null samples. Under F = G every rank
/// statistic is distribution-free, so the choice only changes the values, never
/// the interleaving produced from a given stream.
enum class NullLaw { Uniform, Normal, Exponential };

/// Pooled interleaving (1 = first sample) of m + n i.i.d. draws from `law`.
std::vector<std::uint8_t> null_interleaving(int m, int n, Rng& rng, NullLaw law = NullLaw::Uniform);

}  // namespace ccc
