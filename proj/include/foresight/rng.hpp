#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace foresight {

// All randomness in the library flows through this wrapper.  The engine is
// std::mt19937_64 (its output sequence is pinned by the standard), and the
// variate transforms below are written out by hand because the standard
// library's distribution objects are allowed to differ between platforms.
// Byte-identical outputs for a fixed seed are a hard requirement for the
// simulation harness, so nothing here may call std::*_distribution.
class Rng {
 public:
  Rng() : engine_(0x9e3779b97f4a7c15ull) {}
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return (engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); n must be > 0.  Uses rejection so the result
  // is unbiased and depends only on the engine stream.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform01() < p;
  }

  // Standard normal via Box-Muller. The sine branch is discarded so each
  // call consumes exactly two engine outputs; simpler to reason about when
  // replaying streams than a cached-pair implementation.
  double normal(double mean = 0.0, double stddev = 1.0) {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 < 1e-300) u1 = 1e-300;
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double z = mag * std::cos(6.283185307179586476925286766559 * u2);
    return mean + stddev * z;
  }

  // Weighted choice: returns an index in [0, weights.size()).  Zero or
  // negative weights never win unless all weights are <= 0, in which case
  // the first index is returned.
  template <typename Vec>
  std::size_t weighted_index(const Vec& weights) {
    double total = 0.0;
    for (double w : weights)
      if (w > 0.0) total += w;
    if (total <= 0.0) return 0;
    double roll = uniform01() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const double w = weights[i] > 0.0 ? static_cast<double>(weights[i]) : 0.0;
      if (roll < w) return i;
      roll -= w;
    }
    return weights.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 step; used to derive independent sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Derives a decorrelated seed for a named sub-stream (e.g. one per rollout,
// one per planner instance).  Identical (seed, tag, index) triples always
// give identical results; distinct tags give unrelated streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                 std::uint64_t index = 0) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the tag
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::uint64_t state = seed ^ h;
  std::uint64_t mixed = splitmix64(state);
  state ^= index * 0x2545f4914f6cdd1dull;
  mixed ^= splitmix64(state);
  return mixed;
}

}  // namespace foresight
