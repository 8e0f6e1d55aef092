#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace rvosfuse {

// Deterministic random source. std::mt19937_64 output is fixed by the
// standard; the draws below avoid std::uniform_int_distribution and
// std::normal_distribution, whose results differ between standard library
// implementations, so identical seeds give identical bytes everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Unbiased uniform integer in [0, bound), bound > 0. Masked rejection.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) built from 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Normal draw via Box-Muller; consumes two uniforms per call.
  double normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
};

// Stable seed for a (base seed, label, index) work item, so per-frame
// sampling does not depend on scheduling order or worker count.
std::uint64_t derive_seed(std::uint64_t base, std::string_view label,
                          std::uint64_t index);

/// First k elements of a seeded partial Fisher-Yates shuffle of items.
/// k larger than the population returns the whole population, shuffled.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> items, std::size_t k,
                                          Rng& rng) {
  if (k > items.size()) k = items.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(rng.below(items.size() - i));
    std::swap(items[i], items[j]);
  }
  items.resize(k);
  return items;
}

}  // namespace rvosfuse
