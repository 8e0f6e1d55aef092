#include "rvosfuse/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rvosfuse {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  std::uint64_t v;
  do {
    v = next() & mask;
  } while (v >= bound);
  return v;
}

double Rng::normal(double mean, double stddev) {
  const double u1 = 1.0 - unit();  // (0, 1], keeps log finite
  const double u2 = unit();
  const double z =
      std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  return mean + stddev * z;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view label,
                          std::uint64_t index) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the label
  for (const unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return splitmix64(base ^ splitmix64(h ^ splitmix64(index)));
}

}  // namespace rvosfuse
