#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rvosfuse/mask.hpp"

namespace rvosfuse {

/// Normalized per-frame box descriptor: min corner, exclusive max corner,
/// center, width and height, all as fractions of the image dimensions.
/// Frames without foreground carry the zero vector and valid = false.
struct TrajectoryFeature {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;
  double x_c = 0.0;
  double y_c = 0.0;
  double w = 0.0;
  double h = 0.0;
  bool valid = false;

  std::array<double, 8> as_array() const {
    return {x_min, y_min, x_max, y_max, x_c, y_c, w, h};
  }
  bool operator==(const TrajectoryFeature&) const = default;
};

/// One descriptor per frame in [0, num_frames). The exclusive-upper
/// normalization (x_max = (xmax+1)/W) makes a full-width object span
/// exactly [0, 1].
std::vector<TrajectoryFeature> positional_features(const MaskSequence& seq,
                                                   int num_frames);

enum class SamplingMode { kGlobal, kLocal };

/// Global mode partitions [0, total) into n contiguous segments (remainder
/// spread over the leading segments) and draws one index per segment.
/// Local mode returns the window [window_start, window_start + n).
std::vector<int> sample_frames(int total, int n, SamplingMode mode,
                               std::uint64_t seed,
                               std::optional<int> window_start = std::nullopt);

}  // namespace rvosfuse
