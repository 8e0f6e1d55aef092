#include "rvosfuse/trajectory.hpp"

#include <stdexcept>
#include <string>

#include "rvosfuse/rng.hpp"

namespace rvosfuse {

std::vector<TrajectoryFeature> positional_features(const MaskSequence& seq,
                                                   int num_frames) {
  if (num_frames < seq.num_frames())
    throw DimensionError("num_frames (" + std::to_string(num_frames) +
                         ") smaller than the sequence extent (" +
                         std::to_string(seq.num_frames()) + ")");
  std::vector<TrajectoryFeature> out(static_cast<std::size_t>(num_frames));
  const double w = seq.width, h = seq.height;
  for (const auto& [t, rle] : seq.frames) {
    const auto box = bbox_from_mask(rle);
    if (!box) continue;  // empty frame keeps the zero descriptor
    TrajectoryFeature& f = out[static_cast<std::size_t>(t)];
    f.x_min = box->x_min / w;
    f.x_max = (box->x_max + 1) / w;
    f.y_min = box->y_min / h;
    f.y_max = (box->y_max + 1) / h;
    f.x_c = (f.x_min + f.x_max) / 2.0;
    f.y_c = (f.y_min + f.y_max) / 2.0;
    f.w = f.x_max - f.x_min;
    f.h = f.y_max - f.y_min;
    f.valid = true;
  }
  return out;
}

std::vector<int> sample_frames(int total, int n, SamplingMode mode,
                               std::uint64_t seed,
                               std::optional<int> window_start) {
  if (n < 1)
    throw std::invalid_argument("sample_frames: n must be at least 1");
  if (n > total)
    throw std::invalid_argument("sample_frames: n (" + std::to_string(n) +
                                ") exceeds total frames (" +
                                std::to_string(total) + ")");
  std::vector<int> indices;
  indices.reserve(static_cast<std::size_t>(n));
  if (mode == SamplingMode::kLocal) {
    if (!window_start)
      throw std::invalid_argument("sample_frames: local mode needs window_start");
    if (*window_start < 0 || *window_start + n > total)
      throw std::invalid_argument("sample_frames: window [" +
                                  std::to_string(*window_start) + ", " +
                                  std::to_string(*window_start + n) +
                                  ") out of range for " +
                                  std::to_string(total) + " frames");
    for (int i = 0; i < n; ++i) indices.push_back(*window_start + i);
    return indices;
  }
  Rng rng(seed);
  const int base = total / n;
  const int remainder = total % n;
  int start = 0;
  for (int s = 0; s < n; ++s) {
    const int len = base + (s < remainder ? 1 : 0);
    indices.push_back(start + static_cast<int>(rng.below(
                                  static_cast<std::uint64_t>(len))));
    start += len;
  }
  return indices;
}

}  // namespace rvosfuse
