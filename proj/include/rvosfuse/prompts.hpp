#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rvosfuse/mask.hpp"

namespace rvosfuse {

inline constexpr int kMaxPositivePoints = 10;
inline constexpr int kMaxNegativePoints = 5;

/// Point prompts for a promptable segmenter. Points are (x, y) pixel
/// coordinates; positives lie on foreground, negatives inside the box but
/// on background. An empty mask yields no box and no points.
struct PromptSet {
  std::optional<Bbox> box;
  std::vector<std::pair<int, int>> positive;
  std::vector<std::pair<int, int>> negative;
  std::uint64_t seed = 0;
};

/// Draws up to 10 positive and 5 negative points uniformly without
/// replacement; a population smaller than the draw is returned whole.
PromptSet sample_prompts(const BinaryMask& mask, std::uint64_t seed);

}  // namespace rvosfuse
