#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rvosfuse/errors.hpp"

namespace rvosfuse {

/// Inclusive pixel box; x is the column index, y the row index.
struct Bbox {
  int x_min = 0;
  int y_min = 0;
  int x_max = 0;
  int y_max = 0;

  std::int64_t area() const {
    return static_cast<std::int64_t>(x_max - x_min + 1) * (y_max - y_min + 1);
  }
  bool operator==(const Bbox&) const = default;
};

/// Dense single-frame mask, row 0 at top, row-major storage.
struct BinaryMask {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> data;  // height*width entries, 0 or 1

  static BinaryMask zeros(int height, int width);

  bool at(int row, int col) const {
    return data[static_cast<std::size_t>(row) * width + col] != 0;
  }
  void set(int row, int col, bool value = true) {
    data[static_cast<std::size_t>(row) * width + col] = value ? 1 : 0;
  }
  bool operator==(const BinaryMask&) const = default;
};

/// Column-major run-length mask. Runs alternate background/foreground
/// starting with background; only counts[0] may be zero.
struct RleMask {
  int height = 0;
  int width = 0;
  std::vector<std::int64_t> counts;

  static RleMask empty(int height, int width) {
    return RleMask{height, width,
                   {static_cast<std::int64_t>(height) * width}};
  }
  bool operator==(const RleMask&) const = default;
};

/// One object's masks over a video; frames absent from the map are empty.
struct MaskSequence {
  std::string object_id;
  int height = 0;
  int width = 0;
  std::map<int, RleMask> frames;

  /// Mask at frame t; an all-background mask when t is not stored.
  RleMask mask_at(int t) const;

  /// Highest stored frame index + 1, or 0 when no frames are stored.
  int num_frames() const;
};

/// Throws MalformedRleError unless counts are non-negative, free of
/// interior zeros, and sum to height*width.
void validate_rle(const RleMask& rle);

RleMask rle_encode(const BinaryMask& mask);
BinaryMask rle_decode(const RleMask& rle);

/// Foreground pixel count, straight off the runs.
std::int64_t mask_area(const RleMask& rle);

/// Intersection-over-union computed on runs without decoding.
/// Two empty masks compare as 1.0.
double mask_iou(const RleMask& a, const RleMask& b);

/// Tight inclusive box over foreground; nullopt for an empty mask.
std::optional<Bbox> bbox_from_mask(const BinaryMask& mask);
std::optional<Bbox> bbox_from_mask(const RleMask& rle);

/// Foreground pixels with at least one 4-neighbor that is background or
/// outside the image.
BinaryMask boundary_map(const BinaryMask& mask);

/// Per-pixel OR of two same-sized masks, done on the runs.
RleMask rle_union(const RleMask& a, const RleMask& b);

/// (intersection, union) pixel counts of two same-sized masks.
std::pair<std::int64_t, std::int64_t> rle_overlap(const RleMask& a,
                                                  const RleMask& b);

}  // namespace rvosfuse
