#include "rvosfuse/mask.hpp"

#include <algorithm>
#include <string>

namespace rvosfuse {

BinaryMask BinaryMask::zeros(int height, int width) {
  BinaryMask m;
  m.height = height;
  m.width = width;
  m.data.assign(static_cast<std::size_t>(height) * width, 0);
  return m;
}

RleMask MaskSequence::mask_at(int t) const {
  const auto it = frames.find(t);
  if (it != frames.end()) return it->second;
  return RleMask::empty(height, width);
}

int MaskSequence::num_frames() const {
  if (frames.empty()) return 0;
  return frames.rbegin()->first + 1;
}

void validate_rle(const RleMask& rle) {
  if (rle.height < 1 || rle.width < 1)
    throw MalformedRleError("mask dimensions must be positive, got " +
                            std::to_string(rle.height) + "x" +
                            std::to_string(rle.width));
  std::int64_t total = 0;
  for (std::size_t i = 0; i < rle.counts.size(); ++i) {
    const std::int64_t c = rle.counts[i];
    if (c < 0) throw MalformedRleError("negative run length");
    if (c == 0 && i > 0)
      throw MalformedRleError("zero-length run at position " +
                              std::to_string(i));
    total += c;
  }
  const std::int64_t expected =
      static_cast<std::int64_t>(rle.height) * rle.width;
  if (total != expected)
    throw MalformedRleError("runs sum to " + std::to_string(total) +
                            ", expected " + std::to_string(expected) + " (" +
                            std::to_string(rle.height) + "x" +
                            std::to_string(rle.width) + ")");
}

RleMask rle_encode(const BinaryMask& mask) {
  if (mask.data.size() !=
      static_cast<std::size_t>(mask.height) * mask.width)
    throw DimensionError("mask data does not match its dimensions");
  RleMask rle{mask.height, mask.width, {}};
  bool current = false;  // runs start with background
  std::int64_t run = 0;
  for (int col = 0; col < mask.width; ++col) {
    for (int row = 0; row < mask.height; ++row) {
      const bool v = mask.at(row, col);
      if (v == current) {
        ++run;
      } else {
        rle.counts.push_back(run);
        current = v;
        run = 1;
      }
    }
  }
  rle.counts.push_back(run);
  return rle;
}

BinaryMask rle_decode(const RleMask& rle) {
  validate_rle(rle);
  BinaryMask mask = BinaryMask::zeros(rle.height, rle.width);
  std::int64_t pos = 0;
  for (std::size_t i = 0; i < rle.counts.size(); ++i) {
    if (i % 2 == 0) {
      pos += rle.counts[i];
      continue;
    }
    for (std::int64_t k = 0; k < rle.counts[i]; ++k, ++pos) {
      const int col = static_cast<int>(pos / rle.height);
      const int row = static_cast<int>(pos % rle.height);
      mask.set(row, col);
    }
  }
  return mask;
}

std::int64_t mask_area(const RleMask& rle) {
  std::int64_t area = 0;
  for (std::size_t i = 1; i < rle.counts.size(); i += 2) area += rle.counts[i];
  return area;
}

namespace {

// Walks a run list as (value, remaining) with zero-length runs skipped.
struct RunCursor {
  const std::vector<std::int64_t>* counts;
  std::size_t idx = 0;
  std::int64_t rem = 0;

  explicit RunCursor(const RleMask& m) : counts(&m.counts) {
    if (!counts->empty()) rem = (*counts)[0];
    skip_empty();
  }
  bool value() const { return idx % 2 == 1; }
  void skip_empty() {
    while (rem == 0 && idx + 1 < counts->size()) {
      ++idx;
      rem = (*counts)[idx];
    }
  }
  void advance(std::int64_t n) {
    rem -= n;
    skip_empty();
  }
};

void check_same_dims(const RleMask& a, const RleMask& b) {
  if (a.height != b.height || a.width != b.width)
    throw DimensionError("mask dimension mismatch: " +
                         std::to_string(a.height) + "x" +
                         std::to_string(a.width) + " vs " +
                         std::to_string(b.height) + "x" +
                         std::to_string(b.width));
}

}  // namespace

std::pair<std::int64_t, std::int64_t> rle_overlap(const RleMask& a,
                                                  const RleMask& b) {
  check_same_dims(a, b);
  RunCursor ca(a), cb(b);
  std::int64_t inter = 0, uni = 0;
  while (ca.rem > 0 && cb.rem > 0) {
    const std::int64_t step = std::min(ca.rem, cb.rem);
    if (ca.value() && cb.value()) inter += step;
    if (ca.value() || cb.value()) uni += step;
    ca.advance(step);
    cb.advance(step);
  }
  return {inter, uni};
}

double mask_iou(const RleMask& a, const RleMask& b) {
  const auto [inter, uni] = rle_overlap(a, b);
  if (uni == 0) return 1.0;  // two empty masks match perfectly
  return static_cast<double>(inter) / static_cast<double>(uni);
}

RleMask rle_union(const RleMask& a, const RleMask& b) {
  check_same_dims(a, b);
  RleMask out{a.height, a.width, {}};
  RunCursor ca(a), cb(b);
  bool current = false;
  std::int64_t run = 0;
  while (ca.rem > 0 && cb.rem > 0) {
    const std::int64_t step = std::min(ca.rem, cb.rem);
    const bool v = ca.value() || cb.value();
    if (v == current) {
      run += step;
    } else {
      out.counts.push_back(run);
      current = v;
      run = step;
    }
    ca.advance(step);
    cb.advance(step);
  }
  out.counts.push_back(run);
  return out;
}

std::optional<Bbox> bbox_from_mask(const BinaryMask& mask) {
  int xmin = mask.width, xmax = -1, ymin = mask.height, ymax = -1;
  for (int row = 0; row < mask.height; ++row) {
    for (int col = 0; col < mask.width; ++col) {
      if (!mask.at(row, col)) continue;
      xmin = std::min(xmin, col);
      xmax = std::max(xmax, col);
      ymin = std::min(ymin, row);
      ymax = std::max(ymax, row);
    }
  }
  if (xmax < 0) return std::nullopt;
  return Bbox{xmin, ymin, xmax, ymax};
}

std::optional<Bbox> bbox_from_mask(const RleMask& rle) {
  const std::int64_t h = rle.height;
  std::int64_t pos = 0;
  int xmin = rle.width, xmax = -1, ymin = rle.height, ymax = -1;
  for (std::size_t i = 0; i < rle.counts.size(); ++i) {
    const std::int64_t len = rle.counts[i];
    if (i % 2 == 1 && len > 0) {
      const std::int64_t first = pos, last = pos + len - 1;
      const int col_first = static_cast<int>(first / h);
      const int col_last = static_cast<int>(last / h);
      xmin = std::min(xmin, col_first);
      xmax = std::max(xmax, col_last);
      if (col_first == col_last) {
        ymin = std::min(ymin, static_cast<int>(first % h));
        ymax = std::max(ymax, static_cast<int>(last % h));
      } else {
        // a run crossing a column boundary touches both row extremes
        ymin = 0;
        ymax = rle.height - 1;
      }
    }
    pos += len;
  }
  if (xmax < 0) return std::nullopt;
  return Bbox{xmin, ymin, xmax, ymax};
}

BinaryMask boundary_map(const BinaryMask& mask) {
  BinaryMask out = BinaryMask::zeros(mask.height, mask.width);
  for (int row = 0; row < mask.height; ++row) {
    for (int col = 0; col < mask.width; ++col) {
      if (!mask.at(row, col)) continue;
      const bool edge = row == 0 || !mask.at(row - 1, col) ||
                        row == mask.height - 1 || !mask.at(row + 1, col) ||
                        col == 0 || !mask.at(row, col - 1) ||
                        col == mask.width - 1 || !mask.at(row, col + 1);
      if (edge) out.set(row, col);
    }
  }
  return out;
}

}  // namespace rvosfuse
