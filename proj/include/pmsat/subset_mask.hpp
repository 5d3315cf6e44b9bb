#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pmsat/errors.hpp"

namespace pmsat {

/// Largest dimension representable by a SubsetMask.
inline constexpr std::size_t kMaxMaskWidth = 62;

/// Subset of {0..width-1} stored as a bitmask; bit i set means index i is in
/// the subset. The empty mask is the empty subset.
class SubsetMask {
 public:
  SubsetMask() = default;
  SubsetMask(std::size_t width, std::uint64_t bits) : width_(width), bits_(bits) {
    if (width > kMaxMaskWidth) {
      throw DimensionMismatch("subset width " + std::to_string(width) + " exceeds " +
                              std::to_string(kMaxMaskWidth));
    }
    if (width < 64 && (bits >> width) != 0) {
      throw DimensionMismatch("subset bits outside dimension " + std::to_string(width));
    }
  }

  static SubsetMask from_indices(std::size_t width, const std::vector<std::size_t>& indices) {
    std::uint64_t bits = 0;
    for (std::size_t i : indices) {
      if (i >= width) {
        throw DimensionMismatch("index " + std::to_string(i) + " outside dimension " +
                                std::to_string(width));
      }
      bits |= std::uint64_t{1} << i;
    }
    return SubsetMask(width, bits);
  }

  static SubsetMask full(std::size_t width) {
    return SubsetMask(width, width == 0 ? 0 : (~std::uint64_t{0} >> (64 - width)));
  }

  std::size_t width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t i) const { return i < width_ && ((bits_ >> i) & 1U) != 0; }

  SubsetMask complement() const { return SubsetMask(width_, full(width_).bits_ & ~bits_); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < width_; ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }

  /// "{0,2}" style rendering.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : indices()) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

 private:
  std::size_t width_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace pmsat
