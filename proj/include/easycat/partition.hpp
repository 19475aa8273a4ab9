#pragma once

// Two-colored set partitions and the category operations on them.
//
// A partition p in P(k,l) has k upper and l lower points; points are indexed
// u1..uk then l1..ll. Internally every point carries a block label in
// restricted-growth form (labels appear in increasing order of first
// occurrence), so two partitions are equal iff their (colors, labels) agree.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace easycat {

enum class Color : std::uint8_t { White = 0, Black = 1 };

constexpr Color inverse(Color c) noexcept {
  return c == Color::White ? Color::Black : Color::White;
}
constexpr char color_char(Color c) noexcept { return c == Color::White ? 'o' : 'x'; }

using ColorWord = std::vector<Color>;

/// Parses a word over {o, x}. Throws PartitionError on any other character.
ColorWord parse_color_word(std::string_view text);
std::string render_color_word(std::span<const Color> word);

class PartitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public PartitionError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : PartitionError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ColorMismatchError : public PartitionError {
 public:
  explicit ColorMismatchError(std::size_t position)
      : PartitionError("colors do not match at middle point " + std::to_string(position)),
        position_(position) {}
  /// 1-based index of the first middle point whose colors disagree.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class Row : std::uint8_t { Upper, Lower };

struct PointRef {
  Row row;
  std::size_t index;  // 1-based, as in literals
  friend bool operator==(const PointRef&, const PointRef&) = default;
};

/// Uncolored partition, the image of forget_colors.
class PlainPartition {
 public:
  PlainPartition() = default;
  PlainPartition(std::size_t upper, std::size_t lower, std::vector<int> labels);

  std::size_t upper_size() const noexcept { return upper_; }
  std::size_t lower_size() const noexcept { return lower_; }
  std::size_t size() const noexcept { return labels_.size(); }
  int block_count() const noexcept { return blocks_; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  friend bool operator==(const PlainPartition&, const PlainPartition&) = default;

 private:
  std::size_t upper_ = 0;
  std::size_t lower_ = 0;
  std::vector<int> labels_;
  int blocks_ = 0;
};

class ColoredPartition {
 public:
  /// The empty partition in P(0,0).
  ColoredPartition() = default;

  /// labels has one entry per point (upper points first); any integers may be
  /// used, equal integers meaning "same block". The labels are canonicalized.
  ColoredPartition(ColorWord upper, ColorWord lower, std::span<const int> labels);

  /// Builds a partition from explicit blocks of 1-based point references.
  /// Throws PartitionError if the blocks do not cover every point exactly once.
  static ColoredPartition from_blocks(ColorWord upper, ColorWord lower,
                                      const std::vector<std::vector<PointRef>>& blocks);

  std::size_t upper_size() const noexcept { return upper_.size(); }
  std::size_t lower_size() const noexcept { return lower_.size(); }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const ColorWord& upper_colors() const noexcept { return upper_; }
  const ColorWord& lower_colors() const noexcept { return lower_; }
  /// Color of point i, counting upper points first (0-based).
  Color color(std::size_t i) const noexcept {
    return i < upper_.size() ? upper_[i] : lower_[i - upper_.size()];
  }

  /// Canonical block label of point i (0-based, upper points first).
  int label(std::size_t i) const noexcept { return labels_[i]; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  int block_count() const noexcept { return blocks_; }

  /// Blocks as lists of 0-based point indices, in canonical order.
  std::vector<std::vector<std::size_t>> blocks() const;

  /// Byte string that identifies the partition; equal iff partitions are equal.
  std::string canonical_key() const;

  friend bool operator==(const ColoredPartition& a, const ColoredPartition& b) {
    return a.upper_ == b.upper_ && a.lower_ == b.lower_ && a.labels_ == b.labels_;
  }
  friend bool operator<(const ColoredPartition& a, const ColoredPartition& b);

 private:
  ColorWord upper_;
  ColorWord lower_;
  std::vector<int> labels_;
  int blocks_ = 0;
};

/// Rewrites arbitrary labels into restricted-growth form. Returns block count.
int canonicalize_labels(std::vector<int>& labels);

// ---- text form ------------------------------------------------------------

/// Grammar: upper "|" lower ";" blocks, e.g. "ox|o;(u1 l1)(u2)".
ColoredPartition parse_partition(std::string_view text);
std::string render_partition(const ColoredPartition& p);
/// Two-row ASCII picture: colors, block letters, a rule, block letters, colors.
std::string render_diagram(const ColoredPartition& p);

/// One literal per line; blank lines and '#' comments are skipped.
std::vector<ColoredPartition> parse_generator_text(std::string_view text);
std::vector<ColoredPartition> read_generator_file(const std::string& path);

// ---- operations -----------------------------------------------------------

ColoredPartition tensor(const ColoredPartition& p, const ColoredPartition& q);

struct Composition {
  ColoredPartition partition;
  int loops = 0;  // closed middle blocks removed: rl(q, p)
};

/// Places q (in P(k,l)) on top of p (in P(l,m)) and removes the l middle points.
/// Throws ColorMismatchError if q's lower colors differ from p's upper colors.
Composition compose(const ColoredPartition& q, const ColoredPartition& p);

ColoredPartition involute(const ColoredPartition& p);
ColoredPartition verticolor_reflect(const ColoredPartition& p);

enum class Corner : std::uint8_t {
  UpperLeftToLower,
  LowerLeftToUpper,
  UpperRightToLower,
  LowerRightToUpper,
};
constexpr Corner inverse(Corner c) noexcept {
  switch (c) {
    case Corner::UpperLeftToLower: return Corner::LowerLeftToUpper;
    case Corner::LowerLeftToUpper: return Corner::UpperLeftToLower;
    case Corner::UpperRightToLower: return Corner::LowerRightToUpper;
    case Corner::LowerRightToUpper: return Corner::UpperRightToLower;
  }
  return c;
}

/// Moves one corner point to the other row, inverting its color.
/// Throws PartitionError if the source row is empty.
ColoredPartition rotate(const ColoredPartition& p, Corner corner);

/// rot_t: p in P(0, m) with the last t lower points moved to the upper row.
ColoredPartition rotate_last_to_upper(const ColoredPartition& p, std::size_t t);

PlainPartition forget_colors(const ColoredPartition& p);
/// Number of white points minus number of black points.
int color_sum(const ColoredPartition& p);
bool is_noncrossing(const ColoredPartition& p);

/// Identity word id(r_1) ⊗ ... ⊗ id(r_k) with upper colors equal to lower colors.
ColoredPartition identity(std::span<const Color> word);

/// Every upper point moved to the lower row (upper-left first), giving
/// P(0, k+l). Inverse of unfold.
ColoredPartition fold(const ColoredPartition& p);
/// Inverse of fold: moves the first `upper` lower points to the upper row.
ColoredPartition unfold(const ColoredPartition& p, std::size_t upper);

// ---- named partitions -----------------------------------------------------

namespace base {

/// Pair partition in P(0,2) (or P(2,0) when upper is set).
ColoredPartition pair(Color first, Color second, bool upper = false);
ColoredPartition id(Color up, Color down);
ColoredPartition singleton(Color c, bool upper = false);
/// ↓c^{⊗k}: k lower singletons of one color.
ColoredPartition singletons(Color c, std::size_t k);
/// b_k (white) or its verticolor reflection (black): one lower block of k points.
ColoredPartition block(std::size_t k, Color c = Color::White);
/// One lower block of four points with the given colors, e.g. "oxox".
ColoredPartition four_block(std::string_view colors);
/// The crossing partition in P(2,2): (u1 l2)(u2 l1); colors read u1 u2 l1 l2.
ColoredPartition crossing(std::string_view colors = "oooo");
/// ⊓◦◦ nested k times into itself, in P(0, 2k).
ColoredPartition nested_pair(std::size_t k);
/// ↓◦^{⊗d} ⊗ (⊓◦• enclosing ↓•^{⊗d}), in P(0, 2d+2).
ColoredPartition positioner(std::size_t d);
/// ↓◦ ⊗ (⊓•• enclosing ↓◦), in P(0, 4).
ColoredPartition positioner_wbwb();
/// ↓◦^{⊗(r+1)} ⊗ (⊓•• enclosing ↓•^{⊗(r-1)}), in P(0, 2r+2); r >= 1.
ColoredPartition positioner_shifted(std::size_t r);

}  // namespace base

/// Builder by name, used by the CLI and catalog. Names:
///   pair_<cc>, pair_up_<cc>, id_<cc>, singleton_<c>, singleton_up_<c>,
///   singletons_<c> k, b k, btilde k, fourblock_<cccc>, crossing_<cccc>,
///   nest k, positioner d, positioner_oxox, positioner_shifted r.
/// Throws PartitionError on unknown names or invalid parameters.
ColoredPartition base_partition(std::string_view name, std::span<const int> params = {});

}  // namespace easycat

template <>
struct std::hash<easycat::ColoredPartition> {
  std::size_t operator()(const easycat::ColoredPartition& p) const noexcept {
    return std::hash<std::string>{}(p.canonical_key());
  }
};
