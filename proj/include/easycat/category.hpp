#pragma once

// Bounded generation of categories of two-colored partitions.
//
// Members are stored in one-line form: every partition p in P(k,l) is folded
// into P(0,k+l) by moving its upper points down. A category is closed under
// rotation, so p is a member iff its folded word is. On words the category
// operations become
//   rotation          -> cyclic shift (colors unchanged)
//   involution        -> reverse + invert colors
//   tensor            -> cyclic insertion
//   composition       -> insertion followed by nested caps at the junction
// where a cap removes two adjacent points of inverse colors and merges their
// blocks. Each stored class is a dihedral orbit of words.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "easycat/partition.hpp"

namespace easycat {

enum class CategoryCase { O, B, H, S };
enum class Colorization { Global, Local };

std::string to_string(CategoryCase c);
std::string to_string(Colorization c);

/// How words are keyed. Globally colorized categories are closed under
/// permuting colors of points, so only the uncolored word and the number of
/// white points matter. Categories containing the unicolored pair are closed
/// under arbitrary recoloring, so only the uncolored word matters.
enum class SymmetryMode { Plain, ColorPermutation, Recoloring };
std::string to_string(SymmetryMode m);

inline constexpr int kMaxWord = 24;

struct Word {
  std::uint8_t len = 0;
  std::uint8_t whites = 0;  // only meaningful in ColorPermutation mode
  std::array<std::uint8_t, kMaxWord> cell{};  // (label << 1) | color

  int label(int i) const { return cell[i] >> 1; }
  Color color(int i) const { return static_cast<Color>(cell[i] & 1); }

  friend bool operator==(const Word& a, const Word& b) {
    if (a.len != b.len || a.whites != b.whites) return false;
    for (int i = 0; i < a.len; ++i)
      if (a.cell[i] != b.cell[i]) return false;
    return true;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&](std::uint8_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(w.len);
    mix(w.whites);
    for (int i = 0; i < w.len; ++i) mix(w.cell[i]);
    return static_cast<std::size_t>(h);
  }
};

/// Folded one-line word of p (colored). Throws if p has more than kMaxWord points.
Word word_of(const ColoredPartition& p);
/// The partition in P(0, len) denoted by a colored word.
ColoredPartition partition_of(const Word& w);
/// Rewrites labels into restricted-growth form.
void relabel(Word& w);
/// Variant v of w: rotation by v for v < len, otherwise the reversed and
/// color-inverted word of rotation v - len. When invert_colors is false the
/// color bits are left alone (used for uncolored keys).
Word word_variant(const Word& w, int v, bool invert_colors = true);

struct ClosureOptions {
  int p_max = 8;
  int i_max = 12;
  std::size_t max_classes = 4'000'000;
  bool use_symmetry = true;       // allow ColorPermutation/Recoloring modes
  bool probe_completeness = false;
};

enum class WitnessOp : std::uint8_t { Seed, Cap, Pair };

/// How a class was first produced. For Seed, `generator` is the index into the
/// generator list, or -1 for the implicit pair partition. For Cap, `a` is the
/// parent class and `pos` the cap position in its representative. For Pair,
/// variants `va` of class `a` and `vb` of class `b` are concatenated and
/// `pos` nested caps are applied at the junction.
struct Witness {
  WitnessOp op = WitnessOp::Seed;
  int generator = -1;
  int a = -1;
  int b = -1;
  std::uint8_t va = 0;
  std::uint8_t vb = 0;
  std::uint8_t pos = 0;
};

struct ClassInfo {
  Word rep;          // key form (colors erased outside Plain mode)
  Witness witness;
  bool transient = false;  // more than P_max points, kept only as a composition partner
};

enum class Completeness { Yes, Heuristic };

class CategorySlice {
 public:
  const std::vector<ColoredPartition>& generators() const { return generators_; }
  int p_max() const { return p_max_; }
  int i_max() const { return i_max_; }
  SymmetryMode mode() const { return mode_; }
  Completeness completeness() const { return completeness_; }
  bool truncated() const { return truncated_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Throws PartitionError if p has more than P_max points.
  bool contains(const ColoredPartition& p) const;
  /// Membership of a colored one-line word with at most P_max points.
  bool contains_word(const Word& colored) const;
  /// Lookup of a key in this slice's own key form (see mode()).
  bool contains_key(const Word& key) const;

  /// Number of colored member words of each length 0..P_max.
  std::vector<std::uint64_t> colored_counts() const;
  std::uint64_t member_count() const;

  /// All colored members with at most `bound` points, as sorted literals of
  /// their folded forms.
  std::vector<std::string> member_literals(int bound) const;

  const std::vector<ClassInfo>& classes() const { return classes_; }
  /// Representative of a class with colors restored (for colored keys, the
  /// first coloring with the right number of white points).
  Word colored_representative(int cls) const;

  /// Minimum of c over members with c > 0, where c is the white-minus-black
  /// count of the folded word; 0 if every member is balanced.
  int global_parameter() const;

  CategoryCase classify_case() const;
  Colorization colorization() const;

  /// Header plus sorted member literals.
  std::string export_text() const;
  std::string header() const;

 private:
  friend CategorySlice generate_closure(const std::vector<ColoredPartition>&, const ClosureOptions&);
  friend class ClosureBuilder;

  Word key_of(const Word& colored) const;

  std::vector<ColoredPartition> generators_;
  int p_max_ = 0;
  int i_max_ = 0;
  SymmetryMode mode_ = SymmetryMode::Plain;
  Completeness completeness_ = Completeness::Heuristic;
  bool truncated_ = false;
  std::vector<std::string> warnings_;
  std::vector<ClassInfo> classes_;
  std::unordered_map<Word, int, WordHash> index_;  // every variant key -> class
};

/// Throws std::invalid_argument on bad bounds. A member-count overflow does not
/// throw; the returned slice reports truncated() instead.
CategorySlice generate_closure(const std::vector<ColoredPartition>& generators,
                               const ClosureOptions& options = {});

/// True iff both slices have the same members with at most `bound` points.
/// Throws std::invalid_argument if bound exceeds either P_max.
bool slices_equal(const CategorySlice& a, const CategorySlice& b, int bound);

struct LocalParameterEstimate {
  std::vector<int> positioners;   // d with positioner_d a member
  std::vector<int> block_pairs;   // d >= 1 with b_d ⊗ b̃_d a member
};
/// Membership probe only; the local parameter itself is not computed.
LocalParameterEstimate estimate_local_parameter(const CategorySlice& slice);

/// Rebuilds the colored representative word of a class by replaying its
/// witness chain with two-row partition operations. Plain mode only.
ColoredPartition replay_witness(const CategorySlice& slice, int cls);

}  // namespace easycat
