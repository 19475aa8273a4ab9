#pragma once

#include <random>
#include <vector>

#include "easycat/partition.hpp"

namespace testsupport {

using easycat::Color;
using easycat::ColoredPartition;
using easycat::ColorWord;

inline ColorWord random_word(std::mt19937_64& rng, std::size_t len) {
  ColorWord w(len);
  for (auto& c : w) c = (rng() & 1) ? Color::Black : Color::White;
  return w;
}

inline ColoredPartition random_partition(std::mt19937_64& rng, const ColorWord& upper,
                                         const ColorWord& lower) {
  const std::size_t total = upper.size() + lower.size();
  std::vector<int> labels(total);
  // few distinct labels so that blocks of size > 1 are common
  const int spread = std::max<int>(1, static_cast<int>(total * 2 / 3));
  for (auto& x : labels) x = static_cast<int>(rng() % spread);
  return ColoredPartition(upper, lower, labels);
}

inline ColoredPartition random_partition(std::mt19937_64& rng, std::size_t k, std::size_t l) {
  const ColorWord up = random_word(rng, k);
  const ColorWord low = random_word(rng, l);
  return random_partition(rng, up, low);
}

// Reference composition: merge blocks through the middle row by repeated
// relabeling, then count middle-only groups.
inline std::pair<ColoredPartition, int> naive_compose(const ColoredPartition& q,
                                                      const ColoredPartition& p) {
  const std::size_t k = q.upper_size(), m = q.lower_size(), l = p.lower_size();
  // nodes: q upper 0..k-1, middle k..k+m-1, p lower k+m..
  std::vector<int> group(k + m + l);
  for (std::size_t i = 0; i < group.size(); ++i) group[i] = static_cast<int>(i);
  bool changed = true;
  auto same_q = [&](std::size_t a, std::size_t b) { return q.label(a) == q.label(b); };
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < k + m; ++a)
      for (std::size_t b = 0; b < k + m; ++b)
        if (same_q(a, b) && group[a] != group[b]) {
          const int g = std::min(group[a], group[b]);
          group[a] = group[b] = g;
          changed = true;
        }
    for (std::size_t a = 0; a < m + l; ++a)
      for (std::size_t b = 0; b < m + l; ++b)
        if (p.label(a) == p.label(b) && group[k + a] != group[k + b]) {
          const int g = std::min(group[k + a], group[k + b]);
          group[k + a] = group[k + b] = g;
          changed = true;
        }
  }
  std::vector<int> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(group[i]);
  for (std::size_t i = 0; i < l; ++i) labels.push_back(group[k + m + i]);
  int loops = 0;
  std::vector<int> seen;
  for (std::size_t i = k; i < k + m; ++i) {
    bool outer = false;
    for (int x : labels) outer |= x == group[i];
    bool counted = false;
    for (int s : seen) counted |= s == group[i];
    if (!outer && !counted) {
      ++loops;
      seen.push_back(group[i]);
    }
  }
  return {ColoredPartition(q.upper_colors(), p.lower_colors(), labels), loops};
}

}  // namespace testsupport
