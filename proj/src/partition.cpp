#include "easycat/partition.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "easycat/union_find.hpp"

namespace easycat {

ColorWord parse_color_word(std::string_view text) {
  ColorWord out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch == 'o')
      out.push_back(Color::White);
    else if (ch == 'x')
      out.push_back(Color::Black);
    else
      throw PartitionError(std::string("invalid color character '") + ch + "'");
  }
  return out;
}

std::string render_color_word(std::span<const Color> word) {
  std::string s;
  s.reserve(word.size());
  for (Color c : word) s.push_back(color_char(c));
  return s;
}

int canonicalize_labels(std::vector<int>& labels) {
  std::map<int, int> remap;
  for (int& l : labels) {
    auto [it, inserted] = remap.try_emplace(l, static_cast<int>(remap.size()));
    l = it->second;
  }
  return static_cast<int>(remap.size());
}

PlainPartition::PlainPartition(std::size_t upper, std::size_t lower, std::vector<int> labels)
    : upper_(upper), lower_(lower), labels_(std::move(labels)) {
  if (labels_.size() != upper_ + lower_)
    throw PartitionError("label count does not match point count");
  blocks_ = canonicalize_labels(labels_);
}

ColoredPartition::ColoredPartition(ColorWord upper, ColorWord lower, std::span<const int> labels)
    : upper_(std::move(upper)), lower_(std::move(lower)), labels_(labels.begin(), labels.end()) {
  if (labels_.size() != upper_.size() + lower_.size())
    throw PartitionError("label count does not match point count");
  blocks_ = canonicalize_labels(labels_);
}

ColoredPartition ColoredPartition::from_blocks(ColorWord upper, ColorWord lower,
                                               const std::vector<std::vector<PointRef>>& blocks) {
  const std::size_t k = upper.size();
  const std::size_t total = k + lower.size();
  std::vector<int> labels(total, -1);
  int b = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw PartitionError("empty block");
    for (const PointRef& pt : block) {
      const std::size_t limit = pt.row == Row::Upper ? k : lower.size();
      if (pt.index == 0 || pt.index > limit)
        throw PartitionError("point index out of range");
      const std::size_t i = (pt.row == Row::Upper ? 0 : k) + pt.index - 1;
      if (labels[i] != -1) throw PartitionError("duplicate point");
      labels[i] = b;
    }
    ++b;
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end())
    throw PartitionError("uncovered point");
  return ColoredPartition(std::move(upper), std::move(lower), labels);
}

std::vector<std::vector<std::size_t>> ColoredPartition::blocks() const {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(blocks_));
  for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(i);
  return out;
}

std::string ColoredPartition::canonical_key() const {
  std::string key;
  key.reserve(2 + 2 * labels_.size());
  key.push_back(static_cast<char>(upper_.size()));
  key.push_back(static_cast<char>(lower_.size()));
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    key.push_back(static_cast<char>(color(i)));
    key.push_back(static_cast<char>(labels_[i]));
  }
  return key;
}

bool operator<(const ColoredPartition& a, const ColoredPartition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.upper_size() != b.upper_size()) return a.upper_size() < b.upper_size();
  return a.canonical_key() < b.canonical_key();
}

// ---- text form ------------------------------------------------------------

ColoredPartition parse_partition(std::string_view text) {
  std::size_t pos = 0;
  auto read_colors = [&](char stop) {
    ColorWord w;
    while (pos < text.size() && text[pos] != stop) {
      if (text[pos] == 'o')
        w.push_back(Color::White);
      else if (text[pos] == 'x')
        w.push_back(Color::Black);
      else
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
      ++pos;
    }
    if (pos >= text.size()) throw ParseError(std::string("expected '") + stop + "'", pos);
    ++pos;
    return w;
  };
  ColorWord upper = read_colors('|');
  ColorWord lower = read_colors(';');

  const std::size_t k = upper.size();
  std::vector<int> labels(k + lower.size(), -1);
  int b = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    bool first = true;
    while (true) {
      if (pos >= text.size()) throw ParseError("unterminated block", pos);
      if (text[pos] == ')') {
        if (first) throw ParseError("empty block", pos);
        ++pos;
        break;
      }
      if (!first) {
        if (text[pos] != ' ') throw ParseError("expected ' ' or ')'", pos);
        ++pos;
      }
      first = false;
      const std::size_t start = pos;
      if (pos >= text.size() || (text[pos] != 'u' && text[pos] != 'l'))
        throw ParseError("expected point", pos);
      const bool is_upper = text[pos] == 'u';
      ++pos;
      std::size_t idx = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), idx);
      if (ec != std::errc() || ptr == text.data() + pos || text[pos] == '0')
        throw ParseError("expected positive index", pos);
      pos = static_cast<std::size_t>(ptr - text.data());
      const std::size_t limit = is_upper ? k : lower.size();
      if (idx > limit) throw ParseError("point index out of range", start);
      const std::size_t i = (is_upper ? 0 : k) + idx - 1;
      if (labels[i] != -1) throw ParseError("duplicate point", start);
      labels[i] = b;
    }
    ++b;
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == -1) {
      std::string name = i < k ? "u" + std::to_string(i + 1) : "l" + std::to_string(i - k + 1);
      throw ParseError("uncovered point " + name, text.size());
    }
  }
  return ColoredPartition(std::move(upper), std::move(lower), labels);
}

static std::string point_name(const ColoredPartition& p, std::size_t i) {
  return i < p.upper_size() ? "u" + std::to_string(i + 1)
                            : "l" + std::to_string(i - p.upper_size() + 1);
}

std::string render_partition(const ColoredPartition& p) {
  std::string s = render_color_word(p.upper_colors());
  s += '|';
  s += render_color_word(p.lower_colors());
  s += ';';
  for (const auto& block : p.blocks()) {
    s += '(';
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j) s += ' ';
      s += point_name(p, block[j]);
    }
    s += ')';
  }
  return s;
}

std::string render_diagram(const ColoredPartition& p) {
  const std::size_t width = std::max<std::size_t>({p.upper_size(), p.lower_size(), 1});
  auto letter = [&](std::size_t i) {
    const int l = p.label(i);
    return static_cast<char>(l < 26 ? 'a' + l : (l < 52 ? 'A' + l - 26 : '?'));
  };
  auto row = [&](std::size_t offset, std::size_t count, bool colors) {
    std::string s;
    for (std::size_t j = 0; j < count; ++j) {
      if (j) s += ' ';
      s += colors ? color_char(p.color(offset + j)) : letter(offset + j);
    }
    return s + '\n';
  };
  std::string out;
  out += row(0, p.upper_size(), true);
  out += row(0, p.upper_size(), false);
  out += std::string(2 * width - 1, '-') + '\n';
  out += row(p.upper_size(), p.lower_size(), false);
  out += row(p.upper_size(), p.lower_size(), true);
  return out;
}

std::vector<ColoredPartition> parse_generator_text(std::string_view text) {
  std::vector<ColoredPartition> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty()) out.push_back(parse_partition(line));
    start = end + 1;
  }
  return out;
}

std::vector<ColoredPartition> read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PartitionError("cannot open generator file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_generator_text(ss.str());
}

// ---- operations -----------------------------------------------------------

ColoredPartition tensor(const ColoredPartition& p, const ColoredPartition& q) {
  ColorWord upper = p.upper_colors();
  upper.insert(upper.end(), q.upper_colors().begin(), q.upper_colors().end());
  ColorWord lower = p.lower_colors();
  lower.insert(lower.end(), q.lower_colors().begin(), q.lower_colors().end());
  const int shift = p.block_count();
  std::vector<int> labels;
  labels.reserve(p.size() + q.size());
  for (std::size_t i = 0; i < p.upper_size(); ++i) labels.push_back(p.label(i));
  for (std::size_t i = 0; i < q.upper_size(); ++i) labels.push_back(q.label(i) + shift);
  for (std::size_t i = 0; i < p.lower_size(); ++i) labels.push_back(p.label(p.upper_size() + i));
  for (std::size_t i = 0; i < q.lower_size(); ++i)
    labels.push_back(q.label(q.upper_size() + i) + shift);
  return ColoredPartition(std::move(upper), std::move(lower), labels);
}

Composition compose(const ColoredPartition& q, const ColoredPartition& p) {
  const std::size_t k = q.upper_size(), l = q.lower_size(), m = p.lower_size();
  if (p.upper_size() != l)
    throw PartitionError("arity mismatch: top has " + std::to_string(l) +
                         " lower points, bottom has " + std::to_string(p.upper_size()) +
                         " upper points");
  for (std::size_t j = 0; j < l; ++j)
    if (q.lower_colors()[j] != p.upper_colors()[j]) throw ColorMismatchError(j + 1);

  // nodes: q upper [0,k), middle [k,k+l), p lower [k+l,k+l+m)
  const int total = static_cast<int>(k + l + m);
  UnionFind uf(total);
  std::vector<int> first_q(q.block_count(), -1), first_p(p.block_count(), -1);
  for (std::size_t i = 0; i < k + l; ++i) {
    int& f = first_q[q.label(i)];
    if (f < 0)
      f = static_cast<int>(i);
    else
      uf.unite(f, static_cast<int>(i));
  }
  for (std::size_t i = 0; i < l + m; ++i) {
    int& f = first_p[p.label(i)];
    const int node = static_cast<int>(k + i);
    if (f < 0)
      f = node;
    else
      uf.unite(f, node);
  }
  std::vector<char> outer(total, 0);
  std::vector<int> labels;
  labels.reserve(k + m);
  for (std::size_t i = 0; i < k; ++i) {
    const int r = uf.find(static_cast<int>(i));
    outer[r] = 1;
    labels.push_back(r);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const int r = uf.find(static_cast<int>(k + l + i));
    outer[r] = 1;
    labels.push_back(r);
  }
  Composition out;
  std::vector<char> seen(total, 0);
  for (std::size_t i = 0; i < l; ++i) {
    const int r = uf.find(static_cast<int>(k + i));
    if (!outer[r] && !seen[r]) {
      seen[r] = 1;
      ++out.loops;
    }
  }
  out.partition = ColoredPartition(q.upper_colors(), p.lower_colors(), labels);
  return out;
}

ColoredPartition involute(const ColoredPartition& p) {
  std::vector<int> labels;
  labels.reserve(p.size());
  for (std::size_t i = 0; i < p.lower_size(); ++i) labels.push_back(p.label(p.upper_size() + i));
  for (std::size_t i = 0; i < p.upper_size(); ++i) labels.push_back(p.label(i));
  return ColoredPartition(p.lower_colors(), p.upper_colors(), labels);
}

ColoredPartition verticolor_reflect(const ColoredPartition& p) {
  const std::size_t k = p.upper_size(), l = p.lower_size();
  ColorWord upper(k), lower(l);
  std::vector<int> labels(k + l);
  for (std::size_t i = 0; i < k; ++i) {
    upper[i] = inverse(p.upper_colors()[k - 1 - i]);
    labels[i] = p.label(k - 1 - i);
  }
  for (std::size_t i = 0; i < l; ++i) {
    lower[i] = inverse(p.lower_colors()[l - 1 - i]);
    labels[k + i] = p.label(k + l - 1 - i);
  }
  return ColoredPartition(std::move(upper), std::move(lower), labels);
}

ColoredPartition rotate(const ColoredPartition& p, Corner corner) {
  const std::size_t k = p.upper_size(), l = p.lower_size();
  ColorWord upper = p.upper_colors(), lower = p.lower_colors();
  std::vector<int> up_labels(p.labels().begin(), p.labels().begin() + k);
  std::vector<int> low_labels(p.labels().begin() + k, p.labels().end());
  switch (corner) {
    case Corner::UpperLeftToLower:
      if (k == 0) throw PartitionError("cannot rotate: upper row is empty");
      lower.insert(lower.begin(), inverse(upper.front()));
      low_labels.insert(low_labels.begin(), up_labels.front());
      upper.erase(upper.begin());
      up_labels.erase(up_labels.begin());
      break;
    case Corner::UpperRightToLower:
      if (k == 0) throw PartitionError("cannot rotate: upper row is empty");
      lower.push_back(inverse(upper.back()));
      low_labels.push_back(up_labels.back());
      upper.pop_back();
      up_labels.pop_back();
      break;
    case Corner::LowerLeftToUpper:
      if (l == 0) throw PartitionError("cannot rotate: lower row is empty");
      upper.insert(upper.begin(), inverse(lower.front()));
      up_labels.insert(up_labels.begin(), low_labels.front());
      lower.erase(lower.begin());
      low_labels.erase(low_labels.begin());
      break;
    case Corner::LowerRightToUpper:
      if (l == 0) throw PartitionError("cannot rotate: lower row is empty");
      upper.push_back(inverse(lower.back()));
      up_labels.push_back(low_labels.back());
      lower.pop_back();
      low_labels.pop_back();
      break;
  }
  up_labels.insert(up_labels.end(), low_labels.begin(), low_labels.end());
  return ColoredPartition(std::move(upper), std::move(lower), up_labels);
}

ColoredPartition rotate_last_to_upper(const ColoredPartition& p, std::size_t t) {
  ColoredPartition r = p;
  for (std::size_t i = 0; i < t; ++i) r = rotate(r, Corner::LowerRightToUpper);
  return r;
}

PlainPartition forget_colors(const ColoredPartition& p) {
  return PlainPartition(p.upper_size(), p.lower_size(), p.labels());
}

int color_sum(const ColoredPartition& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c += p.color(i) == Color::White ? 1 : -1;
  return c;
}

bool is_noncrossing(const ColoredPartition& p) {
  // cyclic order u1..uk, ll..l1
  std::vector<int> seq;
  seq.reserve(p.size());
  for (std::size_t i = 0; i < p.upper_size(); ++i) seq.push_back(p.label(i));
  for (std::size_t i = p.lower_size(); i-- > 0;) seq.push_back(p.label(p.upper_size() + i));
  const int nb = p.block_count();
  for (int a = 0; a < nb; ++a) {
    for (int b = a + 1; b < nb; ++b) {
      int changes = 0, last = -1;
      for (int v : seq) {
        if ((v == a || v == b) && v != last) {
          ++changes;
          last = v;
        }
      }
      if (changes >= 4) return false;
    }
  }
  return true;
}

ColoredPartition identity(std::span<const Color> word) {
  const std::size_t k = word.size();
  std::vector<int> labels(2 * k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = labels[k + i] = static_cast<int>(i);
  ColorWord w(word.begin(), word.end());
  return ColoredPartition(w, w, labels);
}

ColoredPartition fold(const ColoredPartition& p) {
  ColoredPartition r = p;
  while (r.upper_size() > 0) r = rotate(r, Corner::UpperLeftToLower);
  return r;
}

ColoredPartition unfold(const ColoredPartition& p, std::size_t upper) {
  if (p.upper_size() != 0) throw PartitionError("unfold expects a partition without upper points");
  if (upper > p.lower_size()) throw PartitionError("unfold: not enough lower points");
  ColoredPartition r = p;
  for (std::size_t i = 0; i < upper; ++i) r = rotate(r, Corner::LowerLeftToUpper);
  return r;
}

// ---- named partitions -----------------------------------------------------

namespace base {

ColoredPartition pair(Color first, Color second, bool upper) {
  const int labels[2] = {0, 0};
  if (upper) return ColoredPartition({first, second}, {}, labels);
  return ColoredPartition({}, {first, second}, labels);
}

ColoredPartition id(Color up, Color down) {
  const int labels[2] = {0, 0};
  return ColoredPartition({up}, {down}, labels);
}

ColoredPartition singleton(Color c, bool upper) {
  const int labels[1] = {0};
  if (upper) return ColoredPartition({c}, {}, labels);
  return ColoredPartition({}, {c}, labels);
}

ColoredPartition singletons(Color c, std::size_t k) {
  std::vector<int> labels(k);
  std::iota(labels.begin(), labels.end(), 0);
  return ColoredPartition({}, ColorWord(k, c), labels);
}

ColoredPartition block(std::size_t k, Color c) {
  std::vector<int> labels(k, 0);
  return ColoredPartition({}, ColorWord(k, c), labels);
}

ColoredPartition four_block(std::string_view colors) {
  ColorWord w = parse_color_word(colors);
  if (w.size() != 4) throw PartitionError("four_block needs four colors");
  const int labels[4] = {0, 0, 0, 0};
  return ColoredPartition({}, std::move(w), labels);
}

ColoredPartition crossing(std::string_view colors) {
  ColorWord w = parse_color_word(colors);
  if (w.size() != 4) throw PartitionError("crossing needs four colors");
  const int labels[4] = {0, 1, 1, 0};
  return ColoredPartition({w[0], w[1]}, {w[2], w[3]}, labels);
}

ColoredPartition nested_pair(std::size_t k) {
  std::vector<int> labels(2 * k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = labels[2 * k - 1 - i] = static_cast<int>(i);
  return ColoredPartition({}, ColorWord(2 * k, Color::White), labels);
}

ColoredPartition positioner(std::size_t d) {
  // points 0..d-1 white singletons, d white and 2d+1 black paired, d+1..2d black singletons
  const std::size_t m = 2 * d + 2;
  ColorWord colors(m, Color::Black);
  std::fill(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(d + 1), Color::White);
  std::vector<int> labels(m);
  std::iota(labels.begin(), labels.end(), 0);
  labels[m - 1] = labels[d];
  return ColoredPartition({}, std::move(colors), labels);
}

ColoredPartition positioner_wbwb() { return parse_partition("|oxox;(l1)(l2 l4)(l3)"); }

ColoredPartition positioner_shifted(std::size_t r) {
  if (r == 0) throw PartitionError("positioner_shifted needs r >= 1");
  const std::size_t m = 2 * r + 2;
  ColorWord colors(m, Color::Black);
  std::fill(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(r + 1), Color::White);
  std::vector<int> labels(m);
  std::iota(labels.begin(), labels.end(), 0);
  labels[m - 1] = labels[r + 1];
  return ColoredPartition({}, std::move(colors), labels);
}

}  // namespace base

static Color single_color(std::string_view s) {
  ColorWord w = parse_color_word(s);
  if (w.size() != 1) throw PartitionError("expected one color");
  return w[0];
}

ColoredPartition base_partition(std::string_view name, std::span<const int> params) {
  auto param = [&](int lo) {
    if (params.size() != 1) throw PartitionError(std::string(name) + " takes one parameter");
    if (params[0] < lo)
      throw PartitionError("invalid parameter " + std::to_string(params[0]) + " for " +
                           std::string(name));
    return static_cast<std::size_t>(params[0]);
  };
  auto no_params = [&] {
    if (!params.empty()) throw PartitionError(std::string(name) + " takes no parameters");
  };
  auto suffix = [&](std::string_view prefix, std::size_t len) -> std::string_view {
    if (name.size() == prefix.size() + len && name.substr(0, prefix.size()) == prefix)
      return name.substr(prefix.size());
    return {};
  };
  if (auto s = suffix("pair_up_", 2); !s.empty()) {
    no_params();
    auto w = parse_color_word(s);
    return base::pair(w[0], w[1], true);
  }
  if (auto s = suffix("pair_", 2); !s.empty()) {
    no_params();
    auto w = parse_color_word(s);
    return base::pair(w[0], w[1]);
  }
  if (auto s = suffix("id_", 2); !s.empty()) {
    no_params();
    auto w = parse_color_word(s);
    return base::id(w[0], w[1]);
  }
  if (auto s = suffix("singleton_up_", 1); !s.empty()) {
    no_params();
    return base::singleton(single_color(s), true);
  }
  if (auto s = suffix("singleton_", 1); !s.empty()) {
    no_params();
    return base::singleton(single_color(s));
  }
  if (auto s = suffix("singletons_", 1); !s.empty()) return base::singletons(single_color(s), param(0));
  if (auto s = suffix("fourblock_", 4); !s.empty()) {
    no_params();
    return base::four_block(s);
  }
  if (auto s = suffix("crossing_", 4); !s.empty()) {
    no_params();
    return base::crossing(s);
  }
  if (name == "b") return base::block(param(0));
  if (name == "btilde") return base::block(param(0), Color::Black);
  if (name == "nest") return base::nested_pair(param(0));
  if (name == "positioner") return base::positioner(param(0));
  if (name == "positioner_oxox") {
    no_params();
    return base::positioner_wbwb();
  }
  if (name == "positioner_shifted") return base::positioner_shifted(param(1));
  throw PartitionError("unknown base partition '" + std::string(name) + "'");
}

}  // namespace easycat
