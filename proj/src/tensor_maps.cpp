#include "easycat/tensor_maps.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>

namespace easycat {

std::uint64_t coordinate_cap() {
  if (const char* env = std::getenv("EASYCAT_COORD_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ull;
}

std::uint64_t checked_power(std::uint64_t n, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / std::max<std::uint64_t>(n, 1))
      throw SizeCapError("coordinate count " + std::to_string(n) + "^" + std::to_string(e) +
                         " exceeds the cap of " + std::to_string(cap));
    r *= n;
  }
  if (r > cap) throw SizeCapError("coordinate count exceeds the cap of " + std::to_string(cap));
  return r;
}

int delta(const ColoredPartition& p, std::span<const int> alpha, std::span<const int> beta) {
  if (alpha.size() != p.upper_size() || beta.size() != p.lower_size())
    throw std::invalid_argument("multi-index lengths do not match the partition");
  std::vector<int> value(static_cast<std::size_t>(p.block_count()), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int v = i < alpha.size() ? alpha[i] : beta[i - alpha.size()];
    int& slot = value[p.label(i)];
    if (slot == 0)
      slot = v;
    else if (slot != v)
      return 0;
  }
  return 1;
}

// ---- sparse matrices ------------------------------------------------------

SparseMatrix::SparseMatrix(std::uint64_t rows, std::uint64_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (e.row >= rows_ || e.col >= cols_) throw std::out_of_range("sparse entry out of range");
  normalize();
}

void SparseMatrix::normalize() {
  auto strictly_before = [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  };
  bool clean = true;
  for (std::size_t i = 0; i < entries_.size() && clean; ++i)
    clean = entries_[i].value != 0 && (i == 0 || strictly_before(entries_[i - 1], entries_[i]));
  if (clean) return;
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
      merged.back().value += e.value;
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
  entries_ = std::move(merged);
}

std::int64_t SparseMatrix::at(std::uint64_t r, std::uint64_t c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{r, c, 0},
                             [](const Entry& a, const Entry& b) {
                               return a.row != b.row ? a.row < b.row : a.col < b.col;
                             });
  return (it != entries_.end() && it->row == r && it->col == c) ? it->value : 0;
}

SparseMatrix SparseMatrix::transpose() const {
  // counting sort by column keeps rows ordered within each column
  std::vector<std::size_t> start(cols_ + 1, 0);
  for (const auto& e : entries_) ++start[e.col + 1];
  for (std::uint64_t c = 0; c < cols_; ++c) start[c + 1] += start[c];
  std::vector<Entry> t(entries_.size());
  for (const auto& e : entries_) t[start[e.col]++] = {e.col, e.row, e.value};
  return SparseMatrix(cols_, rows_, std::move(t));
}

SparseMatrix SparseMatrix::scaled(std::int64_t factor) const {
  std::vector<Entry> s = entries_;
  for (auto& e : s) e.value *= factor;
  return SparseMatrix(rows_, cols_, std::move(s));
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  // row offsets into b, then one dense accumulator row at a time
  std::vector<std::size_t> start(b.rows_ + 1, 0);
  for (const auto& e : b.entries_) ++start[e.row + 1];
  for (std::uint64_t r = 0; r < b.rows_; ++r) start[r + 1] += start[r];
  std::vector<std::int64_t> acc(b.cols_, 0);
  std::vector<std::uint64_t> touched;
  std::vector<SparseMatrix::Entry> out;
  for (std::size_t i = 0; i < a.entries_.size();) {
    const std::uint64_t row = a.entries_[i].row;
    for (; i < a.entries_.size() && a.entries_[i].row == row; ++i) {
      const auto& ea = a.entries_[i];
      for (std::size_t t = start[ea.col]; t < start[ea.col + 1]; ++t) {
        const auto& eb = b.entries_[t];
        if (acc[eb.col] == 0) touched.push_back(eb.col);
        acc[eb.col] += ea.value * eb.value;
      }
    }
    if (touched.size() * 8 > b.cols_) {
      // dense enough that a full scan beats sorting
      for (std::uint64_t c = 0; c < b.cols_; ++c)
        if (acc[c] != 0) {
          out.push_back({row, c, acc[c]});
          acc[c] = 0;
        }
    } else {
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (std::uint64_t c : touched) {
        if (acc[c] != 0) out.push_back({row, c, acc[c]});
        acc[c] = 0;
      }
    }
    touched.clear();
  }
  return SparseMatrix(a.rows_, b.cols_, std::move(out));
}

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
  // walking row groups of both factors emits entries already in order
  auto groups = [](const std::vector<SparseMatrix::Entry>& e) {
    std::vector<std::size_t> g;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i == 0 || e[i].row != e[i - 1].row) g.push_back(i);
    g.push_back(e.size());
    return g;
  };
  const auto ga = groups(a.entries_), gb = groups(b.entries_);
  std::vector<SparseMatrix::Entry> out;
  out.reserve(a.entries_.size() * b.entries_.size());
  for (std::size_t i = 0; i + 1 < ga.size(); ++i)
    for (std::size_t j = 0; j + 1 < gb.size(); ++j)
      for (std::size_t x = ga[i]; x < ga[i + 1]; ++x)
        for (std::size_t y = gb[j]; y < gb[j + 1]; ++y) {
          const auto& ex = a.entries_[x];
          const auto& ey = b.entries_[y];
          out.push_back({ex.row * b.rows_ + ey.row, ex.col * b.cols_ + ey.col, ex.value * ey.value});
        }
  return SparseMatrix(a.rows_ * b.rows_, a.cols_ * b.cols_, std::move(out));
}

// ---- partition maps -------------------------------------------------------

SparseMatrix PartitionMap::matrix() const {
  const std::uint64_t rows = checked_power(n, l, std::numeric_limits<std::uint64_t>::max() / 2);
  const std::uint64_t cols = checked_power(n, k, std::numeric_limits<std::uint64_t>::max() / 2);
  std::vector<SparseMatrix::Entry> e;
  e.reserve(coords.size());
  for (const auto& [b, a] : coords) e.push_back({b, a, 1});
  return SparseMatrix(rows, cols, std::move(e));
}

PartitionMap build_map(const ColoredPartition& p, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::uint64_t cap = coordinate_cap();
  checked_power(static_cast<std::uint64_t>(n), std::max(p.upper_size(), p.lower_size()), cap);
  checked_power(static_cast<std::uint64_t>(n), static_cast<std::size_t>(p.block_count()), cap);
  PartitionMap m;
  m.n = n;
  m.k = p.upper_size();
  m.l = p.lower_size();
  const std::size_t nb = static_cast<std::size_t>(p.block_count());
  std::vector<int> value(nb, 0);
  m.coords.reserve(checked_power(static_cast<std::uint64_t>(n), nb, cap));
  while (true) {
    std::uint64_t alpha = 0, beta = 0;
    for (std::size_t i = 0; i < m.k; ++i) alpha = alpha * n + value[p.label(i)];
    for (std::size_t i = 0; i < m.l; ++i) beta = beta * n + value[p.label(m.k + i)];
    m.coords.push_back({beta, alpha});
    std::size_t b = 0;
    while (b < nb && value[b] == n - 1) value[b++] = 0;
    if (b == nb) break;
    ++value[b];
  }
  std::sort(m.coords.begin(), m.coords.end());
  return m;
}

LawReport verify_functor_laws(const ColoredPartition& p, const ColoredPartition& q, int n) {
  LawReport r;
  const SparseMatrix Tp = build_map(p, n).matrix();
  const SparseMatrix Tq = build_map(q, n).matrix();
  r.tensor = build_map(tensor(p, q), n).matrix() == kronecker(Tp, Tq);
  r.adjoint = build_map(involute(p), n).matrix() == Tp.transpose() &&
              build_map(involute(q), n).matrix() == Tq.transpose();
  if (q.lower_size() == p.upper_size() && q.lower_colors() == p.upper_colors()) {
    const Composition c = compose(q, p);
    r.composition_checked = true;
    r.loops = c.loops;
    std::int64_t factor = 1;
    for (int i = 0; i < c.loops; ++i) factor *= n;
    r.composition = Tp * Tq == build_map(c.partition, n).matrix().scaled(factor);
  }
  return r;
}

// ---- Gram matrices --------------------------------------------------------

ExactMatrix gram_matrix(const std::vector<ColoredPartition>& parts, int n) {
  for (const auto& p : parts) {
    if (p.upper_colors() != parts.front().upper_colors() ||
        p.lower_colors() != parts.front().lower_colors())
      throw std::invalid_argument("Gram matrix needs a common arity and coloring");
  }
  std::vector<PartitionMap> maps;
  maps.reserve(parts.size());
  for (const auto& p : parts) maps.push_back(build_map(p, n));
  ExactMatrix g(parts.size(), parts.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = i; j < maps.size(); ++j) {
      const auto& a = maps[i].coords;
      const auto& b = maps[j].coords;
      std::uint64_t shared = 0;
      std::size_t x = 0, y = 0;
      while (x < a.size() && y < b.size()) {
        if (a[x] < b[y])
          ++x;
        else if (b[y] < a[x])
          ++y;
        else {
          ++shared;
          ++x;
          ++y;
        }
      }
      g(i, j) = g(j, i) = mpz_class(static_cast<unsigned long>(shared));
    }
  }
  return g;
}

std::string export_gram(const ExactMatrix& g, int n, std::span<const Color> r,
                        std::span<const Color> s) {
  return "n=" + std::to_string(n) + " r=" + render_color_word(r) + " s=" + render_color_word(s) +
         "\n" + g.to_text();
}

std::vector<ColoredPartition> all_partitions(std::span<const Color> upper,
                                             std::span<const Color> lower) {
  const std::size_t total = upper.size() + lower.size();
  std::vector<ColoredPartition> out;
  std::vector<int> rgs(total, 0);
  const ColorWord up(upper.begin(), upper.end()), low(lower.begin(), lower.end());
  // restricted growth strings enumerate set partitions
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int maxl) {
    if (i == total) {
      out.emplace_back(up, low, rgs);
      return;
    }
    for (int v = 0; v <= maxl + 1; ++v) {
      rgs[i] = v;
      rec(i + 1, std::max(maxl, v));
    }
  };
  rec(0, -1);
  return out;
}

std::vector<ColoredPartition> slice_members(const CategorySlice& slice, std::span<const Color> r,
                                            std::span<const Color> s) {
  if (static_cast<int>(r.size() + s.size()) > slice.p_max())
    throw std::invalid_argument("color words exceed the slice bound P_max = " +
                                std::to_string(slice.p_max()));
  std::vector<ColoredPartition> out;
  for (auto& p : all_partitions(r, s))
    if (slice.contains(p)) out.push_back(std::move(p));
  return out;
}

std::size_t intertwiner_dimension(const CategorySlice& slice, std::span<const Color> r,
                                  std::span<const Color> s, int n) {
  const auto members = slice_members(slice, r, s);
  if (members.empty()) return 0;
  return exact_rank(gram_matrix(members, n));
}

ColoredPartition permutation_partition(std::span<const int> sigma) {
  const std::size_t k = sigma.size();
  std::vector<int> labels(2 * k, -1);
  std::vector<char> hit(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const int j = sigma[i];
    if (j < 1 || static_cast<std::size_t>(j) > k || hit[j - 1])
      throw PartitionError("not a permutation");
    hit[j - 1] = 1;
    labels[i] = static_cast<int>(i);
    labels[k + j - 1] = static_cast<int>(i);
  }
  return ColoredPartition(ColorWord(k, Color::White), ColorWord(k, Color::White), labels);
}

}  // namespace easycat
