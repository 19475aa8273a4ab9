#include "easycat/category.hpp"

#include <algorithm>
#include <deque>
#include <bit>
#include <stdexcept>

namespace easycat {

std::string to_string(CategoryCase c) {
  switch (c) {
    case CategoryCase::O: return "O";
    case CategoryCase::B: return "B";
    case CategoryCase::H: return "H";
    case CategoryCase::S: return "S";
  }
  return "?";
}

std::string to_string(Colorization c) { return c == Colorization::Global ? "global" : "local"; }

std::string to_string(SymmetryMode m) {
  switch (m) {
    case SymmetryMode::Plain: return "plain";
    case SymmetryMode::ColorPermutation: return "color-permutation";
    case SymmetryMode::Recoloring: return "recoloring";
  }
  return "?";
}

// ---- words ----------------------------------------------------------------

void relabel(Word& w) {
  std::array<std::int8_t, 128> map;
  map.fill(-1);
  std::int8_t next = 0;
  for (int i = 0; i < w.len; ++i) {
    const int l = w.cell[i] >> 1;
    if (map[l] < 0) map[l] = next++;
    w.cell[i] = static_cast<std::uint8_t>((map[l] << 1) | (w.cell[i] & 1));
  }
}

Word word_of(const ColoredPartition& p) {
  if (p.size() > static_cast<std::size_t>(kMaxWord))
    throw PartitionError("partition has more than " + std::to_string(kMaxWord) + " points");
  const ColoredPartition f = fold(p);
  Word w;
  w.len = static_cast<std::uint8_t>(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    w.cell[i] = static_cast<std::uint8_t>((f.label(i) << 1) | static_cast<int>(f.color(i)));
  return w;
}

ColoredPartition partition_of(const Word& w) {
  ColorWord colors(w.len);
  std::vector<int> labels(w.len);
  for (int i = 0; i < w.len; ++i) {
    colors[i] = w.color(i);
    labels[i] = w.label(i);
  }
  return ColoredPartition({}, std::move(colors), labels);
}

Word word_variant(const Word& w, int v, bool invert_colors) {
  const int L = w.len;
  if (L == 0) return w;
  Word out;
  out.len = w.len;
  out.whites = w.whites;
  if (v < L) {
    for (int i = 0; i < L; ++i) out.cell[i] = w.cell[(i + v) % L];
  } else {
    const int r = v - L;
    const std::uint8_t flip = invert_colors ? 1 : 0;
    for (int i = 0; i < L; ++i) out.cell[i] = w.cell[(L - 1 - i + r) % L] ^ flip;
  }
  relabel(out);
  return out;
}

namespace {

int white_count(const Word& w) {
  int c = 0;
  for (int i = 0; i < w.len; ++i) c += (w.cell[i] & 1) == 0;
  return c;
}

Word strip_colors(Word w) {
  for (int i = 0; i < w.len; ++i) w.cell[i] &= 0xFE;
  return w;
}

Word key_for(SymmetryMode mode, const Word& colored) {
  switch (mode) {
    case SymmetryMode::Plain: return colored;
    case SymmetryMode::ColorPermutation: {
      Word k = strip_colors(colored);
      k.whites = static_cast<std::uint8_t>(white_count(colored));
      return k;
    }
    case SymmetryMode::Recoloring: return strip_colors(colored);
  }
  return colored;
}

Word mode_variant(SymmetryMode mode, const Word& key, int v) {
  Word out = word_variant(key, v, mode == SymmetryMode::Plain);
  if (mode == SymmetryMode::ColorPermutation && v >= key.len)
    out.whites = static_cast<std::uint8_t>(key.len - key.whites);
  return out;
}

int variant_count(const Word& w) { return w.len == 0 ? 1 : 2 * w.len; }

struct Upgrade {
  SymmetryMode mode;
};
struct Overflow {};

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

// ---- closure --------------------------------------------------------------

class ClosureBuilder {
 public:
  ClosureBuilder(CategorySlice& slice, const ClosureOptions& opt, SymmetryMode mode,
                 bool upgrades = true)
      : s_(slice), opt_(opt), mode_(mode) {
    s_.mode_ = mode;
    lmax_ = std::max(1, (opt.i_max - opt.p_max + 1) / 2);
    by_length_.resize(kMaxWord + 1);
    if (!upgrades) return;
    if (mode_ == SymmetryMode::Plain) {
      triggers_.push_back({key_for(mode_, word_of(base::pair(Color::White, Color::White))),
                           SymmetryMode::Recoloring});
      triggers_.push_back(
          {key_for(mode_, word_of(tensor(base::pair(Color::White, Color::White),
                                         base::pair(Color::Black, Color::Black)))),
           SymmetryMode::ColorPermutation});
    } else if (mode_ == SymmetryMode::ColorPermutation) {
      triggers_.push_back({key_for(mode_, word_of(base::pair(Color::White, Color::White))),
                           SymmetryMode::Recoloring});
    }
  }

  void run() {
    add(key_for(mode_, word_of(base::pair(Color::White, Color::Black))), Witness{});
    const auto& gens = s_.generators_;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].size() > static_cast<std::size_t>(opt_.i_max) ||
          gens[g].size() > static_cast<std::size_t>(kMaxWord)) {
        s_.warnings_.push_back("generator " + render_partition(gens[g]) +
                               " exceeds I_max and is ignored");
        continue;
      }
      Witness w;
      w.generator = static_cast<int>(g);
      add(key_for(mode_, word_of(gens[g])), w);
    }
    // transient classes: cap them down, then pair them among themselves
    for (std::size_t t = 0; t < transient_.size(); ++t) caps(transient_[t]);
    const std::size_t nt = transient_.size();
    for (std::size_t i = 0; i < nt; ++i) {
      make_processed(transient_[i]);
      pair_all(transient_[i]);
    }

    while (!queue_.empty()) {
      const int a = queue_.front();
      queue_.pop_front();
      caps(a);
      make_processed(a);
      pair_all(a);
    }
  }

 private:
  int lmin(int total) const { return std::max(0, (total - opt_.p_max + 1) / 2); }

  void add(const Word& key, const Witness& w) {
    if (s_.index_.count(key)) return;
    if (s_.classes_.size() >= opt_.max_classes) throw Overflow{};
    const int id = static_cast<int>(s_.classes_.size());
    ClassInfo info;
    info.rep = key;
    info.witness = w;
    info.transient = key.len > opt_.p_max;
    s_.classes_.push_back(info);
    std::vector<Word> vars;
    vars.reserve(variant_count(key));
    for (int v = 0; v < variant_count(key); ++v) {
      Word var = mode_variant(mode_, key, v);
      s_.index_.emplace(var, id);
      vars.push_back(var);
    }
    variants_.push_back(std::move(vars));
    if (info.transient) {
      transient_.push_back(id);
    } else {
      queue_.push_back(id);
      for (const auto& [trigger, target] : triggers_)
        if (trigger.len == key.len && s_.index_.count(trigger)) throw Upgrade{target};
    }
  }

  void caps(int a) {
    const Word rep = s_.classes_[a].rep;
    const int L = rep.len;
    if (L < 2) return;
    if (mode_ == SymmetryMode::ColorPermutation && (rep.whites == 0 || rep.whites == L)) return;
    for (int i = 0; i < L; ++i) {
      const int j = (i + 1) % L;
      if (L == 2 && i == 1) break;
      if (mode_ == SymmetryMode::Plain && rep.color(i) == rep.color(j)) continue;
      const int li = rep.label(i), lj = rep.label(j);
      Word out;
      out.len = static_cast<std::uint8_t>(L - 2);
      out.whites = mode_ == SymmetryMode::ColorPermutation ? rep.whites - 1 : 0;
      int o = 0;
      for (int t = 0; t < L; ++t) {
        if (t == i || t == j) continue;
        std::uint8_t c = rep.cell[t];
        if ((c >> 1) == lj) c = static_cast<std::uint8_t>((li << 1) | (c & 1));
        out.cell[o++] = c;
      }
      relabel(out);
      Witness w;
      w.op = WitnessOp::Cap;
      w.a = a;
      w.pos = static_cast<std::uint8_t>(i);
      add(out, w);
    }
  }

  void make_processed(int b) {
    const int Lb = s_.classes_[b].rep.len;
    by_length_[Lb].push_back(b);
    if (mode_ != SymmetryMode::Plain) return;
    const auto& vars = variants_[b];
    for (std::size_t v = 0; v < vars.size(); ++v) {
      int bits = 0;
      for (int l = 1; l <= lmax_ && l <= Lb; ++l) {
        bits |= static_cast<int>(vars[v].color(l - 1)) << (l - 1);
        prefix_[prefix_key(l, Lb, bits)].push_back({b, static_cast<std::uint8_t>(v)});
      }
    }
  }

  static int prefix_key(int l, int Lb, int bits) { return ((l * 32) + Lb) * 4096 + bits; }

  void pair_all(int a) {
    const int La = s_.classes_[a].rep.len;
    for (int Lb = 0; La + Lb <= opt_.i_max && Lb <= kMaxWord; ++Lb) {
      const int l = lmin(La + Lb);
      if (l > std::min(La, Lb) || La + Lb - 2 * l > kMaxWord) continue;
      if (l > 0 && mode_ == SymmetryMode::Plain) {
        pair_indexed(a, Lb, l);
        continue;
      }
      const auto& partners = by_length_[Lb];
      for (std::size_t i = 0; i < partners.size(); ++i) pair_classes(a, partners[i], l);
    }
  }

  void pair_classes(int a, int b, int l) {
    const int La = s_.classes_[a].rep.len;
    // for a plain tensor product a cyclic shift of the whole word swaps the
    // factors, so rotations of a suffice
    const int xs = l == 0 ? std::max(1, La) : variant_count(s_.classes_[a].rep);
    const int ys = variant_count(s_.classes_[b].rep);
    for (int v = 0; v < xs; ++v)
      for (int u = 0; u < ys; ++u) emit_pair(a, v, b, u, l);
  }

  // Plain mode with caps at the junction: partners are looked up by the
  // colors of their first l points.
  void pair_indexed(int a, int Lb, int l) {
    const int La = s_.classes_[a].rep.len;
    const auto& xa = variants_[a];
    for (std::size_t v = 0; v < xa.size(); ++v) {
      int bits = 0;
      for (int s = 0; s < l; ++s)
        bits |= (1 - static_cast<int>(xa[v].color(La - 1 - s))) << s;
      auto it = prefix_.find(prefix_key(l, Lb, bits));
      if (it == prefix_.end()) continue;
      for (const auto& [b, u] : it->second) emit_pair(a, static_cast<int>(v), b, u, l);
    }
  }

 private:
  void emit_pair(int a, int va, int b, int vb, int l) {
    const Word& x = variants_[a][va];
    const Word& y = variants_[b][vb];
    const int La = x.len, Lb = y.len;
    std::uint8_t whites = 0;
    if (mode_ == SymmetryMode::Plain) {
      for (int s = 0; s < l; ++s)
        if (x.color(La - 1 - s) == y.color(s)) return;
    } else if (mode_ == SymmetryMode::ColorPermutation) {
      const int Wx = x.whites, Bx = La - Wx, Wy = y.whites, By = Lb - Wy;
      const int lo = std::max({0, l - Bx, l - Wy});
      const int hi = std::min({l, Wx, By});
      if (lo > hi) return;
      whites = static_cast<std::uint8_t>(Wx + Wy - l);
    }
    std::array<std::uint8_t, 64> parent;
    for (int i = 0; i < 64; ++i) parent[i] = static_cast<std::uint8_t>(i);
    auto find = [&](int i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (int s = 0; s < l; ++s) {
      const int p = find(x.label(La - 1 - s)), q = find(y.label(s) + 32);
      if (p != q) parent[std::max(p, q)] = static_cast<std::uint8_t>(std::min(p, q));
    }
    Word out;
    out.len = static_cast<std::uint8_t>(La + Lb - 2 * l);
    out.whites = whites;
    int o = 0;
    for (int t = 0; t < La - l; ++t)
      out.cell[o++] = static_cast<std::uint8_t>((find(x.label(t)) << 1) | (x.cell[t] & 1));
    for (int t = l; t < Lb; ++t)
      out.cell[o++] = static_cast<std::uint8_t>((find(y.label(t) + 32) << 1) | (y.cell[t] & 1));
    relabel(out);
    Witness w;
    w.op = WitnessOp::Pair;
    w.a = a;
    w.b = b;
    w.va = static_cast<std::uint8_t>(va);
    w.vb = static_cast<std::uint8_t>(vb);
    w.pos = static_cast<std::uint8_t>(l);
    add(out, w);
  }

  CategorySlice& s_;
  const ClosureOptions& opt_;
  SymmetryMode mode_;
  int lmax_ = 1;
  std::vector<std::pair<Word, SymmetryMode>> triggers_;
  std::deque<std::vector<Word>> variants_;  // deque: references stay valid while adding
  std::deque<int> queue_;
  std::vector<int> transient_;
  std::vector<std::vector<int>> by_length_;
  std::unordered_map<int, std::vector<std::pair<int, std::uint8_t>>> prefix_;
};

CategorySlice generate_closure(const std::vector<ColoredPartition>& generators,
                               const ClosureOptions& options) {
  if (options.p_max < 2) throw std::invalid_argument("P_max must be at least 2");
  if (options.i_max < options.p_max) throw std::invalid_argument("I_max must be at least P_max");
  if (options.p_max > kMaxWord) throw std::invalid_argument("P_max exceeds the word limit");
  SymmetryMode mode = SymmetryMode::Plain;
  CategorySlice slice;
  while (true) {
    slice = CategorySlice{};
    slice.generators_ = generators;
    slice.p_max_ = options.p_max;
    slice.i_max_ = options.i_max;
    ClosureBuilder builder(slice, options, mode);
    try {
      builder.run();
    } catch (const Upgrade& up) {
      if (!options.use_symmetry) {
        // stay plain: finish without triggers
        slice = CategorySlice{};
        slice.generators_ = generators;
        slice.p_max_ = options.p_max;
        slice.i_max_ = options.i_max;
        ClosureBuilder plain(slice, options, SymmetryMode::Plain, false);
        try {
          plain.run();
        } catch (const Overflow&) {
          slice.truncated_ = true;
        }
        break;
      }
      mode = up.mode;
      continue;
    } catch (const Overflow&) {
      slice.truncated_ = true;
    }
    break;
  }
  if (slice.truncated_) {
    slice.warnings_.push_back("member limit reached; slice is incomplete");
    slice.completeness_ = Completeness::Heuristic;
  } else if (options.probe_completeness) {
    ClosureOptions probe = options;
    probe.i_max = options.i_max + 2;
    probe.probe_completeness = false;
    const CategorySlice wider = generate_closure(generators, probe);
    const bool stable = !wider.truncated() && wider.mode() == slice.mode() &&
                        wider.colored_counts() == slice.colored_counts();
    slice.completeness_ = stable ? Completeness::Yes : Completeness::Heuristic;
  }
  return slice;
}

// ---- slice queries --------------------------------------------------------

Word CategorySlice::key_of(const Word& colored) const { return key_for(mode_, colored); }

bool CategorySlice::contains_word(const Word& colored) const {
  if (colored.len > p_max_) throw PartitionError("word exceeds P_max");
  Word w = colored;
  relabel(w);
  return index_.count(key_of(w)) > 0;
}

bool CategorySlice::contains_key(const Word& key) const { return index_.count(key) > 0; }

bool CategorySlice::contains(const ColoredPartition& p) const {
  if (p.size() > static_cast<std::size_t>(p_max_))
    throw PartitionError("partition has " + std::to_string(p.size()) +
                         " points, more than P_max = " + std::to_string(p_max_));
  return contains_word(word_of(p));
}

std::vector<std::uint64_t> CategorySlice::colored_counts() const {
  std::vector<std::uint64_t> counts(p_max_ + 1, 0);
  for (const auto& [key, cls] : index_) {
    if (key.len > p_max_) continue;
    switch (mode_) {
      case SymmetryMode::Plain: counts[key.len] += 1; break;
      case SymmetryMode::ColorPermutation: counts[key.len] += binomial(key.len, key.whites); break;
      case SymmetryMode::Recoloring: counts[key.len] += std::uint64_t{1} << key.len; break;
    }
  }
  return counts;
}

std::uint64_t CategorySlice::member_count() const {
  std::uint64_t total = 0;
  for (auto c : colored_counts()) total += c;
  return total;
}

namespace {

// Calls f for every colored word denoted by a key.
template <class F>
void expand_key(SymmetryMode mode, const Word& key, F&& f) {
  const int L = key.len;
  if (mode == SymmetryMode::Plain) {
    f(key);
    return;
  }
  for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
    // bit set = black
    if (mode == SymmetryMode::ColorPermutation && L - std::popcount(mask) != key.whites) continue;
    Word w = key;
    w.whites = 0;
    for (int i = 0; i < L; ++i) w.cell[i] = static_cast<std::uint8_t>(key.cell[i] | ((mask >> i) & 1));
    f(w);
  }
}

}  // namespace

std::vector<std::string> CategorySlice::member_literals(int bound) const {
  std::vector<std::pair<Word, std::string>> out;
  for (const auto& [key, cls] : index_) {
    if (key.len > bound || key.len > p_max_) continue;
    expand_key(mode_, key, [&](const Word& w) { out.push_back({w, render_partition(partition_of(w))}); });
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.len != b.first.len) return a.first.len < b.first.len;
    return a.second < b.second;
  });
  std::vector<std::string> lits;
  lits.reserve(out.size());
  for (auto& e : out) lits.push_back(std::move(e.second));
  return lits;
}

Word CategorySlice::colored_representative(int cls) const {
  Word w = classes_.at(cls).rep;
  if (mode_ == SymmetryMode::ColorPermutation) {
    for (int i = 0; i < w.len; ++i) w.cell[i] = static_cast<std::uint8_t>((w.cell[i] & 0xFE) | (i >= w.whites ? 1 : 0));
  }
  w.whites = 0;
  return w;
}

int CategorySlice::global_parameter() const {
  if (mode_ == SymmetryMode::Recoloring) {
    for (const auto& c : classes_)
      if (!c.transient && c.rep.len % 2 == 1) return 1;
    return 2;
  }
  int best = 0;
  for (const auto& c : classes_) {
    if (c.transient) continue;
    const int whites = mode_ == SymmetryMode::Plain ? white_count(c.rep) : c.rep.whites;
    const int sum = std::abs(2 * whites - c.rep.len);  // the reflected variant carries -sum
    if (sum > 0 && (best == 0 || sum < best)) best = sum;
  }
  return best;
}

CategoryCase CategorySlice::classify_case() const {
  const bool singletons = contains(tensor(base::singleton(Color::White), base::singleton(Color::Black)));
  const bool four = p_max_ >= 4 && contains(base::four_block("oxox"));
  if (singletons) return four ? CategoryCase::S : CategoryCase::B;
  return four ? CategoryCase::H : CategoryCase::O;
}

Colorization CategorySlice::colorization() const {
  if (p_max_ < 4) return Colorization::Local;
  const auto pp = tensor(base::pair(Color::White, Color::White), base::pair(Color::Black, Color::Black));
  return contains(pp) ? Colorization::Global : Colorization::Local;
}

std::string CategorySlice::header() const {
  return "P_max=" + std::to_string(p_max_) + " I_max=" + std::to_string(i_max_) +
         " complete=" + (completeness_ == Completeness::Yes ? "yes" : "heuristic");
}

std::string CategorySlice::export_text() const {
  std::string out = header() + "\n";
  for (const auto& lit : member_literals(p_max_)) out += lit + "\n";
  return out;
}

bool slices_equal(const CategorySlice& a, const CategorySlice& b, int bound) {
  if (bound > a.p_max() || bound > b.p_max())
    throw std::invalid_argument("bound exceeds P_max of a slice");
  const auto ca = a.colored_counts(), cb = b.colored_counts();
  for (int L = 0; L <= bound; ++L)
    if (ca[L] != cb[L]) return false;
  if (a.mode() == b.mode()) {
    for (const auto& c : a.classes())
      if (!c.transient && c.rep.len <= bound && !b.contains_key(c.rep))
        return false;
    return true;
  }
  for (const auto& lit : a.member_literals(bound))
    if (!b.contains(parse_partition(lit))) return false;
  return true;
}

LocalParameterEstimate estimate_local_parameter(const CategorySlice& slice) {
  LocalParameterEstimate est;
  for (int d = 0; 2 * d + 2 <= slice.p_max(); ++d)
    if (slice.contains(base::positioner(d))) est.positioners.push_back(d);
  for (int d = 1; 2 * d <= slice.p_max(); ++d)
    if (slice.contains(tensor(base::block(d), base::block(d, Color::Black)))) est.block_pairs.push_back(d);
  return est;
}

// ---- witness replay -------------------------------------------------------

namespace {

ColoredPartition shift_one(const ColoredPartition& p) {
  return rotate(rotate(p, Corner::LowerLeftToUpper), Corner::UpperRightToLower);
}

ColoredPartition partition_variant(const ColoredPartition& p, int v) {
  const int L = static_cast<int>(p.lower_size());
  if (L == 0) return p;
  ColoredPartition r = p;
  for (int i = 0; i < v % L; ++i) r = shift_one(r);
  if (v >= L) r = verticolor_reflect(r);
  return r;
}

// Composes p in P(0,L) with the cap on lower points i, i+1.
ColoredPartition cap_at(const ColoredPartition& p, std::size_t i) {
  ColoredPartition below = base::pair(p.lower_colors()[i], p.lower_colors()[i + 1], true);
  ColorWord left(p.lower_colors().begin(), p.lower_colors().begin() + static_cast<std::ptrdiff_t>(i));
  ColorWord right(p.lower_colors().begin() + static_cast<std::ptrdiff_t>(i + 2), p.lower_colors().end());
  below = tensor(tensor(identity(left), below), identity(right));
  return compose(p, below).partition;
}

ColoredPartition replay_class(const CategorySlice& slice, int cls,
                              std::unordered_map<int, ColoredPartition>& done) {
  if (auto it = done.find(cls); it != done.end()) return it->second;
  const auto& info = slice.classes().at(cls);
  const Witness& w = info.witness;
  ColoredPartition result;
  switch (w.op) {
    case WitnessOp::Seed:
      result = w.generator < 0 ? base::pair(Color::White, Color::Black)
                               : fold(slice.generators().at(w.generator));
      break;
    case WitnessOp::Cap: {
      ColoredPartition parent = replay_class(slice, w.a, done);
      const std::size_t L = parent.lower_size();
      if (w.pos + 1u < L) {
        result = cap_at(parent, w.pos);
      } else {
        // wrap-around pair (L-1, 0): shift so the pair becomes adjacent
        result = cap_at(partition_variant(parent, static_cast<int>(L) - 1), 0);
      }
      break;
    }
    case WitnessOp::Pair: {
      ColoredPartition x = partition_variant(replay_class(slice, w.a, done), w.va);
      ColoredPartition y = partition_variant(replay_class(slice, w.b, done), w.vb);
      ColoredPartition r = tensor(x, y);
      std::size_t junction = x.lower_size();
      for (int s = 0; s < w.pos; ++s) {
        r = cap_at(r, junction - 1);
        --junction;
      }
      result = r;
      break;
    }
  }
  // the replayed word must be a dihedral variant of the stored representative
  const Word got = word_of(result);
  for (int v = 0; v < variant_count(got); ++v)
    if (word_variant(got, v) == info.rep) return done[cls] = partition_of(info.rep);
  throw std::logic_error("witness replay mismatch for class " + std::to_string(cls));
}

}  // namespace

ColoredPartition replay_witness(const CategorySlice& slice, int cls) {
  if (slice.mode() != SymmetryMode::Plain)
    throw std::logic_error("witness replay needs a plain-mode slice");
  std::unordered_map<int, ColoredPartition> done;
  return replay_class(slice, cls, done);
}

}  // namespace easycat
