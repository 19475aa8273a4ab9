// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "easycat/catalog.hpp"
#include "easycat/category.hpp"
#include "easycat/relations.hpp"
#include "easycat/tensor_maps.hpp"

using namespace easycat;

namespace {

// Pinned tolerances and bounds.
constexpr double kRelationTol = 1e-9;
constexpr int kPMax = 8;
constexpr int kIMax = 12;
constexpr int kLawPoints = 6;
constexpr int kGroupSamples = 20;
constexpr double kLawSeconds = 60.0;
constexpr double kGroupSeconds = 120.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " | " << o.detail
            << std::endl;
  if (!o.pass) ++failures;
}

ColorWord white(std::size_t n) { return ColorWord(n, Color::White); }

ClosureOptions bounds() {
  ClosureOptions o;
  o.p_max = kPMax;
  o.i_max = kIMax;
  return o;
}

// ---- 1. functor laws ------------------------------------------------------

Outcome functor_laws() {
  const auto t0 = Clock::now();
  // colors do not enter T_p, so the uncolored structures with at most 6 points
  // (all white) cover every law instance; colored composition is checked on
  // a random compatible recoloring of each pair
  std::vector<std::vector<std::vector<ColoredPartition>>> parts(kLawPoints + 1);
  std::size_t structures = 0;
  for (int k = 0; k <= kLawPoints; ++k) {
    parts[k].resize(kLawPoints + 1);
    for (int l = 0; k + l <= kLawPoints; ++l) {
      parts[k][l] = all_partitions(white(k), white(l));
      structures += parts[k][l].size();
    }
  }
  std::mt19937_64 rng(2024);
  auto random_word = [&](std::size_t n) {
    ColorWord w(n);
    for (auto& c : w) c = (rng() & 1) ? Color::Black : Color::White;
    return w;
  };

  std::uint64_t tensor_checks = 0, adjoint_checks = 0, compose_checks = 0, bad = 0;
  for (int n : {2, 3}) {
    std::unordered_map<std::string, SparseMatrix> cache;
    auto T = [&](const ColoredPartition& p) -> const SparseMatrix& {
      const std::string key = p.canonical_key();
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, build_map(p, n).matrix()).first;
      return it->second;
    };
    std::vector<const ColoredPartition*> all;
    for (auto& row : parts)
      for (auto& cell : row)
        for (auto& p : cell) all.push_back(&p);

    for (const auto* p : all) {
      ++adjoint_checks;
      if (!(build_map(involute(*p), n).matrix() == T(*p).transpose())) ++bad;
    }
    // tensor law on pairs whose product still has at most 6 points
    for (const auto* p : all)
      for (const auto* q : all) {
        if (p->size() + q->size() > static_cast<std::size_t>(kLawPoints)) continue;
        ++tensor_checks;
        if (!(build_map(tensor(*p, *q), n).matrix() == kronecker(T(*p), T(*q)))) ++bad;
      }
    // composition law: q in P(k,m) on top of p in P(m,l)
    for (int m = 0; m <= kLawPoints; ++m)
      for (int k = 0; k + m <= kLawPoints; ++k)
        for (int l = 0; m + l <= kLawPoints; ++l)
          for (const auto& q : parts[k][m])
            for (const auto& p : parts[m][l]) {
              ++compose_checks;
              const Composition c = compose(q, p);
              std::int64_t factor = 1;
              for (int i = 0; i < c.loops; ++i) factor *= n;
              const SparseMatrix& tc = T(c.partition);
              if (!(T(p) * T(q) == (factor == 1 ? tc : tc.scaled(factor)))) ++bad;
              if (n == 2) {
                const ColorWord mid = random_word(m);
                const ColoredPartition qc(random_word(k), mid, q.labels());
                const ColoredPartition pc(mid, random_word(l), p.labels());
                const Composition cc = compose(qc, pc);
                if (cc.partition.labels() != c.partition.labels() || cc.loops != c.loops) ++bad;
              }
            }
  }
  const double secs = seconds_since(t0);
  Outcome o;
  std::ostringstream d;
  d << structures << " structures, " << tensor_checks << " tensor, " << adjoint_checks << " adjoint, "
    << compose_checks << " composition checks over n in {2,3}, " << bad << " violations, " << secs
    << " s (limit " << kLawSeconds << " s)";
  o.pass = bad == 0 && secs < kLawSeconds;
  o.detail = d.str();
  return o;
}

// ---- 2. linear independence -----------------------------------------------

std::uint64_t bell(int m) {
  // Bell triangle, independent of the enumerator
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= m; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

Outcome linear_independence() {
  Outcome o;
  int cases = 0;
  for (int total = 0; total <= 4; ++total)
    for (int k = 0; k <= total; ++k) {
      const int l = total - k;
      for (int cu = 0; cu < (1 << k); ++cu)
        for (int cl = 0; cl < (1 << l); ++cl) {
          ColorWord up(k), low(l);
          for (int i = 0; i < k; ++i) up[i] = (cu >> i & 1) ? Color::Black : Color::White;
          for (int i = 0; i < l; ++i) low[i] = (cl >> i & 1) ? Color::Black : Color::White;
          const auto parts = all_partitions(up, low);
          ++cases;
          if (parts.size() != bell(total)) {
            o.pass = false;
            o.detail += "enumeration size mismatch; ";
          }
          const int n = std::max(total, 1);
          if (exact_rank(gram_matrix(parts, n)) != parts.size()) {
            o.pass = false;
            o.detail += "rank deficit at " + render_color_word(up) + "|" + render_color_word(low) + "; ";
          }
        }
    }
  o.detail += std::to_string(cases) + " colorings with k+l <= 4 at n = k+l, full rank; |P(k,l)| = " +
              std::to_string(all_partitions(white(2), white(2)).size()) + " at k+l = 4 (Bell(4) = " +
              std::to_string(bell(4)) + ")";
  if (bell(4) != 15) o.pass = false;
  return o;
}

// ---- 3. classification ----------------------------------------------------

Outcome classification(CatalogCache& cache) {
  Outcome o;
  int checked = 0;
  for (const auto& e : build_catalog(4)) {
    const auto& s = cache.slice(e);
    ++checked;
    std::string why;
    if (s.classify_case() != e.expected_case) why += " case " + to_string(s.classify_case());
    if (s.colorization() != e.expected_colorization) why += " colorization " + to_string(s.colorization());
    if (e.expected_global_parameter <= 4 && s.global_parameter() != e.expected_global_parameter)
      why += " k " + std::to_string(s.global_parameter());
    if (!why.empty()) {
      o.pass = false;
      o.detail += e.name() + ":" + why + "; ";
    }
  }
  o.detail += std::to_string(checked) + " entries with parameters <= 4 at P_max = " + std::to_string(kPMax);
  return o;
}

// ---- 4. separation --------------------------------------------------------

Outcome separation(CatalogCache& cache) {
  Outcome o;
  const auto entries = build_catalog(3);
  int pairs = 0, separated = 0, same_category = 0;
  std::vector<std::string> limited;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const auto& a = entries[i];
      const auto& b = entries[j];
      // a free orthogonal entry names the same category as its counterpart
      if (a.equals == b.name() || b.equals == a.name()) {
        ++same_category;
        if (!slices_equal(cache.slice(a), cache.slice(b), kPMax)) {
          o.pass = false;
          o.detail += a.name() + " should equal " + b.name() + "; ";
        }
        continue;
      }
      ++pairs;
      if (!slices_equal(cache.slice(a), cache.slice(b), kPMax))
        ++separated;
      else
        limited.push_back(a.name() + " ~ " + b.name());
    }
  o.detail += std::to_string(separated) + "/" + std::to_string(pairs) + " distinct pairs separated at bound " +
              std::to_string(kPMax) + ", " + std::to_string(same_category) + " coinciding pairs equal";
  if (!limited.empty()) {
    o.detail += "; bound limitations (no separating member with <= " + std::to_string(kPMax) + " points):";
    for (const auto& s : limited) o.detail += " " + s;
  }
  return o;
}

// ---- 5. nesting -----------------------------------------------------------

Outcome nesting(CatalogCache& cache) {
  Outcome o;
  int checked = 0;
  for (const auto& e : build_catalog(4)) {
    const auto& s = cache.slice(e);
    for (std::size_t k : {2u, 3u}) {
      ColoredPartition pairs;
      for (std::size_t i = 0; i < k; ++i) pairs = tensor(pairs, base::pair(Color::White, Color::White));
      ++checked;
      if (s.contains(pairs) != s.contains(base::nested_pair(k))) {
        o.pass = false;
        o.detail += e.name() + " k=" + std::to_string(k) + "; ";
      }
    }
  }
  o.detail += std::to_string(checked) + " slice/k checks";
  return o;
}

// ---- 6. C(k,k) = C(k,0) ---------------------------------------------------

Outcome parameter_identities() {
  Outcome o;
  int checked = 0;
  for (int k : {2, 3}) {
    const std::vector<std::pair<std::string, std::vector<std::vector<int>>>> fams = {
        {"H_loc", {{k, k}, {k, 0}}},
        {"S_loc", {{k, k}, {k, 0}}},
        {"B_loc", {{k, k}, {k, 0}}},
        {"Bp_loc", {{k, k, 0}, {k, 0, 0}}},
    };
    for (const auto& [fam, params] : fams) {
      const auto a = generate_closure(family_generators(fam, params[0]), bounds());
      const auto b = generate_closure(family_generators(fam, params[1]), bounds());
      ++checked;
      if (!slices_equal(a, b, kPMax)) {
        o.pass = false;
        o.detail += fam + " k=" + std::to_string(k) + " differs; ";
      }
    }
  }
  o.detail += std::to_string(checked) + " family pairs equal at bound " + std::to_string(kPMax);
  return o;
}

// ---- 7. Schur-Weyl -------------------------------------------------------

std::size_t permutation_rank(int k, int n) {
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<ColoredPartition> parts;
  do parts.push_back(permutation_partition(sigma));
  while (std::next_permutation(sigma.begin(), sigma.end()));
  return exact_rank(gram_matrix(parts, n));
}

Outcome schur_weyl() {
  Outcome o;
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
    const std::size_t r = permutation_rank(k, n);
    const std::size_t fact = k == 2 ? 2 : 6;
    o.detail += "(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ") rank " + std::to_string(r) + "; ";
    if (r != fact) o.pass = false;
  }
  const std::size_t r32 = permutation_rank(3, 2);
  o.detail += "(k=3,n=2) rank " + std::to_string(r32) + " < 6";
  if (r32 >= 6) o.pass = false;
  return o;
}

// ---- 8. group case --------------------------------------------------------

Outcome group_case() {
  const auto t0 = Clock::now();
  Outcome o;
  int pairs = 0;
  double worst = 0;
  for (const auto& e : build_catalog(3)) {
    if (!e.group) continue;
    for (int n : {3, 4}) {
      ++pairs;
      const auto rep = verify_group_category(*e.group, e, n, kGroupSamples, 1, kRelationTol);
      worst = std::max(worst, rep.max_deviation);
      if (!rep.all_pass || !rep.cross_check_agrees) {
        o.pass = false;
        o.detail += e.name() + " n=" + std::to_string(n) + (rep.all_pass ? " cross-check" : " relation") + "; ";
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= kGroupSeconds) o.pass = false;
  std::ostringstream d;
  d << pairs << " (group, category, n) triples x " << kGroupSamples << " samples, max deviation " << worst
    << " (tol " << kRelationTol << "), " << secs << " s (limit " << kGroupSeconds << " s)";
  o.detail += d.str();
  return o;
}

// ---- 9. positioner relations ----------------------------------------------

// Expected strings transcribed from the displayed formulas:
//   u_ij (sum_k u_kj1) ... = (sum_l u_i1l) ... u_ij      and variants
std::string sums(const char* var, const char* star, bool upper, int from, int to) {
  std::string s;
  for (int t = from; t <= to; ++t) {
    const std::string v = std::string(var) + std::to_string(t);
    s += upper ? " (sum_" + v + " u" + star + "[" + v + "][j" + std::to_string(t) + "])"
               : "(sum_" + v + " u" + star + "[i" + std::to_string(t) + "][" + v + "]) ";
  }
  return s;
}

Outcome positioners() {
  Outcome o;
  std::vector<std::pair<ColoredPartition, std::string>> cases;
  for (int d : {2, 3})
    cases.push_back({rotate_last_to_upper(base::positioner(d), d + 1),
                     "u[i][j]" + sums("k", "", true, 1, d) + " = " + sums("l", "", false, 1, d) + "u[i][j]"});
  cases.push_back({rotate_last_to_upper(base::positioner_wbwb(), 2),
                   "u[i][j]" + sums("k", "*", true, 1, 1) + " = " + sums("l", "", false, 1, 1) + "u*[i][j]"});
  for (int r : {1, 2, 3})
    cases.push_back({rotate_last_to_upper(base::positioner_shifted(r), r),
                     "u[i][j]" + sums("k", "", true, 1, r - 1) + " = " + sums("l", "", false, 1, r + 1) +
                         "u*[i][j]"});
  for (const auto& [p, expected] : cases) {
    const std::string got = emit_relation(p).text;
    if (got != expected) {
      o.pass = false;
      o.detail += "[" + render_partition(p) + "] got '" + got + "' expected '" + expected + "'; ";
    }
  }
  o.detail += std::to_string(cases.size()) + " rotated positioners match token for token";
  return o;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  CatalogCache cache(bounds());
  report(1, "functor laws", functor_laws());
  report(2, "linear independence", linear_independence());
  report(3, "classification regression", classification(cache));
  report(4, "separation", separation(cache));
  report(5, "family nesting", nesting(cache));
  report(6, "C(k,k) = C(k,0)", parameter_identities());
  report(7, "Schur-Weyl desk check", schur_weyl());
  report(8, "group-case verification", group_case());
  report(9, "positioner relations", positioners());
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << " in " << seconds_since(t0) << " s" << std::endl;
  return failures == 0 ? 0 : 1;
}
