#include "easycat/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace easycat {

std::string to_string(CatalogSource s) {
  switch (s) {
    case CatalogSource::GlobalNoncrossing: return "global-noncrossing";
    case CatalogSource::LocalNoncrossing: return "local-noncrossing";
    case CatalogSource::FreeOrthogonal: return "free-orthogonal";
    case CatalogSource::GroupCase: return "group-case";
  }
  return "?";
}

std::string to_string(const GroupSpec& g) {
  std::string base;
  switch (g.kind) {
    case GroupKind::S: base = "S_n"; break;
    case GroupKind::H: base = "H_n"; break;
    case GroupKind::ZsWrS: base = "Z_" + std::to_string(g.order) + " wr S_n"; break;
    case GroupKind::O: base = "O_n"; break;
    case GroupKind::U: base = "U_n"; break;
    case GroupKind::B: base = "B_n"; break;
    case GroupKind::C: base = "C_n"; break;
  }
  if (g.twist != 1) base += " x~ Z_" + std::to_string(g.twist);
  return base;
}

std::string CatalogEntry::name() const {
  if (params.empty()) return family;
  std::string s = family + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(params[i]);
  }
  return s + ")";
}

bool catalog_order(const CatalogEntry& a, const CatalogEntry& b) {
  if (a.source != b.source) return a.source < b.source;
  if (a.family != b.family) return a.family < b.family;
  return a.params < b.params;
}

namespace {

constexpr Color W = Color::White;
constexpr Color B = Color::Black;

ColoredPartition pp_ww_bb() { return tensor(base::pair(W, W), base::pair(B, B)); }
ColoredPartition sing_wb() { return tensor(base::singleton(W), base::singleton(B)); }
ColoredPartition pair_tensor_power(int k) {
  ColoredPartition p;
  for (int i = 0; i < k; ++i) p = tensor(p, base::pair(W, W));
  return p;
}

struct Family {
  std::string name;
  int arity;
  CatalogSource source;
  CategoryCase kase;
  Colorization color;
};

const std::vector<Family>& families() {
  using CS = CatalogSource;
  using CC = CategoryCase;
  using CZ = Colorization;
  static const std::vector<Family> f = {
      {"O_glob", 1, CS::GlobalNoncrossing, CC::O, CZ::Global},
      {"H_glob", 1, CS::GlobalNoncrossing, CC::H, CZ::Global},
      {"S_glob", 1, CS::GlobalNoncrossing, CC::S, CZ::Global},
      {"B_glob", 1, CS::GlobalNoncrossing, CC::B, CZ::Global},
      {"Bp_glob", 1, CS::GlobalNoncrossing, CC::B, CZ::Global},
      {"O_loc", 0, CS::LocalNoncrossing, CC::O, CZ::Local},
      {"Hp_loc", 0, CS::LocalNoncrossing, CC::H, CZ::Local},
      {"H_loc", 2, CS::LocalNoncrossing, CC::H, CZ::Local},
      {"S_loc", 2, CS::LocalNoncrossing, CC::S, CZ::Local},
      {"B_loc", 2, CS::LocalNoncrossing, CC::B, CZ::Local},
      {"Bp_loc", 3, CS::LocalNoncrossing, CC::B, CZ::Local},
      {"On+", 0, CS::FreeOrthogonal, CC::O, CZ::Global},
      {"Hn+", 0, CS::FreeOrthogonal, CC::H, CZ::Global},
      {"Sn+", 0, CS::FreeOrthogonal, CC::S, CZ::Global},
      {"Spn+", 0, CS::FreeOrthogonal, CC::S, CZ::Global},
      {"Bn+", 0, CS::FreeOrthogonal, CC::B, CZ::Global},
      {"Bpn+", 0, CS::FreeOrthogonal, CC::B, CZ::Global},
      {"Bsharpn+", 0, CS::FreeOrthogonal, CC::B, CZ::Global},
      {"Ogrp_glob", 1, CS::GroupCase, CC::O, CZ::Global},
      {"Ogrp_loc", 0, CS::GroupCase, CC::O, CZ::Local},
      {"Hgrp_glob", 1, CS::GroupCase, CC::H, CZ::Global},
      {"Hgrp_loc", 2, CS::GroupCase, CC::H, CZ::Local},
      {"Sgrp_glob", 1, CS::GroupCase, CC::S, CZ::Global},
      {"Bgrp_glob", 1, CS::GroupCase, CC::B, CZ::Global},
      {"Bgrp_loc", 1, CS::GroupCase, CC::B, CZ::Local},
  };
  return f;
}

const Family& find_family(const std::string& name) {
  for (const auto& f : families())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown catalog family '" + name + "'");
}

bool divides(int d, int k) { return d == 0 ? k == 0 : k % d == 0; }
bool even(int k) { return k % 2 == 0; }

bool side_conditions(const std::string& fam, const std::vector<int>& p) {
  auto not12 = [](int v) { return v != 1 && v != 2; };
  if (fam == "O_glob" || fam == "H_glob" || fam == "B_glob" || fam == "Ogrp_glob" ||
      fam == "Hgrp_glob" || fam == "Bgrp_glob")
    return even(p[0]);
  if (fam == "H_loc" || fam == "Hgrp_loc") return not12(p[0]) && not12(p[1]) && divides(p[1], p[0]);
  if (fam == "S_loc") return p[0] != 1 && p[1] != 1 && divides(p[1], p[0]);
  if (fam == "B_loc") return divides(p[1], p[0]);
  if (fam == "Bp_loc") {
    const int k = p[0], d = p[1], r = p[2];
    if (r == 0) return k != 1 && d != 1 && divides(d, k);
    return k != 1 && d >= 4 && even(d) && r == d / 2 && divides(d, k);
  }
  return true;
}

std::optional<GroupSpec> group_of(const std::string& fam, const std::vector<int>& p) {
  if (fam == "Ogrp_loc") return GroupSpec{GroupKind::U, 0, 1};
  if (fam == "Ogrp_glob") return GroupSpec{GroupKind::O, 0, p[0]};
  if (fam == "Hgrp_glob") return GroupSpec{GroupKind::H, 0, p[0]};
  if (fam == "Hgrp_loc") return GroupSpec{GroupKind::ZsWrS, p[1], p[0]};
  if (fam == "Sgrp_glob") return GroupSpec{GroupKind::S, 0, p[0]};
  if (fam == "Bgrp_glob") return GroupSpec{GroupKind::B, 0, p[0]};
  if (fam == "Bgrp_loc") return GroupSpec{GroupKind::C, 0, p[0]};
  return std::nullopt;
}

int global_parameter_of(const std::string& fam, const std::vector<int>& p) {
  if (fam == "On+" || fam == "Hn+" || fam == "Spn+" || fam == "Bpn+" || fam == "Bsharpn+") return 2;
  if (fam == "Sn+" || fam == "Bn+") return 1;
  return p.empty() ? 0 : p[0];
}

std::string equals_of(const std::string& fam) {
  if (fam == "On+") return "O_glob(2)";
  if (fam == "Hn+") return "H_glob(2)";
  if (fam == "Sn+") return "S_glob(1)";
  if (fam == "Spn+") return "S_glob(2)";
  if (fam == "Bn+") return "Bp_glob(1)";
  if (fam == "Bpn+") return "Bp_glob(2)";
  if (fam == "Bsharpn+") return "B_glob(2)";
  return {};
}

}  // namespace

const std::vector<std::pair<std::string, int>>& catalog_families() {
  static const std::vector<std::pair<std::string, int>> out = [] {
    std::vector<std::pair<std::string, int>> v;
    for (const auto& f : families()) v.push_back({f.name, f.arity});
    return v;
  }();
  return out;
}

std::vector<ColoredPartition> family_generators(const std::string& family,
                                                const std::vector<int>& params) {
  const Family& f = find_family(family);
  if (static_cast<int>(params.size()) != f.arity)
    throw std::invalid_argument(family + " takes " + std::to_string(f.arity) + " parameters");
  for (int v : params)
    if (v < 0) throw std::invalid_argument("catalog parameters must be nonnegative");
  const int k = f.arity > 0 ? params[0] : 0;
  const int d = f.arity > 1 ? params[1] : 0;
  const auto wbwb = base::four_block("oxox");
  const auto wwbb = base::four_block("ooxx");
  const auto cross = base::crossing("oooo");
  const auto sk = base::singletons(W, static_cast<std::size_t>(k));
  const auto bk = base::block(static_cast<std::size_t>(k));
  const auto bdbd = tensor(base::block(static_cast<std::size_t>(d)),
                           base::block(static_cast<std::size_t>(d), B));
  const auto posd = base::positioner(static_cast<std::size_t>(d));
  const auto idwb = base::id(W, B);

  if (family == "O_glob") {
    if (k % 2) throw std::invalid_argument("O_glob needs even k");
    return {pair_tensor_power(k / 2), pp_ww_bb()};
  }
  if (family == "H_glob") return {bk, wbwb, pp_ww_bb()};
  if (family == "S_glob") return {sk, wbwb, sing_wb(), pp_ww_bb()};
  if (family == "B_glob") return {sk, sing_wb(), pp_ww_bb()};
  if (family == "Bp_glob") return {sk, base::positioner(1), sing_wb(), pp_ww_bb()};
  if (family == "O_loc") return {};
  if (family == "Hp_loc") return {wbwb};
  if (family == "H_loc") return {bk, bdbd, wwbb, wbwb};
  if (family == "S_loc") return {sk, posd, wbwb, sing_wb()};
  if (family == "B_loc") return {sk, posd, sing_wb()};
  if (family == "Bp_loc") {
    const int r = params[2];
    if (r == 0) return {sk, posd, base::positioner_wbwb(), sing_wb()};
    return {sk, posd, base::positioner_shifted(static_cast<std::size_t>(r)), sing_wb()};
  }
  if (family == "On+") return {idwb};
  if (family == "Hn+") return {idwb, wbwb};
  if (family == "Sn+") return {idwb, wbwb, base::singleton(W)};
  if (family == "Spn+") return {idwb, wbwb, sing_wb()};
  if (family == "Bn+") return {idwb, base::singleton(W)};
  if (family == "Bpn+") return {idwb, base::positioner(1)};
  if (family == "Bsharpn+") return {idwb, sing_wb()};
  if (family == "Ogrp_glob") {
    if (k % 2) throw std::invalid_argument("Ogrp_glob needs even k");
    return {base::nested_pair(static_cast<std::size_t>(k / 2)), pp_ww_bb(), cross};
  }
  if (family == "Ogrp_loc") return {cross};
  if (family == "Hgrp_glob") return {bk, wbwb, pp_ww_bb(), cross};
  if (family == "Hgrp_loc") return {bk, bdbd, wbwb, cross};
  if (family == "Sgrp_glob") return {sk, wbwb, sing_wb(), pp_ww_bb(), cross};
  if (family == "Bgrp_glob") return {sk, sing_wb(), pp_ww_bb(), cross};
  if (family == "Bgrp_loc") return {sk, sing_wb(), cross};
  throw std::invalid_argument("unknown catalog family '" + family + "'");
}

static CatalogEntry make_entry(const Family& f, const std::vector<int>& params) {
  CatalogEntry e;
  e.family = f.name;
  e.params = params;
  e.source = f.source;
  e.generators = family_generators(f.name, params);
  e.expected_case = f.kase;
  e.expected_colorization = f.color;
  e.expected_global_parameter = global_parameter_of(f.name, params);
  e.group = group_of(f.name, params);
  e.equals = equals_of(f.name);
  return e;
}

std::vector<CatalogEntry> build_catalog(int max_param) {
  std::vector<CatalogEntry> out;
  for (const auto& f : families()) {
    if (f.arity == 0) {
      out.push_back(make_entry(f, {}));
      continue;
    }
    std::vector<int> p(f.arity, 0);
    while (true) {
      if (side_conditions(f.name, p)) out.push_back(make_entry(f, p));
      int i = f.arity - 1;
      while (i >= 0 && p[i] == max_param) p[i--] = 0;
      if (i < 0) break;
      ++p[i];
    }
  }
  std::sort(out.begin(), out.end(), catalog_order);
  return out;
}

CatalogEntry catalog_entry(const std::string& name) {
  std::string fam = name;
  std::vector<int> params;
  if (auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') throw std::invalid_argument("malformed catalog name '" + name + "'");
    fam = name.substr(0, open);
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    std::size_t start = 0;
    while (start <= inner.size()) {
      std::size_t comma = inner.find(',', start);
      if (comma == std::string::npos) comma = inner.size();
      const std::string tok = inner.substr(start, comma - start);
      try {
        std::size_t used = 0;
        params.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed catalog parameter '" + tok + "'");
      }
      start = comma + 1;
    }
  }
  const Family& f = find_family(fam);
  if (static_cast<int>(params.size()) != f.arity)
    throw std::invalid_argument(fam + " takes " + std::to_string(f.arity) + " parameters");
  for (int v : params)
    if (v < 0) throw std::invalid_argument("catalog parameters must be nonnegative");
  if (!side_conditions(fam, params))
    throw std::invalid_argument(name + " violates the side conditions of its family");
  return make_entry(f, params);
}

const CategorySlice& CatalogCache::slice(const CatalogEntry& e) {
  const std::string key = e.name();
  auto it = slices_.find(key);
  if (it == slices_.end())
    it = slices_.emplace(key, std::make_unique<CategorySlice>(generate_closure(e.generators, options_))).first;
  return *it->second;
}

std::vector<CatalogEntry> match_catalog(const CategorySlice& slice, CatalogCache& cache,
                                        int max_param) {
  if (cache.options().p_max != slice.p_max() || cache.options().i_max != slice.i_max())
    throw std::invalid_argument("catalog cache bounds differ from the slice bounds");
  const CategoryCase kase = slice.classify_case();
  const Colorization color = slice.colorization();
  std::vector<CatalogEntry> out;
  for (auto& e : build_catalog(max_param)) {
    if (e.expected_case != kase || e.expected_colorization != color) continue;
    bool gens_ok = true;
    for (const auto& g : e.generators)
      if (g.size() <= static_cast<std::size_t>(slice.p_max()) && !slice.contains(g)) {
        gens_ok = false;
        break;
      }
    if (!gens_ok) continue;
    if (slices_equal(slice, cache.slice(e), slice.p_max())) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace easycat
