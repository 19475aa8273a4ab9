#pragma once

// Named categories from the classification of noncrossing categories and of
// the group case, instantiated for small parameters.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "easycat/category.hpp"
#include "easycat/partition.hpp"

namespace easycat {

enum class CatalogSource { GlobalNoncrossing, LocalNoncrossing, FreeOrthogonal, GroupCase };
std::string to_string(CatalogSource s);

/// Matrix group realizing a group-case category. `twist` is the k of the
/// product with Z_k (0 = whole circle); `order` is s for Z_s wreath S_n
/// (0 = circle).
enum class GroupKind { S, H, ZsWrS, O, U, B, C };
struct GroupSpec {
  GroupKind kind = GroupKind::U;
  int order = 0;
  int twist = 1;
};
std::string to_string(const GroupSpec& g);

struct CatalogEntry {
  std::string family;          // e.g. "S_loc"
  std::vector<int> params;     // k, d, r as applicable
  CatalogSource source = CatalogSource::GlobalNoncrossing;
  std::vector<ColoredPartition> generators;
  CategoryCase expected_case = CategoryCase::O;
  Colorization expected_colorization = Colorization::Local;
  int expected_global_parameter = 0;
  std::optional<GroupSpec> group;  // group-case entries only
  std::string equals;              // free orthogonal entries: the entry they coincide with

  /// "S_loc(3,3)", "O_loc", ...
  std::string name() const;
};

bool catalog_order(const CatalogEntry& a, const CatalogEntry& b);

/// Families and their parameter arities.
const std::vector<std::pair<std::string, int>>& catalog_families();

/// Generators of a family for arbitrary parameters, without side conditions.
/// Throws std::invalid_argument for unknown families or wrong arity.
std::vector<ColoredPartition> family_generators(const std::string& family,
                                                const std::vector<int>& params);

/// Every entry with side conditions satisfied and parameters in [0, max_param],
/// sorted by (source, family, params).
std::vector<CatalogEntry> build_catalog(int max_param = 6);

/// Parses "S_loc(3,0)" or "O_loc" and checks side conditions.
/// Throws std::invalid_argument if the name is unknown or violates them.
CatalogEntry catalog_entry(const std::string& name);

/// Slices of catalog entries, cached by name and bounds.
class CatalogCache {
 public:
  explicit CatalogCache(ClosureOptions options = {}) : options_(options) {}
  const CategorySlice& slice(const CatalogEntry& e);
  const ClosureOptions& options() const { return options_; }

 private:
  ClosureOptions options_;
  std::map<std::string, std::unique_ptr<CategorySlice>> slices_;
};

/// Entries whose slice equals the given one up to its P_max. Entries are
/// prefiltered by case, colorization and containment of their generators.
std::vector<CatalogEntry> match_catalog(const CategorySlice& slice, CatalogCache& cache,
                                        int max_param = 6);

}  // namespace easycat
