#include "easycat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "easycat/catalog.hpp"
#include "easycat/category.hpp"
#include "easycat/relations.hpp"
#include "easycat/tensor_maps.hpp"

namespace easycat {

namespace {

struct JobConfig {
  std::string subcommand;
  std::string generators;   // file path
  std::string catalog;      // catalog entry name
  std::string generators2;  // second source for `equal`
  std::string catalog2;
  int p_max = 8;
  int i_max = 12;
  int n = 3;
  std::string upper;
  std::string lower;
  std::string partition;
  std::string matrix;
  std::string group;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  int samples = 20;
  int bound = 8;
  int max_param = 4;
  bool gram = false;
  std::string output = "literals";

  std::string source() const { return catalog.empty() ? "generators=" + generators : "catalog=" + catalog; }

  std::string header() const {
    std::ostringstream o;
    o << "# easycat " << subcommand << " " << source() << " P_max=" << p_max << " I_max=" << i_max;
    if (subcommand == "dim" || subcommand == "check-group" || subcommand == "relation") o << " n=" << n;
    if (subcommand == "check-group" || subcommand == "relation") o << " tol=" << tol << " seed=" << seed;
    if (subcommand == "equal") o << " bound=" << bound << " other=" << (catalog2.empty() ? generators2 : catalog2);
    return o.str();
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<ColoredPartition> load_generators(const std::string& file, const std::string& name) {
  if (!name.empty()) return catalog_entry(name).generators;
  if (file.empty()) throw UsageError("one of --generators or --catalog is required");
  return read_generator_file(file);
}

CategorySlice load_slice(const JobConfig& c, const std::string& file, const std::string& name) {
  ClosureOptions opt;
  opt.p_max = c.p_max;
  opt.i_max = c.i_max;
  opt.probe_completeness = true;
  return generate_closure(load_generators(file, name), opt);
}

std::string join_ints(const std::vector<int>& v) {
  if (v.empty()) return "none";
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

int slice_status(const CategorySlice& s, std::ostream& err) {
  for (const auto& w : s.warnings()) err << "warning: " << w << "\n";
  return s.truncated() ? kResourceCap : kOk;
}

int cmd_closure(const JobConfig& c, std::ostream& out, std::ostream& err) {
  const CategorySlice s = load_slice(c, c.generators, c.catalog);
  out << c.header() << "\n";
  if (c.output == "report") {
    out << s.header() << "\n"
        << "mode: " << to_string(s.mode()) << "\n"
        << "classes: " << s.classes().size() << "\n";
    const auto counts = s.colored_counts();
    for (std::size_t len = 0; len < counts.size(); ++len)
      out << "members_" << len << ": " << counts[len] << "\n";
    out << "members: " << s.member_count() << "\n";
  } else if (c.output == "pretty") {
    out << s.header() << "\n";
    for (const auto& lit : s.member_literals(s.p_max()))
      out << lit << "\n" << render_diagram(parse_partition(lit)) << "\n";
  } else {
    out << s.export_text();
  }
  return slice_status(s, err);
}

int cmd_classify(const JobConfig& c, std::ostream& out, std::ostream& err) {
  const CategorySlice s = load_slice(c, c.generators, c.catalog);
  ClosureOptions opt;
  opt.p_max = c.p_max;
  opt.i_max = c.i_max;
  CatalogCache cache(opt);
  const auto matches = match_catalog(s, cache, c.max_param);
  const auto est = estimate_local_parameter(s);
  out << c.header() << "\n"
      << "case: " << to_string(s.classify_case()) << "\n"
      << "colorization: " << to_string(s.colorization()) << "\n"
      << "global_parameter: " << s.global_parameter() << "\n"
      << "positioners: " << join_ints(est.positioners) << "\n"
      << "block_pairs: " << join_ints(est.block_pairs) << "\n"
      << "complete: " << (s.completeness() == Completeness::Yes ? "yes" : "heuristic") << "\n";
  std::string names;
  for (const auto& e : matches) names += (names.empty() ? "" : ", ") + e.name();
  out << "matches: " << (names.empty() ? "none" : names) << "\n";
  return slice_status(s, err);
}

int cmd_member(const JobConfig& c, std::ostream& out, std::ostream& err) {
  if (c.partition.empty()) throw UsageError("--partition is required");
  const ColoredPartition p = parse_partition(c.partition);
  const CategorySlice s = load_slice(c, c.generators, c.catalog);
  if (c.output == "report") out << c.header() << "\n";
  const int status = slice_status(s, err);
  if (static_cast<int>(p.size()) > s.p_max()) {
    out << "unknown\n";
    err << "partition has " << p.size() << " points, beyond P_max=" << s.p_max() << "\n";
    return status;
  }
  const bool in = s.contains(p);
  out << (in ? "yes" : (s.truncated() ? "unknown" : "no")) << "\n";
  return status;
}

int cmd_dim(const JobConfig& c, std::ostream& out, std::ostream& err) {
  const ColorWord r = parse_color_word(c.upper), sw = parse_color_word(c.lower);
  const CategorySlice s = load_slice(c, c.generators, c.catalog);
  if (c.output == "report") out << c.header() << "\n";
  const auto members = slice_members(s, r, sw);
  if (members.empty()) {
    out << 0 << "\n";
    return slice_status(s, err);
  }
  const ExactMatrix g = gram_matrix(members, c.n);
  out << exact_rank(g) << "\n";
  if (c.gram) out << export_gram(g, c.n, r, sw);
  return slice_status(s, err);
}

int cmd_relation(const JobConfig& c, std::ostream& out, std::ostream&) {
  if (c.partition.empty()) throw UsageError("--partition is required");
  const ColoredPartition p = parse_partition(c.partition);
  const SymbolicRelation rel = emit_relation(p);
  if (c.matrix.empty() && c.group.empty()) {
    out << rel.text << "\n";
    return kOk;
  }
  ComplexMatrix u;
  std::string descriptor;
  if (!c.matrix.empty()) {
    u = read_matrix_file(c.matrix);
    descriptor = c.matrix;
  } else {
    const GroupSpec g = parse_group(c.group);
    u = sample_group_element(g, c.n, c.seed).matrix;
    descriptor = "sample of " + to_string(g) + " seed=" + std::to_string(c.seed);
  }
  out << c.header() << "\n" << "relation: " << rel.text << "\n";
  const RelationReport rep = check_relation(p, u, c.tol, descriptor);
  out << rep.to_text();
  return rep.pass && rep.cross_check_agrees ? kOk : kCheckFailed;
}

int cmd_check_group(const JobConfig& c, std::ostream& out, std::ostream&) {
  if (c.group.empty()) throw UsageError("--group is required");
  const GroupSpec g = parse_group(c.group);
  GroupCheckReport rep;
  if (!c.catalog.empty()) {
    rep = verify_group_category(g, catalog_entry(c.catalog), c.n, c.samples, c.seed, c.tol);
  } else {
    rep = verify_generators(load_generators(c.generators, ""), g, c.n, c.samples, c.seed, c.tol);
    rep.category = c.generators;
  }
  out << c.header() << "\n" << rep.to_text();
  return rep.all_pass && rep.cross_check_agrees ? kOk : kCheckFailed;
}

int cmd_catalog(const JobConfig& c, std::ostream& out, std::ostream&) {
  for (const auto& e : build_catalog(c.max_param)) {
    out << e.name() << "\t" << to_string(e.source) << "\tcase=" << to_string(e.expected_case)
        << "\tcolorization=" << to_string(e.expected_colorization)
        << "\tk=" << e.expected_global_parameter;
    if (e.group) out << "\tgroup=" << to_string(*e.group);
    if (!e.equals.empty()) out << "\tequals=" << e.equals;
    out << "\n";
    if (c.output != "literals") continue;
    for (const auto& g : e.generators) out << "  " << render_partition(g) << "\n";
  }
  return kOk;
}

int cmd_equal(const JobConfig& c, std::ostream& out, std::ostream& err) {
  if (c.generators2.empty() && c.catalog2.empty())
    throw UsageError("equal needs a second source: --generators2 or --catalog2");
  const CategorySlice a = load_slice(c, c.generators, c.catalog);
  const CategorySlice b = load_slice(c, c.generators2, c.catalog2);
  if (c.output == "report") out << c.header() << "\n";
  out << (slices_equal(a, b, c.bound) ? "yes" : "no") << "\n";
  return std::max(slice_status(a, err), slice_status(b, err));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobConfig c;
  CLI::App app{"Categories of two-colored partitions", "easycat"};
  app.require_subcommand(1);

  auto add_source = [&](CLI::App* s) {
    auto* g = s->add_option("--generators", c.generators, "generator file, one literal per line");
    auto* k = s->add_option("--catalog", c.catalog, "catalog entry, e.g. S_loc(3,3)");
    g->excludes(k);
    s->add_option("--pmax", c.p_max, "largest member size")->check(CLI::PositiveNumber);
    s->add_option("--imax", c.i_max, "largest intermediate size")->check(CLI::PositiveNumber);
    s->add_option("--output", c.output, "literals | pretty | report")
        ->check(CLI::IsMember({"literals", "pretty", "report"}));
  };
  auto* closure = app.add_subcommand("closure", "export the slice of the generated category");
  add_source(closure);
  auto* classify = app.add_subcommand("classify", "case, colorization, parameters and catalog matches");
  add_source(classify);
  classify->add_option("--max-param", c.max_param, "largest catalog parameter to match");
  auto* member = app.add_subcommand("member", "membership of one partition");
  add_source(member);
  member->add_option("--partition", c.partition)->required();
  auto* dim = app.add_subcommand("dim", "dimension of the intertwiner space");
  add_source(dim);
  dim->add_option("--upper", c.upper, "upper color word")->required();
  dim->add_option("--lower", c.lower, "lower color word")->required();
  dim->add_option("--n", c.n)->check(CLI::PositiveNumber);
  dim->add_flag("--gram", c.gram, "also print the Gram matrix");
  auto* relation = app.add_subcommand("relation", "symbolic relation, optionally checked on a matrix");
  relation->add_option("--partition", c.partition)->required();
  auto* mat = relation->add_option("--matrix", c.matrix, "matrix file: n, then n rows");
  auto* grp = relation->add_option("--group", c.group, "sample a group element instead");
  mat->excludes(grp);
  relation->add_option("--n", c.n)->check(CLI::Range(2, 64));
  relation->add_option("--tol", c.tol)->check(CLI::PositiveNumber);
  relation->add_option("--seed", c.seed);
  auto* check = app.add_subcommand("check-group", "check generator relations on sampled group elements");
  add_source(check);
  check->add_option("--group", c.group, "S, H, Z3wrS, O, U, B, C, optional xZk")->required();
  check->add_option("--n", c.n)->check(CLI::Range(2, 64));
  check->add_option("--samples", c.samples)->check(CLI::PositiveNumber);
  check->add_option("--seed", c.seed);
  check->add_option("--tol", c.tol)->check(CLI::PositiveNumber);
  auto* catalog = app.add_subcommand("catalog", "list catalog entries");
  catalog->add_option("--max-param", c.max_param)->check(CLI::NonNegativeNumber);
  catalog->add_option("--output", c.output)->check(CLI::IsMember({"literals", "pretty", "report"}));
  auto* equal = app.add_subcommand("equal", "compare two slices up to a bound");
  add_source(equal);
  auto* g2 = equal->add_option("--generators2", c.generators2);
  auto* k2 = equal->add_option("--catalog2", c.catalog2);
  g2->excludes(k2);
  equal->add_option("--bound", c.bound)->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (c.subcommand == "closure") return cmd_closure(c, out, err);
    if (c.subcommand == "classify") return cmd_classify(c, out, err);
    if (c.subcommand == "member") return cmd_member(c, out, err);
    if (c.subcommand == "dim") return cmd_dim(c, out, err);
    if (c.subcommand == "relation") return cmd_relation(c, out, err);
    if (c.subcommand == "check-group") return cmd_check_group(c, out, err);
    if (c.subcommand == "catalog") return cmd_catalog(c, out, err);
    if (c.subcommand == "equal") return cmd_equal(c, out, err);
  } catch (const SizeCapError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace easycat
