#pragma once

// Relations R(p) in the entries u[i][j] of a matrix: symbolic rendering,
// numeric evaluation on concrete matrices, and samplers for the matrix groups
// of the group case.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "easycat/catalog.hpp"
#include "easycat/partition.hpp"

namespace easycat {

using ComplexMatrix = Eigen::MatrixXcd;

struct Factor {
  bool star = false;  // u* instead of u
  std::string row;
  std::string col;
};

struct SumMarker {
  std::string var;
  std::vector<std::size_t> factors;  // indices into Side::factors
};

struct RelationSide {
  std::vector<std::pair<std::string, std::string>> deltas;
  std::vector<Factor> factors;
  std::vector<SumMarker> sums;
  std::string text;
};

struct SymbolicRelation {
  RelationSide lhs;
  RelationSide rhs;
  std::string text;  // "lhs = rhs"
};

/// Index names: fixed lower indices use i, fixed upper indices j. If exactly
/// one point of a row lies in a block meeting both rows, it gets the bare
/// letter and the rest of the row is numbered; otherwise the whole row is
/// numbered. Summation variables are k (upper-only blocks) and l (lower-only
/// blocks), numbered like the first point of their block.
SymbolicRelation emit_relation(const ColoredPartition& p);

struct RelationReport {
  std::string partition;
  std::string matrix;
  int n = 0;
  double max_deviation = 0.0;       // direct evaluation
  double identity_deviation = 0.0;  // ||T_p U^{⊗r} - U^{⊗s} T_p||_max
  double tolerance = 0.0;
  bool pass = false;
  bool cross_check_agrees = false;

  std::string to_text() const;
};

/// Evaluates both sides of R(p) for every index tuple, and separately the
/// intertwiner identity built from T_p. Throws SizeCapError if n^{k+l}
/// exceeds the coordinate cap.
RelationReport check_relation(const ColoredPartition& p, const ComplexMatrix& u, double tol = 1e-9,
                              const std::string& descriptor = "matrix");

// ---- groups ---------------------------------------------------------------

class GroupMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "S", "H", "Z3wrS", "O", "U", "B", "C", optionally followed by
/// "xZk" (e.g. "BxZ2", "Z0wrSxZ0"). Throws std::invalid_argument.
GroupSpec parse_group(const std::string& text);
std::string group_id(const GroupSpec& g);

struct GroupSample {
  ComplexMatrix matrix;
  ComplexMatrix untwisted;
  std::complex<double> phase{1.0, 0.0};
};

/// Deterministic per (group, n, seed). Throws std::invalid_argument for n < 2.
GroupSample sample_group_element(const GroupSpec& group, int n, std::uint64_t seed);

/// Largest violation of the defining properties of the group (0 for an exact member).
double membership_defect(const GroupSpec& group, const GroupSample& sample);

struct GroupCheckReport {
  std::string group;
  std::string category;
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  double max_sampler_defect = 0.0;
  bool all_pass = true;
  bool cross_check_agrees = true;
  std::vector<std::string> failures;

  std::string to_text() const;
};

/// Checks every generator relation on `samples` seeded group elements.
GroupCheckReport verify_generators(const std::vector<ColoredPartition>& generators,
                                   const GroupSpec& group, int n, int samples,
                                   std::uint64_t seed, double tol = 1e-9);

/// Same, for a group-case catalog entry. Throws GroupMismatchError if the
/// entry does not belong to this group.
GroupCheckReport verify_group_category(const GroupSpec& group, const CatalogEntry& entry, int n,
                                       int samples, std::uint64_t seed = 1, double tol = 1e-9);

/// Reads a matrix: first line n, then n rows of n entries "re" or "re,im".
ComplexMatrix read_matrix_file(const std::string& path);

}  // namespace easycat
