#include "easycat/relations.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <functional>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "easycat/tensor_maps.hpp"

namespace easycat {

namespace {

// ---- symbolic side --------------------------------------------------------

struct Naming {
  std::vector<std::string> upper;  // suffix per upper point ("" = bare letter)
  std::vector<std::string> lower;
};

Naming name_points(const ColoredPartition& p) {
  const std::size_t k = p.upper_size(), l = p.lower_size();
  std::vector<char> has_up(p.block_count(), 0), has_low(p.block_count(), 0);
  for (std::size_t i = 0; i < k; ++i) has_up[p.label(i)] = 1;
  for (std::size_t i = 0; i < l; ++i) has_low[p.label(k + i)] = 1;
  auto name_row = [&](std::size_t offset, std::size_t count) {
    std::vector<std::size_t> through;
    for (std::size_t i = 0; i < count; ++i) {
      const int b = p.label(offset + i);
      if (has_up[b] && has_low[b]) through.push_back(i);
    }
    std::vector<std::string> names(count);
    int next = 1;
    for (std::size_t i = 0; i < count; ++i) {
      if (through.size() == 1 && through[0] == i) continue;
      names[i] = std::to_string(next++);
    }
    return names;
  };
  return {name_row(0, k), name_row(k, l)};
}

std::string render_side(const RelationSide& s) {
  std::vector<std::string> parts;
  for (const auto& [a, b] : s.deltas) parts.push_back("delta(" + a + "," + b + ")");
  auto factor_text = [&](std::size_t f) {
    const Factor& x = s.factors[f];
    return std::string(x.star ? "u*" : "u") + "[" + x.row + "][" + x.col + "]";
  };
  std::vector<int> starts_sum(s.factors.size(), -1);
  for (std::size_t m = 0; m < s.sums.size(); ++m) {
    const auto& fs = s.sums[m].factors;
    const bool contiguous = fs.back() - fs.front() + 1 == fs.size();
    if (contiguous)
      starts_sum[fs.front()] = static_cast<int>(m);
    else
      parts.push_back("sum_" + s.sums[m].var);
  }
  for (std::size_t f = 0; f < s.factors.size();) {
    if (starts_sum[f] < 0) {
      parts.push_back(factor_text(f++));
      continue;
    }
    const SumMarker& m = s.sums[starts_sum[f]];
    std::string body = "sum_" + m.var;
    for (std::size_t g : m.factors) body += " " + factor_text(g);
    if (m.factors.size() == s.factors.size())
      parts.push_back(body);
    else
      parts.push_back("(" + body + ")");
    f += m.factors.size();
  }
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& x : parts) out += (out.empty() ? "" : " ") + x;
  return out;
}

// ---- dense tensor helpers -------------------------------------------------

// Contracts axis `axis` of a tensor with `axes` axes of extent n:
// out[.., x, ..] = sum_y a(x, y) in[.., y, ..].
Eigen::VectorXcd apply_axis(const Eigen::VectorXcd& in, int n, std::size_t axes, std::size_t axis,
                            const ComplexMatrix& a) {
  std::size_t stride = 1;
  for (std::size_t t = axis + 1; t < axes; ++t) stride *= n;
  const std::size_t block = stride * n;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
  for (std::size_t base = 0; base < static_cast<std::size_t>(in.size()); base += block)
    for (std::size_t off = 0; off < stride; ++off)
      for (int x = 0; x < n; ++x) {
        std::complex<double> acc = 0;
        for (int y = 0; y < n; ++y) acc += a(x, y) * in[base + y * stride + off];
        out[base + x * stride + off] = acc;
      }
  return out;
}

double unitarity_defect(const ComplexMatrix& m) {
  const auto n = m.rows();
  return (m * m.adjoint() - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace

SymbolicRelation emit_relation(const ColoredPartition& p) {
  const std::size_t k = p.upper_size(), l = p.lower_size();
  const Naming nm = name_points(p);
  std::vector<std::vector<std::size_t>> ups(p.block_count()), lows(p.block_count());
  for (std::size_t i = 0; i < k; ++i) ups[p.label(i)].push_back(i);
  for (std::size_t i = 0; i < l; ++i) lows[p.label(k + i)].push_back(i);

  SymbolicRelation rel;
  RelationSide& L = rel.lhs;
  RelationSide& R = rel.rhs;
  const std::size_t nb = static_cast<std::size_t>(p.block_count());
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t t = 1; t < lows[b].size(); ++t)
      L.deltas.push_back({"i" + nm.lower[lows[b][t - 1]], "i" + nm.lower[lows[b][t]]});
    for (std::size_t t = 1; t < ups[b].size(); ++t)
      R.deltas.push_back({"j" + nm.upper[ups[b][t - 1]], "j" + nm.upper[ups[b][t]]});
  }
  std::vector<std::string> up_var(nb), low_var(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    if (!ups[b].empty() && lows[b].empty()) {
      up_var[b] = "k" + nm.upper[ups[b][0]];
      L.sums.push_back({up_var[b], {}});
    }
    if (ups[b].empty() && !lows[b].empty()) {
      low_var[b] = "l" + nm.lower[lows[b][0]];
      R.sums.push_back({low_var[b], {}});
    }
  }
  auto sum_of = [](RelationSide& s, const std::string& var) -> SumMarker& {
    for (auto& m : s.sums)
      if (m.var == var) return m;
    throw std::logic_error("unknown summation variable");
  };
  for (std::size_t a = 0; a < k; ++a) {
    const int b = p.label(a);
    Factor f{p.color(a) == Color::Black,
             lows[b].empty() ? up_var[b] : "i" + nm.lower[lows[b][0]], "j" + nm.upper[a]};
    if (lows[b].empty()) sum_of(L, up_var[b]).factors.push_back(L.factors.size());
    L.factors.push_back(f);
  }
  for (std::size_t c = 0; c < l; ++c) {
    const int b = p.label(k + c);
    Factor f{p.color(k + c) == Color::Black, "i" + nm.lower[c],
             ups[b].empty() ? low_var[b] : "j" + nm.upper[ups[b][0]]};
    if (ups[b].empty()) sum_of(R, low_var[b]).factors.push_back(R.factors.size());
    R.factors.push_back(f);
  }
  L.text = render_side(L);
  R.text = render_side(R);
  rel.text = L.text + " = " + R.text;
  return rel;
}

std::string RelationReport::to_text() const {
  std::ostringstream o;
  o.precision(3);
  o << std::scientific;
  o << "partition: " << partition << "\n"
    << "matrix: " << matrix << "\n"
    << "n: " << n << "\n"
    << "tolerance: " << tolerance << "\n"
    << "max_deviation: " << max_deviation << "\n"
    << "identity_deviation: " << identity_deviation << "\n"
    << "cross_check: " << (cross_check_agrees ? "agrees" : "DISAGREES") << "\n"
    << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
  return o.str();
}

RelationReport check_relation(const ColoredPartition& p, const ComplexMatrix& u, double tol,
                              const std::string& descriptor) {
  if (u.rows() != u.cols() || u.rows() < 1) throw std::invalid_argument("matrix must be square");
  const int n = static_cast<int>(u.rows());
  const std::size_t k = p.upper_size(), l = p.lower_size();
  const std::uint64_t total = checked_power(n, k + l, coordinate_cap());
  const ComplexMatrix ubar = u.conjugate();
  auto power = [&](std::size_t point) -> const ComplexMatrix& {
    return p.color(point) == Color::Black ? ubar : u;
  };

  const std::size_t nb = static_cast<std::size_t>(p.block_count());
  std::vector<std::vector<std::size_t>> ups(nb), lows(nb);
  for (std::size_t i = 0; i < k; ++i) ups[p.label(i)].push_back(i);
  for (std::size_t i = 0; i < l; ++i) lows[p.label(k + i)].push_back(i);

  RelationReport rep;
  rep.partition = render_partition(p);
  rep.matrix = descriptor;
  rep.n = n;
  rep.tolerance = tol;

  // direct evaluation, block by block; idx holds i (upper) then β (lower), 0-based
  std::vector<int> idx(k + l, 0);
  for (std::uint64_t pos = 0; pos < total; ++pos) {
    std::complex<double> lhs = 1, rhs = 1;
    for (std::size_t b = 0; b < nb && (lhs != 0.0 || rhs != 0.0); ++b) {
      // LHS: lower indices of the block must agree and pin the summed α
      bool low_equal = true;
      for (std::size_t t = 1; t < lows[b].size(); ++t)
        low_equal &= idx[k + lows[b][t]] == idx[k + lows[b][0]];
      if (!low_equal) {
        lhs = 0;
      } else if (!lows[b].empty()) {
        const int v = idx[k + lows[b][0]];
        for (std::size_t a : ups[b]) lhs *= power(a)(v, idx[a]);
      } else {
        std::complex<double> s = 0;
        for (int v = 0; v < n; ++v) {
          std::complex<double> t = 1;
          for (std::size_t a : ups[b]) t *= power(a)(v, idx[a]);
          s += t;
        }
        lhs *= s;
      }
      // RHS: upper indices of the block must agree and pin the summed γ
      bool up_equal = true;
      for (std::size_t t = 1; t < ups[b].size(); ++t) up_equal &= idx[ups[b][t]] == idx[ups[b][0]];
      if (!up_equal) {
        rhs = 0;
      } else if (!ups[b].empty()) {
        const int w = idx[ups[b][0]];
        for (std::size_t c : lows[b]) rhs *= power(k + c)(idx[k + c], w);
      } else {
        std::complex<double> s = 0;
        for (int w = 0; w < n; ++w) {
          std::complex<double> t = 1;
          for (std::size_t c : lows[b]) t *= power(k + c)(idx[k + c], w);
          s += t;
        }
        rhs *= s;
      }
    }
    rep.max_deviation = std::max(rep.max_deviation, std::abs(lhs - rhs));
    for (std::size_t t = k + l; t-- > 0;) {
      if (++idx[t] < n) break;
      idx[t] = 0;
    }
  }

  // T_p U^{⊗r} and U^{⊗s} T_p as dense tensors with row axes first
  Eigen::VectorXcd tp = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(total));
  const std::uint64_t cols = checked_power(n, k, coordinate_cap());
  for (const auto& [beta, alpha] : build_map(p, n).coords) tp[beta * cols + alpha] = 1.0;
  Eigen::VectorXcd left = tp, right = tp;
  for (std::size_t a = 0; a < k; ++a) left = apply_axis(left, n, k + l, l + a, power(a).transpose());
  for (std::size_t c = 0; c < l; ++c) right = apply_axis(right, n, k + l, c, power(k + c));
  rep.identity_deviation = total == 0 ? 0.0 : (left - right).cwiseAbs().maxCoeff();

  rep.pass = rep.max_deviation <= tol;
  rep.cross_check_agrees = (rep.identity_deviation <= tol) == rep.pass &&
                           std::abs(rep.identity_deviation - rep.max_deviation) <= tol;
  return rep;
}

// ---- groups ---------------------------------------------------------------

GroupSpec parse_group(const std::string& text) {
  GroupSpec g;
  std::string base = text;
  const auto x = text.find("xZ");
  if (x != std::string::npos) {
    base = text.substr(0, x);
    const std::string t = text.substr(x + 2);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad twist in group '" + text + "'");
    g.twist = std::stoi(t);
  }
  if (base == "S") g.kind = GroupKind::S;
  else if (base == "H") g.kind = GroupKind::H;
  else if (base == "O") g.kind = GroupKind::O;
  else if (base == "U") g.kind = GroupKind::U;
  else if (base == "B") g.kind = GroupKind::B;
  else if (base == "C") g.kind = GroupKind::C;
  else if (base.size() > 4 && base.starts_with("Z") && base.ends_with("wrS")) {
    const std::string s = base.substr(1, base.size() - 4);
    if (s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad order in group '" + text + "'");
    g.kind = GroupKind::ZsWrS;
    g.order = std::stoi(s);
  } else {
    throw std::invalid_argument("unknown group '" + text + "'");
  }
  return g;
}

std::string group_id(const GroupSpec& g) {
  std::string s;
  switch (g.kind) {
    case GroupKind::S: s = "S"; break;
    case GroupKind::H: s = "H"; break;
    case GroupKind::ZsWrS: s = "Z" + std::to_string(g.order) + "wrS"; break;
    case GroupKind::O: s = "O"; break;
    case GroupKind::U: s = "U"; break;
    case GroupKind::B: s = "B"; break;
    case GroupKind::C: s = "C"; break;
  }
  if (g.twist != 1) s += "xZ" + std::to_string(g.twist);
  return s;
}

namespace {

using Rng = std::mt19937_64;

std::complex<double> random_phase(Rng& rng) {
  std::uniform_real_distribution<double> d(0.0, 2 * std::numbers::pi);
  return std::polar(1.0, d(rng));
}

std::complex<double> root_of_unity(int order, Rng& rng) {
  if (order == 0) return random_phase(rng);
  std::uniform_int_distribution<int> d(0, order - 1);
  return std::polar(1.0, 2 * std::numbers::pi * d(rng) / order);
}

ComplexMatrix haar(int n, bool complex_entries, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = {g(rng), complex_entries ? g(rng) : 0.0};
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const std::complex<double> ph = std::abs(d) > 0 ? d / std::abs(d) : 1.0;
    q.col(j) *= ph;
  }
  if (!complex_entries) q = q.real().cast<std::complex<double>>();
  return q;
}

ComplexMatrix monomial(int n, Rng& rng, const std::function<std::complex<double>()>& entry) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, perm[i]) = entry();
  return m;
}

// Orthogonal or unitary matrices fixing the all-ones vector.
ComplexMatrix fixing_ones(int n, bool complex_entries, Rng& rng) {
  ComplexMatrix basis = ComplexMatrix::Identity(n, n);
  basis.col(0).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
  Eigen::HouseholderQR<ComplexMatrix> qr(basis);
  const ComplexMatrix q = qr.householderQ();
  const ComplexMatrix v = q.rightCols(n - 1);
  const ComplexMatrix e = ComplexMatrix::Constant(n, 1, 1.0 / std::sqrt(static_cast<double>(n)));
  ComplexMatrix m = e * e.transpose() + v * haar(n - 1, complex_entries, rng) * v.adjoint();
  if (!complex_entries) m = m.real().cast<std::complex<double>>();
  return m;
}

double entry_defect(const ComplexMatrix& m, const std::function<double(std::complex<double>)>& f) {
  double d = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) d = std::max(d, f(m(i, j)));
  return d;
}

double monomial_defect(const ComplexMatrix& m) {
  double d = 0;
  for (int i = 0; i < m.rows(); ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < m.cols(); ++j) {
      row += std::abs(m(i, j)) > 0.5;
      col += std::abs(m(j, i)) > 0.5;
    }
    if (row != 1 || col != 1) d = std::max(d, 1.0);
  }
  return d;
}

}  // namespace

GroupSample sample_group_element(const GroupSpec& group, int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("group samples need n >= 2");
  Rng rng(seed);
  GroupSample s;
  switch (group.kind) {
    case GroupKind::S: s.untwisted = monomial(n, rng, [] { return std::complex<double>(1.0); }); break;
    case GroupKind::H: {
      std::bernoulli_distribution coin;
      s.untwisted = monomial(n, rng, [&] { return std::complex<double>(coin(rng) ? 1.0 : -1.0); });
      break;
    }
    case GroupKind::ZsWrS:
      s.untwisted = monomial(n, rng, [&] { return root_of_unity(group.order, rng); });
      break;
    case GroupKind::O: s.untwisted = haar(n, false, rng); break;
    case GroupKind::U: s.untwisted = haar(n, true, rng); break;
    case GroupKind::B: s.untwisted = fixing_ones(n, false, rng); break;
    case GroupKind::C: s.untwisted = fixing_ones(n, true, rng); break;
  }
  if (group.twist != 1) s.phase = root_of_unity(group.twist, rng);
  s.matrix = s.phase * s.untwisted;
  return s;
}

double membership_defect(const GroupSpec& group, const GroupSample& sample) {
  const ComplexMatrix& v = sample.untwisted;
  double d = unitarity_defect(v);
  auto real_defect = [](std::complex<double> z) { return std::abs(z.imag()); };
  auto sums_defect = [&] {
    const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(v.rows());
    return std::max((v * ones - ones).cwiseAbs().maxCoeff(),
                    (v.transpose() * ones - ones).cwiseAbs().maxCoeff());
  };
  switch (group.kind) {
    case GroupKind::S:
      d = std::max({d, monomial_defect(v), entry_defect(v, [](std::complex<double> z) {
                      return std::min(std::abs(z), std::abs(z - 1.0));
                    })});
      break;
    case GroupKind::H:
      d = std::max({d, monomial_defect(v), entry_defect(v, [](std::complex<double> z) {
                      return std::min({std::abs(z), std::abs(z - 1.0), std::abs(z + 1.0)});
                    })});
      break;
    case GroupKind::ZsWrS: {
      const int s = group.order;
      d = std::max({d, monomial_defect(v), entry_defect(v, [s](std::complex<double> z) {
                      if (std::abs(z) < 0.5) return std::abs(z);
                      return s == 0 ? std::abs(std::abs(z) - 1.0) : std::abs(std::pow(z, s) - 1.0);
                    })});
      break;
    }
    case GroupKind::O: d = std::max(d, entry_defect(v, real_defect)); break;
    case GroupKind::U: break;
    case GroupKind::B: d = std::max({d, entry_defect(v, real_defect), sums_defect()}); break;
    case GroupKind::C: d = std::max(d, sums_defect()); break;
  }
  const double twist = group.twist == 0 ? std::abs(std::abs(sample.phase) - 1.0)
                                        : std::abs(std::pow(sample.phase, group.twist) - 1.0);
  const double product = (sample.matrix - sample.phase * v).cwiseAbs().maxCoeff();
  return std::max({d, twist, product});
}

std::string GroupCheckReport::to_text() const {
  std::ostringstream o;
  o << "group: " << group << "\n"
    << "category: " << category << "\n"
    << "n: " << n << "\n"
    << "samples: " << samples << "\n"
    << "seed: " << seed << "\n";
  o.precision(3);
  o << std::scientific << "tolerance: " << tolerance << "\n"
    << "max_deviation: " << max_deviation << "\n"
    << "max_sampler_defect: " << max_sampler_defect << "\n"
    << "cross_check: " << (cross_check_agrees ? "agrees" : "DISAGREES") << "\n";
  for (const auto& f : failures) o << "failure: " << f << "\n";
  o << "verdict: " << (all_pass ? "PASS" : "FAIL") << "\n";
  return o.str();
}

GroupCheckReport verify_generators(const std::vector<ColoredPartition>& generators,
                                   const GroupSpec& group, int n, int samples, std::uint64_t seed,
                                   double tol) {
  GroupCheckReport rep;
  rep.group = to_string(group);
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  rep.tolerance = tol;
  for (int s = 0; s < samples; ++s) {
    const GroupSample g = sample_group_element(group, n, seed + static_cast<std::uint64_t>(s));
    const double defect = membership_defect(group, g);
    rep.max_sampler_defect = std::max(rep.max_sampler_defect, defect);
    if (defect > 1e-12) {
      rep.all_pass = false;
      rep.failures.push_back("sample " + std::to_string(s) + ": not a group element");
    }
    for (const auto& p : generators) {
      const RelationReport r = check_relation(p, g.matrix, tol);
      rep.max_deviation = std::max(rep.max_deviation, r.max_deviation);
      rep.cross_check_agrees = rep.cross_check_agrees && r.cross_check_agrees;
      if (!r.pass) {
        rep.all_pass = false;
        std::ostringstream o;
        o << "sample " << s << ": " << r.partition << " deviation " << r.max_deviation;
        rep.failures.push_back(o.str());
      }
    }
  }
  return rep;
}

GroupCheckReport verify_group_category(const GroupSpec& group, const CatalogEntry& entry, int n,
                                       int samples, std::uint64_t seed, double tol) {
  if (!entry.group)
    throw GroupMismatchError(entry.name() + " is not a group-case category");
  const GroupSpec& g = *entry.group;
  if (g.kind != group.kind || g.order != group.order || g.twist != group.twist)
    throw GroupMismatchError(entry.name() + " belongs to " + to_string(g) + ", not " +
                             to_string(group));
  GroupCheckReport rep = verify_generators(entry.generators, group, n, samples, seed, tol);
  rep.category = entry.name();
  return rep;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
  int n = 0;
  if (!(in >> n) || n < 1) throw std::runtime_error("matrix file must start with a positive size");
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::runtime_error("matrix file has fewer than n*n entries");
      const auto comma = tok.find(',');
      try {
        const double re = std::stod(tok.substr(0, comma));
        const double im = comma == std::string::npos ? 0.0 : std::stod(tok.substr(comma + 1));
        m(i, j) = {re, im};
      } catch (const std::exception&) {
        throw std::runtime_error("bad matrix entry '" + tok + "'");
      }
    }
  return m;
}

}  // namespace easycat
