// Input descriptions (algebras, bimodules, groups) and the machine report
// format.  All coefficients travel as exact integer pairs; no floats appear
// in any file.

#ifndef REFHOM_IO_HPP
#define REFHOM_IO_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "refhom/involutive.hpp"

namespace refhom {

using Json = nlohmann::ordered_json;

// one structure-constant contribution: basis index, numerator, denominator
using CoeffTriple = std::tuple<Index, Int, Int>;

struct BimoduleDesc {
  Index dim = 0;
  std::vector<std::vector<std::vector<CoeffTriple>>> left;   // left[a][m]
  std::vector<std::vector<std::vector<CoeffTriple>>> right;  // right[m][a]
  std::vector<std::vector<std::pair<Int, Int>>> involution;  // dense matrix entries
};

struct AlgebraDesc {
  Ring ring;
  Index dim = 0;
  std::vector<std::string> basis;
  std::vector<std::pair<Int, Int>> unit;
  std::vector<std::vector<std::vector<CoeffTriple>>> mul;    // mul[i][j]
  std::vector<std::vector<std::pair<Int, Int>>> involution;
  std::optional<BimoduleDesc> bimodule;
};

struct GroupDesc {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
};

Ring parse_ring(const Json& j);
Json ring_to_json(const Ring& r);

AlgebraDesc parse_algebra(const Json& j);
GroupDesc parse_group(const Json& j);
bool looks_like_group(const Json& j);

Json load_json_file(const std::string& path);

// ---------------------------------------------------------------------------
// machine reports
// ---------------------------------------------------------------------------

struct DegreeRecord {
  Index n = 0;
  Index free_rank = 0;
  std::vector<Int> torsion;
};

struct WeightRecord {
  Index n = 0;
  int weight = 0;
  Index free_rank = 0;
  std::vector<Int> torsion;
};

struct CheckRecord {
  std::string name;
  bool pass = true;
};

struct MachineReport {
  std::string command;
  Ring ring;
  std::string sign;  // "", "plus" or "minus"
  std::vector<DegreeRecord> groups;
  std::vector<WeightRecord> table;
  std::vector<CheckRecord> checks;

  bool all_checks_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::string emit_report(const MachineReport& rep);
MachineReport parse_report(const std::string& text);

DegreeRecord to_degree_record(Index n, const HomologyGroup& h);
std::string render_table(const MachineReport& rep);

// ---------------------------------------------------------------------------
// templated builders (description -> typed structures)
// ---------------------------------------------------------------------------

template <class S>
Vec<S> build_vector(const Ring& ring, const std::vector<std::pair<Int, Int>>& entries) {
  Vec<S> v = Vec<S>::Constant(static_cast<Index>(entries.size()), S(0));
  for (Index i = 0; i < v.size(); ++i)
    v(i) = ScalarTraits<S>::from_fraction(ring, entries[static_cast<size_t>(i)].first,
                                          entries[static_cast<size_t>(i)].second);
  return v;
}

template <class S>
Mat<S> build_matrix(const Ring& ring, const std::vector<std::vector<std::pair<Int, Int>>>& rows) {
  Index m = static_cast<Index>(rows.size());
  Index n = m > 0 ? static_cast<Index>(rows[0].size()) : 0;
  Mat<S> a = Mat<S>::Constant(m, n, S(0));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j)
      a(i, j) = ScalarTraits<S>::from_fraction(ring, rows[static_cast<size_t>(i)][static_cast<size_t>(j)].first,
                                               rows[static_cast<size_t>(i)][static_cast<size_t>(j)].second);
  return a;
}

template <class S>
Vec<S> build_combination(const Ring& ring, Index dim, const std::vector<CoeffTriple>& triples) {
  Vec<S> v = Vec<S>::Constant(dim, S(0));
  for (auto& [k, num, den] : triples) {
    if (k < 0 || k >= dim) throw std::invalid_argument("structure constant index out of range");
    v(k) += ScalarTraits<S>::from_fraction(ring, num, den);
  }
  return v;
}

template <class S>
InvolutiveAlgebra<S> build_algebra(const AlgebraDesc& d) {
  InvolutiveAlgebra<S> a;
  a.ring = d.ring;
  a.rank = d.dim;
  a.basis_labels = d.basis;
  a.unit = build_vector<S>(d.ring, d.unit);
  a.mul.resize(static_cast<size_t>(d.dim));
  for (Index i = 0; i < d.dim; ++i) {
    a.mul[static_cast<size_t>(i)].resize(static_cast<size_t>(d.dim));
    for (Index j = 0; j < d.dim; ++j)
      a.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          build_combination<S>(d.ring, d.dim, d.mul[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  a.sigma = build_matrix<S>(d.ring, d.involution);
  return a;
}

template <class S>
InvolutiveBimodule<S> build_bimodule(const AlgebraDesc& d, const BimoduleDesc& b) {
  InvolutiveBimodule<S> m;
  m.ring = d.ring;
  m.rank = b.dim;
  m.left.resize(static_cast<size_t>(d.dim));
  for (Index i = 0; i < d.dim; ++i) {
    m.left[static_cast<size_t>(i)].resize(static_cast<size_t>(b.dim));
    for (Index j = 0; j < b.dim; ++j)
      m.left[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          build_combination<S>(d.ring, b.dim, b.left[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  m.right.resize(static_cast<size_t>(b.dim));
  for (Index i = 0; i < b.dim; ++i) {
    m.right[static_cast<size_t>(i)].resize(static_cast<size_t>(d.dim));
    for (Index j = 0; j < d.dim; ++j)
      m.right[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          build_combination<S>(d.ring, b.dim, b.right[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  m.tau = build_matrix<S>(d.ring, b.involution);
  return m;
}

}  // namespace refhom

#endif  // REFHOM_IO_HPP
