#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "g235/abstract_lie.hpp"
#include "g235/homology.hpp"
#include "g235/parampoly.hpp"
#include "g235/prolong.hpp"

namespace g235 {

enum class ModelLabel { N7, N6, D6, D6b0, Flat };
const char* model_label_name(ModelLabel l);
ModelLabel parse_model_label(const std::string& s);

/// One named basis vector of f together with its filtration degree.
template <class R>
struct ModelBasisVec {
  std::string name;
  G2Vec<R> vec;
  int degree;
};

/// Bracket table entry: [names[i], names[j]] = sum coeff * names[k].
template <class R>
struct ModelTable {
  std::vector<std::string> names;
  // coeffs[i][j] maps k -> coefficient; antisymmetry handled by accessor.
  std::vector<std::vector<std::map<int, R>>> coeffs;

  int index(const std::string& n) const {
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == n) return static_cast<int>(k);
    fail(Err::UnknownLabel, "no model basis vector " + n);
  }
  std::map<int, R> entry(int i, int j) const {
    if (i == j) return {};
    if (i < j) return coeffs[i][j];
    auto e = coeffs[j][i];
    for (auto& [k, v] : e) v = -v;
    return e;
  }
};

template <class R>
struct AlgebraicModel {
  ModelLabel label = ModelLabel::Flat;
  std::string param_name;             // "c" or "a", empty if none
  R param{0};
  std::vector<ModelBasisVec<R>> basis;
  Cochain2<R> kappa;
  ModelTable<R> table;                // printed [.,.]_f table

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<int> f0_indices() const {
    std::vector<int> out;
    for (int k = 0; k < dim(); ++k)
      if (basis[k].degree == 0) out.push_back(k);
    return out;
  }
};

/// Builds a catalog model; param is c (N.7), a (D.6 / b=0), ignored otherwise.
template <class R>
AlgebraicModel<R> build_model(ModelLabel label, const R& param);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct ModelReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// (M1)-(M3) plus closure, Jacobi, f^0-invariance of kappa, kappa in E,
/// gr(f) in the prolongation of the harmonic part, and the double-entry
/// cross-check of the printed table against the bracket deficit.
template <class R>
ModelReport verify_model(const AlgebraicModel<R>& m);

/// Harmonic curvature as a binary quartic (A-block of the E-coefficients).
template <class R>
BinaryQuartic harmonic_curvature(const AlgebraicModel<R>& m);

/// Killing form determinant of the abstract f-table in the model basis.
template <class R>
R model_killing_det(const AlgebraicModel<R>& m) {
  const int n = m.dim();
  std::vector<Matrix<R>> ad(n, Matrix<R>(n, n));
  for (int u = 0; u < n; ++u)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, coef] : m.table.entry(u, j)) ad[u](k, j) = coef;
  Matrix<R> kform(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto prod = ad[i] * ad[j];
      R tr(0);
      for (int k = 0; k < n; ++k) tr += prod(k, k);
      kform(i, j) = tr;
      kform(j, i) = tr;
    }
  return ring_det(kform);
}

struct HolonomySubspace {
  std::vector<G2Element> basis;
  int steps = 0;       // recursion steps until stabilization
  bool bracket_closed = false;
  std::string type;    // "trivial", "heis5", "sl3C", "full", or "dim k"
  int dim() const { return static_cast<int>(basis.size()); }
};
HolonomySubspace holonomy(const AlgebraicModel<Scalar>& m);

/// dim of the joint kernel of the 7-dim representation over the holonomy basis.
int almost_einstein_dim(const HolonomySubspace& hol);

struct III6Report {
  ModelReport checks;
  std::string conclusion; // textual trace of the forced relations
};
/// Replicates the nonexistence computation for type III.6: closure forces
/// c = a = -3b and then c = 0.
III6Report replicate_iii6_obstruction();

/// Checks abstract images against a catalog model's bracket table at param a.
ModelReport check_abstract_images(const AbstractLie& L, ModelLabel label, const Scalar& a,
                                  const std::vector<std::vector<Scalar>>& images,
                                  const std::vector<std::string>& image_names);

enum class DictRow { N6, D6Generic, D6LambdaMinus1, D6ASquared4, E3 };
const char* dict_row_name(DictRow r);
/// Verifies one Lie-theoretic-to-Cartan-theoretic dictionary row; lambda is
/// used by the generic D6 row only.
ModelReport verify_dictionary(DictRow row, const Rat& lambda = Rat(2));

/// The one-parameter automorphism A_lambda and the involution At of g.
Matrix<Scalar> aut_A(const Scalar& lambda);
Matrix<Scalar> aut_At();
bool is_bracket_automorphism(const Matrix<Scalar>& A, std::string* witness = nullptr);

/// Constants relating the N.7 normal form to the classical coframing
/// (recorded as metadata, not machine-checked): a^4 = 1/6, I^2 = (3/2) c^2.
struct N7DictionaryConstants {
  Rat a_fourth = rat(1, 6);
  Rat I2_over_c2 = rat(3, 2);
};

} // namespace g235
