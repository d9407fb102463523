#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "g235/linalg.hpp"
#include "g235/scalar.hpp"

namespace g235 {

// Canonical basis order of g = Lie(G2), fixed project-wide.
enum Basis : int {
  F32 = 0, F31, F21, F11, F10, F01, Z1, Z2, E01, E10, E11, E21, E31, E32,
};
inline constexpr int kDim = 14;

const char* basis_name(int b);
int basis_index(const std::string& name); // throws UnknownLabel

/// ad_Z1 eigenvalue of each basis vector (the |3|-grading).
int basis_degree(int b);
/// Weight as (s, t) coefficients of s*alpha1 + t*alpha2.
std::pair<int, int> basis_weight(int b);

template <class R>
using G2Vec = std::array<R, kDim>;

using G2Element = G2Vec<Scalar>;

/// Embedding of Q into the coefficient ring.
template <class R>
R ring_from_rat(const Rat& q) {
  if constexpr (std::is_same_v<R, Rat>)
    return q;
  else if constexpr (std::is_same_v<R, Scalar>)
    return Scalar(q);
  else
    return R(Scalar(q));
}

// Sparse structure constants: [basis_i, basis_j] = sum_k coeff * basis_k.
struct BracketTerm {
  int k;
  int coeff;
};
const std::vector<BracketTerm>& bracket_terms(int i, int j);

template <class R>
G2Vec<R> zero_vec() {
  G2Vec<R> v;
  v.fill(R(0));
  return v;
}

template <class R>
G2Vec<R> basis_vec(int b) {
  auto v = zero_vec<R>();
  v[b] = R(1);
  return v;
}

template <class R>
bool vec_is_zero(const G2Vec<R>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class R>
G2Vec<R> vec_add(const G2Vec<R>& a, const G2Vec<R>& b) {
  G2Vec<R> r = a;
  for (int k = 0; k < kDim; ++k) r[k] += b[k];
  return r;
}

template <class R>
G2Vec<R> vec_sub(const G2Vec<R>& a, const G2Vec<R>& b) {
  G2Vec<R> r = a;
  for (int k = 0; k < kDim; ++k) r[k] -= b[k];
  return r;
}

template <class R>
G2Vec<R> vec_scale(const R& c, const G2Vec<R>& a) {
  G2Vec<R> r;
  for (int k = 0; k < kDim; ++k) r[k] = c * a[k];
  return r;
}

template <class R>
G2Vec<R> vec_neg(const G2Vec<R>& a) {
  G2Vec<R> r;
  for (int k = 0; k < kDim; ++k) r[k] = -a[k];
  return r;
}

/// Lie bracket, bilinear extension of the structure-constant table.
template <class R>
G2Vec<R> bracket(const G2Vec<R>& x, const G2Vec<R>& y) {
  auto out = zero_vec<R>();
  for (int i = 0; i < kDim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < kDim; ++j) {
      if (y[j].is_zero()) continue;
      for (const auto& t : bracket_terms(i, j)) {
        R term = x[i] * y[j];
        if (t.coeff != 1) term = term * Rat(t.coeff);
        out[t.k] += term;
      }
    }
  }
  return out;
}

/// Killing form via the closed-form coefficient table (cross-checked against traces).
template <class R>
R killing_form(const G2Vec<R>& x, const G2Vec<R>& y) {
  // B(Z1,Z1)=48, B(Z1,Z2)=24, B(Z2,Z2)=16, B(e01,f01)=8,
  // B(e10,f10)=B(e11,f11)=B(e21,f21)=24, B(e31,f31)=B(e32,f32)=8.
  static const int pair_of[kDim] = {E32, E31, E21, E11, E10, E01, -1, -1, F01, F10, F11, F21, F31, F32};
  static const int coef_of[kDim] = {8, 8, 24, 24, 24, 8, 0, 0, 8, 24, 24, 24, 8, 8};
  R acc(0);
  acc += (x[Z1] * y[Z1]) * Rat(48);
  acc += (x[Z1] * y[Z2] + x[Z2] * y[Z1]) * Rat(24);
  acc += (x[Z2] * y[Z2]) * Rat(16);
  for (int b = 0; b < kDim; ++b) {
    if (b == Z1 || b == Z2) continue;
    acc += (x[b] * y[pair_of[b]]) * Rat(coef_of[b]);
  }
  return acc;
}

/// Killing form computed as tr(ad_x ad_y) - the independent route.
Scalar killing_form_trace(const G2Element& x, const G2Element& y);

/// Matrix of ad_x in the canonical basis (columns are [x, basis_j]).
template <class R>
Matrix<R> ad_matrix(const G2Vec<R>& x) {
  Matrix<R> m(kDim, kDim);
  for (int j = 0; j < kDim; ++j) {
    auto col = bracket(x, basis_vec<R>(j));
    for (int i = 0; i < kDim; ++i) m(i, j) = col[i];
  }
  return m;
}

std::string vec_str(const G2Element& v);

inline G2Element matrix_apply(const Matrix<Scalar>& m, const G2Element& v) {
  auto out = zero_vec<Scalar>();
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

/// Simple roots, positive roots, Cartan matrix and fundamental weights.
struct RootDatum {
  std::vector<std::pair<int, int>> positive_roots;        // (s,t) for s a1 + t a2
  std::array<std::array<int, 2>, 2> cartan;               // ((2,-1),(-3,2))
  std::array<std::pair<int, int>, 2> fundamental_weights; // in the alpha basis
  // <.,.> on h* in basis {a1,a2}: (1/24) * ((2,-3),(-3,6)).
  std::array<std::array<Rat, 2>, 2> hstar_pairing;

  static RootDatum standard();
  /// Computes <.,.> on h* from B|_h (inverse of the Gram matrix of {Z1,Z2}).
  static std::array<std::array<Rat, 2>, 2> pairing_from_killing();
};

/// Root of each root vector; throws for Cartan elements.
std::pair<int, int> root_of(int b);
/// Label of the root vector for (s,t), or -1.
int root_vector(int s, int t);

/// The 7-dimensional standard representation (sqrt(2) entries live in the
/// alpha^2 = 2 extension) together with its invariant tensors.
class Rep7 {
public:
  Rep7();

  const Matrix<Scalar>& matrix(int b) const { return rho_[b]; }
  Matrix<Scalar> apply(const G2Element& x) const;

  /// Symmetric invariant g as a 7x7 Gram matrix.
  const Matrix<Scalar>& metric() const { return g_; }
  /// Alternating 3-form Psi(ei,ej,ek); antisymmetric in all arguments.
  const Scalar& psi(int i, int j, int k) const;

  struct CheckReport {
    bool pass = true;
    int bracket_pairs = 0;
    int tensor_checks = 0;
    std::string witness;
  };
  /// rho([x,y]) = [rho(x),rho(y)] on all ordered basis pairs, and every basis
  /// vector annihilates g and Psi by derivation.
  CheckReport verify() const;

private:
  std::array<Matrix<Scalar>, kDim> rho_;
  Matrix<Scalar> g_;
  std::array<Scalar, 7 * 7 * 7> psi_;
};

struct CoreReport {
  bool jacobi_pass = true;
  int jacobi_triples = 0;
  bool killing_pass = true;
  int killing_pairs = 0;
  bool h_values_pass = true;
  bool hstar_pass = true;
  std::string witness;
};
/// Jacobi on all basis triples, trace-vs-closed-form Killing on all pairs,
/// h_st = [e_st, f_st] consistency, and the induced pairing on h*.
CoreReport verify_core_tables();

/// Root decomposition checks: [h, e_a] = a(h) e_a for h in {Z1, Z2}.
bool verify_root_decomposition(std::string* witness = nullptr);

} // namespace g235
