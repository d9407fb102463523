#pragma once

#include <array>
#include <string>
#include <vector>

#include "g235/parabolic.hpp"

namespace g235 {

// Unordered index pairs (i<j) and triples (i<j<k) over the five coset / p+ slots.
inline constexpr int kNumPairs = 10;
inline constexpr int kNumTriples = 10;
int pair_index(int i, int j);             // i != j in 0..4; sign handled by caller
std::pair<int, int> pair_at(int idx);
int triple_index(int i, int j, int k);
std::array<int, 3> triple_at(int idx);

/// Element of Lambda^2 p+ (x) g: value(i,j) with i<j over the p+ slots.
template <class R>
struct Chain2 {
  std::array<G2Vec<R>, kNumPairs> v{};
  Chain2() { for (auto& x : v) x = zero_vec<R>(); }
  G2Vec<R> value(int i, int j) const {
    if (i == j) return zero_vec<R>();
    return i < j ? v[pair_index(i, j)] : vec_neg(v[pair_index(j, i)]);
  }
  void add(int i, int j, const G2Vec<R>& val) {
    if (i == j) return;
    if (i < j)
      v[pair_index(i, j)] = vec_add(v[pair_index(i, j)], val);
    else
      v[pair_index(j, i)] = vec_sub(v[pair_index(j, i)], val);
  }
  bool is_zero() const {
    for (const auto& x : v)
      if (!vec_is_zero(x)) return false;
    return true;
  }
};

/// Element of Lambda^2 (g/p)^* (x) g: value(i,j) over the coset slots.
template <class R>
struct Cochain2 {
  std::array<G2Vec<R>, kNumPairs> v{};
  Cochain2() { for (auto& x : v) x = zero_vec<R>(); }
  G2Vec<R> value(int i, int j) const {
    if (i == j) return zero_vec<R>();
    return i < j ? v[pair_index(i, j)] : vec_neg(v[pair_index(j, i)]);
  }
  void add(int i, int j, const G2Vec<R>& val) {
    if (i == j) return;
    if (i < j)
      v[pair_index(i, j)] = vec_add(v[pair_index(i, j)], val);
    else
      v[pair_index(j, i)] = vec_sub(v[pair_index(j, i)], val);
  }
  bool is_zero() const {
    for (const auto& x : v)
      if (!vec_is_zero(x)) return false;
    return true;
  }
  /// Evaluate on two ambient vectors through their coset coordinates.
  G2Vec<R> eval(const G2Vec<R>& x, const G2Vec<R>& y) const;
};

template <class R>
using Chain1 = std::array<G2Vec<R>, 5>;
template <class R>
using Chain3 = std::array<G2Vec<R>, kNumTriples>;
template <class R>
using Cochain1 = std::array<G2Vec<R>, 5>;
template <class R>
using Cochain3 = std::array<G2Vec<R>, kNumTriples>;

template <class R>
G2Vec<R> cochain_eval_impl(const Cochain2<R>& c, const G2Vec<R>& x, const G2Vec<R>& y) {
  auto out = zero_vec<R>();
  for (int i = 0; i < 5; ++i) {
    const R& xi = x[kCoset[i]];
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      const R& yj = y[kCoset[j]];
      if (xi.is_zero() || yj.is_zero()) continue;
      auto val = c.value(i, j);
      for (int b = 0; b < kDim; ++b)
        if (!val[b].is_zero()) out[b] += xi * yj * val[b];
    }
  }
  return out;
}

template <class R>
G2Vec<R> Cochain2<R>::eval(const G2Vec<R>& x, const G2Vec<R>& y) const {
  return cochain_eval_impl(*this, x, y);
}

// Chain <-> cochain conversion through the Killing pairing constants.
template <class R>
Cochain2<R> chain_to_cochain(const Chain2<R>& c) {
  Cochain2<R> out;
  for (int idx = 0; idx < kNumPairs; ++idx) {
    auto [i, j] = pair_at(idx);
    Rat f = Rat(kPairingConst[i]);
    f *= kPairingConst[j];
    out.v[idx] = vec_scale(ring_from_rat<R>(f), c.v[idx]);
  }
  return out;
}

template <class R>
Chain2<R> cochain_to_chain(const Cochain2<R>& c) {
  Chain2<R> out;
  for (int idx = 0; idx < kNumPairs; ++idx) {
    auto [i, j] = pair_at(idx);
    Rat f(1);
    f /= kPairingConst[i];
    f /= kPairingConst[j];
    out.v[idx] = vec_scale(ring_from_rat<R>(f), c.v[idx]);
  }
  return out;
}

/// Homology differential on decomposables:
/// d*(X^Y (x) v) = -Y (x) [X,v] + X (x) [Y,v] - [X,Y] (x) v.
template <class R>
Chain1<R> partial_star(const Chain2<R>& c) {
  Chain1<R> out;
  for (auto& x : out) x = zero_vec<R>();
  for (int idx = 0; idx < kNumPairs; ++idx) {
    auto [i, j] = pair_at(idx);
    const auto& val = c.v[idx];
    if (vec_is_zero(val)) continue;
    auto ei = basis_vec<R>(kPPlus[i]);
    auto ej = basis_vec<R>(kPPlus[j]);
    out[j] = vec_sub(out[j], bracket(ei, val));
    out[i] = vec_add(out[i], bracket(ej, val));
    auto br = bracket(ei, ej); // stays in p+
    for (int k = 0; k < 5; ++k) {
      const R& coef = br[kPPlus[k]];
      if (!coef.is_zero()) out[k] = vec_sub(out[k], vec_scale(coef, val));
    }
  }
  return out;
}

template <class R>
Chain2<R> partial_star3(const Chain3<R>& c) {
  Chain2<R> out;
  for (int idx = 0; idx < kNumTriples; ++idx) {
    auto [i, j, k] = triple_at(idx);
    const auto& val = c[idx];
    if (vec_is_zero(val)) continue;
    auto ei = basis_vec<R>(kPPlus[i]);
    auto ej = basis_vec<R>(kPPlus[j]);
    auto ek = basis_vec<R>(kPPlus[k]);
    out.add(j, k, vec_neg(bracket(ei, val)));
    out.add(i, k, bracket(ej, val));
    out.add(i, j, vec_neg(bracket(ek, val)));
    auto put_wedge = [&](const G2Vec<R>& br, int rest, int sgn) {
      for (int m = 0; m < 5; ++m) {
        const R& coef = br[kPPlus[m]];
        if (coef.is_zero()) continue;
        auto t = vec_scale(coef, val);
        out.add(m, rest, sgn > 0 ? t : vec_neg(t));
      }
    };
    put_wedge(bracket(ei, ej), k, -1);
    put_wedge(bracket(ei, ek), j, +1);
    put_wedge(bracket(ej, ek), i, -1);
  }
  return out;
}

template <class R>
G2Vec<R> partial_star1(const Chain1<R>& c) {
  auto out = zero_vec<R>();
  for (int i = 0; i < 5; ++i)
    out = vec_sub(out, bracket(basis_vec<R>(kPPlus[i]), c[i]));
  return out;
}

/// Cohomology differential on C^k(g_-, g), arguments restricted to g_-.
template <class R>
Cochain1<R> partial0(const G2Vec<R>& v) {
  Cochain1<R> out;
  for (int i = 0; i < 5; ++i) out[i] = bracket(basis_vec<R>(kCoset[i]), v);
  return out;
}

template <class R>
Cochain2<R> partial1(const Cochain1<R>& c) {
  Cochain2<R> out;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      auto fi = basis_vec<R>(kCoset[i]);
      auto fj = basis_vec<R>(kCoset[j]);
      auto term = vec_sub(bracket(fi, c[j]), bracket(fj, c[i]));
      auto br = bracket(fi, fj); // stays in g_-
      for (int m = 0; m < 5; ++m) {
        const R& coef = br[kCoset[m]];
        if (!coef.is_zero()) term = vec_sub(term, vec_scale(coef, c[m]));
      }
      out.add(i, j, term);
    }
  return out;
}

template <class R>
Cochain3<R> partial2(const Cochain2<R>& c) {
  Cochain3<R> out;
  for (auto& x : out) x = zero_vec<R>();
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) {
        auto fi = basis_vec<R>(kCoset[i]);
        auto fj = basis_vec<R>(kCoset[j]);
        auto fk = basis_vec<R>(kCoset[k]);
        auto term = bracket(fi, c.value(j, k));
        term = vec_sub(term, bracket(fj, c.value(i, k)));
        term = vec_add(term, bracket(fk, c.value(i, j)));
        auto insert = [&](const G2Vec<R>& br, int rest, int sgn) {
          for (int m = 0; m < 5; ++m) {
            const R& coef = br[kCoset[m]];
            if (coef.is_zero()) continue;
            auto t = vec_scale(coef, c.value(m, rest));
            term = (sgn > 0) ? vec_add(term, t) : vec_sub(term, t);
          }
        };
        insert(bracket(fi, fj), k, -1);
        insert(bracket(fi, fk), j, +1);
        insert(bracket(fj, fk), i, -1);
        out[triple_index(i, j, k)] = term;
      }
  return out;
}

/// p-action on 2-chains: bracket in each p+ slot and on the value.
template <class R>
Chain2<R> chain_action(const G2Vec<R>& x, const Chain2<R>& c) {
  for (int b = 0; b < kDim; ++b)
    if (!x[b].is_zero() && basis_degree(b) < 0)
      fail(Err::StructureViolation, "chain action needs x in p");
  Chain2<R> out;
  for (int idx = 0; idx < kNumPairs; ++idx) {
    auto [i, j] = pair_at(idx);
    const auto& val = c.v[idx];
    if (vec_is_zero(val)) continue;
    auto xi = bracket(x, basis_vec<R>(kPPlus[i]));
    auto xj = bracket(x, basis_vec<R>(kPPlus[j]));
    for (int m = 0; m < 5; ++m) {
      const R& ci = xi[kPPlus[m]];
      if (!ci.is_zero()) out.add(m, j, vec_scale(ci, val));
      const R& cj = xj[kPPlus[m]];
      if (!cj.is_zero()) out.add(i, m, vec_scale(cj, val));
    }
    out.add(i, j, bracket(x, val));
  }
  return out;
}

/// p-action on 2-cochains (the Lambda^2(g/p)^* (x) g picture).
template <class R>
Cochain2<R> cochain_action(const G2Vec<R>& z, const Cochain2<R>& c) {
  // (z.k)(x,y) = [z, k(x,y)] - k(pr[z,x], y) - k(x, pr[z,y]) with pr the coset projection.
  Cochain2<R> out;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      auto term = bracket(z, c.value(i, j));
      auto zi = bracket(z, basis_vec<R>(kCoset[i]));
      auto zj = bracket(z, basis_vec<R>(kCoset[j]));
      for (int k = 0; k < 5; ++k) {
        const R& ci = zi[kCoset[k]];
        if (!ci.is_zero()) term = vec_sub(term, vec_scale(ci, c.value(k, j)));
        const R& cj = zj[kCoset[k]];
        if (!cj.is_zero()) term = vec_sub(term, vec_scale(cj, c.value(i, k)));
      }
      out.add(i, j, term);
    }
  return out;
}

// Flattened coordinates (pair-major, then the 14 basis coordinates).
inline constexpr int kC2Dim = kNumPairs * kDim; // 140
std::vector<Rat> flatten(const Chain2<Rat>& c);
Chain2<Rat> unflatten_chain2(const std::vector<Rat>& v);
std::vector<Rat> flatten_cochain(const Cochain2<Rat>& c);
Cochain2<Rat> unflatten_cochain2(const std::vector<Rat>& v);

template <class R>
std::vector<R> flatten_cochain_r(const Cochain2<R>& c) {
  std::vector<R> out;
  out.reserve(kC2Dim);
  for (int idx = 0; idx < kNumPairs; ++idx)
    for (int b = 0; b < kDim; ++b) out.push_back(c.v[idx][b]);
  return out;
}

/// Z1-homogeneity decomposition of a cochain: degree of f_i*^f_j* (x) v term is
/// deg(v) - deg(f_i) - deg(f_j).
template <class R>
bool cochain_homogeneity_range(const Cochain2<R>& c, int* min_hom, int* max_hom) {
  bool any = false;
  int lo = 100, hi = -100;
  for (int idx = 0; idx < kNumPairs; ++idx) {
    auto [i, j] = pair_at(idx);
    for (int b = 0; b < kDim; ++b) {
      if (c.v[idx][b].is_zero()) continue;
      int h = basis_degree(b) - basis_degree(kCoset[i]) - basis_degree(kCoset[j]);
      lo = std::min(lo, h);
      hi = std::max(hi, h);
      any = true;
    }
  }
  if (min_hom) *min_hom = any ? lo : 0;
  if (max_hom) *max_hom = any ? hi : 0;
  return any;
}

struct HodgeData {
  Matrix<Rat> d1;       // C^1 -> C^2   (70 -> 140)
  Matrix<Rat> d2;       // C^2 -> C^3   (140 -> 140)
  Matrix<Rat> dstar2;   // C^2 -> C^1   (140 -> 70), chain d* transported
  Matrix<Rat> dstar3;   // C^3 -> C^2   (140 -> 140)
  Matrix<Rat> box;      // Laplacian on C^2
  Matrix<Rat> box1;     // Laplacian on C^1
  std::size_t dim_im_d = 0, dim_ker_box = 0, dim_im_dstar = 0;
  Matrix<Rat> harmonic_basis;  // columns: basis of ker box (dim 5)
  Matrix<Rat> im_d_basis;
  Matrix<Rat> im_dstar_basis;
  Matrix<Rat> decomp;           // [harmonic | im_d | im_dstar], invertible
  Matrix<Rat> decomp_inv;
};
const HodgeData& hodge();

/// Harmonic (ker box) component of a 2-cochain in the Hodge decomposition.
Cochain2<Scalar> harmonic_projection(const Cochain2<Scalar>& c);

// The 24-dimensional curvature module.
enum class EComp { A, B, C, D, Dt, E, Et, Ft };
struct ECompInfo {
  EComp comp;
  const char* label;
  int homogeneity;
  int dim;
};
inline constexpr int kEDim = 24;

struct CurvatureModule {
  /// Coefficient basis in structure-equation normalization, as cochains,
  /// ordered A1..A5, B1..B4, C1..C3, D1, D2, E, Dt1..Dt4, Et1..Et3, Ft1, Ft2.
  std::array<Cochain2<Rat>, kEDim> coeff_cochains;
  std::array<Chain2<Rat>, kEDim> coeff_chains;
  std::array<std::string, kEDim> names;
  std::array<int, kEDim> homogeneity;
  std::array<std::pair<int, int>, kEDim> weights;
  std::array<ECompInfo, 8> components;
  Matrix<Rat> chain_matrix;   // 140 x 24 (flattened chains)
  Matrix<Rat> projector;      // 24 x 140 left inverse
};
const CurvatureModule& curvature_module();

/// Span{phi0} closed under the p-action; returns the chain basis found
/// (dimension should come out 24).
std::vector<Chain2<Rat>> generate_curvature_module();

/// phi0 = e10 ^ e31 (x) f01.
Chain2<Rat> phi0_chain();

/// Weight vectors printed for the module, grouped per component (chains).
std::vector<std::pair<std::string, Chain2<Rat>>> printed_weight_vectors();

/// Coordinates of a cochain in the coefficient basis; throws NotInE if the
/// cochain is outside the module.
template <class R>
std::array<R, kEDim> curvature_coefficients(const Cochain2<R>& c) {
  const auto& cm = curvature_module();
  auto chain = cochain_to_chain(c);
  std::vector<R> flat;
  flat.reserve(kC2Dim);
  for (int idx = 0; idx < kNumPairs; ++idx)
    for (int b = 0; b < kDim; ++b) flat.push_back(chain.v[idx][b]);
  std::array<R, kEDim> coords;
  for (int r = 0; r < kEDim; ++r) {
    R acc(0);
    for (int c2 = 0; c2 < kC2Dim; ++c2) {
      const Rat& p = cm.projector(r, c2);
      if (!p.is_zero() && !flat[c2].is_zero()) acc += flat[c2] * p;
    }
    coords[r] = acc;
  }
  // Membership: reconstruct and compare.
  for (int c2 = 0; c2 < kC2Dim; ++c2) {
    R recon(0);
    for (int r = 0; r < kEDim; ++r) {
      const Rat& m = cm.chain_matrix(c2, r);
      if (!m.is_zero() && !coords[r].is_zero()) recon += coords[r] * m;
    }
    if (!(recon == flat[c2])) fail(Err::NotInE, "cochain lies outside the curvature module");
  }
  return coords;
}

/// Action matrix of X in p on the curvature module, coefficient basis; the
/// vertical variation of the coefficient functions is A |-> -M A.
Matrix<Rat> vertical_variation(const G2Element& x);

/// Binary quartic F and ternary quartic G coefficient tuples of kappa in E.
struct Covariants {
  std::array<Scalar, 5> F;  // A1..A5
  std::array<Scalar, 15> G; // A1..A5, B1..B4, C1..C3, D1, D2, E
};
Covariants quartic_covariants(const Cochain2<Scalar>& kappa);

} // namespace g235
