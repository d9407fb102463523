#pragma once

#include <string>
#include <vector>

#include "g235/g2.hpp"

namespace g235 {

// Coset basis of g/p and basis of p+, in the fixed dual order.
inline constexpr int kCoset[5] = {F10, F11, F21, F31, F32};
inline constexpr int kPPlus[5] = {E10, E11, E21, E31, E32};
/// Killing pairing constants: e_st <-> c * f_st^*.
inline constexpr int kPairingConst[5] = {24, 24, 24, 8, 8};
inline constexpr int kParabolic[9] = {F01, Z1, Z2, E01, E10, E11, E21, E31, E32};

int coset_index(int b);  // -1 if b is not a coset label
int pplus_index(int b);

/// Labels of the graded piece g_k, k in [-3,3].
std::vector<int> graded_piece(int k);
/// Labels of the filtrand g^k.
std::vector<int> filtrand(int k);

/// g_k-component of x; requires x in g^k (throws NotInFiltrand).
template <class R>
G2Vec<R> leading_part(const G2Vec<R>& x, int k) {
  for (int b = 0; b < kDim; ++b)
    if (!x[b].is_zero() && basis_degree(b) < k)
      fail(Err::NotInFiltrand, std::string("component ") + basis_name(b) + " has degree < " +
                                   std::to_string(k));
  auto out = zero_vec<R>();
  for (int b = 0; b < kDim; ++b)
    if (basis_degree(b) == k) out[b] = x[b];
  return out;
}

/// Lowest filtration degree d with x in g^d (3 for x = 0).
template <class R>
int filtration_degree(const G2Vec<R>& x) {
  int d = 3;
  for (int b = 0; b < kDim; ++b)
    if (!x[b].is_zero() && basis_degree(b) < d) d = basis_degree(b);
  return d;
}

/// exp(ad_n) applied to x as a finite exact series; throws NotNilpotent if
/// ad_n fails to nilpotate within kDim steps.
G2Element exp_ad(const G2Element& n, const G2Element& x);

struct WeightItem {
  std::string name;
  std::pair<int, int> weight; // s*alpha1 + t*alpha2
  int src = -1, tgt = -1;     // for Hom-type modules
};

/// Elements whose weight is a nonzero multiple of lambda.
std::vector<WeightItem> weight_restricted(const std::vector<WeightItem>& module,
                                          std::pair<int, int> lambda);

/// Graded complements s-perp used by the classification arguments, stored per case.
enum class SPerp { TypeN7, TypeD6, TypeIII6 };

/// Candidate deformation components src^* (x) tgt for s -> s-perp maps of
/// positive degree with nonzero target weight.
std::vector<WeightItem> deformation_module(SPerp preset);

/// Grading consistency: dims (2,1,2,4,2,1,2) and [g_i,g_j] in g_{i+j}.
bool verify_grading(std::string* witness = nullptr);
/// Filtration consistency: g^0 = p of dim 9 and [g^i,g^j] in g^{i+j}.
bool verify_filtration(std::string* witness = nullptr);
/// Pairing constants against killing_form values.
bool verify_pairing_constants();

} // namespace g235
