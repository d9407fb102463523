#include "g235/parabolic.hpp"

namespace g235 {

int coset_index(int b) {
  for (int k = 0; k < 5; ++k)
    if (kCoset[k] == b) return k;
  return -1;
}

int pplus_index(int b) {
  for (int k = 0; k < 5; ++k)
    if (kPPlus[k] == b) return k;
  return -1;
}

std::vector<int> graded_piece(int k) {
  std::vector<int> out;
  for (int b = 0; b < kDim; ++b)
    if (basis_degree(b) == k) out.push_back(b);
  return out;
}

std::vector<int> filtrand(int k) {
  std::vector<int> out;
  for (int b = 0; b < kDim; ++b)
    if (basis_degree(b) >= k) out.push_back(b);
  return out;
}

G2Element exp_ad(const G2Element& n, const G2Element& x) {
  G2Element acc = x;
  G2Element term = x;
  Rat factorial(1);
  for (int k = 1; k <= kDim; ++k) {
    term = bracket(n, term);
    if (vec_is_zero(term)) return acc;
    factorial *= k;
    acc = vec_add(acc, vec_scale(Scalar(Rat(1) / factorial), term));
  }
  fail(Err::NotNilpotent, "ad did not nilpotate within " + std::to_string(kDim) + " steps");
}

std::vector<WeightItem> weight_restricted(const std::vector<WeightItem>& module,
                                          std::pair<int, int> lambda) {
  std::vector<WeightItem> out;
  auto [ls, lt] = lambda;
  for (const auto& item : module) {
    auto [s, t] = item.weight;
    if (s == 0 && t == 0) continue;                 // nonzero multiples only
    if (s * lt != t * ls) continue;                 // not proportional
    out.push_back(item);
  }
  return out;
}

std::vector<WeightItem> deformation_module(SPerp preset) {
  std::vector<int> s_basis = {F10, F11, F21, F31, F32};
  std::vector<int> sperp = {Z1, E10, E11, E21, E31, E32};
  switch (preset) {
    case SPerp::TypeN7:
      s_basis.push_back(Z2);
      s_basis.push_back(F01);
      sperp.push_back(E01);
      break;
    case SPerp::TypeD6:
    case SPerp::TypeIII6:
      s_basis.push_back(Z1); // stands for the grading component of f^0 (T uses Z1, Z2)
      sperp.push_back(E01);
      sperp.push_back(F01);
      break;
  }
  // For the D/III cases f^0 is spanned by a Cartan combination; its dual has
  // weight 0 regardless of the representative, so keeping one Cartan label
  // as source is enough for the weight bookkeeping.
  std::vector<WeightItem> out;
  for (int src : s_basis) {
    auto [ss, st] = basis_weight(src);
    for (int tgt : sperp) {
      auto [ts, tt] = basis_weight(tgt);
      if (ts == 0 && tt == 0) continue; // zero-weight targets are normalized away
      if (basis_degree(tgt) <= basis_degree(src)) continue; // positive degree maps only
      WeightItem item;
      item.src = src;
      item.tgt = tgt;
      item.weight = {ts - ss, tt - st};
      std::string src_name = (src == Z1 && preset != SPerp::TypeN7) ? "T" : basis_name(src);
      item.name = src_name + "*(x)" + basis_name(tgt);
      out.push_back(item);
    }
  }
  return out;
}

bool verify_grading(std::string* witness) {
  const int want_dims[7] = {2, 1, 2, 4, 2, 1, 2};
  for (int k = -3; k <= 3; ++k)
    if (static_cast<int>(graded_piece(k).size()) != want_dims[k + 3]) {
      if (witness) *witness = "dim g_" + std::to_string(k) + " wrong";
      return false;
    }
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      auto v = bracket(basis_vec<Scalar>(a), basis_vec<Scalar>(b));
      int d = basis_degree(a) + basis_degree(b);
      for (int c = 0; c < kDim; ++c)
        if (!v[c].is_zero() && basis_degree(c) != d) {
          if (witness)
            *witness = std::string("[") + basis_name(a) + "," + basis_name(b) + "] leaves g_" +
                       std::to_string(d);
          return false;
        }
    }
  return true;
}

bool verify_filtration(std::string* witness) {
  if (filtrand(-3).size() != kDim || filtrand(0).size() != 9) {
    if (witness) *witness = "filtrand dimensions wrong";
    return false;
  }
  // [g^i, g^j] in g^{i+j} follows from the graded check; verify the boundary cases.
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j) {
      int lo = std::max(i + j, -3);
      for (int a : filtrand(i))
        for (int b : filtrand(j)) {
          auto v = bracket(basis_vec<Scalar>(a), basis_vec<Scalar>(b));
          if (filtration_degree(v) < lo) {
            if (witness) *witness = "filtration violated";
            return false;
          }
        }
    }
  return true;
}

bool verify_pairing_constants() {
  for (int k = 0; k < 5; ++k) {
    auto e = basis_vec<Scalar>(kPPlus[k]);
    for (int l = 0; l < 5; ++l) {
      Scalar want = (k == l) ? Scalar(kPairingConst[k]) : Scalar(0);
      if (killing_form(e, basis_vec<Scalar>(kCoset[l])) != want) return false;
    }
  }
  return true;
}

} // namespace g235
