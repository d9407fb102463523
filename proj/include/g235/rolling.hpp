#pragma once

#include "g235/parampoly.hpp"
#include "g235/realform.hpp"

namespace g235 {

/// so(3) x so(3) with the rho-dependent (2,3,5)-filtration; basis order
/// (i1, j1, k1, i2, j2, k2) and adapted vectors v0..v5.
struct RollingAlgebra {
  Rat rho;
  AbstractLie alg;
  std::vector<std::vector<Scalar>> v; // v0..v5
  static const int kFiltDegree[6];    // (0, -1, -1, -2, -3, -3)

  explicit RollingAlgebra(const Rat& rho); // throws HolonomicRatio at rho = +-1

  /// Weak derived flag: brackets of <v0,v1,v2> add exactly v3, then v4, v5.
  bool verify_flag(std::string* witness = nullptr) const;
  bool jacobi_ok() const { return alg.jacobi_ok(); }
};

/// I(rho) = 4 (rho^2+1)^2 / ((rho+3)(rho-3)(rho+1/3)(rho-1/3)); throws
/// ExceptionalRatio on the pole set {3, 1/3, -3, -1/3} and HolonomicRatio at +-1.
Rat classifying_invariant(const Rat& rho);

struct EmbeddingSolution {
  Rat rho;
  bool exceptional = false;
  std::optional<Rat> a2;                 // absent in exceptional mode
  Scalar a;                              // the used parameter value
  std::vector<std::vector<Scalar>> images; // T, X1..X5 in the complexified algebra
  ModelReport checks;
};
enum class EmbeddingMode { Generic, Exceptional };
/// Solves the embedding of the complexified rolling algebra into the D.6_a
/// table (generic) or the kappa = 0 table at rho = 3 (exceptional), with
/// s1 = 1, and verifies every bracket relation exactly.
EmbeddingSolution solve_embedding(const Rat& rho, EmbeddingMode mode);

/// At rho = 3: composes the embedding with the kappa = 0 model to land in g,
/// and checks all 15 ambient brackets plus the real-form signature [0,6,0].
struct ExceptionalEmbedding {
  std::vector<G2Element> images; // images of v0..v5 in g
  ModelReport checks;
};
ExceptionalEmbedding exceptional_embedding_in_g2(const Scalar& a_choice);

struct RollingClassification {
  Rat a2;
  PsiLabel psi;
  bool exceptional = false;
  int symmetry_dim = 6;
};
RollingClassification classify_rolling(const Rat& rho); // rho > 1 rational

struct MonotonicityReport {
  bool decreasing = true;
  bool range_ok = true;
  std::string witness;
};
/// Strict decrease and range membership of I on samples within (1,3) u (3,oo).
MonotonicityReport invariant_monotonicity_check(const std::vector<Rat>& samples);

/// det(ad_T - lambda) as a polynomial in lambda; the roots are 0,0,1,1,-1,-1.
ParamPoly rolling_adT_charpoly(const Rat& rho);

} // namespace g235
