#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g235/models.hpp"

namespace g235 {

enum class PsiFamily { Psi, PsiTilde, Tau };
/// zeta is one of 1, -1, i, -i encoded as 0..3 (i^k).
struct PsiLabel {
  PsiFamily family = PsiFamily::Psi;
  int zeta_power = 0; // zeta = i^zeta_power
  std::string str() const;
};
PsiLabel parse_psi_label(const std::string& s);

/// Conjugate-linear map of g given by basis images.
class AntiInvolution {
public:
  AntiInvolution(PsiLabel label);

  const PsiLabel& label() const { return label_; }
  /// psi(x) = sum conj(x_b) psi(basis b).
  G2Element apply(const G2Element& x) const;
  const G2Element& image(int b) const { return images_[b]; }

private:
  PsiLabel label_;
  std::array<G2Element, kDim> images_;
};

struct RealFormReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// psi^2 = id, anti-homomorphism property on all pairs, psi(p) = p, and when a
/// model is supplied: the reality condition on the parameter, psi(f) = f, and
/// preservation of kappa.
RealFormReport verify_anti_involution(const AntiInvolution& psi,
                                      const AlgebraicModel<Scalar>* m = nullptr);

/// Exact Killing signature [p, q, r] of a real Lie algebra given by a real
/// structure-constant table.
struct RealAlgebra {
  std::vector<std::string> names;
  std::vector<G2Element> basis;                       // vectors in g (complex coords)
  std::vector<std::vector<std::vector<Scalar>>> sc;   // real structure constants
};
std::array<int, 3> killing_signature(const RealAlgebra& alg);

/// Signature of an explicit real symmetric Scalar matrix (entries in the real
/// subfield) by congruence diagonalization.
std::array<int, 3> symmetric_signature(Matrix<Scalar> m);

/// Isomorphism tag for a 6-dimensional real form from its Killing signature.
std::string real_type_from_signature(const std::array<int, 3>& sig);
/// Tag for the 8-dimensional real holonomy algebras: [5,3,0] -> sl(3,R),
/// [4,4,0] -> su(1,2).
std::string real_hol_type_from_signature(const std::array<int, 3>& sig);

struct FixedAlgebraResult {
  RealAlgebra algebra;
  std::array<int, 3> signature{};
  std::string type;
};
/// The printed real basis of the fixed-point algebra f^psi, verified fixed and
/// bracket-closed over the real subfield.
FixedAlgebraResult fixed_point_algebra(const AntiInvolution& psi, const AlgebraicModel<Scalar>& m);

/// Real basis of g^psi (14-dimensional real form of g).
RealAlgebra g2_fixed_points(const AntiInvolution& psi);

struct RealClassEntry {
  PsiLabel psi;
  std::string type; // empty for the N families
};
/// Inequivalent anti-involutions per parameter range; D.6 entries carry the
/// fixed-algebra tag.  Throws RealityViolation if the parameter fails c^2 or
/// a^2 in R.
std::vector<RealClassEntry> classify_real_models(ModelLabel family, const Scalar& param);

struct So13Result {
  Rat a2;
  PsiLabel psi;
  RealFormReport checks;
};
enum class So13Case { HIsotropy, CIsotropy };
/// so(1,3)-symmetric models: a^2 = -9(al^2-1)^2 / ((al^2+4)(4 al^2+1)) and the
/// printed ansatz solution, verified by evaluating all model brackets.
So13Result so13_models(So13Case which, const Rat& alpha);

struct RealHolonomyResult {
  std::vector<G2Element> basis;
  std::array<int, 3> signature{};
  std::string type;
  RealFormReport checks;
};
/// Fixed points of psi on the complexified holonomy, with the printed bases.
RealHolonomyResult real_holonomy(const AntiInvolution& psi, const AlgebraicModel<Scalar>& m);

/// The conjugation identity A_i psi_zeta A_i^{-1} = psi_{-zeta} on all of g.
bool redundancy_map_identity(int zeta_power, std::string* witness = nullptr);

} // namespace g235
