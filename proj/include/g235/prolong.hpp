#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g235/g2.hpp"

namespace g235 {

enum class RootType { O, N, III, D, II, I };
const char* root_type_name(RootType t);

/// Binary quartic in the abstract weight basis y^4, x y^3, x^2 y^2, x^3 y, x^4.
struct BinaryQuartic {
  std::array<Scalar, 5> q{};
  std::optional<RootType> tag;

  bool is_zero() const {
    for (const auto& c : q)
      if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const BinaryQuartic& o) const { return q == o.q; }
  /// True iff this is a nonzero multiple of o.
  bool proportional_to(const BinaryQuartic& o) const;
  std::string str() const;
};

/// Catalog normal forms: N: y^4, III: x y^3, D: x^2 y^2, II: x^2 y (x-y),
/// I: x y (x-y)(x-k y).
BinaryQuartic normal_form(RootType t, const Scalar& k = Scalar(0));

/// Action of x in g0 through (Z, h01, e01, f01) <-> (x dx + y dy, x dx - y dy,
/// x dy, y dx); throws NotInG0 for elements outside g0.
BinaryQuartic g0_action_on_quartic(const G2Element& x, const BinaryQuartic& phi);

/// Basis of ann(phi) = {x in g0 : x . phi = 0}.
std::vector<G2Element> annihilator(const BinaryQuartic& phi);

/// Extrinsic Tanaka prolongation a^phi = g_- + ann(phi) + a_1 + a_2 + a_3.
struct Prolongation {
  std::vector<G2Element> ann;        // degree 0 part
  std::array<std::vector<G2Element>, 3> positive; // a_1, a_2, a_3
  int total_dim() const {
    int d = 5 + static_cast<int>(ann.size());
    for (const auto& p : positive) d += static_cast<int>(p.size());
    return d;
  }
  bool rigid() const {
    for (const auto& p : positive)
      if (!p.empty()) return false;
    return true;
  }
  /// Membership of v (with grading degree deg) in the graded algebra.
  bool contains_graded(const G2Element& v, int deg) const;
};
Prolongation tanaka_prolong(const BinaryQuartic& phi); // throws ZeroQuartic

/// Harmonic A-coefficients (A1..A5) to quartic monomial coefficients
/// (A1, 4A2, 6A3, 4A4, A5) and back.
BinaryQuartic quartic_from_harmonic_coeffs(const std::array<Scalar, 5>& a);

} // namespace g235
