#include "g235/prolong.hpp"

#include <sstream>

#include "g235/linalg.hpp"
#include "g235/parabolic.hpp"

namespace g235 {

const char* root_type_name(RootType t) {
  switch (t) {
    case RootType::O: return "O";
    case RootType::N: return "N";
    case RootType::III: return "III";
    case RootType::D: return "D";
    case RootType::II: return "II";
    case RootType::I: return "I";
  }
  return "?";
}

bool BinaryQuartic::proportional_to(const BinaryQuartic& o) const {
  if (is_zero() || o.is_zero()) return false;
  int pivot = -1;
  for (int k = 0; k < 5; ++k)
    if (!o.q[k].is_zero()) {
      pivot = k;
      break;
    }
  if (q[pivot].is_zero()) return false;
  Scalar ratio = q[pivot] / o.q[pivot];
  for (int k = 0; k < 5; ++k)
    if (q[k] != ratio * o.q[k]) return false;
  return true;
}

std::string BinaryQuartic::str() const {
  static const char* mono[5] = {"y^4", "x*y^3", "x^2*y^2", "x^3*y", "x^4"};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 5; ++k) {
    if (q[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << q[k].str() << ")*" << mono[k];
  }
  return first ? "0" : os.str();
}

BinaryQuartic normal_form(RootType t, const Scalar& k) {
  BinaryQuartic phi;
  phi.tag = t;
  switch (t) {
    case RootType::O: break;
    case RootType::N: phi.q[0] = Scalar(1); break;
    case RootType::III: phi.q[1] = Scalar(1); break;
    case RootType::D: phi.q[2] = Scalar(1); break;
    case RootType::II: // x^2 y (x - y) = x^3 y - x^2 y^2
      phi.q[3] = Scalar(1);
      phi.q[2] = Scalar(-1);
      break;
    case RootType::I: // x y (x-y)(x-ky) = x^3 y - (k+1) x^2 y^2 + k x y^3
      phi.q[3] = Scalar(1);
      phi.q[2] = -(k + Scalar(1));
      phi.q[1] = k;
      break;
  }
  return phi;
}

BinaryQuartic g0_action_on_quartic(const G2Element& x, const BinaryQuartic& phi) {
  for (int b = 0; b < kDim; ++b)
    if (!x[b].is_zero() && b != Z1 && b != Z2 && b != E01 && b != F01)
      fail(Err::NotInG0, std::string("component along ") + basis_name(b));
  // Operator (a+b) x dx + a y dy + c x dy + d f01-lowering for x = a Z1 + b Z2 + c e01 + d f01.
  const Scalar& a = x[Z1];
  const Scalar& b = x[Z2];
  const Scalar& c = x[E01];
  const Scalar& d = x[F01];
  BinaryQuartic out;
  for (int i = 0; i < 5; ++i) { // monomial x^i y^{4-i}
    const Scalar& qi = phi.q[i];
    if (qi.is_zero()) continue;
    // x dx and y dy scale; Z1 <-> x dx + y dy, Z2 <-> x dx.
    out.q[i] += qi * (a * Scalar(4) + b * Scalar(i));
    if (i < 4) out.q[i + 1] += qi * c * Scalar(4 - i); // x dy
    if (i > 0) out.q[i - 1] += qi * d * Scalar(i);     // y dx
  }
  return out;
}

namespace {

const int kG0[4] = {Z1, Z2, E01, F01};

Matrix<Scalar> action_matrix(const BinaryQuartic& phi) {
  Matrix<Scalar> m(5, 4);
  for (int c = 0; c < 4; ++c) {
    auto img = g0_action_on_quartic(basis_vec<Scalar>(kG0[c]), phi);
    for (int r = 0; r < 5; ++r) m(r, c) = img.q[r];
  }
  return m;
}

} // namespace

std::vector<G2Element> annihilator(const BinaryQuartic& phi) {
  auto ker = action_matrix(phi).kernel();
  std::vector<G2Element> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    auto v = zero_vec<Scalar>();
    for (int r = 0; r < 4; ++r) v[kG0[r]] = ker(r, c);
    out.push_back(v);
  }
  return out;
}

bool Prolongation::contains_graded(const G2Element& v, int deg) const {
  if (deg < 0) return true; // all of g_- belongs
  const std::vector<G2Element>* piece = nullptr;
  if (deg == 0)
    piece = &ann;
  else if (deg <= 3)
    piece = &positive[deg - 1];
  else
    return false;
  auto labels = graded_piece(deg);
  Matrix<Scalar> m(labels.size(), piece->size() + 1);
  for (std::size_t c = 0; c < piece->size(); ++c)
    for (std::size_t r = 0; r < labels.size(); ++r) m(r, c) = (*piece)[c][labels[r]];
  for (std::size_t r = 0; r < labels.size(); ++r) m(r, piece->size()) = v[labels[r]];
  return m.rank() == m.cols() - 1 || vec_is_zero(v);
}

Prolongation tanaka_prolong(const BinaryQuartic& phi) {
  if (phi.is_zero()) fail(Err::ZeroQuartic, "prolongation needs a nonzero quartic");
  Prolongation p;
  p.ann = annihilator(phi);

  // a_k = {x in g_k : [x, g_{-1}] in a_{k-1}} computed as an exact kernel.
  std::vector<G2Element> prev = p.ann;
  int prev_deg = 0;
  for (int k = 1; k <= 3; ++k) {
    auto gk = graded_piece(k);
    auto target_labels = graded_piece(prev_deg);
    // Residual map: coordinates of [x, f] modulo span(prev).
    Span<Scalar> prev_span(kDim);
    for (const auto& v : prev) prev_span.add(std::vector<Scalar>(v.begin(), v.end()));
    std::vector<std::vector<Scalar>> constraints; // rows over gk coordinates
    const int lowers[2] = {F10, F11};
    Matrix<Scalar> m(2 * kDim, gk.size());
    for (std::size_t c = 0; c < gk.size(); ++c) {
      for (int l = 0; l < 2; ++l) {
        auto img = bracket(basis_vec<Scalar>(gk[c]), basis_vec<Scalar>(lowers[l]));
        auto res = prev_span.residual(std::vector<Scalar>(img.begin(), img.end()));
        for (int r = 0; r < kDim; ++r) m(l * kDim + r, c) = res[r];
      }
    }
    auto ker = m.kernel();
    std::vector<G2Element> cur;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      auto v = zero_vec<Scalar>();
      for (std::size_t r = 0; r < gk.size(); ++r) v[gk[r]] = ker(r, c);
      cur.push_back(v);
    }
    p.positive[k - 1] = cur;
    prev = cur;
    prev_deg = k;
    (void)target_labels;
    (void)constraints;
  }
  return p;
}

BinaryQuartic quartic_from_harmonic_coeffs(const std::array<Scalar, 5>& a) {
  BinaryQuartic q;
  const long factor[5] = {1, 4, 6, 4, 1};
  for (int k = 0; k < 5; ++k) q.q[k] = a[k] * Scalar(factor[k]);
  return q;
}

} // namespace g235
