#include "g235/realform.hpp"

#include <sstream>

namespace g235 {

namespace {

Scalar zeta_of(int power) {
  switch (((power % 4) + 4) % 4) {
    case 0: return Scalar(1);
    case 1: return Scalar::i();
    case 2: return Scalar(-1);
    default: return -Scalar::i();
  }
}

bool is_real_nonneg(const Scalar& s) {
  return s.is_real() && (!s.ext() || true) && s.real_sign() >= 0;
}

bool is_i_real_nonneg(const Scalar& s) {
  Scalar t = s * (-Scalar::i());
  return t.is_real() && t.real_sign() >= 0;
}

} // namespace

std::string PsiLabel::str() const {
  static const char* z[4] = {"1", "i", "-1", "-i"};
  std::string base;
  switch (family) {
    case PsiFamily::Psi: base = "psi_"; break;
    case PsiFamily::PsiTilde: base = "tilde_"; break;
    case PsiFamily::Tau: base = "tau_"; break;
  }
  return base + z[((zeta_power % 4) + 4) % 4];
}

PsiLabel parse_psi_label(const std::string& s) {
  PsiLabel l;
  std::string rest;
  if (s.rfind("psi_", 0) == 0) {
    l.family = PsiFamily::Psi;
    rest = s.substr(4);
  } else if (s.rfind("tilde_", 0) == 0) {
    l.family = PsiFamily::PsiTilde;
    rest = s.substr(6);
  } else if (s.rfind("tau_", 0) == 0) {
    l.family = PsiFamily::Tau;
    rest = s.substr(4);
  } else {
    fail(Err::UnknownLabel, "unknown anti-involution '" + s + "'");
  }
  if (rest == "1") l.zeta_power = 0;
  else if (rest == "i") l.zeta_power = 1;
  else if (rest == "-1") l.zeta_power = 2;
  else if (rest == "-i") l.zeta_power = 3;
  else fail(Err::UnknownLabel, "unknown zeta in '" + s + "'");
  return l;
}

AntiInvolution::AntiInvolution(PsiLabel label) : label_(label) {
  Scalar z = zeta_of(label.zeta_power);
  Scalar zi = z.inverse();
  Scalar z2 = z * z, z3 = z2 * z;
  Scalar zi2 = zi * zi, zi3 = zi2 * zi;
  for (auto& v : images_) v = zero_vec<Scalar>();
  auto set = [&](int from, int to, const Scalar& c) { images_[from][to] += c; };
  switch (label.family) {
    case PsiFamily::Psi:
      set(F32, F32, z3); set(F31, F31, z3); set(F21, F21, z2);
      set(F11, F11, z); set(F10, F10, z); set(F01, F01, Scalar(1));
      set(Z1, Z1, Scalar(1)); set(Z2, Z2, Scalar(1)); set(E01, E01, Scalar(1));
      set(E10, E10, zi); set(E11, E11, zi); set(E21, E21, zi2);
      set(E31, E31, zi3); set(E32, E32, zi3);
      break;
    case PsiFamily::PsiTilde:
      set(F32, F31, z3); set(F31, F32, z3); set(F21, F21, -z2);
      set(F11, F10, z); set(F10, F11, z); set(F01, E01, Scalar(1));
      set(Z1, Z1, Scalar(1)); set(Z2, Z1, Scalar(1)); set(Z2, Z2, Scalar(-1));
      set(E01, F01, Scalar(1));
      set(E10, E11, zi); set(E11, E10, zi); set(E21, E21, -zi2);
      set(E31, E32, zi3); set(E32, E31, zi3);
      break;
    case PsiFamily::Tau:
      set(F32, F32, z); set(F31, F31, Scalar(1)); set(F21, F21, z);
      set(F11, F11, Scalar(1)); set(F10, F10, z); set(F01, F01, z);
      set(Z1, Z1, Scalar(1)); set(Z2, Z2, Scalar(1));
      set(E01, E01, z); set(E10, E10, z); set(E11, E11, Scalar(1));
      set(E21, E21, z); set(E31, E31, Scalar(1)); set(E32, E32, z);
      break;
  }
}

G2Element AntiInvolution::apply(const G2Element& x) const {
  auto out = zero_vec<Scalar>();
  for (int b = 0; b < kDim; ++b) {
    if (x[b].is_zero()) continue;
    Scalar c = x[b].conj();
    for (int k = 0; k < kDim; ++k)
      if (!images_[b][k].is_zero()) out[k] += c * images_[b][k];
  }
  return out;
}

RealFormReport verify_anti_involution(const AntiInvolution& psi, const AlgebraicModel<Scalar>* m) {
  RealFormReport rep;
  {
    CheckResult c{"involution"};
    for (int b = 0; b < kDim; ++b) {
      auto twice = psi.apply(psi.apply(basis_vec<Scalar>(b)));
      if (!vec_is_zero(vec_sub(twice, basis_vec<Scalar>(b)))) {
        c.pass = false;
        c.witness = std::string("psi^2 != id at ") + basis_name(b);
      }
    }
    rep.checks.push_back(c);
  }
  {
    CheckResult c{"anti_homomorphism"};
    int count = 0;
    for (int a = 0; a < kDim && c.pass; ++a)
      for (int b = 0; b < kDim; ++b) {
        ++count;
        auto lhs = psi.apply(bracket(basis_vec<Scalar>(a), basis_vec<Scalar>(b)));
        auto rhs = bracket(psi.apply(basis_vec<Scalar>(a)), psi.apply(basis_vec<Scalar>(b)));
        if (!vec_is_zero(vec_sub(lhs, rhs))) {
          c.pass = false;
          c.witness = std::string("fails on (") + basis_name(a) + "," + basis_name(b) + ")";
          break;
        }
      }
    c.witness = c.pass ? std::to_string(count) + " pairs" : c.witness;
    rep.checks.push_back(c);
  }
  {
    CheckResult c{"preserves_p"};
    for (int b : kParabolic) {
      auto img = psi.apply(basis_vec<Scalar>(b));
      for (int k = 0; k < 5; ++k)
        if (!img[kCoset[k]].is_zero()) {
          c.pass = false;
          c.witness = std::string("psi(") + basis_name(b) + ") leaves p";
        }
    }
    rep.checks.push_back(c);
  }
  if (m) {
    Scalar p2 = m->param * m->param;
    if (!p2.is_real())
      fail(Err::RealityViolation, "parameter squared is not real: " + p2.str());
    {
      CheckResult c{"preserves_f"};
      const int n = m->dim();
      Matrix<Scalar> basis_mat(kDim, n);
      for (int col = 0; col < n; ++col)
        for (int b = 0; b < kDim; ++b) basis_mat(b, col) = m->basis[col].vec[b];
      for (int col = 0; col < n && c.pass; ++col) {
        auto img = psi.apply(m->basis[col].vec);
        std::vector<Scalar> x;
        if (!basis_mat.solve(std::vector<Scalar>(img.begin(), img.end()), x)) {
          c.pass = false;
          c.witness = "psi(" + m->basis[col].name + ") is outside f";
        }
      }
      rep.checks.push_back(c);
    }
    {
      CheckResult c{"preserves_kappa"};
      for (int i = 0; i < 5 && c.pass; ++i)
        for (int j = i + 1; j < 5; ++j) {
          auto lhs = psi.apply(m->kappa.value(i, j));
          auto rhs = m->kappa.eval(psi.apply(basis_vec<Scalar>(kCoset[i])),
                                   psi.apply(basis_vec<Scalar>(kCoset[j])));
          if (!vec_is_zero(vec_sub(lhs, rhs))) {
            c.pass = false;
            c.witness = "kappa not preserved on (" + std::string(basis_name(kCoset[i])) + "," +
                        basis_name(kCoset[j]) + ")";
            break;
          }
        }
      rep.checks.push_back(c);
    }
  }
  return rep;
}

std::array<int, 3> symmetric_signature(Matrix<Scalar> m) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_real()) fail(Err::NotRealMatrix, "matrix entry is not real");
  int pos = 0, neg = 0, null = 0;
  std::size_t k = 0;
  while (k < n) {
    if (m(k, k).is_zero()) {
      // Find a nonzero diagonal below, or create one from an off-diagonal entry.
      std::size_t swap_j = n;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!m(j, j).is_zero()) {
          swap_j = j;
          break;
        }
      if (swap_j < n) {
        for (std::size_t t = 0; t < n; ++t) std::swap(m(k, t), m(swap_j, t));
        for (std::size_t t = 0; t < n; ++t) std::swap(m(t, k), m(t, swap_j));
      } else {
        std::size_t off_j = n;
        for (std::size_t j = k + 1; j < n; ++j)
          if (!m(k, j).is_zero()) {
            off_j = j;
            break;
          }
        if (off_j == n) {
          // Row k is zero in the remaining block: null direction.
          ++null;
          ++k;
          continue;
        }
        for (std::size_t t = 0; t < n; ++t) m(k, t) += m(off_j, t);
        for (std::size_t t = 0; t < n; ++t) m(t, k) += m(t, off_j);
      }
    }
    if (m(k, k).is_zero()) {
      ++null;
      ++k;
      continue;
    }
    int s = m(k, k).real_sign();
    (s > 0 ? pos : neg) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Scalar f = m(i, k) / m(k, k);
      for (std::size_t t = 0; t < n; ++t) m(i, t) -= f * m(k, t);
      for (std::size_t t = 0; t < n; ++t) m(t, i) -= f * m(t, k);
    }
    ++k;
  }
  return {pos, neg, null};
}

std::array<int, 3> killing_signature(const RealAlgebra& alg) {
  const std::size_t n = alg.names.size();
  std::vector<Matrix<Scalar>> ad(n, Matrix<Scalar>(n, n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) ad[u](k, j) = alg.sc[u][j][k];
  Matrix<Scalar> kf(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto prod = ad[i] * ad[j];
      Scalar tr;
      for (std::size_t k = 0; k < n; ++k) tr += prod(k, k);
      kf(i, j) = tr;
      kf(j, i) = tr;
    }
  return symmetric_signature(kf);
}

std::string real_type_from_signature(const std::array<int, 3>& sig) {
  if (sig == std::array<int, 3>{0, 6, 0}) return "so(3)xso(3)";
  if (sig == std::array<int, 3>{2, 4, 0}) return "sl(2,R)xso(3)";
  if (sig == std::array<int, 3>{3, 3, 0}) return "so(1,3)";
  if (sig == std::array<int, 3>{4, 2, 0}) return "sl(2,R)xsl(2,R)";
  if (sig == std::array<int, 3>{3, 1, 2}) return "sl(2,R)xe(1,1)";
  if (sig == std::array<int, 3>{2, 2, 2}) return "sl(2,R)xe(2)";
  if (sig == std::array<int, 3>{0, 4, 2}) return "so(3)xe(2)";
  if (sig == std::array<int, 3>{2, 1, 3}) return "e(1,2)";
  if (sig == std::array<int, 3>{0, 3, 3}) return "e(3)";
  return "unrecognized";
}

std::string real_hol_type_from_signature(const std::array<int, 3>& sig) {
  if (sig == std::array<int, 3>{5, 3, 0}) return "sl(3,R)";
  if (sig == std::array<int, 3>{4, 4, 0}) return "su(1,2)";
  return "unrecognized";
}

namespace {

/// Builds a RealAlgebra from explicit basis vectors in g: verifies psi-fixedness
/// and real bracket closure; the basis must be C-independent.
RealAlgebra make_real_algebra(const AntiInvolution& psi, const std::vector<std::string>& names,
                              const std::vector<G2Element>& basis) {
  RealAlgebra alg;
  alg.names = names;
  alg.basis = basis;
  const std::size_t n = basis.size();
  for (std::size_t k = 0; k < n; ++k)
    if (!vec_is_zero(vec_sub(psi.apply(basis[k]), basis[k])))
      fail(Err::StructureViolation, names[k] + " is not psi-fixed");
  Matrix<Scalar> bm(kDim, n);
  for (std::size_t c = 0; c < n; ++c)
    for (int b = 0; b < kDim; ++b) bm(b, c) = basis[c][b];
  alg.sc.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto br = bracket(basis[i], basis[j]);
      std::vector<Scalar> x;
      if (!bm.solve(std::vector<Scalar>(br.begin(), br.end()), x))
        fail(Err::NotClosed, "[" + names[i] + "," + names[j] + "] leaves the real span");
      for (std::size_t k = 0; k < n; ++k) {
        if (!x[k].is_real())
          fail(Err::NotClosed, "[" + names[i] + "," + names[j] + "] has non-real coefficient");
        alg.sc[i][j][k] = x[k];
        alg.sc[j][i][k] = -x[k];
      }
    }
  return alg;
}

std::vector<std::pair<std::string, G2Element>> model_combination(
    const AlgebraicModel<Scalar>& m,
    std::initializer_list<std::pair<const char*, std::initializer_list<std::pair<const char*, Scalar>>>>
        defs) {
  auto find = [&](const std::string& n) -> const G2Element& {
    for (const auto& bv : m.basis)
      if (bv.name == n) return bv.vec;
    fail(Err::UnknownLabel, "no model vector " + n);
  };
  std::vector<std::pair<std::string, G2Element>> out;
  for (const auto& [name, combo] : defs) {
    auto v = zero_vec<Scalar>();
    for (const auto& [src, coef] : combo) v = vec_add(v, vec_scale(coef, find(src)));
    out.emplace_back(name, v);
  }
  return out;
}

} // namespace

FixedAlgebraResult fixed_point_algebra(const AntiInvolution& psi, const AlgebraicModel<Scalar>& m) {
  if (m.label != ModelLabel::D6 && m.label != ModelLabel::D6b0)
    fail(Err::UnknownLabel, "fixed-point bases are cataloged for the D.6 family");
  auto rep = verify_anti_involution(psi, &m);
  if (!rep.ok()) fail(Err::StructureViolation, "anti-involution checks failed");

  const Scalar I = Scalar::i();
  const Scalar one(1);
  std::vector<std::pair<std::string, G2Element>> named;
  const PsiLabel& l = psi.label();
  if (l.family == PsiFamily::Psi && l.zeta_power == 0) {
    named = model_combination(m, {{"T", {{"T", one}}},
                                  {"B1", {{"X1", one}}},
                                  {"B2", {{"X2", one}}},
                                  {"B3", {{"X3", one}}},
                                  {"B4", {{"X4", one}}},
                                  {"B5", {{"X5", one}}}});
  } else if (l.family == PsiFamily::Psi && l.zeta_power == 1) {
    named = model_combination(m, {{"T", {{"T", one}}},
                                  {"B1", {{"X1", one + I}}},
                                  {"B2", {{"X2", one + I}}},
                                  {"B3", {{"X3", I}}},
                                  {"B4", {{"X4", one - I}}},
                                  {"B5", {{"X5", one - I}}}});
  } else if (l.family == PsiFamily::PsiTilde && l.zeta_power == 0) {
    named = model_combination(m, {{"T", {{"T", I}}},
                                  {"B1", {{"X1", one}, {"X2", one}}},
                                  {"B2", {{"X1", I}, {"X2", -I}}},
                                  {"B3", {{"X3", I}}},
                                  {"B4", {{"X4", one}, {"X5", one}}},
                                  {"B5", {{"X4", I}, {"X5", -I}}}});
  } else if (l.family == PsiFamily::PsiTilde && l.zeta_power == 2) {
    named = model_combination(m, {{"T", {{"T", I}}},
                                  {"B1", {{"X1", one}, {"X2", -one}}},
                                  {"B2", {{"X1", I}, {"X2", I}}},
                                  {"B3", {{"X3", I}}},
                                  {"B4", {{"X4", one}, {"X5", -one}}},
                                  {"B5", {{"X4", I}, {"X5", I}}}});
  } else if (l.family == PsiFamily::PsiTilde && l.zeta_power == 1) {
    named = model_combination(m, {{"T", {{"T", I}}},
                                  {"B1", {{"X1", one}, {"X2", I}}},
                                  {"B2", {{"X2", one}, {"X1", I}}},
                                  {"B3", {{"X3", one}}},
                                  {"B4", {{"X4", one}, {"X5", -I}}},
                                  {"B5", {{"X5", one}, {"X4", -I}}}});
  } else if (l.family == PsiFamily::PsiTilde && l.zeta_power == 3) {
    named = model_combination(m, {{"T", {{"T", I}}},
                                  {"B1", {{"X1", one}, {"X2", -I}}},
                                  {"B2", {{"X2", one}, {"X1", -I}}},
                                  {"B3", {{"X3", one}}},
                                  {"B4", {{"X4", one}, {"X5", I}}},
                                  {"B5", {{"X5", one}, {"X4", I}}}});
  } else {
    fail(Err::UnknownLabel, "no cataloged real basis for " + l.str() + " on D.6");
  }
  FixedAlgebraResult out;
  std::vector<std::string> names;
  std::vector<G2Element> basis;
  for (auto& [n, v] : named) {
    names.push_back(n);
    basis.push_back(v);
  }
  out.algebra = make_real_algebra(psi, names, basis);
  out.signature = killing_signature(out.algebra);
  out.type = real_type_from_signature(out.signature);
  return out;
}

RealAlgebra g2_fixed_points(const AntiInvolution& psi) {
  std::vector<G2Element> basis;
  Span<Scalar> span(kDim);
  auto try_add = [&](const G2Element& v) {
    if (vec_is_zero(v)) return;
    if (span.add(std::vector<Scalar>(v.begin(), v.end()))) basis.push_back(v);
  };
  const Scalar I = Scalar::i();
  for (int b = 0; b < kDim; ++b) {
    auto e = basis_vec<Scalar>(b);
    auto img = psi.apply(e);
    try_add(vec_add(e, img));
    try_add(vec_scale(I, vec_sub(e, img)));
  }
  if (basis.size() != kDim) fail(Err::Internal, "fixed set of psi is not a real form");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < basis.size(); ++k) names.push_back("u" + std::to_string(k));
  return make_real_algebra(psi, names, basis);
}

std::vector<RealClassEntry> classify_real_models(ModelLabel family, const Scalar& param) {
  std::vector<RealClassEntry> out;
  auto entry = [&](PsiFamily f, int zp) {
    RealClassEntry e;
    e.psi = {f, zp};
    return e;
  };
  switch (family) {
    case ModelLabel::N6:
      out.push_back(entry(PsiFamily::Tau, 0));
      out.push_back(entry(PsiFamily::Tau, 2));
      return out;
    case ModelLabel::N7: {
      Scalar c2 = param * param;
      if (!c2.is_real()) fail(Err::RealityViolation, "c^2 not real");
      if (param.is_zero()) {
        out.push_back(entry(PsiFamily::Psi, 0));
        out.push_back(entry(PsiFamily::Psi, 1));
      } else if (is_real_nonneg(param)) {
        out.push_back(entry(PsiFamily::Psi, 0));
        out.push_back(entry(PsiFamily::Psi, 2));
      } else if (is_i_real_nonneg(param)) {
        out.push_back(entry(PsiFamily::Psi, 1));
        out.push_back(entry(PsiFamily::Psi, 3));
      } else {
        fail(Err::RealityViolation, "normalize c into R>=0 or i R>=0");
      }
      return out;
    }
    case ModelLabel::D6: {
      Scalar a2 = param * param;
      if (!a2.is_real()) fail(Err::RealityViolation, "a^2 not real");
      std::vector<PsiLabel> labels;
      if (param.is_zero()) {
        labels = {{PsiFamily::Psi, 0}, {PsiFamily::Psi, 1}, {PsiFamily::PsiTilde, 0},
                  {PsiFamily::PsiTilde, 1}};
      } else if (is_real_nonneg(param)) {
        labels = {{PsiFamily::Psi, 0}, {PsiFamily::PsiTilde, 0}, {PsiFamily::PsiTilde, 2}};
      } else if (is_i_real_nonneg(param)) {
        labels = {{PsiFamily::Psi, 1}, {PsiFamily::PsiTilde, 1}, {PsiFamily::PsiTilde, 3}};
      } else {
        fail(Err::RealityViolation, "normalize a into R>=0 or i R>=0");
      }
      auto m = build_model<Scalar>(ModelLabel::D6, param);
      for (const auto& l : labels) {
        RealClassEntry e;
        e.psi = l;
        e.type = fixed_point_algebra(AntiInvolution(l), m).type;
        out.push_back(e);
      }
      return out;
    }
    default:
      fail(Err::UnknownLabel, "classification covers N.7, N.6, D.6");
  }
}

namespace {

AbstractLie sl2c_real(bool so3_presentation) {
  // sl(2,C) as a real algebra, complexified: I is a basis label, i a scalar.
  if (!so3_presentation) {
    AbstractLie L({"H", "X", "Y", "IH", "IX", "IY"});
    const Scalar one(1);
    L.set("H", "X", {{"X", Scalar(2)}});
    L.set("H", "Y", {{"Y", Scalar(-2)}});
    L.set("X", "Y", {{"H", one}});
    L.set("H", "IX", {{"IX", Scalar(2)}});
    L.set("H", "IY", {{"IY", Scalar(-2)}});
    L.set("IH", "X", {{"IX", Scalar(2)}});
    L.set("IH", "Y", {{"IY", Scalar(-2)}});
    L.set("IH", "IX", {{"X", Scalar(-2)}});
    L.set("IH", "IY", {{"Y", Scalar(2)}});
    L.set("X", "IY", {{"IH", one}});
    L.set("IX", "Y", {{"IH", one}});
    L.set("IX", "IY", {{"H", -one}});
    return L;
  }
  AbstractLie L({"A", "B", "C", "IA", "IB", "IC"});
  const Scalar one(1);
  auto cyc = [&](const char* a, const char* b, const char* c) {
    L.set(a, b, {{c, one}});
    std::string ia = std::string("I") + a, ib = std::string("I") + b, ic = std::string("I") + c;
    L.set(a, ib.c_str(), {{ic.c_str(), one}});
    L.set(ia.c_str(), b, {{ic.c_str(), one}});
    L.set(ia.c_str(), ib.c_str(), {{c, -one}});
  };
  cyc("A", "B", "C");
  cyc("B", "C", "A");
  cyc("C", "A", "B");
  return L;
}

} // namespace

So13Result so13_models(So13Case which, const Rat& alpha) {
  if (alpha.is_zero()) fail(Err::UnknownLabel, "alpha must be nonzero");
  So13Result res;
  Rat al2 = alpha * alpha;
  res.a2 = -9 * (al2 - 1) * (al2 - 1) / ((al2 + 4) * (4 * al2 + 1));
  Scalar a = Scalar::sqrt_of(res.a2);
  const Scalar I = Scalar::i();
  const Scalar one(1);
  const Scalar sal(alpha);

  AbstractLie L = sl2c_real(which == So13Case::CIsotropy);
  std::vector<Scalar> v0, v1, v2, v3, v4, v5;
  if (which == So13Case::HIsotropy) {
    v0 = L.vec({{"H", Scalar(rat(1, 2))}});
    v1 = L.vec({{"X", one}, {"IX", sal}});
    v2 = L.vec({{"Y", one}, {"IY", sal}});
    v3 = L.vec({{"IH", one}});
    v4 = L.vec({{"X", sal}, {"IX", -one}});
    v5 = L.vec({{"Y", sal}, {"IY", -one}});
  } else {
    v0 = L.vec({{"C", -I}});
    v1 = L.vec({{"A", one}, {"IA", sal}});
    v2 = L.vec({{"B", one}, {"IB", sal}});
    v3 = L.vec({{"IC", one}});
    v4 = L.vec({{"B", -sal}, {"IB", one}});
    v5 = L.vec({{"A", sal}, {"IA", -one}});
  }

  Scalar s1 = one, s2, s3, s4, s5, t1, t2, t3;
  if (al2 == Rat(1)) {
    if (which == So13Case::HIsotropy) {
      s2 = Scalar(rat(3, 2)) * I / s1;
      s3 = -Scalar(rat(3, 2)) * I * sal;
      s4 = -I * sal * s1;
      s5 = Scalar(rat(3, 2)) * sal / s1;
    } else {
      s2 = Scalar(rat(3, 2)) * I / s1;
      s3 = Scalar(3) * sal;
      s4 = -sal * s1;
      s5 = Scalar(rat(3, 2)) * I * sal / s1;
    }
    t1 = t2 = t3 = Scalar(0);
  } else {
    Scalar d(al2 - 1);
    Scalar q(Rat((al2 + 4) * (4 * al2 + 1)));
    if (which == So13Case::HIsotropy) {
      s2 = Scalar(rat(-5, 2)) * a / (s1 * d);
      s3 = Scalar(rat(5, 2)) * a * sal / d;
      s4 = Scalar(rat(5, 3)) * a * s1 * sal / d;
      s5 = Scalar(rat(75, 2)) * sal / (s1 * q);
      t3 = Scalar(rat(-15, 2)) * d / (s1 * q);
    } else {
      s2 = Scalar(rat(5, 2)) * a / (s1 * d);
      s3 = Scalar(-5) * I * a * sal / d;
      s4 = Scalar(rat(5, 3)) * I * a * s1 * sal / d;
      s5 = Scalar(rat(75, 2)) * I * sal / (s1 * q);
      t3 = Scalar(rat(15, 2)) * d / (s1 * q);
    }
    t1 = -a;
    t2 = -a * s1 / Scalar(3);
  }

  std::size_t n = 6;
  std::vector<std::vector<Scalar>> images;
  if (which == So13Case::HIsotropy) {
    images = {v0,
              lie_lin(n, {{&v1, s1}}),
              lie_lin(n, {{&v2, s2}}),
              lie_lin(n, {{&v3, s3}, {&v0, t1}}),
              lie_lin(n, {{&v4, s4}, {&v1, t2}}),
              lie_lin(n, {{&v5, s5}, {&v2, t3}})};
  } else {
    auto v1m = lie_lin(n, {{&v1, one}, {&v2, -I}});
    auto v1p = lie_lin(n, {{&v1, one}, {&v2, I}});
    auto v4m = lie_lin(n, {{&v4, one}, {&v5, -I}});
    auto v4p = lie_lin(n, {{&v4, one}, {&v5, I}});
    images = {v0,
              lie_lin(n, {{&v1m, s1}}),
              lie_lin(n, {{&v1p, s2}}),
              lie_lin(n, {{&v3, s3}, {&v0, t1}}),
              lie_lin(n, {{&v4m, s4}, {&v1m, t2}}),
              lie_lin(n, {{&v4p, s5}, {&v1p, t3}})};
  }
  auto modrep = check_abstract_images(L, ModelLabel::D6, a, images,
                                      {"T", "X1", "X2", "X3", "X4", "X5"});
  res.checks.checks = modrep.checks;

  if (which == So13Case::HIsotropy) {
    res.psi = {PsiFamily::Psi, 1};
  } else if (al2 <= Rat(1)) {
    res.psi = {PsiFamily::PsiTilde, 1};
  } else {
    res.psi = {PsiFamily::PsiTilde, 3};
  }
  return res;
}

RealHolonomyResult real_holonomy(const AntiInvolution& psi, const AlgebraicModel<Scalar>& m) {
  RealHolonomyResult res;
  auto hol = holonomy(m);
  const Scalar I = Scalar::i();
  const Scalar one(1);
  auto B = [&](int b) { return basis_vec<Scalar>(b); };
  auto lc = [&](std::initializer_list<std::pair<int, Scalar>> terms) {
    auto v = zero_vec<Scalar>();
    for (const auto& [b, c] : terms) v[b] += c;
    return v;
  };

  std::vector<G2Element> basis;
  std::string expected_type;
  const PsiLabel& l = psi.label();
  if (m.label == ModelLabel::N7) {
    switch (l.zeta_power) {
      case 0: basis = {B(F01), B(F11), B(F21), B(F31), B(F32)}; break;
      case 2:
        basis = {B(F01), vec_scale(I, B(F11)), B(F21), vec_scale(I, B(F31)), vec_scale(I, B(F32))};
        break;
      case 1:
        basis = {B(F01), vec_scale(one + I, B(F11)), vec_scale(I, B(F21)),
                 vec_scale(one - I, B(F31)), vec_scale(one - I, B(F32))};
        break;
      default:
        basis = {B(F01), vec_scale(one - I, B(F11)), vec_scale(I, B(F21)),
                 vec_scale(one + I, B(F31)), vec_scale(one + I, B(F32))};
    }
    expected_type = "heis5";
  } else if (m.label == ModelLabel::D6 && m.param.is_zero()) {
    auto h01 = lc({{Z1, -one}, {Z2, Scalar(2)}});
    auto p21 = lc({{F21, one}, {E21, one}});
    auto a1 = lc({{F10, one}, {E32, one}});
    auto a2 = lc({{F11, one}, {E31, one}});
    auto a3 = lc({{F31, one}, {E11, one}});
    auto a4 = lc({{F32, one}, {E10, one}});
    if (l.family == PsiFamily::Psi && l.zeta_power == 0) {
      basis = {h01, B(E01), B(F01), p21, a1, a2, a3, a4};
    } else if (l.family == PsiFamily::PsiTilde && l.zeta_power == 0) {
      basis = {vec_scale(I, h01),
               vec_add(B(F01), B(E01)),
               vec_scale(I, vec_sub(B(F01), B(E01))),
               vec_scale(I, p21),
               vec_add(a1, a2),
               vec_scale(I, vec_sub(a1, a2)),
               vec_add(a3, a4),
               vec_scale(I, vec_sub(a3, a4))};
    } else if (l.family == PsiFamily::Psi && l.zeta_power == 1) {
      basis = {h01, B(E01), B(F01), vec_scale(I, p21), vec_scale(one + I, a1),
               vec_scale(one + I, a2), vec_scale(one - I, a3), vec_scale(one - I, a4)};
    } else if (l.family == PsiFamily::PsiTilde && l.zeta_power == 1) {
      basis = {vec_scale(I, h01),
               vec_add(B(F01), B(E01)),
               vec_scale(I, vec_sub(B(F01), B(E01))),
               p21,
               vec_add(a1, vec_scale(I, a2)),
               vec_add(a2, vec_scale(I, a1)),
               vec_sub(a3, vec_scale(I, a4)),
               vec_sub(a4, vec_scale(I, a3))};
    } else {
      fail(Err::UnknownLabel, "no cataloged real holonomy basis for " + l.str());
    }
  } else {
    // Full holonomy: the fixed points of psi on g itself.
    auto fixed = g2_fixed_points(psi);
    res.basis = fixed.basis;
    res.signature = killing_signature(fixed);
    res.type = "Lie(G2 split)";
    CheckResult c{"full_holonomy_real_form"};
    c.pass = (hol.dim() == 14) && (res.signature == std::array<int, 3>{8, 6, 0});
    res.checks.checks.push_back(c);
    return res;
  }

  // Verify fixedness, membership in the complex holonomy, and real closure.
  Span<Scalar> hol_span(kDim);
  for (const auto& v : hol.basis) hol_span.add(std::vector<Scalar>(v.begin(), v.end()));
  {
    CheckResult c{"basis_in_complex_holonomy"};
    for (const auto& v : basis)
      if (!hol_span.contains(std::vector<Scalar>(v.begin(), v.end()))) {
        c.pass = false;
        c.witness = "printed vector outside hol";
      }
    res.checks.checks.push_back(c);
  }
  std::vector<std::string> names;
  for (std::size_t k = 0; k < basis.size(); ++k) names.push_back("h" + std::to_string(k));
  RealAlgebra alg = make_real_algebra(psi, names, basis);
  res.basis = basis;
  if (m.label == ModelLabel::N7) {
    // Two-step nilpotency with 1-dim derived algebra identifies heis5.
    Span<Scalar> derived(kDim);
    std::vector<G2Element> der;
    bool twostep = true;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        auto br = bracket(basis[i], basis[j]);
        if (derived.add(std::vector<Scalar>(br.begin(), br.end()))) der.push_back(br);
      }
    for (const auto& z : der)
      for (const auto& h : basis)
        if (!vec_is_zero(bracket(h, z))) twostep = false;
    res.type = (derived.dim() == 1 && twostep) ? "heis5" : "unrecognized";
    res.signature = killing_signature(alg);
  } else {
    res.signature = killing_signature(alg);
    res.type = real_hol_type_from_signature(res.signature);
  }
  CheckResult c{"real_holonomy_closed"};
  c.pass = true;
  res.checks.checks.push_back(c);
  return res;
}

bool redundancy_map_identity(int zeta_power, std::string* witness) {
  auto Ai = aut_A(Scalar::i());
  auto Ai_inv = aut_A(-Scalar::i());
  AntiInvolution psi({PsiFamily::Psi, zeta_power});
  AntiInvolution psi_neg({PsiFamily::Psi, zeta_power + 2});
  for (int b = 0; b < kDim; ++b) {
    auto lhs = matrix_apply(Ai, psi.apply(matrix_apply(Ai_inv, basis_vec<Scalar>(b))));
    auto rhs = psi_neg.apply(basis_vec<Scalar>(b));
    if (!vec_is_zero(vec_sub(lhs, rhs))) {
      if (witness) *witness = std::string("conjugation identity fails at ") + basis_name(b);
      return false;
    }
  }
  return true;
}

} // namespace g235
