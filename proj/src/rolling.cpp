#include "g235/rolling.hpp"

namespace g235 {

const int RollingAlgebra::kFiltDegree[6] = {0, -1, -1, -2, -3, -3};

namespace {

AbstractLie so3_so3() {
  AbstractLie L({"i1", "j1", "k1", "i2", "j2", "k2"});
  const Scalar one(1);
  L.set("i1", "j1", {{"k1", one}});
  L.set("j1", "k1", {{"i1", one}});
  L.set("k1", "i1", {{"j1", one}});
  L.set("i2", "j2", {{"k2", one}});
  L.set("j2", "k2", {{"i2", one}});
  L.set("k2", "i2", {{"j2", one}});
  return L;
}

} // namespace

RollingAlgebra::RollingAlgebra(const Rat& r) : rho(r), alg(so3_so3()) {
  if (rho.is_zero()) fail(Err::UnknownLabel, "rho must be nonzero");
  if (rho == Rat(1) || rho == Rat(-1))
    fail(Err::HolonomicRatio, "rho = +-1 gives an integrable plane field");
  Scalar p(rho);
  Scalar p2 = p * p, p3 = p2 * p;
  v = {alg.vec({{"k1", Scalar(1)}, {"k2", Scalar(1)}}),
       alg.vec({{"i1", Scalar(1)}, {"i2", -p}}),
       alg.vec({{"j1", Scalar(1)}, {"j2", -p}}),
       alg.vec({{"k1", Scalar(1)}, {"k2", p2}}),
       alg.vec({{"j1", Scalar(1)}, {"j2", -p3}}),
       alg.vec({{"i1", Scalar(1)}, {"i2", -p3}})};
}

bool RollingAlgebra::verify_flag(std::string* witness) const {
  auto span_of = [&](std::vector<const std::vector<Scalar>*> vs) {
    Span<Scalar> s(6);
    for (auto* p : vs) s.add(*p);
    return s;
  };
  // f^-1 = <v0, v1, v2>; [f^-1, f^-1] adds exactly v3; next step adds v4, v5.
  auto fm1 = span_of({&v[0], &v[1], &v[2]});
  auto br12 = alg.bracket_vec(v[1], v[2]);
  Span<Scalar> fm2 = fm1;
  bool grew = fm2.add(br12);
  if (!grew || !fm2.contains(v[3]) || fm2.dim() != 4) {
    if (witness) *witness = "[v1,v2] does not produce the third filtrand";
    return false;
  }
  Span<Scalar> fm3 = fm2;
  for (int i = 1; i <= 2; ++i) {
    fm3.add(alg.bracket_vec(v[i], br12));
  }
  if (fm3.dim() != 6 || !fm3.contains(v[4]) || !fm3.contains(v[5])) {
    if (witness) *witness = "second derived step does not fill the algebra";
    return false;
  }
  return true;
}

Rat classifying_invariant(const Rat& rho) {
  if (rho == Rat(1) || rho == Rat(-1))
    fail(Err::HolonomicRatio, "rho = +-1 is the holonomic boundary");
  Rat p3 = rho + 3, m3 = rho - 3, pt = rho + rat(1, 3), mt = rho - rat(1, 3);
  if (p3.is_zero() || m3.is_zero() || pt.is_zero() || mt.is_zero())
    fail(Err::ExceptionalRatio, "rho in {3, 1/3, -3, -1/3} is the exceptional set");
  Rat num = 4 * (rho * rho + 1) * (rho * rho + 1);
  return num / (p3 * m3 * pt * mt);
}

namespace {

struct STValues {
  Scalar s1, s2, s3, s4, s5, t1, t2, t3;
};

STValues embedding_values(const Rat& rho, const Scalar& a) {
  // Printed solution with s1 = 1.
  STValues st;
  const Scalar I = Scalar::i();
  Scalar r2p1(rho * rho + 1);
  st.s1 = Scalar(1);
  st.s2 = Scalar(-5) * a / (st.s1 * r2p1);
  st.s3 = Scalar(-5) * I * a / r2p1;
  st.s4 = Scalar(rat(5, 3)) * I * st.s1 * a / r2p1;
  st.s5 = Scalar(rat(25, 3)) * I * a * a / (st.s1 * r2p1 * r2p1);
  st.t1 = Scalar(rat(3, 2)) * a;
  st.t2 = Scalar(rat(-7, 6)) * a * st.s1;
  st.t3 = Scalar(rat(35, 6)) * a * a / (st.s1 * r2p1);
  return st;
}

std::vector<std::vector<Scalar>> embedding_images(const RollingAlgebra& ra, const STValues& st) {
  const Scalar I = Scalar::i();
  const std::size_t n = 6;
  auto v1p = lie_lin(n, {{&ra.v[1], Scalar(1)}, {&ra.v[2], I}});
  auto v1m = lie_lin(n, {{&ra.v[1], Scalar(1)}, {&ra.v[2], -I}});
  auto v4m = lie_lin(n, {{&ra.v[4], Scalar(1)}, {&ra.v[5], -I}});
  auto v4p = lie_lin(n, {{&ra.v[4], Scalar(1)}, {&ra.v[5], I}});
  return {lie_lin(n, {{&ra.v[0], I}}),
          lie_lin(n, {{&v1p, st.s1}}),
          lie_lin(n, {{&v1m, st.s2}}),
          lie_lin(n, {{&ra.v[3], st.s3}, {&ra.v[0], st.t1 * I}}),
          lie_lin(n, {{&v4m, st.s4}, {&v1p, st.t2}}),
          lie_lin(n, {{&v4p, st.s5}, {&v1m, st.t3}})};
}

} // namespace

EmbeddingSolution solve_embedding(const Rat& rho, EmbeddingMode mode) {
  EmbeddingSolution sol;
  sol.rho = rho;
  if (mode == EmbeddingMode::Exceptional) {
    if (rho != Rat(3)) fail(Err::ExceptionalRatio, "exceptional mode requires rho = 3");
    sol.exceptional = true;
    // Any nonzero a works at rho = 3; a = 1 keeps everything rational.
    sol.a = Scalar(1);
  } else {
    if (!(rho > Rat(1))) fail(Err::UnknownLabel, "generic mode requires rho > 1");
    Rat I_rho = classifying_invariant(rho); // throws ExceptionalRatio at rho = 3
    sol.a2 = I_rho;
    sol.a = Scalar::sqrt_of(I_rho);
  }
  RollingAlgebra ra(rho);
  {
    CheckResult c{"rolling_jacobi"};
    c.pass = ra.jacobi_ok();
    sol.checks.checks.push_back(c);
  }
  {
    CheckResult c{"weak_derived_flag"};
    std::string w;
    c.pass = ra.verify_flag(&w);
    c.witness = w;
    sol.checks.checks.push_back(c);
  }
  auto st = embedding_values(rho, sol.a);
  sol.images = embedding_images(ra, st);
  auto rep = check_abstract_images(ra.alg,
                                   sol.exceptional ? ModelLabel::D6b0 : ModelLabel::D6, sol.a,
                                   sol.images, {"T", "X1", "X2", "X3", "X4", "X5"});
  for (auto& c : rep.checks) sol.checks.checks.push_back(c);
  if (!rep.ok()) fail(Err::ResidualNonzero, "embedding bracket relations fail");
  return sol;
}

ExceptionalEmbedding exceptional_embedding_in_g2(const Scalar& a_choice) {
  ExceptionalEmbedding out;
  auto sol = solve_embedding(Rat(3), EmbeddingMode::Exceptional);
  auto model = build_model<Scalar>(ModelLabel::D6b0, a_choice);
  // Express v0..v5 through (T, X1..X5) and push into g.
  Matrix<Scalar> img_mat(6, 6);
  for (int col = 0; col < 6; ++col)
    for (int row = 0; row < 6; ++row) img_mat(row, col) = sol.images[col][row];
  auto inv = img_mat.inverse(); // columns: coordinates of the abstract basis in images
  // g-images of the abstract so3 x so3 basis: phi(e_col) = sum_k inv(k,col) model_k.
  std::vector<G2Element> abstract_in_g(6, zero_vec<Scalar>());
  for (int col = 0; col < 6; ++col)
    for (int k = 0; k < 6; ++k)
      abstract_in_g[col] = vec_add(abstract_in_g[col], vec_scale(inv(k, col), model.basis[k].vec));
  out.images = abstract_in_g;
  RollingAlgebra ra(Rat(3));
  CheckResult c{"ambient_bracket_homomorphism"};
  int count = 0;
  for (int i = 0; i < 6 && c.pass; ++i)
    for (int j = i + 1; j < 6; ++j) {
      ++count;
      std::vector<Scalar> ei(6, Scalar(0)), ej(6, Scalar(0));
      ei[i] = Scalar(1);
      ej[j] = Scalar(1);
      auto br = ra.alg.bracket_vec(ei, ej);
      auto want = zero_vec<Scalar>();
      for (int k = 0; k < 6; ++k)
        if (!br[k].is_zero()) want = vec_add(want, vec_scale(br[k], abstract_in_g[k]));
      auto got = bracket(abstract_in_g[i], abstract_in_g[j]);
      if (!vec_is_zero(vec_sub(got, want))) {
        c.pass = false;
        c.witness = "ambient bracket mismatch on pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")";
        break;
      }
    }
  c.witness = c.pass ? std::to_string(count) + " ambient brackets" : c.witness;
  out.checks.checks.push_back(c);

  // The b = 0 model is flat; its kappa vanishes identically.
  CheckResult flat{"kappa_zero"};
  flat.pass = model.kappa.is_zero();
  out.checks.checks.push_back(flat);
  return out;
}

RollingClassification classify_rolling(const Rat& rho) {
  if (!(rho > Rat(1))) fail(Err::UnknownLabel, "classification requires rho > 1");
  RollingClassification out;
  if (rho == Rat(3)) {
    out.exceptional = true;
    out.symmetry_dim = 14;
    out.a2 = Rat(0);
    return out;
  }
  out.a2 = classifying_invariant(rho);
  out.symmetry_dim = 6;
  out.psi = (rho > Rat(3)) ? PsiLabel{PsiFamily::PsiTilde, 2} : PsiLabel{PsiFamily::PsiTilde, 1};
  return out;
}

MonotonicityReport invariant_monotonicity_check(const std::vector<Rat>& samples) {
  MonotonicityReport rep;
  std::vector<Rat> low, high;
  for (const auto& r : samples) {
    if (r > Rat(1) && r < Rat(3))
      low.push_back(r);
    else if (r > Rat(3))
      high.push_back(r);
    else
      fail(Err::UnknownLabel, "sample outside (1,3) u (3,oo)");
  }
  auto run = [&](std::vector<Rat>& xs, bool lower_interval) {
    std::sort(xs.begin(), xs.end());
    std::optional<Rat> prev;
    for (const auto& x : xs) {
      Rat v = classifying_invariant(x);
      if (lower_interval && !(v < rat(-9, 4))) {
        rep.range_ok = false;
        rep.witness = "I(" + rat_str(x) + ") = " + rat_str(v) + " not < -9/4";
      }
      if (!lower_interval && !(v > Rat(4))) {
        rep.range_ok = false;
        rep.witness = "I(" + rat_str(x) + ") = " + rat_str(v) + " not > 4";
      }
      if (prev && !(v < *prev)) {
        rep.decreasing = false;
        rep.witness = "I not strictly decreasing at " + rat_str(x);
      }
      prev = v;
    }
  };
  run(low, true);
  run(high, false);
  return rep;
}

ParamPoly rolling_adT_charpoly(const Rat& rho) {
  RollingAlgebra ra(rho);
  const Scalar I = Scalar::i();
  auto T = lie_lin(6, {{&ra.v[0], I}});
  // ad_T in the so3 x so3 basis, entries as degree-0 polynomials; subtract lambda.
  ParamPoly lambda = ParamPoly::var("lambda");
  Matrix<ParamPoly> m(6, 6);
  for (int col = 0; col < 6; ++col) {
    std::vector<Scalar> e(6, Scalar(0));
    e[col] = Scalar(1);
    auto br = ra.alg.bracket_vec(T, e);
    for (int row = 0; row < 6; ++row) m(row, col) = ParamPoly(br[row]);
    m(col, col) -= lambda;
  }
  return ring_det(m);
}

} // namespace g235
