#include "g235/homology.hpp"

#include <map>

namespace g235 {

namespace {

constexpr int kPairs[kNumPairs][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                      {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
constexpr int kTriples[kNumTriples][3] = {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4},
                                          {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};

} // namespace

int pair_index(int i, int j) {
  for (int idx = 0; idx < kNumPairs; ++idx)
    if (kPairs[idx][0] == i && kPairs[idx][1] == j) return idx;
  fail(Err::Internal, "bad pair");
}

std::pair<int, int> pair_at(int idx) { return {kPairs[idx][0], kPairs[idx][1]}; }

int triple_index(int i, int j, int k) {
  for (int idx = 0; idx < kNumTriples; ++idx)
    if (kTriples[idx][0] == i && kTriples[idx][1] == j && kTriples[idx][2] == k) return idx;
  fail(Err::Internal, "bad triple");
}

std::array<int, 3> triple_at(int idx) {
  return {kTriples[idx][0], kTriples[idx][1], kTriples[idx][2]};
}

std::vector<Rat> flatten(const Chain2<Rat>& c) {
  std::vector<Rat> out;
  out.reserve(kC2Dim);
  for (int idx = 0; idx < kNumPairs; ++idx)
    for (int b = 0; b < kDim; ++b) out.push_back(c.v[idx][b]);
  return out;
}

Chain2<Rat> unflatten_chain2(const std::vector<Rat>& v) {
  Chain2<Rat> c;
  for (int idx = 0; idx < kNumPairs; ++idx)
    for (int b = 0; b < kDim; ++b) c.v[idx][b] = v[idx * kDim + b];
  return c;
}

std::vector<Rat> flatten_cochain(const Cochain2<Rat>& c) {
  std::vector<Rat> out;
  out.reserve(kC2Dim);
  for (int idx = 0; idx < kNumPairs; ++idx)
    for (int b = 0; b < kDim; ++b) out.push_back(c.v[idx][b]);
  return out;
}

Cochain2<Rat> unflatten_cochain2(const std::vector<Rat>& v) {
  Cochain2<Rat> c;
  for (int idx = 0; idx < kNumPairs; ++idx)
    for (int b = 0; b < kDim; ++b) c.v[idx][b] = v[idx * kDim + b];
  return c;
}

namespace {

// C^1 flattening: slot-major, 5*14 = 70.
std::vector<Rat> flatten1(const Cochain1<Rat>& c) {
  std::vector<Rat> out;
  out.reserve(70);
  for (int i = 0; i < 5; ++i)
    for (int b = 0; b < kDim; ++b) out.push_back(c[i][b]);
  return out;
}

std::vector<Rat> flatten3(const Cochain3<Rat>& c) {
  std::vector<Rat> out;
  out.reserve(140);
  for (int idx = 0; idx < kNumTriples; ++idx)
    for (int b = 0; b < kDim; ++b) out.push_back(c[idx][b]);
  return out;
}

Cochain1<Rat> dstar_on_cochain2(const Cochain2<Rat>& c) {
  auto chain = cochain_to_chain(c);
  auto c1 = partial_star(chain);
  Cochain1<Rat> out;
  for (int i = 0; i < 5; ++i) out[i] = vec_scale(Rat(kPairingConst[i]), c1[i]);
  return out;
}

Cochain2<Rat> dstar_on_cochain3(const Cochain3<Rat>& c) {
  Chain3<Rat> chain;
  for (int idx = 0; idx < kNumTriples; ++idx) {
    auto [i, j, k] = triple_at(idx);
    Rat f = Rat(1) / (Rat(kPairingConst[i]) * Rat(kPairingConst[j]) * Rat(kPairingConst[k]));
    chain[idx] = vec_scale(f, c[idx]);
  }
  return chain_to_cochain(partial_star3(chain));
}

G2Vec<Rat> dstar_on_cochain1(const Cochain1<Rat>& c) {
  Chain1<Rat> chain;
  for (int i = 0; i < 5; ++i) chain[i] = vec_scale(Rat(1) / Rat(kPairingConst[i]), c[i]);
  return partial_star1(chain);
}

Matrix<Rat> column_space_basis(const Matrix<Rat>& m) {
  Matrix<Rat> copy = m;
  auto pivots = copy.row_reduce();
  Matrix<Rat> out(m.rows(), pivots.size());
  for (std::size_t c = 0; c < pivots.size(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, c) = m(r, pivots[c]);
  return out;
}

HodgeData build_hodge() {
  HodgeData h;
  h.d1 = Matrix<Rat>(140, 70);
  h.d2 = Matrix<Rat>(140, 140);
  h.dstar2 = Matrix<Rat>(70, 140);
  h.dstar3 = Matrix<Rat>(140, 140);

  for (int col = 0; col < 70; ++col) {
    Cochain1<Rat> unit;
    for (auto& x : unit) x = zero_vec<Rat>();
    unit[col / kDim][col % kDim] = Rat(1);
    auto img = flatten_cochain(partial1(unit));
    for (int r = 0; r < 140; ++r) h.d1(r, col) = img[r];
  }
  for (int col = 0; col < 140; ++col) {
    Cochain2<Rat> unit;
    unit.v[col / kDim][col % kDim] = Rat(1);
    auto img2 = flatten3(partial2(unit));
    for (int r = 0; r < 140; ++r) h.d2(r, col) = img2[r];
    auto img1 = flatten1(dstar_on_cochain2(unit));
    for (int r = 0; r < 70; ++r) h.dstar2(r, col) = img1[r];
  }
  for (int col = 0; col < 140; ++col) {
    Cochain3<Rat> unit;
    for (auto& x : unit) x = zero_vec<Rat>();
    unit[col / kDim][col % kDim] = Rat(1);
    auto img = flatten_cochain(dstar_on_cochain3(unit));
    for (int r = 0; r < 140; ++r) h.dstar3(r, col) = img[r];
  }
  h.box = h.d1 * h.dstar2 + h.dstar3 * h.d2;

  // Laplacian on C^1.
  Matrix<Rat> d0(70, 14), dstar1(14, 70);
  for (int col = 0; col < 14; ++col) {
    auto img = flatten1(partial0(basis_vec<Rat>(col)));
    for (int r = 0; r < 70; ++r) d0(r, col) = img[r];
  }
  for (int col = 0; col < 70; ++col) {
    Cochain1<Rat> unit;
    for (auto& x : unit) x = zero_vec<Rat>();
    unit[col / kDim][col % kDim] = Rat(1);
    auto img = dstar_on_cochain1(unit);
    for (int r = 0; r < 14; ++r) dstar1(r, col) = img[r];
  }
  h.box1 = d0 * dstar1 + h.dstar2 * h.d1;

  h.im_d_basis = column_space_basis(h.d1);
  h.im_dstar_basis = column_space_basis(h.dstar3);
  h.harmonic_basis = h.box.kernel();
  h.dim_im_d = h.im_d_basis.cols();
  h.dim_im_dstar = h.im_dstar_basis.cols();
  h.dim_ker_box = h.harmonic_basis.cols();

  std::size_t total = h.dim_ker_box + h.dim_im_d + h.dim_im_dstar;
  if (total != 140) fail(Err::Internal, "Hodge summands do not fill C^2");
  h.decomp = Matrix<Rat>(140, 140);
  for (std::size_t c = 0; c < h.dim_ker_box; ++c)
    for (int r = 0; r < 140; ++r) h.decomp(r, c) = h.harmonic_basis(r, c);
  for (std::size_t c = 0; c < h.dim_im_d; ++c)
    for (int r = 0; r < 140; ++r) h.decomp(r, h.dim_ker_box + c) = h.im_d_basis(r, c);
  for (std::size_t c = 0; c < h.dim_im_dstar; ++c)
    for (int r = 0; r < 140; ++r)
      h.decomp(r, h.dim_ker_box + h.dim_im_d + c) = h.im_dstar_basis(r, c);
  h.decomp_inv = h.decomp.inverse();
  return h;
}

} // namespace

const HodgeData& hodge() {
  static const HodgeData h = build_hodge();
  return h;
}

Cochain2<Scalar> harmonic_projection(const Cochain2<Scalar>& c) {
  const auto& h = hodge();
  auto flat = flatten_cochain_r(c);
  // coords = decomp_inv * flat, keep the harmonic block.
  Cochain2<Scalar> out;
  std::vector<Scalar> harm_coords(h.dim_ker_box, Scalar(0));
  for (std::size_t r = 0; r < h.dim_ker_box; ++r) {
    Scalar acc;
    for (int k = 0; k < 140; ++k) {
      const Rat& m = h.decomp_inv(r, k);
      if (!m.is_zero() && !flat[k].is_zero()) acc += flat[k] * m;
    }
    harm_coords[r] = acc;
  }
  for (int k = 0; k < 140; ++k) {
    Scalar acc;
    for (std::size_t r = 0; r < h.dim_ker_box; ++r) {
      const Rat& m = h.decomp(k, r);
      if (!m.is_zero() && !harm_coords[r].is_zero()) acc += harm_coords[r] * m;
    }
    if (!acc.is_zero()) out.v[k / kDim][k % kDim] = acc;
  }
  return out;
}

namespace {

struct CoeffTerm {
  int value;        // basis label of the g-value
  int i, j;         // coset slots, i < j
  Rat coef;
};

Cochain2<Rat> make_cochain(const std::vector<CoeffTerm>& terms) {
  Cochain2<Rat> c;
  for (const auto& t : terms) {
    auto val = zero_vec<Rat>();
    val[t.value] = t.coef;
    c.add(t.i, t.j, val);
  }
  return c;
}

CurvatureModule build_curvature_module() {
  CurvatureModule cm;
  const Rat th = rat(1, 3);
  struct Def {
    const char* name;
    int hom;
    std::pair<int, int> weight;
    std::vector<CoeffTerm> terms;
  };
  // Coefficient cochains in the structure-equation normalization.
  const std::vector<Def> defs = {
      {"A1", 4, {4, 0}, {{F01, 0, 3, Rat(1)}}},
      {"A2", 4, {4, 1}, {{F01, 0, 4, Rat(1)}, {F01, 1, 3, Rat(-1)}, {Z1, 0, 3, Rat(-1)}, {Z2, 0, 3, Rat(2)}}},
      {"A3", 4, {4, 2}, {{E01, 0, 3, Rat(-1)}, {Z1, 0, 4, Rat(-1)}, {Z1, 1, 3, Rat(1)}, {Z2, 0, 4, Rat(2)}, {Z2, 1, 3, Rat(-2)}, {F01, 1, 4, Rat(-1)}}},
      {"A4", 4, {4, 3}, {{E01, 1, 3, Rat(1)}, {E01, 0, 4, Rat(-1)}, {Z1, 1, 4, Rat(1)}, {Z2, 1, 4, Rat(-2)}}},
      {"A5", 4, {4, 4}, {{E01, 1, 4, Rat(1)}}},
      {"B1", 5, {5, 1}, {{E10, 0, 3, Rat(1)}, {F01, 2, 3, Rat(-2)}}},
      {"B2", 5, {5, 2}, {{E11, 0, 3, Rat(-1)}, {E10, 0, 4, Rat(1)}, {E10, 1, 3, Rat(-1)}, {Z1, 2, 3, Rat(2)}, {Z2, 2, 3, Rat(-4)}, {F01, 2, 4, Rat(-2)}}},
      {"B3", 5, {5, 3}, {{E11, 1, 3, Rat(1)}, {E11, 0, 4, Rat(-1)}, {E10, 1, 4, Rat(-1)}, {E01, 2, 3, Rat(2)}, {Z1, 2, 4, Rat(2)}, {Z2, 2, 4, Rat(-4)}}},
      {"B4", 5, {5, 4}, {{E11, 1, 4, Rat(1)}, {E01, 2, 4, Rat(2)}}},
      {"C1", 6, {6, 2}, {{E21, 0, 3, Rat(-1)}, {E10, 2, 3, Rat(-2)}, {F01, 3, 4, Rat(1)}}},
      {"C2", 6, {6, 3}, {{E21, 1, 3, Rat(1)}, {E21, 0, 4, Rat(-1)}, {E10, 2, 4, Rat(-2)}, {E11, 2, 3, Rat(2)}, {Z1, 3, 4, Rat(-1)}, {Z2, 3, 4, Rat(2)}}},
      {"C3", 6, {6, 4}, {{E21, 1, 4, Rat(1)}, {E11, 2, 4, Rat(2)}, {E01, 3, 4, Rat(-1)}}},
      {"D1", 7, {7, 3}, {{E31, 0, 4, th}, {E31, 1, 3, -th}, {E32, 0, 3, -2 * th}, {E21, 2, 3, Rat(2)}, {E10, 3, 4, Rat(1)}}},
      {"D2", 7, {7, 4}, {{E31, 1, 4, -2 * th}, {E32, 1, 3, th}, {E32, 0, 4, -th}, {E21, 2, 4, Rat(2)}, {E11, 3, 4, Rat(-1)}}},
      {"E", 8, {8, 4}, {{E32, 2, 3, Rat(1)}, {E31, 2, 4, Rat(-1)}, {E21, 3, 4, Rat(-1)}}},
      {"Dt1", 7, {7, 2}, {{E31, 0, 3, Rat(1)}}},
      {"Dt2", 7, {7, 3}, {{E32, 0, 3, Rat(1)}, {E31, 0, 4, Rat(1)}, {E31, 1, 3, Rat(-1)}}},
      {"Dt3", 7, {7, 4}, {{E32, 0, 4, Rat(1)}, {E32, 1, 3, Rat(-1)}, {E31, 1, 4, Rat(-1)}}},
      {"Dt4", 7, {7, 5}, {{E32, 1, 4, Rat(-1)}}},
      {"Et1", 8, {8, 3}, {{E31, 2, 3, Rat(-2)}}},
      {"Et2", 8, {8, 4}, {{E32, 2, 3, Rat(-2)}, {E31, 2, 4, Rat(-2)}}},
      {"Et3", 8, {8, 5}, {{E32, 2, 4, Rat(-2)}}},
      {"Ft1", 9, {9, 4}, {{E31, 3, 4, Rat(1)}}},
      {"Ft2", 9, {9, 5}, {{E32, 3, 4, Rat(1)}}},
  };
  if (defs.size() != kEDim) fail(Err::Internal, "curvature module size");
  for (int k = 0; k < kEDim; ++k) {
    cm.names[k] = defs[k].name;
    cm.homogeneity[k] = defs[k].hom;
    cm.weights[k] = defs[k].weight;
    cm.coeff_cochains[k] = make_cochain(defs[k].terms);
    cm.coeff_chains[k] = cochain_to_chain(cm.coeff_cochains[k]);
  }
  cm.components = {{{EComp::A, "A", 4, 5},
                    {EComp::B, "B", 5, 4},
                    {EComp::C, "C", 6, 3},
                    {EComp::D, "D", 7, 2},
                    {EComp::Dt, "Dt", 7, 4},
                    {EComp::E, "E", 8, 1},
                    {EComp::Et, "Et", 8, 3},
                    {EComp::Ft, "Ft", 9, 2}}};
  cm.chain_matrix = Matrix<Rat>(kC2Dim, kEDim);
  for (int k = 0; k < kEDim; ++k) {
    auto flat = flatten(cm.coeff_chains[k]);
    for (int r = 0; r < kC2Dim; ++r) cm.chain_matrix(r, k) = flat[r];
  }
  // Left inverse P = (M^T M)^{-1} M^T.
  auto mt = cm.chain_matrix.transposed();
  cm.projector = (mt * cm.chain_matrix).inverse() * mt;
  return cm;
}

} // namespace

const CurvatureModule& curvature_module() {
  static const CurvatureModule cm = build_curvature_module();
  return cm;
}

Chain2<Rat> phi0_chain() {
  Chain2<Rat> c;
  auto val = zero_vec<Rat>();
  val[F01] = Rat(1);
  c.add(0, 3, val); // e10 ^ e31
  return c;
}

std::vector<Chain2<Rat>> generate_curvature_module() {
  Span<Rat> span(kC2Dim);
  std::vector<Chain2<Rat>> basis;
  std::vector<Chain2<Rat>> frontier;
  auto push = [&](const Chain2<Rat>& c) {
    if (span.add(flatten(c))) {
      basis.push_back(c);
      frontier.push_back(c);
    }
  };
  push(phi0_chain());
  while (!frontier.empty()) {
    auto work = std::move(frontier);
    frontier.clear();
    for (const auto& c : work)
      for (int p : kParabolic) push(chain_action(basis_vec<Rat>(p), c));
  }
  return basis;
}

std::vector<std::pair<std::string, Chain2<Rat>>> printed_weight_vectors() {
  // Slots over p+: e10=0, e11=1, e21=2, e31=3, e32=4; h01 = -Z1 + 2 Z2.
  struct T {
    int i, j, value;
    long coef;
  };
  struct Row {
    const char* name;
    std::vector<T> terms;
  };
  auto H = [](int i, int j, long c) { return std::vector<T>{{i, j, Z1, -c}, {i, j, Z2, 2 * c}}; };
  std::vector<Row> rows = {
      {"A@(4,0)", {{0, 3, F01, 1}}},
      {"A@(4,1)", {{0, 4, F01, 1}, {1, 3, F01, -1}, {0, 3, Z1, -1}, {0, 3, Z2, 2}}},
      {"A@(4,2)", {{0, 4, Z1, -1}, {0, 4, Z2, 2}, {1, 3, Z1, 1}, {1, 3, Z2, -2}, {0, 3, E01, -1}, {1, 4, F01, -1}}},
      {"A@(4,3)", {{1, 3, E01, 1}, {0, 4, E01, -1}, {1, 4, Z1, 1}, {1, 4, Z2, -2}}},
      {"A@(4,4)", {{1, 4, E01, 1}}},
      {"B@(5,1)", {{0, 3, E10, 1}, {2, 3, F01, -2}}},
      {"B@(5,2)", {{0, 4, E10, 1}, {1, 3, E10, -1}, {0, 3, E11, -1}, {2, 4, F01, -2}, {2, 3, Z1, 2}, {2, 3, Z2, -4}}},
      {"B@(5,3)", {{1, 3, E11, 1}, {0, 4, E11, -1}, {1, 4, E10, -1}, {2, 3, E01, 2}, {2, 4, Z1, 2}, {2, 4, Z2, -4}}},
      {"B@(5,4)", {{1, 4, E11, 1}, {2, 4, E01, 2}}},
      {"C@(6,2)", {{0, 3, E21, -1}, {2, 3, E10, -2}, {3, 4, F01, 3}}},
      {"C@(6,3)", {{1, 3, E21, 1}, {0, 4, E21, -1}, {2, 4, E10, -2}, {2, 3, E11, 2}, {3, 4, Z1, -3}, {3, 4, Z2, 6}}},
      {"C@(6,4)", {{1, 4, E21, 1}, {2, 4, E11, 2}, {3, 4, E01, -3}}},
      {"D@(7,3)", {{0, 4, E31, 1}, {1, 3, E31, -1}, {0, 3, E32, -2}, {2, 3, E21, 6}, {3, 4, E10, 9}}},
      {"D@(7,4)", {{1, 3, E32, 1}, {0, 4, E32, -1}, {1, 4, E31, -2}, {2, 4, E21, 6}, {3, 4, E11, -9}}},
      {"Dt@(7,2)", {{0, 3, E31, 1}}},
      {"Dt@(7,3)", {{0, 4, E31, 1}, {1, 3, E31, -1}, {0, 3, E32, 1}}},
      {"Dt@(7,4)", {{0, 4, E32, 1}, {1, 3, E32, -1}, {1, 4, E31, -1}}},
      {"Dt@(7,5)", {{1, 4, E32, -1}}},
      {"E@(8,4)", {{2, 3, E32, 1}, {2, 4, E31, -1}, {3, 4, E21, -3}}},
      {"Et@(8,3)", {{2, 3, E31, 1}}},
      {"Et@(8,4)", {{2, 4, E31, 1}, {2, 3, E32, 1}}},
      {"Et@(8,5)", {{2, 4, E32, 1}}},
      {"Ft@(9,4)", {{3, 4, E31, 1}}},
      {"Ft@(9,5)", {{3, 4, E32, 1}}},
  };
  (void)H;
  std::vector<std::pair<std::string, Chain2<Rat>>> out;
  for (const auto& row : rows) {
    Chain2<Rat> c;
    for (const auto& t : row.terms) {
      auto val = zero_vec<Rat>();
      val[t.value] = Rat(t.coef);
      c.add(t.i, t.j, val);
    }
    out.emplace_back(row.name, c);
  }
  return out;
}

Matrix<Rat> vertical_variation(const G2Element& x) {
  G2Vec<Rat> xr;
  for (int b = 0; b < kDim; ++b) {
    if (!x[b].is_zero() && !x[b].is_rational())
      fail(Err::Internal, "vertical variation expects rational coordinates");
    xr[b] = x[b].is_zero() ? Rat(0) : x[b].rational_value();
    if (!xr[b].is_zero() && basis_degree(b) < 0)
      fail(Err::StructureViolation, "vertical variation needs x in p");
  }
  const auto& cm = curvature_module();
  Matrix<Rat> m(kEDim, kEDim);
  for (int col = 0; col < kEDim; ++col) {
    auto img = chain_action(xr, cm.coeff_chains[col]);
    auto flat = flatten(img);
    for (int row = 0; row < kEDim; ++row) {
      Rat acc(0);
      for (int k = 0; k < kC2Dim; ++k)
        if (!cm.projector(row, k).is_zero() && !flat[k].is_zero())
          acc += cm.projector(row, k) * flat[k];
      m(row, col) = acc;
    }
    // The module is p-stable; confirm the image is reproduced exactly.
    for (int k = 0; k < kC2Dim; ++k) {
      Rat recon(0);
      for (int row = 0; row < kEDim; ++row)
        if (!cm.chain_matrix(k, row).is_zero() && !m(row, col).is_zero())
          recon += cm.chain_matrix(k, row) * m(row, col);
      if (recon != flat[k]) fail(Err::NotInE, "action image left the curvature module");
    }
  }
  return m;
}

Covariants quartic_covariants(const Cochain2<Scalar>& kappa) {
  auto coords = curvature_coefficients(kappa);
  Covariants c;
  for (int k = 0; k < 5; ++k) c.F[k] = coords[k];
  for (int k = 0; k < 15; ++k) c.G[k] = coords[k];
  return c;
}

} // namespace g235
