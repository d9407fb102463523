#include "g235/g2.hpp"

#include <map>
#include <sstream>

namespace g235 {

namespace {

const char* kNames[kDim] = {"f32", "f31", "f21", "f11", "f10", "f01",
                            "Z1",  "Z2",  "e01", "e10", "e11", "e21", "e31", "e32"};

const int kDegrees[kDim] = {-3, -3, -2, -1, -1, 0, 0, 0, 0, 1, 1, 2, 3, 3};

const std::pair<int, int> kWeights[kDim] = {
    {-3, -2}, {-3, -1}, {-2, -1}, {-1, -1}, {-1, 0}, {0, -1},
    {0, 0},   {0, 0},   {0, 1},   {1, 0},   {1, 1},  {2, 1},  {3, 1}, {3, 2}};

struct Entry {
  int a, b;
  std::vector<BracketTerm> terms;
};

// Upper-triangular bracket table of g = Lie(G2); rows/columns in the order
// Z1, Z2, e01, e10, e11, e21, e31, e32, f01, f10, f11, f21, f31, f32.
const std::vector<Entry>& table_entries() {
  static const std::vector<Entry> entries = {
      {Z1, E10, {{E10, 1}}},
      {Z1, E11, {{E11, 1}}},
      {Z1, E21, {{E21, 2}}},
      {Z1, E31, {{E31, 3}}},
      {Z1, E32, {{E32, 3}}},
      {Z1, F10, {{F10, -1}}},
      {Z1, F11, {{F11, -1}}},
      {Z1, F21, {{F21, -2}}},
      {Z1, F31, {{F31, -3}}},
      {Z1, F32, {{F32, -3}}},

      {Z2, E01, {{E01, 1}}},
      {Z2, E11, {{E11, 1}}},
      {Z2, E21, {{E21, 1}}},
      {Z2, E31, {{E31, 1}}},
      {Z2, E32, {{E32, 2}}},
      {Z2, F01, {{F01, -1}}},
      {Z2, F11, {{F11, -1}}},
      {Z2, F21, {{F21, -1}}},
      {Z2, F31, {{F31, -1}}},
      {Z2, F32, {{F32, -2}}},

      {E01, E10, {{E11, -1}}},
      {E01, E31, {{E32, 1}}},
      {E01, F01, {{Z1, -1}, {Z2, 2}}},
      {E01, F11, {{F10, 1}}},
      {E01, F32, {{F31, -1}}},

      {E10, E11, {{E21, 2}}},
      {E10, E21, {{E31, -3}}},
      {E10, F10, {{Z1, 2}, {Z2, -3}}},
      {E10, F11, {{F01, -3}}},
      {E10, F21, {{F11, -2}}},
      {E10, F31, {{F21, 1}}},

      {E11, E21, {{E32, 3}}},
      {E11, F01, {{E10, 1}}},
      {E11, F10, {{E01, -3}}},
      {E11, F11, {{Z1, -1}, {Z2, 3}}},
      {E11, F21, {{F10, 2}}},
      {E11, F32, {{F21, -1}}},

      {E21, F10, {{E11, -2}}},
      {E21, F11, {{E10, 2}}},
      {E21, F21, {{Z1, 1}}},
      {E21, F31, {{F10, -1}}},
      {E21, F32, {{F11, 1}}},

      {E31, F10, {{E21, 1}}},
      {E31, F21, {{E10, -1}}},
      {E31, F31, {{Z1, 1}, {Z2, -1}}},
      {E31, F32, {{F01, 1}}},

      {E32, F01, {{E31, -1}}},
      {E32, F11, {{E21, -1}}},
      {E32, F21, {{E11, 1}}},
      {E32, F31, {{E01, 1}}},
      {E32, F32, {{Z2, 1}}},

      {F01, F10, {{F11, 1}}},
      {F01, F31, {{F32, -1}}},

      {F10, F11, {{F21, -2}}},
      {F10, F21, {{F31, 3}}},

      {F11, F21, {{F32, -3}}},
  };
  return entries;
}

using SparseTable = std::array<std::array<std::vector<BracketTerm>, kDim>, kDim>;

const SparseTable& sparse_table() {
  static const SparseTable table = [] {
    SparseTable t{};
    for (const auto& e : table_entries()) {
      t[e.a][e.b] = e.terms;
      auto& neg = t[e.b][e.a];
      for (const auto& term : e.terms) neg.push_back({term.k, -term.coeff});
    }
    return t;
  }();
  return table;
}

} // namespace

const char* basis_name(int b) { return kNames[b]; }

int basis_index(const std::string& name) {
  for (int b = 0; b < kDim; ++b)
    if (name == kNames[b]) return b;
  fail(Err::UnknownLabel, "no basis vector named '" + name + "'");
}

int basis_degree(int b) { return kDegrees[b]; }

std::pair<int, int> basis_weight(int b) { return kWeights[b]; }

const std::vector<BracketTerm>& bracket_terms(int i, int j) { return sparse_table()[i][j]; }

Scalar killing_form_trace(const G2Element& x, const G2Element& y) {
  auto prod = ad_matrix(x) * ad_matrix(y);
  Scalar tr;
  for (int k = 0; k < kDim; ++k) tr += prod(k, k);
  return tr;
}

std::string vec_str(const G2Element& v) {
  std::ostringstream os;
  bool first = true;
  for (int b = 0; b < kDim; ++b) {
    if (v[b].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << v[b].str() << ")*" << kNames[b];
  }
  return first ? "0" : os.str();
}

RootDatum RootDatum::standard() {
  RootDatum d;
  d.positive_roots = {{0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  d.cartan = {{{2, -1}, {-3, 2}}};
  d.fundamental_weights = {{{2, 1}, {3, 2}}};
  d.hstar_pairing = pairing_from_killing();
  return d;
}

std::array<std::array<Rat, 2>, 2> RootDatum::pairing_from_killing() {
  // Invert B|_h = ((48,24),(24,16)) in the basis {Z1, Z2}; {a1,a2} is the dual basis.
  Matrix<Scalar> bh(2, 2);
  bh(0, 0) = Scalar(48);
  bh(0, 1) = bh(1, 0) = Scalar(24);
  bh(1, 1) = Scalar(16);
  auto inv = bh.inverse();
  std::array<std::array<Rat, 2>, 2> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = inv(i, j).rational_value();
  return out;
}

std::pair<int, int> root_of(int b) {
  if (b == Z1 || b == Z2) fail(Err::UnknownLabel, "Cartan element has no root");
  return kWeights[b];
}

int root_vector(int s, int t) {
  for (int b = 0; b < kDim; ++b) {
    if (b == Z1 || b == Z2) continue;
    if (kWeights[b].first == s && kWeights[b].second == t) return b;
  }
  return -1;
}

Rep7::Rep7() : g_(7, 7) {
  const Scalar w = Scalar::alpha(Rat(2)); // sqrt(2)
  for (int b = 0; b < kDim; ++b) rho_[b] = Matrix<Scalar>(7, 7);
  auto put = [&](int b, int i, int j, Scalar v) { rho_[b](i - 1, j - 1) = v; };

  // Entries read off the matrix realization: row/col 1..7.
  put(Z1, 1, 1, Scalar(2)); put(Z1, 2, 2, Scalar(1)); put(Z1, 3, 3, Scalar(1));
  put(Z1, 5, 5, Scalar(-1)); put(Z1, 6, 6, Scalar(-1)); put(Z1, 7, 7, Scalar(-2));
  put(Z2, 1, 1, Scalar(1)); put(Z2, 2, 2, Scalar(1)); put(Z2, 6, 6, Scalar(-1)); put(Z2, 7, 7, Scalar(-1));

  put(F10, 2, 1, Scalar(1)); put(F10, 4, 3, -w); put(F10, 5, 4, w); put(F10, 7, 6, Scalar(-1));
  put(F11, 3, 1, Scalar(1)); put(F11, 4, 2, w); put(F11, 6, 4, -w); put(F11, 7, 5, Scalar(-1));
  put(F21, 4, 1, w); put(F21, 5, 2, Scalar(-1)); put(F21, 6, 3, Scalar(1)); put(F21, 7, 4, -w);
  put(F31, 5, 1, Scalar(1)); put(F31, 7, 3, Scalar(-1));
  put(F32, 6, 1, Scalar(1)); put(F32, 7, 2, Scalar(-1));
  put(F01, 3, 2, Scalar(1)); put(F01, 6, 5, Scalar(-1));

  put(E10, 1, 2, Scalar(1)); put(E10, 3, 4, -w); put(E10, 4, 5, w); put(E10, 6, 7, Scalar(-1));
  put(E11, 1, 3, Scalar(1)); put(E11, 2, 4, w); put(E11, 4, 6, -w); put(E11, 5, 7, Scalar(-1));
  put(E21, 1, 4, w); put(E21, 2, 5, Scalar(-1)); put(E21, 3, 6, Scalar(1)); put(E21, 4, 7, -w);
  put(E31, 1, 5, Scalar(1)); put(E31, 3, 7, Scalar(-1));
  put(E32, 1, 6, Scalar(1)); put(E32, 2, 7, Scalar(-1));
  put(E01, 2, 3, Scalar(1)); put(E01, 5, 6, Scalar(-1));

  // g = 2(v1 v7 + v2 v6 + v3 v5) + v4 v4 as a bilinear form.
  for (int i = 0; i < 7; ++i) g_(i, 6 - i) = Scalar(1);

  // Psi = v1^v4^v7 - v2^v4^v6 - v3^v4^v5 + sqrt(2)(v1^v5^v6 + v2^v3^v7).
  psi_.fill(Scalar(0));
  auto set_psi = [&](int i, int j, int k, Scalar v) {
    int p[3] = {i - 1, j - 1, k - 1};
    int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    for (int t = 0; t < 6; ++t) {
      Scalar s = (t < 3) ? v : -v;
      psi_[p[perms[t][0]] * 49 + p[perms[t][1]] * 7 + p[perms[t][2]]] = s;
    }
  };
  set_psi(1, 4, 7, Scalar(1));
  set_psi(2, 4, 6, Scalar(-1));
  set_psi(3, 4, 5, Scalar(-1));
  set_psi(1, 5, 6, w);
  set_psi(2, 3, 7, w);
}

Matrix<Scalar> Rep7::apply(const G2Element& x) const {
  Matrix<Scalar> m(7, 7);
  for (int b = 0; b < kDim; ++b) {
    if (x[b].is_zero()) continue;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        if (!rho_[b](i, j).is_zero()) m(i, j) += x[b] * rho_[b](i, j);
  }
  return m;
}

const Scalar& Rep7::psi(int i, int j, int k) const { return psi_[i * 49 + j * 7 + k]; }

Rep7::CheckReport Rep7::verify() const {
  CheckReport rep;
  for (int a = 0; a < kDim && rep.pass; ++a) {
    for (int b = 0; b < kDim; ++b) {
      auto lhs = apply(bracket(basis_vec<Scalar>(a), basis_vec<Scalar>(b)));
      Matrix<Scalar> comm = rho_[a] * rho_[b];
      auto ba = rho_[b] * rho_[a];
      bool ok = true;
      for (int i = 0; i < 7 && ok; ++i)
        for (int j = 0; j < 7; ++j)
          if (lhs(i, j) != comm(i, j) - ba(i, j)) {
            ok = false;
            break;
          }
      ++rep.bracket_pairs;
      if (!ok) {
        rep.pass = false;
        rep.witness = std::string("rho commutator mismatch at (") + kNames[a] + "," + kNames[b] + ")";
        break;
      }
    }
  }
  // Derivation action on the tensors: x.g = 0 and x.Psi = 0.
  for (int b = 0; b < kDim && rep.pass; ++b) {
    const auto& m = rho_[b];
    bool ok = true;
    for (int i = 0; i < 7 && ok; ++i)
      for (int j = 0; j < 7 && ok; ++j) {
        Scalar acc;
        for (int k = 0; k < 7; ++k) acc += m(k, i) * g_(k, j) + m(k, j) * g_(i, k);
        if (!acc.is_zero()) ok = false;
      }
    ++rep.tensor_checks;
    if (!ok) {
      rep.pass = false;
      rep.witness = std::string(kNames[b]) + " does not annihilate g";
      break;
    }
    ok = true;
    for (int i = 0; i < 7 && ok; ++i)
      for (int j = i + 1; j < 7 && ok; ++j)
        for (int k = j + 1; k < 7 && ok; ++k) {
          Scalar acc;
          for (int l = 0; l < 7; ++l)
            acc += m(l, i) * psi(l, j, k) + m(l, j) * psi(i, l, k) + m(l, k) * psi(i, j, l);
          if (!acc.is_zero()) ok = false;
        }
    ++rep.tensor_checks;
    if (!ok) {
      rep.pass = false;
      rep.witness = std::string(kNames[b]) + " does not annihilate Psi";
      break;
    }
  }
  return rep;
}

CoreReport verify_core_tables() {
  CoreReport rep;
  for (int a = 0; a < kDim && rep.jacobi_pass; ++a)
    for (int b = a + 1; b < kDim && rep.jacobi_pass; ++b)
      for (int c = b + 1; c < kDim; ++c) {
        auto va = basis_vec<Scalar>(a), vb = basis_vec<Scalar>(b), vc = basis_vec<Scalar>(c);
        auto jac = vec_add(bracket(bracket(va, vb), vc),
                           vec_add(bracket(bracket(vb, vc), va), bracket(bracket(vc, va), vb)));
        ++rep.jacobi_triples;
        if (!vec_is_zero(jac)) {
          rep.jacobi_pass = false;
          rep.witness = std::string("Jacobi fails at (") + kNames[a] + "," + kNames[b] + "," + kNames[c] + ")";
          break;
        }
      }
  for (int a = 0; a < kDim && rep.killing_pass; ++a)
    for (int b = a; b < kDim; ++b) {
      auto va = basis_vec<Scalar>(a), vb = basis_vec<Scalar>(b);
      ++rep.killing_pairs;
      if (killing_form_trace(va, vb) != killing_form(va, vb)) {
        rep.killing_pass = false;
        rep.witness = std::string("Killing trace/closed-form mismatch at (") + kNames[a] + "," + kNames[b] + ")";
        break;
      }
    }
  // h_st = [e_st, f_st] against the expected Cartan combinations.
  struct HVal { int e, f; int z1, z2; };
  const HVal hvals[] = {{E01, F01, -1, 2}, {E10, F10, 2, -3}, {E11, F11, -1, 3},
                        {E21, F21, 1, 0},  {E31, F31, 1, -1}, {E32, F32, 0, 1}};
  for (const auto& h : hvals) {
    auto v = bracket(basis_vec<Scalar>(h.e), basis_vec<Scalar>(h.f));
    auto want = zero_vec<Scalar>();
    want[Z1] = Scalar(h.z1);
    want[Z2] = Scalar(h.z2);
    if (v != want) {
      rep.h_values_pass = false;
      rep.witness = std::string("h_st mismatch for ") + kNames[h.e];
      break;
    }
  }
  auto pairing = RootDatum::pairing_from_killing();
  Rat t = rat(1, 24);
  if (pairing[0][0] != t * 2 || pairing[0][1] != t * -3 || pairing[1][0] != t * -3 ||
      pairing[1][1] != t * 6) {
    rep.hstar_pass = false;
    rep.witness = "induced pairing on h* mismatch";
  }
  return rep;
}

bool verify_root_decomposition(std::string* witness) {
  for (int b = 0; b < kDim; ++b) {
    if (b == Z1 || b == Z2) continue;
    auto [s, t] = basis_weight(b);
    auto v = basis_vec<Scalar>(b);
    auto z1v = bracket(basis_vec<Scalar>(Z1), v);
    auto z2v = bracket(basis_vec<Scalar>(Z2), v);
    if (z1v != vec_scale(Scalar(s), v) || z2v != vec_scale(Scalar(t), v)) {
      if (witness) *witness = std::string("eigenvalue mismatch for ") + basis_name(b);
      return false;
    }
  }
  return true;
}

} // namespace g235
