#pragma once

#include <string>
#include <vector>

#include "g235/scalar.hpp"

namespace g235 {

/// Small abstract complex Lie algebra with named basis and explicit table.
struct AbstractLie {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<Scalar>>> sc; // sc[i][j] = bracket coords

  explicit AbstractLie(std::vector<std::string> n) : names(std::move(n)) {
    sc.assign(names.size(), std::vector<std::vector<Scalar>>(
                                names.size(), std::vector<Scalar>(names.size(), Scalar(0))));
  }
  int index(const std::string& n) const {
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == n) return static_cast<int>(k);
    fail(Err::UnknownLabel, "no abstract basis vector " + n);
  }
  void set(const std::string& a, const std::string& b,
           std::initializer_list<std::pair<std::string, Scalar>> rhs) {
    int i = index(a), j = index(b);
    for (const auto& [name, coef] : rhs) {
      sc[i][j][index(name)] = coef;
      sc[j][i][index(name)] = -coef;
    }
  }
  std::vector<Scalar> vec(std::initializer_list<std::pair<std::string, Scalar>> terms) const {
    std::vector<Scalar> out(names.size(), Scalar(0));
    for (const auto& [n, c] : terms) out[index(n)] += c;
    return out;
  }
  std::vector<Scalar> bracket_vec(const std::vector<Scalar>& x,
                                  const std::vector<Scalar>& y) const {
    std::size_t n = names.size();
    std::vector<Scalar> out(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (!sc[i][j][k].is_zero()) out[k] += x[i] * y[j] * sc[i][j][k];
      }
    }
    return out;
  }
  bool jacobi_ok() const {
    std::size_t n = names.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          std::vector<Scalar> ea(n, Scalar(0)), eb(n, Scalar(0)), ec(n, Scalar(0));
          ea[a] = Scalar(1);
          eb[b] = Scalar(1);
          ec[c] = Scalar(1);
          auto s = bracket_vec(bracket_vec(ea, eb), ec);
          auto t = bracket_vec(bracket_vec(eb, ec), ea);
          auto u = bracket_vec(bracket_vec(ec, ea), eb);
          for (std::size_t k = 0; k < n; ++k)
            if (!(s[k] + t[k] + u[k]).is_zero()) return false;
        }
    return true;
  }
};

/// Linear combination of abstract vectors.
inline std::vector<Scalar> lie_lin(
    std::size_t n, std::initializer_list<std::pair<const std::vector<Scalar>*, Scalar>> terms) {
  std::vector<Scalar> out(n, Scalar(0));
  for (const auto& [vecp, c] : terms)
    for (std::size_t r = 0; r < n; ++r) out[r] += c * (*vecp)[r];
  return out;
}

} // namespace g235
