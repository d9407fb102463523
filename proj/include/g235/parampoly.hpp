#pragma once

#include <string>
#include <vector>

#include "g235/scalar.hpp"

namespace g235 {

/// Univariate polynomial over Q(i) in one formal parameter (e.g. "a" or "c").
/// Leading coefficient is nonzero unless the polynomial is zero.
class ParamPoly {
public:
  ParamPoly() = default;
  ParamPoly(long n) { if (n != 0) coeffs_.push_back(Scalar(n)); }
  explicit ParamPoly(const Scalar& s) { if (!s.is_zero()) coeffs_.push_back(s); }
  static ParamPoly var(const std::string& name) {
    ParamPoly p;
    p.name_ = name;
    p.coeffs_ = {Scalar(0), Scalar(1)};
    return p;
  }

  const std::string& name() const { return name_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Scalar coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Scalar(0);
  }
  Scalar constant_value() const { return coeff(0); }

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  friend ParamPoly operator*(const ParamPoly& a, const Rat& q) { return a * ParamPoly(Scalar(q)); }
  friend ParamPoly operator*(const Rat& q, const ParamPoly& a) { return a * q; }
  bool operator==(const ParamPoly& o) const;
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  Scalar eval(const Scalar& x) const;
  std::string str() const;

private:
  void trim();
  static std::string merge_names(const ParamPoly& a, const ParamPoly& b);

  std::string name_;                 // empty for constants
  std::vector<Scalar> coeffs_;       // coeffs_[k] multiplies name^k
};

} // namespace g235
