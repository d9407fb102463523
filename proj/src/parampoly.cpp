#include "g235/parampoly.hpp"

#include <sstream>

namespace g235 {

void ParamPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.size() <= 1) name_.clear();
}

std::string ParamPoly::merge_names(const ParamPoly& a, const ParamPoly& b) {
  if (a.name_.empty()) return b.name_;
  if (b.name_.empty()) return a.name_;
  if (a.name_ != b.name_)
    fail(Err::Internal, "mixing parameters '" + a.name_ + "' and '" + b.name_ + "'");
  return a.name_;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  name_ = merge_names(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  name_ = merge_names(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.name_ = ParamPoly::merge_names(a, b);
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.trim();
  return r;
}

bool ParamPoly::operator==(const ParamPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != o.coeffs_[k]) return false;
  return true;
}

Scalar ParamPoly::eval(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string ParamPoly::str() const {
  if (is_zero()) return "0";
  std::string v = name_.empty() ? "t" : name_;
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = coeffs_[k].str();
    if (k == 0) {
      os << c;
    } else {
      if (c == "1")
        ;
      else if (c.find('+') != std::string::npos || c.find('-') != std::string::npos || c.find('*') != std::string::npos)
        os << "(" << c << ")*";
      else
        os << c << "*";
      os << v;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

} // namespace g235
