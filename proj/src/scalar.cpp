#include "g235/scalar.hpp"

#include <cmath>
#include <sstream>

namespace g235 {

void check_declared_ext(const Rat& r) {
  if (r.is_zero()) fail(Err::InvalidExtension, "s^2 = 0 is not a field extension");
  Rat root;
  if (rational_square_root(abs(r), &root))
    fail(Err::InvalidExtension, "|r| = " + rat_str(abs(r)) + " is a rational square; no extension needed");
}

Scalar::Scalar(const std::array<Rat, 4>& c, const std::optional<Rat>& ext) : c_(c), ext_(ext) {
  if (ext_) {
    if (ext_->sign() <= 0) fail(Err::InvalidExtension, "internal alpha^2 must be positive");
    Rat root;
    if (rational_square_root(*ext_, &root)) fail(Err::InvalidExtension, "alpha^2 is a rational square");
  }
  normalize_ext();
}

Scalar Scalar::alpha(const Rat& r) {
  return Scalar({Rat(0), Rat(0), Rat(1), Rat(0)}, r);
}

Scalar Scalar::declared_root(const Rat& r) {
  check_declared_ext(r);
  if (r.sign() > 0) return alpha(r);
  return Scalar({Rat(0), Rat(0), Rat(0), Rat(1)}, Rat(-r));
}

Scalar Scalar::sqrt_of(const Rat& r) {
  if (r.is_zero()) return Scalar(0);
  Rat root;
  if (rational_square_root(abs(r), &root)) {
    if (r.sign() > 0) return Scalar(root);
    return Scalar(Rat(0), root); // i * root
  }
  return declared_root(r);
}

void Scalar::normalize_ext() {
  if (ext_ && c_[2].is_zero() && c_[3].is_zero()) ext_.reset();
}

void Scalar::merge_ext(const Scalar& a, const Scalar& b, std::optional<Rat>& out) {
  if (a.ext_ && b.ext_ && *a.ext_ != *b.ext_)
    fail(Err::IncompatibleExtensions,
         "alpha^2 = " + rat_str(*a.ext_) + " vs alpha^2 = " + rat_str(*b.ext_));
  out = a.ext_ ? a.ext_ : b.ext_;
}

bool Scalar::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool Scalar::is_rational() const {
  return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

const Rat& Scalar::rational_value() const {
  if (!is_rational()) fail(Err::NotReal, "scalar " + str() + " is not rational");
  return c_[0];
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  merge_ext(*this, o, ext_);
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  normalize_ext();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  merge_ext(*this, o, ext_);
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  normalize_ext();
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  Scalar::merge_ext(a, b, r.ext_);
  const Rat zero(0);
  const Rat& rr = r.ext_ ? *r.ext_ : zero;
  const auto& c = a.c_;
  const auto& d = b.c_;
  r.c_[0] = c[0] * d[0] - c[1] * d[1] + rr * (c[2] * d[2] - c[3] * d[3]);
  r.c_[1] = c[0] * d[1] + c[1] * d[0] + rr * (c[2] * d[3] + c[3] * d[2]);
  r.c_[2] = c[0] * d[2] + c[2] * d[0] - c[1] * d[3] - c[3] * d[1];
  r.c_[3] = c[0] * d[3] + c[3] * d[0] + c[1] * d[2] + c[2] * d[1];
  r.normalize_ext();
  return r;
}

Scalar operator*(const Scalar& a, const Rat& q) {
  Scalar r = a;
  for (auto& x : r.c_) x *= q;
  r.normalize_ext();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero scalar");
  if (is_gaussian()) {
    Rat n = c_[0] * c_[0] + c_[1] * c_[1];
    return Scalar(c_[0] / n, -c_[1] / n);
  }
  // 1/x = conj_alpha(x) * conj_i(u) / |u|^2 with u = x * conj_alpha(x) in Q(i).
  Scalar ca = conj_alpha();
  Scalar u = (*this) * ca;
  if (!u.is_gaussian()) fail(Err::Internal, "norm down to Q(i) failed");
  Rat n = u.c_[0] * u.c_[0] + u.c_[1] * u.c_[1];
  if (n.is_zero()) fail(Err::Internal, "zero norm for nonzero scalar (degenerate extension)");
  return ca * u.conj() * Scalar(Rat(1) / n);
}

bool Scalar::operator==(const Scalar& o) const {
  for (int k = 0; k < 4; ++k)
    if (c_[k] != o.c_[k]) return false;
  // Equal coordinates with both nonzero alpha parts in different extensions is a misuse.
  if (ext_ && o.ext_ && *ext_ != *o.ext_) return false;
  return true;
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  r.c_[1] = -r.c_[1];
  r.c_[3] = -r.c_[3];
  return r;
}

Scalar Scalar::conj_alpha() const {
  Scalar r = *this;
  r.c_[2] = -r.c_[2];
  r.c_[3] = -r.c_[3];
  return r;
}

int Scalar::real_sign() const {
  if (!c_[1].is_zero() || !c_[3].is_zero()) fail(Err::NotReal, "scalar " + str() + " has imaginary part");
  const Rat& a = c_[0];
  const Rat& b = c_[2];
  if (b.is_zero()) return a.sign();
  const Rat& r = *ext_;
  if (a.is_zero()) return b.sign();
  if (a.sign() == b.sign()) return a.sign();
  // Opposite signs: compare a^2 against b^2 r; they cannot be equal since r is non-square.
  Rat lhs = a * a, rhs = b * b * r;
  if (lhs == rhs) return 0;
  return lhs > rhs ? a.sign() : b.sign();
}

std::string Scalar::str(bool root_imaginary) const {
  if (is_zero()) return "0";
  std::array<Rat, 4> out = c_;
  if (root_imaginary) {
    // alpha = -i*s when s = i*alpha: c2*alpha + c3*i*alpha = c3*s - c2*i*s.
    out[2] = c_[3];
    out[3] = -c_[2];
  }
  std::ostringstream os;
  static const char* tag[4] = {"", "*i", "*s", "*i*s"};
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (out[k].is_zero()) continue;
    Rat v = out[k];
    if (first) {
      if (v.sign() < 0) {
        os << "-";
        v = -v;
      }
      first = false;
    } else {
      os << (v.sign() < 0 ? "-" : "+");
      if (v.sign() < 0) v = -v;
    }
    os << rat_str(v) << tag[k];
  }
  return os.str();
}

Scalar Scalar::parse(const std::string& text, const std::optional<Rat>& declared_ext) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) fail(Err::ParseError, "empty scalar literal");

  std::optional<Rat> internal_ext;
  bool root_imaginary = false;
  if (declared_ext) {
    check_declared_ext(*declared_ext);
    internal_ext = abs(*declared_ext);
    root_imaginary = declared_ext->sign() < 0;
  }

  Scalar acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sgn = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sgn = -1;
      ++pos;
    } else if (pos != 0) {
      fail(Err::ParseError, "expected '+' or '-' in '" + text + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) fail(Err::ParseError, "empty term in '" + text + "'");

    // Strip suffixes: grammar order is p/q[*i][*s].
    bool has_i = false, has_s = false;
    if (term.size() >= 2 && term.compare(term.size() - 2, 2, "*s") == 0) {
      has_s = true;
      term.erase(term.size() - 2);
    }
    if (term.size() >= 2 && term.compare(term.size() - 2, 2, "*i") == 0) {
      has_i = true;
      term.erase(term.size() - 2);
    }
    if (term == "i" && !has_i) { has_i = true; term = "1"; }
    if (term == "s" && !has_s) { has_s = true; term = "1"; }
    Rat coef = parse_rat(term);
    if (sgn < 0) coef = -coef;
    if (has_s && !internal_ext) fail(Err::ParseError, "literal uses 's' but no --ext declared");

    std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};
    int slot;
    if (!has_s) {
      slot = has_i ? 1 : 0;
    } else if (!root_imaginary) {
      slot = has_i ? 3 : 2;
    } else {
      // s = i*alpha: p*s -> p at slot 3;  p*i*s = -p*alpha -> -p at slot 2.
      slot = has_i ? 2 : 3;
      if (has_i) coef = -coef;
    }
    c[slot] = coef;
    acc += Scalar(c, has_s ? internal_ext : std::nullopt);
  }
  return acc;
}

double Scalar::approx() const {
  double a = c_[0].convert_to<double>();
  double b = c_[1].convert_to<double>();
  double sq = ext_ ? std::sqrt(ext_->convert_to<double>()) : 0.0;
  a += c_[2].convert_to<double>() * sq;
  b += c_[3].convert_to<double>() * sq;
  if (b != 0.0) fail(Err::NotReal, "approx of non-real scalar");
  return a;
}

} // namespace g235
