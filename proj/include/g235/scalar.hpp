#pragma once

#include <array>
#include <optional>
#include <string>

#include "g235/rational.hpp"

namespace g235 {

/// Element of the tower Q -> Q(i) -> Q(i)(alpha), alpha^2 = r with r a positive
/// non-square rational.  Stored as c0 + c1*i + c2*alpha + c3*i*alpha.  A negative
/// extension value declared at the API ("s" with s^2 = r < 0) is realized as
/// s = i*alpha with alpha^2 = |r|, so conjugation stays coordinate-wise.
class Scalar {
public:
  Scalar() = default;
  Scalar(long n) : c_{rat(n), Rat(0), Rat(0), Rat(0)} {}
  explicit Scalar(const Rat& q) : c_{q, Rat(0), Rat(0), Rat(0)} {}
  Scalar(const Rat& re, const Rat& im) : c_{re, im, Rat(0), Rat(0)} {}
  Scalar(const std::array<Rat, 4>& c, const std::optional<Rat>& ext);

  static Scalar i() { return Scalar(Rat(0), Rat(1)); }
  /// alpha itself, in the extension alpha^2 = r (r positive non-square).
  static Scalar alpha(const Rat& r);
  /// The adjoined root s with s^2 = r for declared r (any sign): alpha or i*alpha.
  static Scalar declared_root(const Rat& r);
  /// Square root of a rational: rational if r is a perfect square, else an
  /// extension element (i*alpha when r < 0).
  static Scalar sqrt_of(const Rat& r);

  const Rat& coord(int k) const { return c_[k]; }
  const std::optional<Rat>& ext() const { return ext_; }
  bool has_ext() const { return ext_.has_value(); }

  bool is_zero() const;
  bool is_rational() const;
  /// In Q(i), i.e. no alpha components.
  bool is_gaussian() const { return c_[2].is_zero() && c_[3].is_zero(); }
  /// In the real subfield Q(alpha): no i components.
  bool is_real() const { return c_[1].is_zero() && c_[3].is_zero(); }
  const Rat& rational_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend Scalar operator*(const Scalar& a, const Rat& q);
  friend Scalar operator*(const Rat& q, const Scalar& a) { return a * q; }
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Complex conjugation i -> -i (alpha is real, fixed).
  Scalar conj() const;
  /// Field conjugation alpha -> -alpha.
  Scalar conj_alpha() const;

  /// Exact sign of a real-subfield element; throws NotReal otherwise.
  int real_sign() const;

  /// Literal grammar: terms `p/q`, `p/q*i`, `p/q*s`, `p/q*i*s` joined by +/-.
  /// `root_imaginary` selects the convention s = i*alpha (declared s^2 < 0).
  std::string str(bool root_imaginary = false) const;
  /// Parse a literal; `declared_ext`, when set, is the declared value of s^2.
  static Scalar parse(const std::string& text, const std::optional<Rat>& declared_ext);

  double approx() const;

private:
  void normalize_ext();
  static void merge_ext(const Scalar& a, const Scalar& b, std::optional<Rat>& out);

  std::array<Rat, 4> c_{Rat(0), Rat(0), Rat(0), Rat(0)};
  std::optional<Rat> ext_; // alpha^2 = *ext_, positive non-square; absent => c2=c3=0
};

/// Validates a declared extension value r (s^2 = r): nonzero, real, |r| non-square.
void check_declared_ext(const Rat& r);

} // namespace g235
