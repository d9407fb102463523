#include "g235/rational.hpp"

namespace g235 {

const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::IncompatibleExtensions: return "IncompatibleExtensions";
    case Err::InvalidExtension: return "InvalidExtension";
    case Err::NotReal: return "NotReal";
    case Err::NotInFiltrand: return "NotInFiltrand";
    case Err::NotNilpotent: return "NotNilpotent";
    case Err::NotInG0: return "NotInG0";
    case Err::NotInE: return "NotInE";
    case Err::ZeroQuartic: return "ZeroQuartic";
    case Err::UnknownLabel: return "UnknownLabel";
    case Err::RealityViolation: return "RealityViolation";
    case Err::StructureViolation: return "StructureViolation";
    case Err::NotClosed: return "NotClosed";
    case Err::NotRealMatrix: return "NotRealMatrix";
    case Err::ExceptionalRatio: return "ExceptionalRatio";
    case Err::HolonomicRatio: return "HolonomicRatio";
    case Err::ResidualNonzero: return "ResidualNonzero";
    case Err::ReportedFailure: return "ReportedFailure";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "Error";
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(Err::ParseError, "empty rational literal");
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = (s[pos] == '-');
    ++pos;
  }
  auto digits = [&](Int& out) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail(Err::ParseError, "bad rational literal '" + s + "'");
    Int v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    out = v;
  };
  Int num, den = 1;
  digits(num);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    digits(den);
    if (den == 0) fail(Err::ParseError, "zero denominator in '" + s + "'");
  }
  if (pos != s.size()) fail(Err::ParseError, "trailing characters in '" + s + "'");
  Rat q(num);
  q /= Rat(den);
  return neg ? Rat(-q) : q;
}

std::string rat_str(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

bool rational_square_root(const Rat& q, Rat* root) {
  if (q.sign() < 0) return false;
  Int n = numerator(q), d = denominator(q);
  Int sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  if (root) {
    Rat r(sn);
    r /= Rat(sd);
    *root = r;
  }
  return true;
}

void sqrt_bounds(const Rat& q, int prec, Rat& lo, Rat& hi) {
  if (q.sign() < 0) fail(Err::NotReal, "sqrt of negative rational");
  // sqrt(p/d) = sqrt(p*d)/d; scale by 4^prec to tighten floor-sqrt bounds.
  Int n = numerator(q) * denominator(q);
  Int scale = Int(1) << prec;
  Int scaled = n * scale * scale;
  Int s = sqrt(scaled);
  Rat den = Rat(denominator(q) * scale);
  lo = Rat(s) / den;
  hi = Rat(s + 1) / den;
}

} // namespace g235
