#pragma once

#include <stdexcept>
#include <string>

namespace g235 {

enum class Err {
  DivisionByZero,
  IncompatibleExtensions,
  InvalidExtension,
  NotReal,
  NotInFiltrand,
  NotNilpotent,
  NotInG0,
  NotInE,
  ZeroQuartic,
  UnknownLabel,
  RealityViolation,
  StructureViolation,
  NotClosed,
  NotRealMatrix,
  ExceptionalRatio,
  HolonomicRatio,
  ResidualNonzero,
  ReportedFailure,
  ParseError,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace g235
