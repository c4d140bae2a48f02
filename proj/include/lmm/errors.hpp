#pragma once

#include <stdexcept>
#include <string>

namespace lmm {

// All engine errors derive from Error so callers can catch the family.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LogDegreeError : public Error {
 public:
  LogDegreeError() : Error("product would contain (log y1)^2") {}
};

class UnboundGenerator : public Error {
 public:
  explicit UnboundGenerator(const std::string& names)
      : Error("unbound generators: " + names), missing(names) {}
  std::string missing;
};

class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroGuard : public Error {
 public:
  using Error::Error;
};

class ExcludedCase : public Error {
 public:
  ExcludedCase(int k, int h)
      : Error("(k,h) = (" + std::to_string(k) + "," + std::to_string(h) +
              ") is one of the excluded special cases") {}
};

class LogPresent : public Error {
 public:
  LogPresent() : Error("loop operator applied to an expression containing log y1") {}
};

class SeedMissing : public Error {
 public:
  using Error::Error;
};

// A term reaching the residue identity without exactly two propagators at x.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class NoOneCutSolution : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class OnCutError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lmm
