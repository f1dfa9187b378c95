#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace slx {

enum class ErrorKind {
  config,     // invalid configuration or input file
  io,         // filesystem failure
  numerical,  // domain violations, poles, non-convergence
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& what)
      : Error(ErrorKind::io, path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(ErrorKind::numerical, what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Hopfield amplitudes undefined: zero coupling at zero detuning.
class DegenerateModeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoSolutionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class AmbiguousSolutionError : public NumericalError {
 public:
  AmbiguousSolutionError(const std::string& what, std::vector<double> candidates)
      : NumericalError(what), candidates_(std::move(candidates)) {}
  const std::vector<double>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<double> candidates_;
};

// Pump occupation fixed point did not converge; `brackets` holds the
// positive roots of the steady-state cubic when several coexist.
class BistabilityError : public NumericalError {
 public:
  BistabilityError(const std::string& what, std::vector<double> brackets)
      : NumericalError(what), brackets_(std::move(brackets)) {}
  const std::vector<double>& brackets() const noexcept { return brackets_; }

 private:
  std::vector<double> brackets_;
};

class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StabilityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Bogoliubov gap closed: (E_a~ - E)^2 <= V^2.
class InstabilityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Bogoliubov coefficients requested with E above the renormalized dark level.
class SignRegimeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SizeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace slx
