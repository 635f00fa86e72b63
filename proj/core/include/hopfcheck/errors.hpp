#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopf {

/// Operands that do not live in the same ring, basis or module.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An operation that needs a field (inverses, kernels) was asked of a non-field.
class UnsupportedRingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A product would need a structure constant beyond the truncation degree.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested computation is outside what the engine supports (non-connected
/// antipode recursion, composite Taft index, ...).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Zoo size limits.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A presentation that fails a construction-time invariant.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A free-bialgebra generator whose coproduct is malformed.
class GeneratorError : public ConstructionError {
 public:
  GeneratorError(std::string generator, const std::string& what)
      : ConstructionError("generator '" + generator + "': " + what), generator_(std::move(generator)) {}
  const std::string& generator() const noexcept { return generator_; }

 private:
  std::string generator_;
};

/// Syntax or validation failure in an algebra-spec file or ring string.
class SpecError : public std::runtime_error {
 public:
  SpecError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line number; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hopf
