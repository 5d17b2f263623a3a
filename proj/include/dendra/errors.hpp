#pragma once

#include <stdexcept>
#include <string>

namespace dendra {

/// A half-product or pre-Lie operation received an argument with a unit
/// component where the operation is undefined.
class UnitMisuse : public std::logic_error {
 public:
  explicit UnitMisuse(const std::string& what) : std::logic_error("unit misuse: " + what) {}
};

class EmptyArgumentList : public std::invalid_argument {
 public:
  explicit EmptyArgumentList(const std::string& what)
      : std::invalid_argument("empty argument list: " + what) {}
};

class InvalidPermutation : public std::invalid_argument {
 public:
  explicit InvalidPermutation(const std::string& what)
      : std::invalid_argument("invalid permutation: " + what) {}
};

class EmptyWord : public std::invalid_argument {
 public:
  explicit EmptyWord(const std::string& what) : std::invalid_argument("empty word: " + what) {}
};

/// Series constant-term preconditions of exp/log were violated.
class NormalizationError : public std::domain_error {
 public:
  explicit NormalizationError(const std::string& what)
      : std::domain_error("normalization: " + what) {}
};

/// A structure failed its dendriform axiom self-test at registration.
class StructureValidationError : public std::runtime_error {
 public:
  explicit StructureValidationError(const std::string& what)
      : std::runtime_error("structure validation failed: " + what) {}
};

class RBWeightCheckFailure : public std::runtime_error {
 public:
  explicit RBWeightCheckFailure(const std::string& what)
      : std::runtime_error("Rota-Baxter weight check failed: " + what) {}
};

/// Two carrier values with incompatible shapes were combined.
class ShapeMismatch : public std::invalid_argument {
 public:
  explicit ShapeMismatch(const std::string& what)
      : std::invalid_argument("shape mismatch: " + what) {}
};

/// A requested size exceeds the configured bound of an enumeration.
class BoundExceeded : public std::out_of_range {
 public:
  explicit BoundExceeded(const std::string& what) : std::out_of_range("bound exceeded: " + what) {}
};

}  // namespace dendra
