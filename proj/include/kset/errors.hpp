#ifndef KSET_ERRORS_HPP
#define KSET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kset {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Input has the wrong shape (non-square matrix, length mismatch, ...).
class shape_error : public error {
 public:
  explicit shape_error(const std::string& what) : error(what) {}
};

/// Arguments outside an operation's domain (empty set, K out of range, ...).
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what) {}
};

/// A matrix failed a metric (D1-D4) or cohesion (C1-C3) axiom.
class axiom_error : public error {
 public:
  explicit axiom_error(const std::string& what) : error(what) {}
};

/// Malformed file contents; message carries "path:line:" where known.
class data_error : public error {
 public:
  explicit data_error(const std::string& what) : error(what) {}
};

}  // namespace kset

#endif  // KSET_ERRORS_HPP
