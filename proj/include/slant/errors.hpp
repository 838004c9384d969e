#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace slant {

/// Base class of every error raised by the geometry kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The director derivative vanishes: the surface is cylindrical there and s1 is undefined.
class CylindricalDirector : public Error {
 public:
  explicit CylindricalDirector(std::optional<double> parameter = std::nullopt);
  std::optional<double> parameter() const { return parameter_; }

 private:
  std::optional<double> parameter_;
};

class NonFiniteSample : public Error {
 public:
  explicit NonFiniteSample(double parameter);
  double parameter() const { return parameter_; }

 private:
  double parameter_;
};

/// Jets with different parameter tags were combined.
class TagError : public Error {
 public:
  using Error::Error;
};

class NonOrthogonalInput : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  explicit OutOfDomain(double s1);
  double parameter() const { return parameter_; }

 private:
  double parameter_;
};

class UnknownCatalogName : public Error {
 public:
  explicit UnknownCatalogName(const std::string& name);
};

class BadParams : public Error {
 public:
  using Error::Error;
};

/// Raised by the Darboux-slant algebra auditor when κ is not constant.
class NotDarbouxSlant : public Error {
 public:
  using Error::Error;
};

}  // namespace slant
