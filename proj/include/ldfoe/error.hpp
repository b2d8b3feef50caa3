#ifndef LDFOE_ERROR_HPP_
#define LDFOE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ldfoe {

// Base of every error the solver reports. Nothing is clamped silently: an
// inadmissible state aborts whatever operation produced it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPositiveDensity : public Error {
 public:
  explicit NonPositiveDensity(double rho);
  double density() const { return rho_; }

 private:
  double rho_;
};

class NegativePressure : public Error {
 public:
  explicit NegativePressure(double p);
  double pressure() const { return p_; }

 private:
  double p_;
};

// Raised by the residual when a quadrature-point state is inadmissible.
// stage is the Runge-Kutta stage (1..3) or -1 when evaluated standalone.
class NonFiniteResidual : public Error {
 public:
  NonFiniteResidual(int cell, int stage, const std::string& what);
  int cell() const { return cell_; }
  int stage() const { return stage_; }

 private:
  int cell_;
  int stage_;
};

class NonFiniteSpeed : public Error {
 public:
  explicit NonFiniteSpeed(int cell);
  int cell() const { return cell_; }

 private:
  int cell_;
};

class InadmissibleInitialData : public Error {
 public:
  using Error::Error;
};

class NonPositiveError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ldfoe

#endif  // LDFOE_ERROR_HPP_
