#ifndef ZETA_ERRORS_HPP
#define ZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zeta {

// Argument exceeds a configured table/representation limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Integrand produced a non-finite value; carries the offending abscissa.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

// Semi-infinite integrand whose tail samples do not shrink.
class NonDecayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zeta

#endif
