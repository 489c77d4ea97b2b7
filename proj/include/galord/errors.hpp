#pragma once

#include <stdexcept>
#include <string>

namespace galord {

struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact_divide: the dividend is not a multiple of the divisor.  The witness
// string holds the remainder at the point of failure.
struct NotDivisible : math_error {
  std::string remainder;
  explicit NotDivisible(std::string rem)
      : math_error("not divisible, remainder " + rem), remainder(std::move(rem)) {}
};

struct DenominatorVanishes : math_error {
  std::string factor;  // printed form of the vanishing denominator
  explicit DenominatorVanishes(std::string f)
      : math_error("denominator vanishes: " + f), factor(std::move(f)) {}
};

struct StabilizerViolation : math_error {
  using math_error::math_error;
};

struct NonInvertibleShift : math_error {
  using math_error::math_error;
};

struct SingularCharacter : math_error {
  std::string factor;
  std::string point;
  SingularCharacter(std::string f, std::string p)
      : math_error("singular character: factor " + f + " vanishes at " + p),
        factor(std::move(f)), point(std::move(p)) {}
};

struct SearchExhausted : math_error {
  using math_error::math_error;
};

struct EquivarianceViolation : math_error {
  using math_error::math_error;
};

struct GroupTooLarge : math_error {
  using math_error::math_error;
};

struct ParseError : math_error {
  using math_error::math_error;
};

struct ConfigError : math_error {
  using math_error::math_error;
};

}  // namespace galord
