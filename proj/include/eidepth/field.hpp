#pragma once

#include <stdexcept>
#include <string>

namespace eidepth {

/// Coefficient field for all exact linear algebra: the rationals (char 0)
/// or a prime field GF(p).
struct FieldSpec {
  long characteristic = 0;  // 0 = rationals, otherwise a prime p

  static FieldSpec rationals() { return FieldSpec{0}; }

  static FieldSpec prime_field(long p) {
    if (!is_prime(p))
      throw std::invalid_argument("prime_field: " + std::to_string(p) +
                                  " is not prime");
    return FieldSpec{p};
  }

  bool is_rationals() const { return characteristic == 0; }

  std::string name() const {
    return is_rationals() ? "Q" : "F" + std::to_string(characteristic);
  }

  bool operator==(const FieldSpec&) const = default;

  static bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }
};

/// Parses the CLI spelling: "Q", "F2", or "Fp:<prime>".
inline FieldSpec parse_field(const std::string& s) {
  if (s == "Q") return FieldSpec::rationals();
  if (s == "F2") return FieldSpec::prime_field(2);
  if (s.rfind("Fp:", 0) == 0) return FieldSpec::prime_field(std::stol(s.substr(3)));
  throw std::invalid_argument("unknown field spec '" + s + "' (expected Q, F2 or Fp:P)");
}

}  // namespace eidepth
