#pragma once

#include <string>
#include <vector>

#include "orbconf/exactfield.hpp"

namespace orbconf {

/// Integer polynomial, ascending degree, trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial monomial(int degree, Integer coeff = 1);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int k) const;

  Integer eval(const Integer& t) const;
  Rational eval(const Rational& t) const;

  std::string str(char var = 't') const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace orbconf
