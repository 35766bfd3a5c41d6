#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "smb/monomial.hpp"
#include "smb/rational.hpp"

namespace smb {

/// Polynomial in the three formal Euler symbols (Ex, Ey, Ez).
class EulerPolynomial {
 public:
  using Exponents = std::array<int, 3>;

  EulerPolynomial() = default;
  explicit EulerPolynomial(const Rational& c);
  /// cx*Ex + cy*Ey + cz*Ez + c0
  static EulerPolynomial linear(const Rational& cx, const Rational& cy, const Rational& cz,
                                const Rational& c0);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  Rational evaluate(const TriDegree& d) const;
  /// Substitutes E -> E + shift.
  EulerPolynomial shifted(const DegreeShift& s) const;
  std::string to_string() const;

  friend EulerPolynomial operator*(const EulerPolynomial& a, const EulerPolynomial& b);
  friend EulerPolynomial operator+(const EulerPolynomial& a, const EulerPolynomial& b);
  friend bool operator==(const EulerPolynomial&, const EulerPolynomial&) = default;

 private:
  void add(const Exponents& e, const Rational& c);
  std::map<Exponents, Rational> coeffs_;
};

/// Rational function of the Euler operators, evaluated blockwise.
///
/// In an OperatorTerm the scalar is evaluated on the tri-degree of the input
/// monomial, before the term's actions are applied.
class EulerScalar {
 public:
  EulerScalar() : EulerScalar(Rational(1)) {}
  explicit EulerScalar(const Rational& c);
  EulerScalar(EulerPolynomial numerator, EulerPolynomial denominator);

  static EulerScalar linear(const Rational& cx, const Rational& cy, const Rational& cz,
                            const Rational& c0) {
    return EulerScalar(EulerPolynomial::linear(cx, cy, cz, c0), EulerPolynomial(Rational(1)));
  }

  bool is_constant() const { return constant_.has_value(); }
  const Rational& constant_value() const { return *constant_; }
  bool is_zero() const { return num_.is_zero(); }

  /// nullopt when the denominator vanishes at d.
  std::optional<Rational> evaluate(const TriDegree& d) const;
  EulerScalar inverse() const;
  EulerScalar shifted(const DegreeShift& s) const;
  std::string to_string() const;

  friend EulerScalar operator*(const EulerScalar& a, const EulerScalar& b);

 private:
  void refresh();

  EulerPolynomial num_;
  EulerPolynomial den_;
  std::optional<Rational> constant_;
};

}  // namespace smb
