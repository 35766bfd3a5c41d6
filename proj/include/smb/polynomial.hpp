#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smb/monomial.hpp"
#include "smb/rational.hpp"

namespace smb {

/// Sparse polynomial in the 3m real variables with exact rational coefficients.
/// Terms are kept sorted in canonical monomial order with no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(const Rational& constant);

  static Polynomial from_monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial variable(VariableId v) { return from_monomial(Monomial::variable(v)); }
  /// Accepts terms in any order, with repeats and zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Canonical text, e.g. "3/2*x1*z2^2 - y1"; zero renders as "0".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Exact partial derivative.
Polynomial differentiate(const Polynomial& p, VariableId v);
/// Product with a single variable.
Polynomial multiply_by(const Polynomial& p, VariableId v);
/// Splits p into its tri-homogeneous components.
std::map<TriDegree, Polynomial> tri_degree_components(const Polynomial& p);

/// Parses the canonical text form ("2*x1*y2^2 - 1/3*z1 + 4"); accepts
/// coefficients anywhere in a product.
Polynomial parse_polynomial(std::string_view text);

}  // namespace smb
