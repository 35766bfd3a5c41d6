#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "smb/block.hpp"
#include "smb/euler_scalar.hpp"
#include "smb/polynomial.hpp"

namespace smb {

struct ElementaryAction {
  enum class Kind : std::uint8_t { MultiplyVar, DeriveVar };
  Kind kind = Kind::MultiplyVar;
  VariableId var;

  static ElementaryAction mul(VariableId v) { return {Kind::MultiplyVar, v}; }
  static ElementaryAction der(VariableId v) { return {Kind::DeriveVar, v}; }
};

/// coefficient(input tri-degree) * (actions applied in list order).
struct OperatorTerm {
  EulerScalar coefficient;
  std::vector<ElementaryAction> actions;

  DegreeShift shift() const;
  std::string to_string() const;
};

/// Finite sum of elementary terms. Composition is kept lazy (term lists are
/// concatenated); identities between operators are checked extensionally.
class LinearOperator {
 public:
  LinearOperator() = default;
  LinearOperator(std::string label, std::vector<OperatorTerm> terms)
      : label_(std::move(label)), terms_(std::move(terms)) {}

  static LinearOperator identity();
  static LinearOperator zero() { return LinearOperator("0", {}); }
  static LinearOperator scalar(const EulerScalar& s, std::string label);
  static LinearOperator multiply(VariableId v);
  static LinearOperator derive(VariableId v);

  const std::string& label() const { return label_; }
  const std::vector<OperatorTerm>& terms() const { return terms_; }
  LinearOperator with_label(std::string label) const;
  LinearOperator scaled(const Rational& c) const;

  LinearOperator& operator+=(const LinearOperator& other);
  LinearOperator& operator-=(const LinearOperator& other);
  friend LinearOperator operator+(LinearOperator a, const LinearOperator& b) { return a += b; }
  friend LinearOperator operator-(LinearOperator a, const LinearOperator& b) { return a -= b; }
  friend LinearOperator operator*(const Rational& c, const LinearOperator& a) { return a.scaled(c); }

 private:
  std::string label_;
  std::vector<OperatorTerm> terms_;
};

/// Raised when an Euler-scalar coefficient has a vanishing denominator on a
/// block where its term acts nontrivially.
class SingularEulerDenominator : public std::domain_error {
 public:
  SingularEulerDenominator(const std::string& term, const TriDegree& degree);
  const TriDegree& degree() const { return degree_; }

 private:
  TriDegree degree_;
};

Polynomial apply(const LinearOperator& op, const Polynomial& p);
Polynomial apply(const LinearOperator& op, const Monomial& mono);

/// a after b.
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

/// a(b(p)) - b(a(p)) evaluated by successive application.
Polynomial commutator_apply(const LinearOperator& a, const LinearOperator& b, const Polynomial& p);

bool operators_equal_on(const LinearOperator& a, const LinearOperator& b, const Block& blk);
/// First basis monomial of blk on which a and b differ.
std::optional<Monomial> first_difference_on(const LinearOperator& a, const LinearOperator& b,
                                             const Block& blk);

/// Tri-degrees reachable from the given ones by at least one term.
std::set<TriDegree> image_degrees(const LinearOperator& op, const std::set<TriDegree>& domain);

/// Rotation-invariant building blocks in the vector variables u, v.
namespace ops {
LinearOperator mult_mult(int m, VarBlock u, VarBlock v);  ///< <u, v>
LinearOperator mult_der(int m, VarBlock u, VarBlock v);   ///< <u, d_v>
LinearOperator der_der(int m, VarBlock u, VarBlock v);    ///< <d_u, d_v>
LinearOperator euler(int m, VarBlock u);                  ///< E_u
LinearOperator laplacian(int m, VarBlock u);              ///< Delta_u
LinearOperator norm2(int m, VarBlock u);                  ///< |u|^2
/// u_a d_{u_b} - u_b d_{u_a}
LinearOperator angular(VarBlock u, int a, int b);
}  // namespace ops

}  // namespace smb
