#include "smb/linear_operator.hpp"

#include <cstdint>
#include <utility>

namespace smb {

DegreeShift OperatorTerm::shift() const {
  DegreeShift s;
  for (const auto& a : actions) {
    const int d = a.kind == ElementaryAction::Kind::MultiplyVar ? 1 : -1;
    switch (a.var.block) {
      case VarBlock::X: s.dx += d; break;
      case VarBlock::Y: s.dy += d; break;
      case VarBlock::Z: s.dz += d; break;
    }
  }
  return s;
}

std::string OperatorTerm::to_string() const {
  std::string out = coefficient.to_string();
  // Printed right-to-left so the string reads as an operator product.
  for (auto it = actions.rbegin(); it != actions.rend(); ++it) {
    out += "*";
    out += it->kind == ElementaryAction::Kind::DeriveVar ? "d_" + it->var.name() : it->var.name();
  }
  return out;
}

LinearOperator LinearOperator::identity() {
  return LinearOperator("1", {OperatorTerm{EulerScalar(Rational(1)), {}}});
}

LinearOperator LinearOperator::scalar(const EulerScalar& s, std::string label) {
  return LinearOperator(std::move(label), {OperatorTerm{s, {}}});
}

LinearOperator LinearOperator::multiply(VariableId v) {
  return LinearOperator(v.name(), {OperatorTerm{EulerScalar(), {ElementaryAction::mul(v)}}});
}

LinearOperator LinearOperator::derive(VariableId v) {
  return LinearOperator("d_" + v.name(), {OperatorTerm{EulerScalar(), {ElementaryAction::der(v)}}});
}

LinearOperator LinearOperator::with_label(std::string label) const {
  LinearOperator out = *this;
  out.label_ = std::move(label);
  return out;
}

LinearOperator LinearOperator::scaled(const Rational& c) const {
  LinearOperator out = *this;
  out.label_ = c.get_str() + "*(" + label_ + ")";
  if (c == 0) {
    out.terms_.clear();
    return out;
  }
  for (auto& t : out.terms_) t.coefficient = EulerScalar(c) * t.coefficient;
  return out;
}

LinearOperator& LinearOperator::operator+=(const LinearOperator& other) {
  label_ = "(" + label_ + " + " + other.label_ + ")";
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

LinearOperator& LinearOperator::operator-=(const LinearOperator& other) {
  label_ = "(" + label_ + " - " + other.label_ + ")";
  for (const auto& t : other.terms_) {
    terms_.push_back(OperatorTerm{EulerScalar(Rational(-1)) * t.coefficient, t.actions});
  }
  return *this;
}

SingularEulerDenominator::SingularEulerDenominator(const std::string& term, const TriDegree& degree)
    : std::domain_error("singular Euler denominator in term " + term + " on tri-degree " +
                        degree.to_string()),
      degree_(degree) {}

namespace {

struct ScalarCache {
  std::vector<std::pair<TriDegree, Rational>> entries;

  const Rational& get(const OperatorTerm& term, const TriDegree& d) {
    for (const auto& [deg, value] : entries)
      if (deg == d) return value;
    auto v = term.coefficient.evaluate(d);
    if (!v) throw SingularEulerDenominator(term.to_string(), d);
    entries.emplace_back(d, std::move(*v));
    return entries.back().second;
  }
};

void apply_term(const OperatorTerm& term, const Polynomial& p, std::vector<Polynomial::Term>& out) {
  if (term.coefficient.is_zero()) return;
  const bool constant = term.coefficient.is_constant();
  ScalarCache cache;
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial m = mono;
    std::int64_t factor = 1;
    bool vanished = false;
    for (const auto& a : term.actions) {
      const int slot = a.var.slot();
      if (a.kind == ElementaryAction::Kind::DeriveVar) {
        const int e = m.lower_slot(slot);
        if (e == 0) {
          vanished = true;
          break;
        }
        factor *= e;
      } else {
        m.raise_slot(slot);
      }
    }
    if (vanished) continue;
    Rational c = coeff;
    if (factor != 1) c *= static_cast<long>(factor);
    if (constant) {
      const Rational& s = term.coefficient.constant_value();
      if (s != 1) c *= s;
    } else {
      c *= cache.get(term, mono.tri_degree());
    }
    if (c != 0) out.emplace_back(m, std::move(c));
  }
}

}  // namespace

Polynomial apply(const LinearOperator& op, const Polynomial& p) {
  std::vector<Polynomial::Term> out;
  out.reserve(op.terms().size() * p.size());
  for (const auto& term : op.terms()) apply_term(term, p, out);
  return Polynomial::from_terms(std::move(out));
}

Polynomial apply(const LinearOperator& op, const Monomial& mono) {
  return apply(op, Polynomial::from_monomial(mono));
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  std::vector<OperatorTerm> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      OperatorTerm t;
      t.actions = tb.actions;
      t.actions.insert(t.actions.end(), ta.actions.begin(), ta.actions.end());
      // ta's scalar sees the output degree of tb.
      t.coefficient = tb.coefficient * ta.coefficient.shifted(tb.shift());
      terms.push_back(std::move(t));
    }
  }
  return LinearOperator(a.label() + "*" + b.label(), std::move(terms));
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
  return (compose(a, b) - compose(b, a)).with_label("[" + a.label() + "," + b.label() + "]");
}

Polynomial commutator_apply(const LinearOperator& a, const LinearOperator& b, const Polynomial& p) {
  return apply(a, apply(b, p)) - apply(b, apply(a, p));
}

std::optional<Monomial> first_difference_on(const LinearOperator& a, const LinearOperator& b,
                                            const Block& blk) {
  for (const auto& mono : blk.basis()) {
    if (apply(a, mono) != apply(b, mono)) return mono;
  }
  return std::nullopt;
}

bool operators_equal_on(const LinearOperator& a, const LinearOperator& b, const Block& blk) {
  return !first_difference_on(a, b, blk).has_value();
}

std::set<TriDegree> image_degrees(const LinearOperator& op, const std::set<TriDegree>& domain) {
  std::set<TriDegree> out;
  for (const auto& t : op.terms()) {
    const DegreeShift s = t.shift();
    for (const auto& d : domain) {
      const TriDegree e = d + s;
      if (e.valid()) out.insert(e);
    }
  }
  return out;
}

namespace ops {

namespace {
LinearOperator sum_terms(std::string label, int m, ElementaryAction::Kind k1, VarBlock u,
                         ElementaryAction::Kind k2, VarBlock v) {
  std::vector<OperatorTerm> terms;
  for (int j = 1; j <= m; ++j) {
    // Second factor acts first: <u, d_v> = sum u_j d_{v_j}.
    terms.push_back(OperatorTerm{EulerScalar(), {ElementaryAction{k2, VariableId{v, j}},
                                                 ElementaryAction{k1, VariableId{u, j}}}});
  }
  return LinearOperator(std::move(label), std::move(terms));
}

std::string letter(VarBlock b) { return std::string(1, block_letter(b)); }
}  // namespace

LinearOperator mult_mult(int m, VarBlock u, VarBlock v) {
  using K = ElementaryAction::Kind;
  return sum_terms("<" + letter(u) + "," + letter(v) + ">", m, K::MultiplyVar, u, K::MultiplyVar, v);
}

LinearOperator mult_der(int m, VarBlock u, VarBlock v) {
  using K = ElementaryAction::Kind;
  return sum_terms("<" + letter(u) + ",d_" + letter(v) + ">", m, K::MultiplyVar, u, K::DeriveVar, v);
}

LinearOperator der_der(int m, VarBlock u, VarBlock v) {
  using K = ElementaryAction::Kind;
  return sum_terms("<d_" + letter(u) + ",d_" + letter(v) + ">", m, K::DeriveVar, u, K::DeriveVar, v);
}

LinearOperator euler(int m, VarBlock u) { return mult_der(m, u, u).with_label("E_" + letter(u)); }
LinearOperator laplacian(int m, VarBlock u) { return der_der(m, u, u).with_label("Delta_" + letter(u)); }
LinearOperator norm2(int m, VarBlock u) { return mult_mult(m, u, u).with_label("|" + letter(u) + "|^2"); }

LinearOperator angular(VarBlock u, int a, int b) {
  const VariableId ua{u, a};
  const VariableId ub{u, b};
  return LinearOperator(
      "L" + letter(u) + "_" + std::to_string(a) + "_" + std::to_string(b),
      {OperatorTerm{EulerScalar(), {ElementaryAction::der(ub), ElementaryAction::mul(ua)}},
       OperatorTerm{EulerScalar(Rational(-1)), {ElementaryAction::der(ua), ElementaryAction::mul(ub)}}});
}

}  // namespace ops

}  // namespace smb
