#include "smb/euler_scalar.hpp"

#include <stdexcept>
#include <vector>

namespace smb {

EulerPolynomial::EulerPolynomial(const Rational& c) {
  if (c != 0) coeffs_[{0, 0, 0}] = c;
}

EulerPolynomial EulerPolynomial::linear(const Rational& cx, const Rational& cy,
                                        const Rational& cz, const Rational& c0) {
  EulerPolynomial p;
  p.add({1, 0, 0}, cx);
  p.add({0, 1, 0}, cy);
  p.add({0, 0, 1}, cz);
  p.add({0, 0, 0}, c0);
  return p;
}

void EulerPolynomial::add(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool EulerPolynomial::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == Exponents{0, 0, 0});
}

Rational EulerPolynomial::evaluate(const TriDegree& d) const {
  const std::array<int, 3> v{d.kx, d.ky, d.kz};
  Rational sum = 0;
  for (const auto& [e, c] : coeffs_) {
    Rational term = c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) term *= v[i];
    sum += term;
  }
  return sum;
}

EulerPolynomial EulerPolynomial::shifted(const DegreeShift& s) const {
  if (s.dx == 0 && s.dy == 0 && s.dz == 0) return *this;
  const std::array<int, 3> delta{s.dx, s.dy, s.dz};
  // (E_i + d)^e = sum_j C(e,j) d^(e-j) E_i^j, expanded per symbol.
  EulerPolynomial out;
  for (const auto& [e, c] : coeffs_) {
    std::array<std::vector<Rational>, 3> expansions;
    for (int i = 0; i < 3; ++i) {
      std::vector<Rational>& row = expansions[i];
      row.assign(e[i] + 1, 0);
      Rational binom = 1;
      for (int j = 0; j <= e[i]; ++j) {
        // coefficient of E^(e-j) is C(e,j) d^j
        Rational pw = 1;
        for (int k = 0; k < j; ++k) pw *= delta[i];
        row[e[i] - j] = binom * pw;
        binom = binom * (e[i] - j) / (j + 1);
      }
    }
    for (int a = 0; a <= e[0]; ++a)
      for (int b = 0; b <= e[1]; ++b)
        for (int g = 0; g <= e[2]; ++g)
          out.add({a, b, g}, c * expansions[0][a] * expansions[1][b] * expansions[2][g]);
  }
  return out;
}

EulerPolynomial operator*(const EulerPolynomial& a, const EulerPolynomial& b) {
  EulerPolynomial out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_)
      out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

EulerPolynomial operator+(const EulerPolynomial& a, const EulerPolynomial& b) {
  EulerPolynomial out = a;
  for (const auto& [e, c] : b.coeffs_) out.add(e, c);
  return out;
}

std::string EulerPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  static const char* names[3] = {"Ex", "Ey", "Ez"};
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      out += (mag == 1 ? "" : mag.get_str() + "*") + mono;
    }
  }
  return out;
}

EulerScalar::EulerScalar(const Rational& c) : num_(c), den_(Rational(1)) { refresh(); }

EulerScalar::EulerScalar(EulerPolynomial numerator, EulerPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::invalid_argument("EulerScalar with zero denominator");
  refresh();
}

void EulerScalar::refresh() {
  constant_.reset();
  if (num_.is_constant() && den_.is_constant()) {
    constant_ = num_.evaluate({}) / den_.evaluate({});
  }
}

std::optional<Rational> EulerScalar::evaluate(const TriDegree& d) const {
  if (constant_) return *constant_;
  const Rational den = den_.evaluate(d);
  if (den == 0) return std::nullopt;
  return num_.evaluate(d) / den;
}

EulerScalar EulerScalar::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of the zero EulerScalar");
  return EulerScalar(den_, num_);
}

EulerScalar EulerScalar::shifted(const DegreeShift& s) const {
  if (constant_) return *this;
  return EulerScalar(num_.shifted(s), den_.shifted(s));
}

EulerScalar operator*(const EulerScalar& a, const EulerScalar& b) {
  if (a.constant_ && b.constant_) return EulerScalar(*a.constant_ * *b.constant_);
  return EulerScalar(a.num_ * b.num_, a.den_ * b.den_);
}

std::string EulerScalar::to_string() const {
  if (constant_) return constant_->get_str();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace smb
