#include "smb/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace smb {

namespace {

bool term_less(const Polynomial::Term& a, const Polynomial::Term& b) { return a.first < b.first; }

// Merges two sorted term lists: a + sign * b.
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace_back(Monomial{}, constant);
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, Rational{}}, term_less);
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) terms.emplace_back(ma * mb, ca * cb);
  }
  return Polynomial::from_terms(std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    const bool negative = coeff < 0;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.is_constant()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono.to_string();
    } else {
      out += mag.get_str() + "*" + mono.to_string();
    }
  }
  return out;
}

Polynomial differentiate(const Polynomial& p, VariableId v) {
  std::vector<Polynomial::Term> out;
  out.reserve(p.size());
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial m = mono;
    const int e = m.lower(v);
    if (e == 0) continue;
    out.emplace_back(m, coeff * e);
  }
  // Lowering the same variable preserves the relative order of survivors.
  return Polynomial::from_terms(std::move(out));
}

Polynomial multiply_by(const Polynomial& p, VariableId v) {
  std::vector<Polynomial::Term> out;
  out.reserve(p.size());
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial m = mono;
    m.raise(v);
    out.emplace_back(m, coeff);
  }
  return Polynomial::from_terms(std::move(out));
}

std::map<TriDegree, Polynomial> tri_degree_components(const Polynomial& p) {
  std::map<TriDegree, std::vector<Polynomial::Term>> parts;
  for (const auto& t : p.terms()) parts[t.first.tri_degree()].push_back(t);
  std::map<TriDegree, Polynomial> out;
  for (auto& [d, terms] : parts) out.emplace(d, Polynomial::from_terms(std::move(terms)));
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto term = parse_product();
      term.second *= sign;
      terms.push_back(std::move(term));
      skip_ws();
      if (pos_ >= s_.size()) break;
      const char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      sign = op == '+' ? 1 : -1;
      ++pos_;
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Polynomial::Term parse_product() {
    Monomial mono;
    Rational coeff = 1;
    while (true) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
      } else if (c == 'x' || c == 'y' || c == 'z') {
        ++pos_;
        const VarBlock b = c == 'x' ? VarBlock::X : (c == 'y' ? VarBlock::Y : VarBlock::Z);
        const int index = parse_int();
        if (index < 1 || index > kMaxDimension) fail("variable index out of range");
        int power = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          power = parse_int();
        }
        for (int i = 0; i < power; ++i) mono.raise(VariableId{b, index});
      } else {
        fail("expected a number or a variable");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {mono, coeff};
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
      ++pos_;
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  int parse_int() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace smb
