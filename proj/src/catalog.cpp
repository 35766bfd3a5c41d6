#include "smb/catalog.hpp"

#include <stdexcept>

namespace smb {

namespace {

constexpr VarBlock X = VarBlock::X;
constexpr VarBlock Y = VarBlock::Y;
constexpr VarBlock Z = VarBlock::Z;

std::string letter(VarBlock b) { return std::string(1, block_letter(b)); }

OperatorTerm term(const Rational& c, std::vector<ElementaryAction> actions) {
  return OperatorTerm{EulerScalar(c), std::move(actions)};
}

ElementaryAction mul(VarBlock b, int i) { return ElementaryAction::mul(VariableId{b, i}); }
ElementaryAction der(VarBlock b, int i) { return ElementaryAction::der(VariableId{b, i}); }

std::string jk(const std::string& head, int j, int k) {
  return head + "_" + std::to_string(j) + "_" + std::to_string(k);
}

/// (2 E_u + m - 4)^{-1}
LinearOperator embedding_factor(int m, VarBlock u) {
  const Rational two(2);
  const Rational c0(m - 4);
  EulerScalar s = u == X   ? EulerScalar::linear(two, 0, 0, c0)
                  : u == Y ? EulerScalar::linear(0, two, 0, c0)
                           : EulerScalar::linear(0, 0, two, c0);
  return LinearOperator::scalar(s.inverse(), "1/(2E" + letter(u) + "+m-4)");
}

}  // namespace

OperatorCatalog::OperatorCatalog(int m, std::map<std::string, LinearOperator> overrides)
    : m_(m), overrides_(std::move(overrides)) {
  if (m < kStableRangeMin) {
    throw std::invalid_argument("m must be >= " + std::to_string(kStableRangeMin) + " (stable range)");
  }
  if (m > kMaxDimension) throw std::invalid_argument("m exceeds kMaxDimension");

  const Rational half = frac(1, 2);
  const LinearOperator one = LinearOperator::identity();

  for (VarBlock u : {X, Y, Z}) {
    define("Delta_" + letter(u), ops::laplacian(m, u));
    define("norm_" + letter(u), ops::norm2(m, u));
    define("E" + letter(u), ops::euler(m, u));
    for (VarBlock v : {X, Y, Z}) {
      if (u == v) continue;
      define(letter(u) + "_d" + letter(v), ops::mult_der(m, u, v));
      if (u < v) {
        define(letter(u) + letter(v), ops::mult_mult(m, u, v));
        define("d" + letter(u) + "_d" + letter(v), ops::der_der(m, u, v));
      }
    }
  }

  define("Id", one);
  define("E", get("Ex") + get("Ey"));
  define("Ecal", get("Ey") - get("Ex") + get("Ez") + LinearOperator::scalar(EulerScalar(frac(m, 2)), "m/2"));

  define("D_s", get("z_dy") - get("dx_dz"));
  define("D_s_dag", get("y_dz") + get("xz"));
  define("L", get("x_dy") - get("Delta_z").scaled(half));
  define("R", get("y_dx") + get("norm_z").scaled(half));

  define("sl_h_X", get("norm_z").scaled(half));
  define("sl_h_Y", get("Delta_z").scaled(-half));
  define("sl_h_H", get("Ez") + LinearOperator::scalar(EulerScalar(frac(m, 2)), "m/2"));
  define("sl_s_X", get("y_dx"));
  define("sl_s_Y", get("x_dy"));
  define("sl_s_H", get("Ey") - get("Ex"));
  define("sl_c_X", get("D_s_dag"));
  define("sl_c_Y", get("D_s").scaled(2));
  define("sl_c_H", get("E").scaled(2) + LinearOperator::scalar(EulerScalar(Rational(2 * m)), "2m"));
  define("sl_d_X", get("R"));
  define("sl_d_Y", get("L"));
  define("sl_d_H", get("Ecal"));

  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= m; ++k) {
      std::vector<OperatorTerm> t{term(1, {der(X, k), mul(X, j)}), term(-1, {der(Y, j), mul(Y, k)}),
                                  term(-1, {der(Z, j), mul(Z, k)})};
      if (j == k) t.push_back(term(-half, {}));
      const std::string label = jk("X", j, k);
      define(label, LinearOperator(label, std::move(t)));
      sp_labels_.push_back(label);
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (int k = j; k <= m; ++k) {
      const std::string label = jk("Y", j, k);
      std::vector<OperatorTerm> t;
      if (j == k) {
        t = {term(1, {der(Y, j), mul(X, j)}), term(-half, {der(Z, j), der(Z, j)})};
      } else {
        t = {term(1, {der(Y, k), mul(X, j)}), term(1, {der(Y, j), mul(X, k)}),
             term(-1, {der(Z, j), der(Z, k)})};
      }
      define(label, LinearOperator(label, std::move(t)));
      sp_labels_.push_back(label);
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (int k = j; k <= m; ++k) {
      const std::string label = jk("Z", j, k);
      std::vector<OperatorTerm> t;
      if (j == k) {
        t = {term(1, {der(X, j), mul(Y, j)}), term(half, {mul(Z, j), mul(Z, j)})};
      } else {
        t = {term(1, {der(X, k), mul(Y, j)}), term(1, {der(X, j), mul(Y, k)}),
             term(1, {mul(Z, j), mul(Z, k)})};
      }
      define(label, LinearOperator(label, std::move(t)));
      sp_labels_.push_back(label);
    }
  }

  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      const std::string label = jk("L", a, b);
      define(label, (ops::angular(X, a, b) + ops::angular(Y, a, b) + ops::angular(Z, a, b)));
      angular_labels_.push_back(label);
    }
  }
  // -sum_{a<b} L_ab^2 regrouped by variable pairs:
  //   sum_{a<b} L^u_ab L^u_ab = |u|^2 Delta_u - E_u (E_u + m - 2)
  //   sum_{a<b} L^u_ab L^v_ab = <u,v><d_u,d_v> - <u,d_v><v,d_u> + E_u   (u != v)
  LinearOperator casimir("Casimir", {});
  for (VarBlock u : {X, Y, Z}) {
    const std::string s = letter(u);
    const Rational cx = u == X ? 1 : 0, cy = u == Y ? 1 : 0, cz = u == Z ? 1 : 0;
    const EulerPolynomial eu = EulerPolynomial::linear(cx, cy, cz, 0);
    const EulerPolynomial shifted = EulerPolynomial::linear(cx, cy, cz, m - 2);
    casimir += LinearOperator::scalar(EulerScalar(eu * shifted, EulerPolynomial(Rational(1))), "E" + s + "(E" + s + "+m-2)");
    casimir -= compose(get("norm_" + s), get("Delta_" + s));
    for (VarBlock v : {X, Y, Z}) {
      if (!(u < v)) continue;
      const std::string t = letter(v);
      const LinearOperator cross = compose(get(s + t), get("d" + s + "_d" + t)) -
                                   compose(get(s + "_d" + t), get(t + "_d" + s)) + get("E" + s);
      casimir -= cross.scaled(2);
    }
  }
  define("Casimir", casimir);

  for (VarBlock u : {X, Y}) {
    const std::string s = letter(u);
    const LinearOperator fu = embedding_factor(m, u);
    const LinearOperator fz = embedding_factor(m, Z);
    const LinearOperator& norm_u = get("norm_" + s);
    const LinearOperator& norm_z = get("norm_z");
    const LinearOperator& du_dz = get("d" + s + "_dz");
    define("S_" + s + "z", get(s + "_dz") - compose(fu, compose(norm_u, du_dz)));
    define("S_z" + s, get("z_d" + s) - compose(fz, compose(norm_z, du_dz)));
    define("A_" + s + "z", du_dz);
    define("C_" + s + "z", get(s + "z") - compose(fu, compose(norm_u, get("z_d" + s))) -
                               compose(fz, compose(norm_z, get(s + "_dz"))) +
                               compose(fu, compose(fz, compose(norm_u, compose(norm_z, du_dz)))));
  }

  define("Pi_L", extremal_projector(1));
}

void OperatorCatalog::define(const std::string& label, LinearOperator op) {
  auto it = overrides_.find(label);
  ops_[label] = (it != overrides_.end() ? it->second : op).with_label(label);
}

const LinearOperator& OperatorCatalog::get(const std::string& label) const {
  auto it = ops_.find(label);
  if (it == ops_.end()) throw std::out_of_range("unknown operator label: " + label);
  return it->second;
}

std::vector<std::string> OperatorCatalog::labels() const {
  std::vector<std::string> out;
  out.reserve(ops_.size());
  for (const auto& [k, v] : ops_) out.push_back(k);
  return out;
}

std::vector<Sl2Triple> OperatorCatalog::sl2_triples() const {
  std::vector<Sl2Triple> out;
  for (const char* n : {"sl_h", "sl_s", "sl_c", "sl_d"}) {
    const std::string s(n);
    out.push_back({s, get(s + "_X"), get(s + "_Y"), get(s + "_H")});
  }
  return out;
}

OperatorCatalog OperatorCatalog::with_override(const std::string& label, const LinearOperator& op) const {
  auto o = overrides_;
  o[label] = op;
  return OperatorCatalog(m_, std::move(o));
}

Rational OperatorCatalog::ecal(const TriDegree& d) const {
  return Rational(d.ky - d.kx + d.kz) + frac(m_, 2);
}

LinearOperator OperatorCatalog::extremal_projector(int order) const {
  if (order < 0) throw std::invalid_argument("negative projector order");
  const LinearOperator& R = get("R");
  const LinearOperator& L = get("L");
  LinearOperator out = LinearOperator::identity();
  LinearOperator rl = LinearOperator::identity();
  EulerPolynomial den(Rational(1));
  const Rational m2 = frac(m_, 2);
  for (int j = 1; j <= order; ++j) {
    rl = compose(R, compose(rl, L));
    // j (Ecal - 1 - j), accumulated into j! prod (Ecal - 1 - i).
    den = den * EulerPolynomial(Rational(j)) * EulerPolynomial::linear(-1, 1, 1, m2 - 1 - j);
    out += compose(LinearOperator::scalar(EulerScalar(EulerPolynomial(Rational(1)), den), "c_" + std::to_string(j)), rl);
  }
  return out.with_label(order == 1 ? "Pi_L" : "Pi_" + std::to_string(order));
}

Polynomial OperatorCatalog::project_lowest_weight(const Polynomial& p) const {
  const LinearOperator& R = get("R");
  const LinearOperator& L = get("L");
  // Group components by Ecal eigenvalue; R^j L^j preserves it.
  std::map<Rational, Polynomial> by_ecal;
  for (const auto& [d, c] : tri_degree_components(p)) by_ecal[ecal(d)] += c;
  Polynomial out;
  for (const auto& [alpha, q] : by_ecal) {
    out += q;
    Polynomial lj = q;
    Rational den = 1;
    for (int j = 1;; ++j) {
      lj = apply(L, lj);
      if (lj.is_zero()) break;
      den *= Rational(j) * (alpha - 1 - j);
      if (den == 0) throw SingularEulerDenominator("Pi term " + std::to_string(j), q.terms().front().first.tri_degree());
      Polynomial rj = lj;
      for (int i = 0; i < j; ++i) rj = apply(R, rj);
      out += rj * (Rational(1) / den);
    }
  }
  return out;
}

}  // namespace smb
