#include "smb/verifier.hpp"

#include <algorithm>
#include <numeric>

namespace smb {

namespace {

using json = nlohmann::json;
using Polys = std::vector<Polynomial>;

std::string str(std::size_t n) { return std::to_string(n); }

std::string sum_text(const std::vector<std::size_t>& dims) {
  if (dims.empty()) return "0";
  std::string s;
  std::size_t total = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += " + ";
    s += str(dims[i]);
    total += dims[i];
  }
  if (dims.size() > 1) s += " = " + str(total);
  return s;
}

CheckResult result(std::string name, json params, std::string expected, std::string actual, bool pass,
                   std::optional<Polynomial> witness = std::nullopt) {
  CheckResult r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  r.pass = pass;
  if (!pass) r.witness = std::move(witness);
  return r;
}

CheckResult count_check(std::string name, json params, std::int64_t expected, std::int64_t actual) {
  return result(std::move(name), std::move(params), "dim " + std::to_string(expected), "dim " + std::to_string(actual),
                expected == actual);
}

Polys basis_of(const Subspace& s) { return s.is_zero() ? Polys{} : s.basis_polynomials(); }

Polys harmonics(int m, int a) { return a < 0 ? Polys{} : basis_of(harmonic_space(m, a)); }

Polys simplicial(int m, int k, int l, VarBlock u) {
  return HighestWeightSO::dominant(k, l) ? basis_of(simplicial_harmonics(m, k, l, u)) : Polys{};
}

Polys map_all(const LinearOperator& op, const Polys& ps) {
  Polys out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(apply(op, p));
  return out;
}

Polynomial norm_z_times(int m, const Polynomial& p) {
  Polynomial out;
  for (int j = 1; j <= m; ++j) out += multiply_by(multiply_by(p, VariableId::z(j)), VariableId::z(j));
  return out;
}

std::optional<Polynomial> first_not_killed(const LinearOperator& op, const Polys& ps) {
  for (const auto& p : ps) {
    if (!apply(op, p).is_zero()) return p;
  }
  return std::nullopt;
}

std::optional<Polynomial> first_outside(const Subspace& s, const Polys& ps) {
  for (const auto& p : ps) {
    if (!s.contains(p)) return p;
  }
  return std::nullopt;
}

std::set<TriDegree> degrees_upto(int n) {
  std::set<TriDegree> out;
  for (int kx = 0; kx <= n; ++kx)
    for (int ky = 0; kx + ky <= n; ++ky)
      for (int kz = 0; kx + ky + kz <= n; ++kz) out.insert({kx, ky, kz});
  return out;
}

struct SumReport {
  bool pass = false;
  std::string actual;
  std::optional<Polynomial> witness;
};

// Direct-sum test with a witness: a target vector outside the sum, a part
// vector outside the target, or a vector shared between parts.
SumReport direct_sum_report(const std::vector<Subspace>& parts, const Subspace& target) {
  SumReport rep;
  std::vector<std::size_t> dims;
  for (const auto& p : parts) dims.push_back(p.dim());
  rep.pass = is_direct_sum(parts, target);
  const Subspace sum = parts.empty() ? Subspace(target.ambient()) : subspace_sum(parts);
  rep.actual = "parts " + sum_text(dims) + ", sum dim " + str(sum.dim()) + ", target dim " + str(target.dim()) +
               (rep.pass ? ", direct and equal" : "");
  if (rep.pass) return rep;
  const Block& blk = *target.ambient();
  for (const auto& v : target.basis()) {
    if (!sum.contains(v)) {
      rep.witness = to_polynomial(blk, v);
      return rep;
    }
  }
  for (const auto& p : parts) {
    for (const auto& v : p.basis()) {
      if (!target.contains(v)) {
        rep.witness = to_polynomial(blk, v);
        return rep;
      }
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Subspace> others;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) others.push_back(parts[j]);
    if (others.empty()) continue;
    const Subspace shared = subspace_intersect(parts[i], subspace_sum(others));
    if (!shared.is_zero()) {
      rep.witness = to_polynomial(blk, shared.basis().front());
      return rep;
    }
  }
  return rep;
}

CheckResult sum_check(std::string name, json params, std::string expected, const std::vector<Subspace>& parts,
                      const Subspace& target) {
  auto rep = direct_sum_report(parts, target);
  return result(std::move(name), std::move(params), std::move(expected), rep.actual, rep.pass, rep.witness);
}

struct Residual {
  std::size_t count = 0;
  std::optional<Polynomial> witness;
  std::string where;
};

template <class F>
void accumulate_residual(Residual& r, const Block& blk, F&& f, const std::string& where = {}) {
  for (const auto& mono : blk.basis()) {
    const Polynomial p = Polynomial::from_monomial(mono);
    if (!f(p).is_zero()) {
      if (!r.witness) {
        r.witness = p;
        r.where = where;
      }
      ++r.count;
    }
  }
}

CheckResult residual_check(std::string name, json params, const Block& blk, const Residual& r) {
  std::string actual = str(r.count) + " nonzero residuals";
  if (!r.where.empty()) actual += " (first at " + r.where + ")";
  return result(std::move(name), std::move(params), "0 nonzero residuals on " + str(blk.dim()) + " monomials", actual,
                r.count == 0, r.witness);
}

// --- algebra relations ----------------------------------------------------

std::vector<CheckResult> sl2_rows(const Sl2Triple& t, const Block& blk, int max_degree) {
  std::vector<CheckResult> out;
  auto params = [&](const char* rel) { return json{{"triple", t.name}, {"relation", rel}, {"max_degree", max_degree}}; };
  Residual hx, hy, xy;
  accumulate_residual(hx, blk, [&](const Polynomial& p) { return commutator_apply(t.H, t.X, p) - apply(t.X, p) * Rational(2); });
  accumulate_residual(hy, blk, [&](const Polynomial& p) { return commutator_apply(t.H, t.Y, p) + apply(t.Y, p) * Rational(2); });
  accumulate_residual(xy, blk, [&](const Polynomial& p) { return commutator_apply(t.X, t.Y, p) - apply(t.H, p); });
  out.push_back(residual_check("sl2", params("[H,X]=2X"), blk, hx));
  out.push_back(residual_check("sl2", params("[H,Y]=-2Y"), blk, hy));
  out.push_back(residual_check("sl2", params("[X,Y]=H"), blk, xy));
  return out;
}

CheckResult sp_commute_row(const OperatorCatalog& cat, const std::string& target, const Block& blk, int max_degree) {
  Residual r;
  const LinearOperator& op = cat[target];
  for (const auto& g : cat.sp_generators()) {
    accumulate_residual(r, blk, [&](const Polynomial& p) { return commutator_apply(cat[g], op, p); }, g);
  }
  return residual_check("sp_commutes",
                        json{{"operator", target}, {"generators", cat.sp_generators().size()}, {"max_degree", max_degree}},
                        blk, r);
}

std::vector<CheckResult> commuting_rows(const OperatorCatalog& cat, const Block& blk, int max_degree) {
  std::vector<CheckResult> out;
  for (const char* a : {"R", "L"}) {
    for (const char* b : {"D_s", "D_s_dag"}) {
      Residual r;
      accumulate_residual(r, blk, [&](const Polynomial& p) { return commutator_apply(cat[a], cat[b], p); });
      out.push_back(residual_check("sl_d_commutes", json{{"pair", std::string("[") + a + "," + b + "]"}, {"max_degree", max_degree}},
                                   blk, r));
    }
  }
  return out;
}

std::vector<CheckResult> ecal_shift_rows(const OperatorCatalog& cat, const Block& blk, int max_degree) {
  std::vector<CheckResult> out;
  const std::vector<std::pair<const char*, int>> shifts{{"D_s", 0}, {"D_s_dag", 0}, {"R", 2}, {"L", -2}};
  for (const auto& [label, shift] : shifts) {
    Residual r;
    const LinearOperator& op = cat[label];
    accumulate_residual(r, blk, [&](const Polynomial& p) {
      return commutator_apply(cat["Ecal"], op, p) - apply(op, p) * Rational(shift);
    });
    out.push_back(residual_check("ecal_shift", json{{"operator", label}, {"shift", shift}, {"max_degree", max_degree}}, blk, r));
  }
  return out;
}

// --- Pi_L ----------------------------------------------------------------

CheckResult projector_row(const OperatorCatalog& cat, int a) {
  const int m = cat.m();
  const Rational denom(2 * a + m - 2);
  std::size_t total = 0, held = 0;
  std::optional<Polynomial> witness;
  for (const auto& h : harmonics(m, a)) {
    const Polynomial zh = norm_z_times(m, h);
    for (int i = 1; i <= m; ++i) {
      const Polynomial input = multiply_by(h, VariableId::y(i));
      const Polynomial lhs = apply(cat["Pi_L"], input);
      const Polynomial rhs = (input * Rational(2 * a + m) + multiply_by(zh, VariableId::x(i))) * (Rational(1) / denom);
      ++total;
      if (lhs.to_string() == rhs.to_string()) {
        ++held;
      } else if (!witness) {
        witness = input;
      }
    }
  }
  return result("pi_l_formula", json{{"a", a}},
                str(total) + " identities Pi_L(y_i H) = ((2a+m) y_i H + x_i |z|^2 H)/(2a+m-2)",
                str(held) + " hold", held == total, witness);
}

// --- classical Fischer ------------------------------------------------------

std::vector<CheckResult> classical_fischer_rows(const OperatorCatalog& cat, int d) {
  const int m = cat.m();
  std::vector<CheckResult> out;
  const Subspace h = harmonic_space(m, d);
  out.push_back(count_check("dim_harmonic", json{{"d", d}}, dim_harmonic(m, d), static_cast<std::int64_t>(h.dim())));
  auto blk = make_block(m, {{0, 0, d}});
  std::vector<Subspace> parts;
  for (int p = 0; 2 * p <= d; ++p) {
    Polys ps = harmonics(m, d - 2 * p);
    for (int i = 0; i < p; ++i) ps = map_all(cat["norm_z"], ps);
    parts.push_back(Subspace::span(blk, ps));
  }
  out.push_back(sum_check("fischer", json{{"d", d}}, "P_d(z) = sum_p |z|^2p H_(d-2p)", parts, Subspace::whole(blk)));
  return out;
}

// --- L-kernel table ---------------------------------------------------------

CheckResult table_ker_row(const OperatorCatalog& cat, int a) {
  const int m = cat.m();
  const EigenBlock eb = k1_block(m, a);
  const Subspace ker = kernel_L(cat, eb);
  Polys xs, ys;
  for (const auto& h : harmonics(m, a))
    for (int j = 1; j <= m; ++j) xs.push_back(multiply_by(h, VariableId::x(j)));
  for (const auto& h : harmonics(m, a - 2))
    for (int j = 1; j <= m; ++j) ys.push_back(apply(cat["Pi_L"], multiply_by(h, VariableId::y(j))));
  const Subspace fx = Subspace::span(eb.block, xs);
  const Subspace fy = Subspace::span(eb.block, ys);

  std::string subspace = "(1)_x";
  if (a >= 1) subspace += " (x) (" + std::to_string(a) + ")_z";
  if (a >= 2) subspace += " + Pi_L((1)_y (x) (" + std::to_string(a - 2) + ")_z)";
  const std::int64_t predicted = m * dim_harmonic(m, a) + m * dim_harmonic(m, a - 2);

  std::optional<Polynomial> witness = first_not_killed(cat["L"], xs);
  if (!witness) witness = first_not_killed(cat["L"], ys);
  auto rep = direct_sum_report({fx, fy}, ker);
  if (!witness) witness = rep.witness;
  const bool pass = !first_not_killed(cat["L"], xs) && !first_not_killed(cat["L"], ys) && rep.pass &&
                    static_cast<std::int64_t>(ker.dim()) == predicted;
  json params{{"a", a}, {"alpha", half_m_label(a - 1)}, {"verma", "V_" + half_m_label(a - 1)}};
  return result("ker_L", params, subspace + ", dim " + std::to_string(predicted),
                "ker_L dim " + str(ker.dim()) + "; families " + sum_text({fx.dim(), fy.dim()}) +
                    (rep.pass ? "; direct sum equals ker_L" : "; " + rep.actual),
                pass, witness);
}

// --- L-Fischer --------------------------------------------------------------

CheckResult l_fischer_row(const OperatorCatalog& cat, int k, const Rational& alpha) {
  const int m = cat.m();
  const EigenBlock eb = make_eigenblock(m, k, alpha);
  std::vector<Subspace> parts;
  for (int j = 0;; ++j) {
    const EigenBlock low = make_eigenblock(m, k, alpha - 2 * j);
    if (low.empty()) break;
    Subspace cur = kernel_L(cat, low);
    for (int i = j - 1; i >= 0; --i) cur = apply_to_subspace(cat["R"], cur, make_eigenblock(m, k, alpha - 2 * i).block);
    parts.push_back(cur);
  }
  const Rational s = alpha - frac(m, 2);
  const int shift = static_cast<int>(s.get_num().get_si());
  return sum_check("l_fischer", json{{"k", k}, {"alpha", half_m_label(shift)}},
                   "block dim " + str(eb.block->dim()) + " = sum_j R^j ker_L(alpha-2j)", parts,
                   Subspace::whole(eb.block));
}

// --- symplectic Fischer, k = 1 ------------------------------------------

std::vector<CheckResult> symplectic_fischer_rows(const OperatorCatalog& cat, int a) {
  const int m = cat.m();
  const EigenBlock eb = k1_block(m, a);
  const EigenBlock k0 = make_eigenblock(m, 0, eb.alpha);
  json params{{"a", a}, {"alpha", half_m_label(a - 1)}};
  std::vector<CheckResult> out;

  const RationalMatrix dag = matrix_of(cat["D_s_dag"], k0.block, eb.block);
  const std::size_t rk = rank(dag);
  out.push_back(result("dagger_injective", params, "rank " + str(k0.block->dim()), "rank " + str(rk),
                       rk == k0.block->dim()));

  const Subspace ker = kernel_Ds(cat, eb);
  const Subspace im = image(dag);
  out.push_back(sum_check("decomposition", params, "block = ker D_s + D_s^dag(k=0 block)", {ker, im},
                          Subspace::whole(eb.block)));

  std::optional<Polynomial> witness;
  for (const auto& p : basis_of(ker)) {
    if (!apply(cat["D_s"], apply(cat["R"], p)).is_zero() || !apply(cat["D_s"], apply(cat["L"], p)).is_zero()) {
      witness = p;
      break;
    }
  }
  out.push_back(result("sl_d_stability", params, "R and L map ker D_s into ker D_s",
                       witness ? "a kernel vector leaves ker D_s" : "stable on " + str(ker.dim()) + " basis vectors",
                       !witness, witness));
  return out;
}

// --- kernel families --------------------------------------------------------

struct Component {
  int row = 0;  // index into branching_table()
  HighestWeightSO weight;
  std::string source;
  Polys vectors;
};

// The five lowest-weight families at alpha = m/2 - 1 + a, in table order.
std::vector<Component> lowest_weight_components(const OperatorCatalog& cat, int a, const ItemVSplit* split) {
  const int m = cat.m();
  const int t = a - 1;
  std::vector<Component> out;
  const auto& rows = branching_table();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int w1 = t - rows[i].verma_offset;
    if (!rows[i].admits(w1)) continue;
    Component c{static_cast<int>(i), rows[i].weight(w1), {}, {}};
    switch (i) {
      case 0:
        c.source = "S_xz H_" + std::to_string(a + 1);
        c.vectors = map_all(cat["S_xz"], harmonics(m, a + 1));
        break;
      case 1:
        c.source = "H_" + std::to_string(a) + ",1(z;x)";
        c.vectors = simplicial(m, a, 1, VarBlock::X);
        break;
      case 2: {
        c.source = "item (v) kernel line over H_" + std::to_string(a - 1);
        if (split) {
          c.vectors = split->kernel;
        } else {
          c.vectors = item_v_split(cat, a).kernel;
        }
        break;
      }
      case 3:
        c.source = "Pi_L H_" + std::to_string(a - 2) + ",1(z;y)";
        c.vectors = map_all(cat["Pi_L"], simplicial(m, a - 2, 1, VarBlock::Y));
        break;
      case 4:
        c.source = "Pi_L C_yz H_" + std::to_string(a - 3);
        c.vectors = map_all(cat["Pi_L"], map_all(cat["C_yz"], harmonics(m, a - 3)));
        break;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckResult> kernel_family_rows(const OperatorCatalog& cat, int a) {
  const int m = cat.m();
  const EigenBlock eb = k1_block(m, a);
  const LinearOperator& ds = cat["D_s"];
  const LinearOperator& pil = cat["Pi_L"];
  json base{{"a", a}, {"alpha", half_m_label(a - 1)}};
  auto with = [&](json extra) {
    json p = base;
    p.update(extra);
    return p;
  };
  std::vector<CheckResult> out;
  auto killed = [&](const char* item, const std::string& what, const Polys& ps) {
    const auto w = first_not_killed(ds, ps);
    out.push_back(result("family", with({{"item", item}, {"family", what}}), "D_s kills " + str(ps.size()) + " vectors",
                         w ? "a vector survives D_s" : "all killed", !w, w));
  };

  const Polys f1 = simplicial(m, a, 1, VarBlock::X);
  const Polys f2 = map_all(cat["S_xz"], harmonics(m, a + 1));
  const Polys h_am1 = harmonics(m, a - 1);
  const Polys f3 = map_all(cat["C_xz"], h_am1);
  const Polys f4_raw = simplicial(m, a - 2, 1, VarBlock::Y);
  const Polys f5_raw = a >= 2 ? map_all(cat["S_yz"], h_am1) : Polys{};
  const Polys f6_raw = map_all(cat["C_yz"], harmonics(m, a - 3));
  const Polys f4 = map_all(pil, f4_raw);
  const Polys f5 = map_all(pil, f5_raw);
  const Polys f6 = map_all(pil, f6_raw);

  if (a >= 1) killed("i", "H_" + std::to_string(a) + ",1(z;x)", f1);
  killed("ii", "S_xz H_" + std::to_string(a + 1), f2);
  if (a >= 3) killed("iii", "Pi_L H_" + std::to_string(a - 2) + ",1(z;y)", f4);
  if (a >= 3) {
    std::optional<Polynomial> w;
    for (const auto& p : f6_raw) {
      const Polynomial mid = apply(ds, p);
      const bool z_only = std::all_of(mid.terms().begin(), mid.terms().end(), [](const auto& t) {
        return t.first.tri_degree().kx == 0 && t.first.tri_degree().ky == 0;
      });
      if (mid.is_zero() || !z_only || !apply(ds, apply(pil, p)).is_zero()) {
        w = p;
        break;
      }
    }
    out.push_back(result("family", with({{"item", "iv"}, {"family", "Pi_L C_yz H_" + std::to_string(a - 3)}}),
                         "D_s C_yz H nonzero in P(z), D_s Pi_L C_yz H = 0",
                         w ? "violated" : "holds on " + str(f6_raw.size()) + " harmonics", !w, w));
  }

  // Item (v).
  ItemVSplit split;
  if (a >= 2) {
    split = item_v_split(cat, a);
    const bool pass = split.independent && split.one_kernel_direction && split.dagger_in_span && split.uniform;
    json p = with({{"item", "v"}, {"harmonics", h_am1.size()}});
    if (split.one_kernel_direction && split.uniform) {
      p["kernel_combination"] = split.c_coeff.get_str() + "*C_xz H + " + split.s_coeff.get_str() + "*Pi_L S_yz H";
    }
    std::string actual = str(split.kernel.size()) + " kernel lines";
    if (!split.independent) actual += "; dependent pair";
    if (!split.dagger_in_span) actual += "; D_s^dag H outside the plane";
    if (!split.uniform) actual += "; coefficients vary";
    out.push_back(result("item_v_split", p, "one kernel line and one D_s^dag line per harmonic", actual, pass,
                         split.witness));
  } else if (a == 1) {
    const Polynomial c = apply(cat["C_xz"], Polynomial(Rational(1)));
    const Polynomial d = apply(cat["D_s_dag"], Polynomial(Rational(1)));
    out.push_back(result("item_v_split", with({{"item", "v"}, {"degenerate", "C_xz 1 = D_s^dag 1"}}),
                         "C_xz H_0 equals D_s^dag H_0", c == d ? "equal" : "differ", c == d, c));
  }

  // Whether Pi_L is needed on each y-side summand.
  const Subspace kerl = kernel_L(cat, eb);
  auto membership = [&](const std::string& what, const Polys& raw, const Polys& projected) {
    if (raw.empty()) return;
    const bool with_pi = !first_outside(kerl, projected);
    const bool without_pi = !first_outside(kerl, raw);
    out.push_back(result("pi_l_membership", with({{"summand", what}}), "Pi_L(summand) in ker_L",
                         std::string("with Pi_L: ") + (with_pi ? "in ker_L" : "not in ker_L") +
                             "; without: " + (without_pi ? "in ker_L" : "not in ker_L"),
                         with_pi, first_outside(kerl, projected)));
  };
  membership("H_" + std::to_string(a - 2) + ",1(z;y)", f4_raw, f4);
  membership("S_yz H_" + std::to_string(a - 1), f5_raw, f5);
  membership("C_yz H_" + std::to_string(a - 3), f6_raw, f6);

  // The six summands and their refinement.
  json dropped = json::array();
  auto note = [&](bool keep, const std::string& s) {
    if (!keep) dropped.push_back(s);
  };
  note(HighestWeightSO::dominant(a, 1), "H_(" + std::to_string(a) + ",1)(z;x)");
  note(a - 1 >= 0, "C_xz H_" + std::to_string(a - 1));
  note(HighestWeightSO::dominant(a - 2, 1), "H_(" + std::to_string(a - 2) + ",1)(z;y)");
  note(a >= 2, "S_yz H_" + std::to_string(a - 1));
  note(a - 3 >= 0, "C_yz H_" + std::to_string(a - 3));
  auto span = [&](const Polys& ps) { return Subspace::span(eb.block, ps); };
  out.push_back(sum_check("contributions", with({{"dropped", dropped}}), "ker_L = six summands, direct",
                          {span(f1), span(f2), span(f3), span(f4), span(f5), span(f6)}, kerl));

  const Subspace lw = lowest_weight_space(cat, eb);
  std::vector<Subspace> comps;
  json sources = json::array();
  for (const auto& c : lowest_weight_components(cat, a, a >= 2 ? &split : nullptr)) {
    comps.push_back(span(c.vectors));
    sources.push_back(c.source);
  }
  out.push_back(sum_check("refinement", with({{"components", sources}}), "ker D_s cap ker_L = five families, direct",
                          comps, lw));
  const Subspace dag = span(map_all(cat["D_s_dag"], h_am1));
  out.push_back(sum_check("refinement", with({{"components", json::array({"ker D_s cap ker_L", "D_s^dag H_" + std::to_string(a - 1)})}}),
                          "ker_L = lowest weight space + D_s^dag H_(a-1)", {lw, dag}, kerl));
  return out;
}

// --- branching table ------------------------------------------------------

std::int64_t table_prediction(int m, int t) {
  std::int64_t total = 0;
  for (const auto& row : branching_table()) {
    const int a = t - row.verma_offset;
    if (row.admits(a)) total += dim_weight(m, row.weight(a));
  }
  return total;
}

// m (dim H_{t+1} + dim H_{t-1}) with the S_0 part dim H_t removed.
std::int64_t multiplicity_prediction(int m, int t) {
  const std::int64_t lemma = m * (dim_harmonic(m, t + 1) + dim_harmonic(m, t - 1));
  return lemma - dim_harmonic(m, t);
}

std::vector<CheckResult> branching_rows(const OperatorCatalog& cat, int t) {
  const int m = cat.m();
  const int a = t + 1;
  const EigenBlock eb = k1_block(m, a);
  const Subspace lw = lowest_weight_space(cat, eb);
  const std::int64_t table = table_prediction(m, t);
  const std::int64_t mult = multiplicity_prediction(m, t);
  json params{{"t", t}, {"alpha", half_m_label(t)}};
  std::vector<CheckResult> out;
  std::vector<Subspace> parts;
  std::vector<CheckResult> rows;
  json names = json::array();
  for (const auto& c : lowest_weight_components(cat, a, nullptr)) {
    const Subspace s = Subspace::span(eb.block, c.vectors);
    parts.push_back(s);
    names.push_back(c.weight.to_string());
    const auto outside = first_outside(lw, c.vectors);
    const auto cas = casimir_eigencheck(cat, s, c.weight);
    const std::int64_t want = dim_weight(m, c.weight);
    const bool pass = !outside && cas.pass && static_cast<std::int64_t>(s.dim()) == want;
    std::string actual = "dim " + str(s.dim());
    actual += outside ? ", leaves the lowest weight space" : ", inside";
    actual += cas.pass ? ", Casimir " + cas.expected.get_str() : ", Casimir mismatch";
    json p = params;
    p["weight"] = c.weight.to_string();
    p["verma"] = "V_" + half_m_label(t);
    p["source"] = c.source;
    rows.push_back(result("component", p, "dim " + std::to_string(want) + ", Casimir " + cas.expected.get_str(), actual,
                          pass, outside ? outside : cas.witness));
  }
  // Witness for a dimension mismatch: a lowest weight vector no component
  // explains, or a component vector outside the lowest weight space.
  const Subspace covered = parts.empty() ? Subspace(eb.block) : subspace_sum(parts);
  std::optional<Polynomial> dim_witness = first_outside(covered, basis_of(lw));
  for (const auto& part : parts) {
    if (!dim_witness) dim_witness = first_outside(lw, basis_of(part));
  }
  out.push_back(result("lowest_weight_dim", params,
                       "table " + std::to_string(table) + ", multiplicity theorem " + std::to_string(mult),
                       "dim " + str(lw.dim()), table == mult && static_cast<std::int64_t>(lw.dim()) == table,
                       dim_witness));
  out.insert(out.end(), rows.begin(), rows.end());
  json p = params;
  p["components"] = names;
  out.push_back(sum_check("components_span", p, "lowest weight space = components, direct", parts, lw));
  return out;
}

std::vector<CheckResult> multiplicity_rows(const OperatorCatalog& cat, int t) {
  const int m = cat.m();
  const EigenBlock eb = k1_block(m, t + 1);
  const std::int64_t lemma = m * (dim_harmonic(m, t + 1) + dim_harmonic(m, t - 1));
  json params{{"t", t}, {"alpha", half_m_label(t)}};
  std::vector<CheckResult> out;
  out.push_back(count_check("lemma_s1", params, lemma, static_cast<std::int64_t>(kernel_L(cat, eb).dim())));
  out.push_back(count_check("s0_subtraction", params, lemma - dim_harmonic(m, t),
                            static_cast<std::int64_t>(lowest_weight_space(cat, eb).dim())));
  return out;
}

CheckResult dim_identity_row(int m, int a) {
  auto h = [&](int b) { return dim_harmonic(m, b); };
  const std::int64_t lhs = dim_weight(m, {a + 1, 1}) + dim_weight(m, {a - 1, 1}) + h(a + 2) + h(a) + h(a - 2);
  const std::int64_t rhs = m * (h(a + 1) + h(a - 1)) - h(a);
  return result("dim_identity", json{{"a", a}, {"m", m}}, "m(dim H_(a+1) + dim H_(a-1)) - dim H_a = " + std::to_string(rhs),
                "sum of five components = " + std::to_string(lhs), lhs == rhs);
}

CheckResult s0_row(const OperatorCatalog& cat, int d) {
  const int m = cat.m();
  const EigenBlock eb = make_eigenblock(m, 0, frac(m, 2) + d);
  const Subspace lw = lowest_weight_space(cat, eb);
  const Subspace h = harmonic_space(m, d);
  const bool pass = lw == h;
  std::optional<Polynomial> w;
  if (!pass) {
    w = first_outside(h, basis_of(lw));
    if (!w) w = first_outside(lw, basis_of(h));
  }
  return result("s0_lowest_weight", json{{"d", d}, {"alpha", half_m_label(d)}}, "H_" + std::to_string(d) + "(z), dim " +
                                                                                    std::to_string(dim_harmonic(m, d)),
                "dim " + str(lw.dim()) + (pass ? ", equal" : ", different"), pass, w);
}

std::vector<CheckResult> verma_vector_rows(const OperatorCatalog& cat, const std::string& text, int n_max) {
  const Polynomial v = parse_polynomial(text);
  const VermaLabel label{cat.ecal(v.terms().front().first.tri_degree())};
  std::vector<CheckResult> out;
  for (int n = 0; n <= n_max; ++n) {
    json params{{"v", text}, {"lambda", label.to_string()}, {"n", n}};
    try {
      const auto r = verma_action_check(cat, label, n, v);
      out.push_back(result("verma_action", params, "Ecal R^n v = (lambda+2n) R^n v, L R^n v = -kappa n(lambda+n-1) R^(n-1) v",
                           r.detail, r.pass, v));
    } catch (const NotLowestWeight& e) {
      out.push_back(result("verma_action", params, "v is a lowest weight vector", e.what(), false, v));
    }
  }
  return out;
}

CheckResult verma_tensor_row(const OperatorCatalog& cat, int a) {
  const int m = cat.m();
  const EigenBlock eb = k1_block(m, a);
  std::vector<std::size_t> kernel_dims;
  std::int64_t threads = 0;
  bool threads_ok = true;
  for (int j = 0; a - 2 * j >= 0; ++j) {
    const int b = a - 2 * j;
    const std::size_t d = kernel_L(cat, k1_block(m, b)).dim();
    kernel_dims.push_back(d);
    // x-thread V_{b-1+m/2} from (1)_x (x) H_b and y-thread V_{b'+1+m/2} from (1)_y (x) H_{b'} with b' = b - 2.
    const std::int64_t two = m * dim_harmonic(m, b) + m * dim_harmonic(m, b - 2);
    threads += two;
    threads_ok = threads_ok && static_cast<std::int64_t>(d) == two;
  }
  const std::size_t total = std::accumulate(kernel_dims.begin(), kernel_dims.end(), std::size_t{0});
  const bool pass = threads_ok && total == eb.block->dim() && threads == static_cast<std::int64_t>(total);
  return result("verma_tensor", json{{"a", a}, {"alpha", half_m_label(a - 1)}},
                "block dim " + str(eb.block->dim()) + " = sum_j dim ker_L(alpha-2j), two threads per level",
                "sum_j " + sum_text(kernel_dims) + (threads_ok ? ", thread counts match" : ", thread count mismatch"),
                pass);
}

std::vector<CheckResult> run_all(const std::vector<SuiteTask>& tasks) {
  std::vector<CheckResult> out;
  for (const auto& t : tasks) {
    auto part = t.run();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

template <class F>
SuiteTask task(const std::string& suite, std::string label, F&& f) {
  return {suite, std::move(label), std::function<std::vector<CheckResult>()>(std::forward<F>(f))};
}

}  // namespace

// --- eigenblocks ------------------------------------------------------------

std::string half_m_label(int shift) {
  if (shift == 0) return "m/2";
  return shift > 0 ? "m/2+" + std::to_string(shift) : "m/2" + std::to_string(shift);
}

std::string EigenBlock::to_string() const {
  const Rational s = alpha - frac(m, 2);
  std::string a = s.get_den() == 1 ? half_m_label(static_cast<int>(s.get_num().get_si())) : alpha.get_str();
  return "k=" + std::to_string(k) + " alpha=" + a;
}

std::set<TriDegree> eigen_degrees(int m, int k, const Rational& alpha) {
  std::set<TriDegree> out;
  const Rational s = alpha - frac(m, 2);
  if (s.get_den() != 1 || k < 0) return out;
  const int shift = static_cast<int>(s.get_num().get_si());
  for (int kx = 0; kx <= k; ++kx) {
    const int ky = k - kx;
    const int kz = shift - ky + kx;
    if (kz >= 0) out.insert({kx, ky, kz});
  }
  return out;
}

EigenBlock make_eigenblock(int m, int k, const Rational& alpha) {
  return {m, k, alpha, make_block(m, eigen_degrees(m, k, alpha))};
}

EigenBlock k1_block(int m, int a) { return make_eigenblock(m, 1, frac(m, 2) - 1 + a); }

nlohmann::json CheckResult::to_json() const {
  json j{{"name", name}, {"params", params}, {"expected", expected}, {"actual", actual}, {"pass", pass}};
  if (witness) j["witness"] = witness->to_string();
  return j;
}

// --- kernels ----------------------------------------------------------------

Subspace kernel_Ds(const OperatorCatalog& cat, const EigenBlock& eb) {
  if (eb.k == 0) return Subspace::whole(eb.block);
  const EigenBlock target = make_eigenblock(eb.m, eb.k - 1, eb.alpha);
  return nullspace(matrix_of(cat["D_s"], eb.block, target.block));
}

Subspace kernel_L(const OperatorCatalog& cat, const EigenBlock& eb) {
  const EigenBlock target = make_eigenblock(eb.m, eb.k, eb.alpha - 2);
  return nullspace(matrix_of(cat["L"], eb.block, target.block));
}

Subspace lowest_weight_space(const OperatorCatalog& cat, const EigenBlock& eb) {
  if (eb.k == 0) return kernel_L(cat, eb);
  const RationalMatrix ds = matrix_of(cat["D_s"], eb.block, make_eigenblock(eb.m, eb.k - 1, eb.alpha).block);
  const RationalMatrix l = matrix_of(cat["L"], eb.block, make_eigenblock(eb.m, eb.k, eb.alpha - 2).block);
  return nullspace(RationalMatrix::stack(ds, l));
}

ItemVSplit item_v_split(const OperatorCatalog& cat, int a) {
  if (a < 2) throw std::invalid_argument("item (v) needs a >= 2");
  const int m = cat.m();
  const EigenBlock eb = k1_block(m, a);
  const auto target = make_block(m, {{0, 0, a - 1}});
  ItemVSplit out;
  out.a = a;
  bool first = true;
  for (const auto& h : harmonics(m, a - 1)) {
    const Polynomial c = apply(cat["C_xz"], h);
    const Polynomial s = apply(cat["Pi_L"], apply(cat["S_yz"], h));
    const Subspace plane = Subspace::span(eb.block, Polys{c, s});
    const Polynomial dag = apply(cat["D_s_dag"], h);
    out.dagger.push_back(dag);
    const RationalMatrix sys(target->dim(), {coordinates(*target, apply(cat["D_s"], c)),
                                              coordinates(*target, apply(cat["D_s"], s))});
    const Subspace line = nullspace(sys);
    const bool independent = plane.dim() == 2;
    const bool one = line.dim() == 1;
    const bool in_span = plane.contains(dag);
    if ((!independent || !one || !in_span) && !out.witness) out.witness = h;
    out.independent = out.independent && independent;
    out.one_kernel_direction = out.one_kernel_direction && one;
    out.dagger_in_span = out.dagger_in_span && in_span;
    if (!one) continue;
    Rational cc = 0, sc = 0;
    for (const auto& [idx, x] : line.basis().front()) (idx == 0 ? cc : sc) = x;
    if (first) {
      out.c_coeff = cc;
      out.s_coeff = sc;
      first = false;
    } else if (cc != out.c_coeff || sc != out.s_coeff) {
      out.uniform = false;
      if (!out.witness) out.witness = h;
    }
    out.kernel.push_back(c * cc + s * sc);
  }
  return out;
}

// --- suites -----------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "algebra_relations", "projector",      "classical_fischer", "table_ker",    "l_fischer",
      "symplectic_fischer_k1", "kernel_families", "branching_table", "multiplicity", "dim_identity",
      "s0_branching",      "verma",
  };
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<SuiteTask> suite_tasks(const std::string& suite, const OperatorCatalog& cat, const SuiteOptions& opt) {
  std::vector<SuiteTask> out;
  const OperatorCatalog* c = &cat;
  const int m = cat.m();
  if (suite == "algebra_relations") {
    const int deg = opt.max_degree;
    auto blk = std::make_shared<BlockPtr>(make_block(m, degrees_upto(deg)));
    out.push_back(task(suite, "sp_count", [c] {
      const std::int64_t want = 2 * c->m() * c->m() + c->m();
      return std::vector<CheckResult>{result("sp_generator_count", json{{"m", c->m()}}, std::to_string(want),
                                             str(c->sp_generators().size()),
                                             static_cast<std::int64_t>(c->sp_generators().size()) == want)};
    }));
    for (const auto& t : cat.sl2_triples()) {
      out.push_back(task(suite, t.name, [t, blk, deg] { return sl2_rows(t, **blk, deg); }));
    }
    for (const char* target : {"D_s", "D_s_dag", "E"}) {
      std::string label = target;
      out.push_back(task(suite, "sp:" + label, [c, label, blk, deg] {
        return std::vector<CheckResult>{sp_commute_row(*c, label, **blk, deg)};
      }));
    }
    out.push_back(task(suite, "sl_d_commute", [c, blk, deg] { return commuting_rows(*c, **blk, deg); }));
    out.push_back(task(suite, "ecal", [c, blk, deg] { return ecal_shift_rows(*c, **blk, deg); }));
  } else if (suite == "projector") {
    for (int a = 0; a <= opt.a_max; ++a)
      out.push_back(task(suite, "a=" + std::to_string(a), [c, a] { return std::vector<CheckResult>{projector_row(*c, a)}; }));
  } else if (suite == "classical_fischer") {
    for (int d = 0; d <= opt.d_max; ++d)
      out.push_back(task(suite, "d=" + std::to_string(d), [c, d] { return classical_fischer_rows(*c, d); }));
  } else if (suite == "table_ker") {
    for (int a = 0; a <= opt.a_max; ++a)
      out.push_back(task(suite, "a=" + std::to_string(a), [c, a] { return std::vector<CheckResult>{table_ker_row(*c, a)}; }));
  } else if (suite == "l_fischer") {
    for (int d = 0; d <= opt.a_max; ++d) {
      const Rational alpha = frac(m, 2) + d;
      out.push_back(task(suite, "k=0 d=" + std::to_string(d), [c, alpha] {
        return std::vector<CheckResult>{l_fischer_row(*c, 0, alpha)};
      }));
    }
    for (int a = 0; a <= opt.a_max + 1; ++a) {
      const Rational alpha = frac(m, 2) - 1 + a;
      out.push_back(task(suite, "k=1 a=" + std::to_string(a), [c, alpha] {
        return std::vector<CheckResult>{l_fischer_row(*c, 1, alpha)};
      }));
    }
  } else if (suite == "symplectic_fischer_k1") {
    for (int a = 0; a <= opt.a_max + 1; ++a)
      out.push_back(task(suite, "a=" + std::to_string(a), [c, a] { return symplectic_fischer_rows(*c, a); }));
  } else if (suite == "kernel_families") {
    for (int a = 0; a <= opt.a_max; ++a)
      out.push_back(task(suite, "a=" + std::to_string(a), [c, a] { return kernel_family_rows(*c, a); }));
  } else if (suite == "branching_table") {
    for (int t = -1; t <= opt.t_max; ++t)
      out.push_back(task(suite, "t=" + std::to_string(t), [c, t] { return branching_rows(*c, t); }));
  } else if (suite == "multiplicity") {
    for (int t = -1; t <= opt.a_max; ++t)
      out.push_back(task(suite, "t=" + std::to_string(t), [c, t] { return multiplicity_rows(*c, t); }));
  } else if (suite == "dim_identity") {
    for (int a = 2; a <= opt.a_max; ++a)
      out.push_back(task(suite, "a=" + std::to_string(a), [m, a] { return std::vector<CheckResult>{dim_identity_row(m, a)}; }));
  } else if (suite == "s0_branching") {
    for (int d = 0; d <= opt.d_max; ++d)
      out.push_back(task(suite, "d=" + std::to_string(d), [c, d] { return std::vector<CheckResult>{s0_row(*c, d)}; }));
  } else if (suite == "verma") {
    for (const char* v : {"1", "x1", "z1"}) {
      std::string text = v;
      const int n = opt.verma_n;
      out.push_back(task(suite, "v=" + text, [c, text, n] { return verma_vector_rows(*c, text, n); }));
    }
    for (int a = 0; a <= opt.a_max + 1; ++a)
      out.push_back(task(suite, "tensor a=" + std::to_string(a), [c, a] {
        return std::vector<CheckResult>{verma_tensor_row(*c, a)};
      }));
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return out;
}

std::vector<CheckResult> verify_algebra_relations(const OperatorCatalog& cat, int max_degree) {
  SuiteOptions o;
  o.max_degree = max_degree;
  return run_all(suite_tasks("algebra_relations", cat, o));
}

std::vector<CheckResult> verify_projector(const OperatorCatalog& cat, int a_max) {
  SuiteOptions o;
  o.a_max = a_max;
  return run_all(suite_tasks("projector", cat, o));
}

std::vector<CheckResult> verify_classical_fischer(const OperatorCatalog& cat, int d_max) {
  SuiteOptions o;
  o.d_max = d_max;
  return run_all(suite_tasks("classical_fischer", cat, o));
}

std::vector<CheckResult> verify_table_ker(const OperatorCatalog& cat, int a_max) {
  SuiteOptions o;
  o.a_max = a_max;
  return run_all(suite_tasks("table_ker", cat, o));
}

std::vector<CheckResult> verify_L_fischer(const OperatorCatalog& cat, int k, int a_max) {
  if (k < 0 || k > 1) throw std::invalid_argument("L-Fischer verification covers k <= 1");
  std::vector<CheckResult> out;
  const int m = cat.m();
  if (k == 0) {
    for (int d = 0; d <= a_max; ++d) out.push_back(l_fischer_row(cat, 0, frac(m, 2) + d));
  } else {
    for (int a = 0; a <= a_max + 1; ++a) out.push_back(l_fischer_row(cat, 1, frac(m, 2) - 1 + a));
  }
  return out;
}

std::vector<CheckResult> verify_symplectic_fischer_k1(const OperatorCatalog& cat, int a_max) {
  SuiteOptions o;
  o.a_max = a_max;
  return run_all(suite_tasks("symplectic_fischer_k1", cat, o));
}

std::vector<CheckResult> verify_kernel_families(const OperatorCatalog& cat, int a) {
  if (a < 0) throw std::invalid_argument("a must be >= 0");
  return kernel_family_rows(cat, a);
}

std::vector<CheckResult> verify_branching_table(const OperatorCatalog& cat, int t_max) {
  SuiteOptions o;
  o.t_max = t_max;
  return run_all(suite_tasks("branching_table", cat, o));
}

std::vector<CheckResult> verify_multiplicity_lemma(const OperatorCatalog& cat, int a_max) {
  SuiteOptions o;
  o.a_max = a_max;
  return run_all(suite_tasks("multiplicity", cat, o));
}

std::vector<CheckResult> verify_dim_identity(int m, int a_max) {
  std::vector<CheckResult> out;
  for (int a = 2; a <= a_max; ++a) out.push_back(dim_identity_row(m, a));
  return out;
}

std::vector<CheckResult> verify_s0_branching(const OperatorCatalog& cat, int d_max) {
  SuiteOptions o;
  o.d_max = d_max;
  return run_all(suite_tasks("s0_branching", cat, o));
}

std::vector<CheckResult> verify_verma(const OperatorCatalog& cat, int n_max, int a_max) {
  SuiteOptions o;
  o.verma_n = n_max;
  o.a_max = a_max;
  return run_all(suite_tasks("verma", cat, o));
}

}  // namespace smb
