#pragma once

#include <map>
#include <string>
#include <vector>

#include "smb/linear_operator.hpp"

namespace smb {

/// (X, Y, H) normalized so that [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H.
struct Sl2Triple {
  std::string name;
  LinearOperator X;
  LinearOperator Y;
  LinearOperator H;
};

/// Every named operator for a fixed dimension m.
///
/// Fractions A/B in the transvector generators are read as B^{-1} A: the
/// Euler denominators see the degree after A has acted.
///
/// Labels:
///   Ex Ey Ez E Ecal              Euler operators, Ecal = Ey - Ex + Ez + m/2
///   D_s D_s_dag                  <z,d_y> - <d_x,d_z>,  <y,d_z> + <x,z>
///   L R                          <x,d_y> - Delta_z/2,  <y,d_x> + |z|^2/2
///   X_j_k Y_j_k Z_j_k            sp(2m) realization (Y, Z with j <= k)
///   L_a_b Casimir                angular momenta (a < b), -sum L_ab^2
///   S_xz S_zx A_xz C_xz          transvector generators (and the y variants)
///   Pi_L                         1 + (Ecal - 2)^{-1} R L
///   Delta_u norm_u uv u_dv du_dv building blocks for u, v in {x, y, z}
class OperatorCatalog {
 public:
  /// Entries in `overrides` replace the catalog definition of that label and
  /// propagate into every operator built from it.
  explicit OperatorCatalog(int m, std::map<std::string, LinearOperator> overrides = {});

  int m() const { return m_; }
  const LinearOperator& get(const std::string& label) const;
  const LinearOperator& operator[](const std::string& label) const { return get(label); }
  bool contains(const std::string& label) const { return ops_.count(label) != 0; }
  std::vector<std::string> labels() const;

  const std::vector<std::string>& sp_generators() const { return sp_labels_; }
  const std::vector<std::string>& angular_momenta() const { return angular_labels_; }
  std::vector<Sl2Triple> sl2_triples() const;

  OperatorCatalog with_override(const std::string& label, const LinearOperator& op) const;

  /// sum_{j<=order} R^j L^j / (j! (Ecal-2)(Ecal-3)...(Ecal-1-j)) as a lazy operator.
  LinearOperator extremal_projector(int order) const;

  /// The same series applied directly, truncated where L^j p vanishes.
  Polynomial project_lowest_weight(const Polynomial& p) const;

  /// Ecal eigenvalue of a tri-degree.
  Rational ecal(const TriDegree& d) const;

 private:
  void define(const std::string& label, LinearOperator op);

  int m_;
  std::map<std::string, LinearOperator> overrides_;
  std::map<std::string, LinearOperator> ops_;
  std::vector<std::string> sp_labels_;
  std::vector<std::string> angular_labels_;
};

}  // namespace smb
