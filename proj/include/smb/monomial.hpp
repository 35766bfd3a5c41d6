#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

namespace smb {

/// Largest supported dimension m of each vector variable.
inline constexpr int kMaxDimension = 16;

/// Smallest m for which the branching machinery is valid (stable range).
inline constexpr int kStableRangeMin = 6;

enum class VarBlock : std::uint8_t { X = 0, Y = 1, Z = 2 };

char block_letter(VarBlock b);

/// One coordinate of the matrix variable (x, y; z). Indices are 1-based.
struct VariableId {
  VarBlock block = VarBlock::X;
  int index = 1;

  static VariableId x(int i) { return {VarBlock::X, i}; }
  static VariableId y(int i) { return {VarBlock::Y, i}; }
  static VariableId z(int i) { return {VarBlock::Z, i}; }

  /// Position in the packed exponent array.
  int slot() const { return static_cast<int>(block) * kMaxDimension + (index - 1); }
  std::string name() const;

  friend bool operator==(const VariableId&, const VariableId&) = default;
};

/// Homogeneity degrees in x, y and z.
struct TriDegree {
  int kx = 0;
  int ky = 0;
  int kz = 0;

  int total() const { return kx + ky + kz; }
  int of(VarBlock b) const;
  bool valid() const { return kx >= 0 && ky >= 0 && kz >= 0; }
  std::string to_string() const;

  friend auto operator<=>(const TriDegree&, const TriDegree&) = default;
};

/// Signed change of the three degrees produced by an operator term.
struct DegreeShift {
  int dx = 0;
  int dy = 0;
  int dz = 0;

  friend auto operator<=>(const DegreeShift&, const DegreeShift&) = default;
};

inline TriDegree operator+(TriDegree d, DegreeShift s) {
  return {d.kx + s.dx, d.ky + s.dy, d.kz + s.dz};
}
inline DegreeShift operator+(DegreeShift a, DegreeShift b) {
  return {a.dx + b.dx, a.dy + b.dy, a.dz + b.dz};
}

/// Monomial x^alpha y^beta z^gamma, packed as one byte per exponent.
///
/// Canonical order is graded-lexicographic on (alpha | beta | gamma): lower
/// total degree first, then the lexicographically larger exponent vector
/// first, so x1 < x2 < ... < z_m among the variables.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const int> alpha, std::span<const int> beta,
                                 std::span<const int> gamma);
  static Monomial variable(VariableId v);

  int exponent(VariableId v) const { return exps_[v.slot()]; }
  int exponent_at(int slot) const { return exps_[slot]; }
  int degree() const { return degree_; }
  TriDegree tri_degree() const;
  bool is_constant() const { return degree_ == 0; }

  /// Multiplies by v in place.
  void raise(VariableId v) { raise_slot(v.slot()); }
  void raise_slot(int slot);
  /// Divides by v in place; returns the exponent before the division (0 leaves
  /// the monomial untouched).
  int lower(VariableId v) { return lower_slot(v.slot()); }
  int lower_slot(int slot) {
    const int e = exps_[slot];
    if (e > 0) {
      --exps_[slot];
      --degree_;
    }
    return e;
  }

  Monomial operator*(const Monomial& other) const;

  /// Renders e.g. "x1*z2^2"; the empty monomial renders as "1".
  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::array<std::uint8_t, 3 * kMaxDimension> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace smb
