#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "smb/block.hpp"
#include "smb/linear_operator.hpp"

namespace smb {

/// Sorted (index, value) pairs without zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector sparse_add(const SparseVector& a, const SparseVector& b, const Rational& scale = 1);
SparseVector sparse_scale(SparseVector v, const Rational& c);

class ImageOutsideCodomain : public std::domain_error {
 public:
  explicit ImageOutsideCodomain(const TriDegree& d);
  const TriDegree& degree() const { return degree_; }

 private:
  TriDegree degree_;
};

class AmbientMismatch : public std::invalid_argument {
 public:
  AmbientMismatch() : std::invalid_argument("subspaces live in different ambient spaces") {}
};

/// Coordinates of p in the monomial basis of blk; throws ImageOutsideCodomain
/// for terms outside the block.
SparseVector coordinates(const Block& blk, const Polynomial& p);
Polynomial to_polynomial(const Block& blk, const SparseVector& v);

/// Column-stored sparse matrix.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::vector<SparseVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const SparseVector& column(std::size_t j) const { return columns_[j]; }
  Rational entry(std::size_t i, std::size_t j) const;
  std::size_t nonzeros() const;

  SparseVector operator*(const SparseVector& v) const;
  std::vector<SparseVector> row_vectors() const;

  const BlockPtr& domain() const { return domain_; }
  const BlockPtr& codomain() const { return codomain_; }
  void set_blocks(BlockPtr domain, BlockPtr codomain);

  /// Rows of a on top of rows of b (same column count).
  static RationalMatrix stack(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_;
  std::vector<SparseVector> columns_;
  BlockPtr domain_;
  BlockPtr codomain_;
};

/// Reduced row-echelon form of the given rows over `ncols` columns: pivots are
/// leading entries normalized to 1, rows sorted by pivot.
std::vector<SparseVector> rref(std::vector<SparseVector> rows, std::size_t ncols);

/// A subspace of Q^n (optionally the coordinate space of a Block).
///
/// Canonical basis: RREF with the pivot at the last nonzero coordinate of each
/// vector, pivots strictly increasing. Equal subspaces have identical bases.
class Subspace {
 public:
  explicit Subspace(BlockPtr ambient);
  explicit Subspace(std::size_t ambient_dim);

  static Subspace span(BlockPtr ambient, const std::vector<SparseVector>& vectors);
  static Subspace span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors);
  static Subspace span(BlockPtr ambient, const std::vector<Polynomial>& polys);
  static Subspace whole(BlockPtr ambient);
  /// Trusted constructor: `basis` is already canonical.
  static Subspace from_canonical(BlockPtr ambient, std::size_t ambient_dim, std::vector<SparseVector> basis);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const BlockPtr& ambient() const { return ambient_; }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  std::vector<Polynomial> basis_polynomials() const;

  bool contains(const SparseVector& v) const;
  bool contains(const Polynomial& p) const;
  /// v minus its reduction against the basis; zero iff contained.
  SparseVector residual(SparseVector v) const;
  bool same_ambient(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.same_ambient(b) && a.basis_ == b.basis_;
  }

 private:
  BlockPtr ambient_;
  std::size_t ambient_dim_;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Column j is the coordinate vector of op applied to the j-th domain monomial.
RationalMatrix matrix_of(const LinearOperator& op, const BlockPtr& domain, const BlockPtr& codomain);

std::size_t rank(const RationalMatrix& m);
Subspace nullspace(const RationalMatrix& m);
Subspace image(const RationalMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const std::vector<Subspace>& parts);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool is_direct_sum(const std::vector<Subspace>& parts, const Subspace& target);

/// Image of a subspace under op, expressed in `codomain`.
Subspace apply_to_subspace(const LinearOperator& op, const Subspace& sub, const BlockPtr& codomain);

}  // namespace smb
