#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "smb/monomial.hpp"

namespace smb {

/// All monomials of exactly the given tri-degree in m variables per block,
/// in canonical order.
std::vector<Monomial> monomial_basis(int m, TriDegree d);

/// C(kx+m-1, m-1) * C(ky+m-1, m-1) * C(kz+m-1, m-1).
std::uint64_t monomial_count(int m, TriDegree d);

/// A finite graded piece of the polynomial space: the direct sum of the listed
/// tri-homogeneous components, with their monomials in canonical order.
class Block {
 public:
  /// Requires m in [kStableRangeMin, kMaxDimension]; throws std::invalid_argument.
  Block(int m, std::set<TriDegree> degrees);

  int m() const { return m_; }
  const std::set<TriDegree>& degrees() const { return degrees_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  bool contains_degree(const TriDegree& d) const { return degrees_.count(d) != 0; }
  std::optional<std::size_t> index_of(const Monomial& mono) const;

  friend bool operator==(const Block& a, const Block& b) {
    return a.m_ == b.m_ && a.degrees_ == b.degrees_;
  }

 private:
  int m_;
  std::set<TriDegree> degrees_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

using BlockPtr = std::shared_ptr<const Block>;

BlockPtr make_block(int m, std::set<TriDegree> degrees);

}  // namespace smb
