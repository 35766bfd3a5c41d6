#include "smb/block.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace smb {

namespace {

// Exponent vectors of length m summing to d, lexicographically descending.
void compositions(int m, int d, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(m, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == m - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  if (m == 0) {
    if (d == 0) out.emplace_back();
    return;
  }
  rec(rec, 0, d);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<Monomial> monomial_basis(int m, TriDegree d) {
  if (m < 1 || m > kMaxDimension) throw std::invalid_argument("m out of range");
  if (!d.valid()) throw std::invalid_argument("negative degree");
  std::vector<std::vector<int>> ax, ay, az;
  compositions(m, d.kx, ax);
  compositions(m, d.ky, ay);
  compositions(m, d.kz, az);
  std::vector<Monomial> out;
  out.reserve(ax.size() * ay.size() * az.size());
  // Nested descending enumeration of (alpha | beta | gamma) is already the
  // canonical order within one tri-degree.
  for (const auto& a : ax)
    for (const auto& b : ay)
      for (const auto& c : az) out.push_back(Monomial::from_exponents(a, b, c));
  return out;
}

std::uint64_t monomial_count(int m, TriDegree d) {
  return binomial(d.kx + m - 1, m - 1) * binomial(d.ky + m - 1, m - 1) *
         binomial(d.kz + m - 1, m - 1);
}

Block::Block(int m, std::set<TriDegree> degrees) : m_(m), degrees_(std::move(degrees)) {
  if (m < kStableRangeMin) {
    throw std::invalid_argument("m must be >= " + std::to_string(kStableRangeMin) +
                                " (stable range), got " + std::to_string(m));
  }
  if (m > kMaxDimension) throw std::invalid_argument("m exceeds kMaxDimension");
  for (const auto& d : degrees_) {
    if (!d.valid()) throw std::invalid_argument("negative degree in block " + d.to_string());
    auto part = monomial_basis(m, d);
    basis_.insert(basis_.end(), part.begin(), part.end());
  }
  std::sort(basis_.begin(), basis_.end());
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> Block::index_of(const Monomial& mono) const {
  auto it = index_.find(mono);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BlockPtr make_block(int m, std::set<TriDegree> degrees) {
  return std::make_shared<const Block>(m, std::move(degrees));
}

}  // namespace smb
