#include "smb/monomial.hpp"

#include <cstring>
#include <stdexcept>

namespace smb {

char block_letter(VarBlock b) {
  switch (b) {
    case VarBlock::X: return 'x';
    case VarBlock::Y: return 'y';
    case VarBlock::Z: return 'z';
  }
  return '?';
}

std::string VariableId::name() const { return block_letter(block) + std::to_string(index); }

int TriDegree::of(VarBlock b) const {
  switch (b) {
    case VarBlock::X: return kx;
    case VarBlock::Y: return ky;
    case VarBlock::Z: return kz;
  }
  return 0;
}

std::string TriDegree::to_string() const {
  return "(" + std::to_string(kx) + "," + std::to_string(ky) + "," + std::to_string(kz) + ")";
}

namespace {

void fill_block(std::array<std::uint8_t, 3 * kMaxDimension>& exps, int offset,
                std::span<const int> values, std::uint16_t& degree) {
  if (values.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw std::invalid_argument("exponent vector longer than kMaxDimension");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > 255) throw std::invalid_argument("exponent out of range");
    exps[offset + i] = static_cast<std::uint8_t>(values[i]);
    degree = static_cast<std::uint16_t>(degree + values[i]);
  }
}

}  // namespace

Monomial Monomial::from_exponents(std::span<const int> alpha, std::span<const int> beta,
                                  std::span<const int> gamma) {
  Monomial m;
  fill_block(m.exps_, 0, alpha, m.degree_);
  fill_block(m.exps_, kMaxDimension, beta, m.degree_);
  fill_block(m.exps_, 2 * kMaxDimension, gamma, m.degree_);
  return m;
}

Monomial Monomial::variable(VariableId v) {
  if (v.index < 1 || v.index > kMaxDimension) throw std::out_of_range("variable index");
  Monomial m;
  m.raise(v);
  return m;
}

void Monomial::raise_slot(int slot) {
  if (exps_[slot] == 255) throw std::overflow_error("monomial exponent overflow");
  ++exps_[slot];
  ++degree_;
}

TriDegree Monomial::tri_degree() const {
  TriDegree d;
  for (int i = 0; i < kMaxDimension; ++i) {
    d.kx += exps_[i];
    d.ky += exps_[kMaxDimension + i];
    d.kz += exps_[2 * kMaxDimension + i];
  }
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const int e = exps_[i] + other.exps_[i];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (int slot = 0; slot < 3 * kMaxDimension; ++slot) {
    const int e = exps_[slot];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += block_letter(static_cast<VarBlock>(slot / kMaxDimension));
    out += std::to_string(slot % kMaxDimension + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::size_t Monomial::hash() const {
  // FNV-1a over 8-byte words.
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < exps_.size(); i += 8) {
    std::uint64_t w;
    std::memcpy(&w, exps_.data() + i, 8);
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  // Larger exponent vector comes first.
  const int c = std::memcmp(a.exps_.data(), b.exps_.data(), a.exps_.size());
  if (c == 0) return std::strong_ordering::equal;
  return c > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace smb
