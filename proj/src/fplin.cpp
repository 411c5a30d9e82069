#include "f2lie/fplin.hpp"

#include <algorithm>

namespace f2lie {

bool is_prime(std::uint32_t m) {
  if (m < 2)
    return false;
  for (std::uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0)
      return false;
  return true;
}

Residue mod_inverse(Residue a, std::uint32_t p) {
  // Fermat: a^(p-2) mod p
  std::uint64_t base = a % p, result = 1;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1)
      result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  if (!is_prime(p))
    throw NonPrimeModulus("matrix modulus must be prime");
}

Residue FpMatrix::at(std::size_t r, std::size_t c) const {
  return entries_[r * cols_ + c];
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  std::int64_t m = value % static_cast<std::int64_t>(p_);
  if (m < 0)
    m += p_;
  entries_[r * cols_ + c] = static_cast<Residue>(m);
}

FpVector FpMatrix::row(std::size_t r) const {
  return FpVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::size_t rank(const FpMatrix &m) {
  SpanState span(m.modulus(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    span.insert(m.row(r));
  return span.dimension();
}

SpanState::SpanState(std::uint32_t p, std::size_t ambient_dim)
    : p_(p), ambient_(ambient_dim) {
  if (!is_prime(p))
    throw NonPrimeModulus("span modulus must be prime");
}

bool SpanState::insert(const FpVector &v) {
  if (v.size() != ambient_)
    throw DimensionMismatch("vector length does not match ambient dimension");
  FpVector w = v;
  for (Residue &e : w)
    e %= p_;

  // reduce against existing rows
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue c = w[pivots_[i]];
    if (c == 0)
      continue;
    std::uint64_t mult = p_ - c; // subtract c * row
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      w[j] = static_cast<Residue>((w[j] + mult * rows_[i][j]) % p_);
  }

  std::size_t pivot = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (w[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot == ambient_)
    return false;

  Residue inv = mod_inverse(w[pivot], p_);
  for (std::size_t j = pivot; j < ambient_; ++j)
    w[j] = static_cast<Residue>(static_cast<std::uint64_t>(w[j]) * inv % p_);

  // back-reduce existing rows against the new one
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue c = rows_[i][pivot];
    if (c == 0)
      continue;
    std::uint64_t mult = p_ - c;
    for (std::size_t j = pivot; j < ambient_; ++j)
      rows_[i][j] =
          static_cast<Residue>((rows_[i][j] + mult * w[j]) % p_);
  }

  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(w));
  return true;
}

} // namespace f2lie
