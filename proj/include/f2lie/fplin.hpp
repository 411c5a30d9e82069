#pragma once

#include <cstdint>
#include <vector>

#include "f2lie/errors.hpp"

namespace f2lie {

using Residue = std::uint32_t;
using FpVector = std::vector<Residue>;

bool is_prime(std::uint32_t m);

/// Dense matrix over F_p, entries stored as residues in [0, p).
class FpMatrix {
public:
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  std::uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::int64_t value);
  FpVector row(std::size_t r) const;

private:
  std::uint32_t p_;
  std::size_t rows_, cols_;
  std::vector<Residue> entries_;
};

std::size_t rank(const FpMatrix &m);

/// Incrementally maintained row-reduced span of vectors in F_p^n.
/// Pivot rule: first nonzero column; rows kept sorted by pivot and
/// back-reduced, so the state is reproducible across runs.
class SpanState {
public:
  SpanState(std::uint32_t p, std::size_t ambient_dim);

  /// true iff v was outside the span (dimension grew by one).
  bool insert(const FpVector &v);

  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }

private:
  std::uint32_t p_;
  std::size_t ambient_;
  std::vector<FpVector> rows_;    // leading entry 1, sorted by pivot
  std::vector<std::size_t> pivots_;
};

Residue mod_inverse(Residue a, std::uint32_t p);

} // namespace f2lie
