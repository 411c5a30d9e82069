#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "f2lie/errors.hpp"

namespace f2lie {

/// Truncated formal power series in one variable t with exact int64
/// coefficients. Arithmetic throws OverflowError instead of wrapping.
/// Equality is coefficientwise up to the smaller cap.
class PowerSeries {
public:
  explicit PowerSeries(int cap);

  static PowerSeries one(int cap);
  static PowerSeries monomial(int degree, std::int64_t coeff, int cap);
  /// sum_{k>=0} t^{k*d} truncated at cap, d >= 1
  static PowerSeries geometric(int d, int cap);
  /// (1+t^d)^m (exterior) or 1/(1-t^d)^m (polynomial)
  static PowerSeries binom_factor(int d, std::int64_t m, bool exterior,
                                  int cap);

  int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int d) const;
  void set_coeff(int d, std::int64_t value);

  PowerSeries recip() const;
  PowerSeries pow(std::int64_t e) const;
  PowerSeries truncated(int new_cap) const;

  friend PowerSeries operator+(const PowerSeries &a, const PowerSeries &b);
  friend PowerSeries operator-(const PowerSeries &a, const PowerSeries &b);
  friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b);
  PowerSeries operator-() const;

  bool operator==(const PowerSeries &other) const;

  /// First degree (up to min cap) where the coefficients differ, or -1.
  friend int first_difference(const PowerSeries &a, const PowerSeries &b);

  /// Nonzero (degree, coefficient) pairs sorted by degree.
  std::vector<std::pair<int, std::int64_t>> terms() const;

private:
  std::vector<std::int64_t> coeffs_; // index = degree, size = cap+1
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

} // namespace f2lie
