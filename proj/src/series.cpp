#include "f2lie/series.hpp"

#include <algorithm>

namespace f2lie {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("int64 overflow in series addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("int64 overflow in series multiplication");
  return r;
}

PowerSeries::PowerSeries(int cap) {
  if (cap < 0)
    throw InvalidParameters("series cap must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(cap) + 1, 0);
}

PowerSeries PowerSeries::one(int cap) {
  PowerSeries s(cap);
  s.coeffs_[0] = 1;
  return s;
}

PowerSeries PowerSeries::monomial(int degree, std::int64_t coeff, int cap) {
  PowerSeries s(cap);
  if (degree <= cap)
    s.coeffs_[static_cast<std::size_t>(degree)] = coeff;
  return s;
}

PowerSeries PowerSeries::geometric(int d, int cap) {
  if (d < 1)
    throw InvalidParameters("geometric step must be >= 1");
  PowerSeries s(cap);
  for (int k = 0; k <= cap; k += d)
    s.coeffs_[static_cast<std::size_t>(k)] = 1;
  return s;
}

PowerSeries PowerSeries::binom_factor(int d, std::int64_t m, bool exterior,
                                      int cap) {
  if (d < 1)
    throw InvalidParameters("binom_factor degree must be >= 1");
  if (m < 0)
    throw InvalidParameters("binom_factor multiplicity must be >= 0");
  PowerSeries base = exterior ? (one(cap) + monomial(d, 1, cap))
                              : (one(cap) - monomial(d, 1, cap));
  PowerSeries p = base.pow(m);
  return exterior ? p : p.recip();
}

std::int64_t PowerSeries::coeff(int d) const {
  if (d < 0 || d > cap())
    throw InvalidParameters("coefficient degree out of range");
  return coeffs_[static_cast<std::size_t>(d)];
}

void PowerSeries::set_coeff(int d, std::int64_t value) {
  if (d < 0 || d > cap())
    throw InvalidParameters("coefficient degree out of range");
  coeffs_[static_cast<std::size_t>(d)] = value;
}

PowerSeries PowerSeries::truncated(int new_cap) const {
  PowerSeries s(new_cap);
  int m = std::min(new_cap, cap());
  for (int d = 0; d <= m; ++d)
    s.coeffs_[static_cast<std::size_t>(d)] = coeffs_[static_cast<std::size_t>(d)];
  return s;
}

PowerSeries operator+(const PowerSeries &a, const PowerSeries &b) {
  PowerSeries s(std::min(a.cap(), b.cap()));
  for (int d = 0; d <= s.cap(); ++d)
    s.coeffs_[static_cast<std::size_t>(d)] =
        checked_add(a.coeff(d), b.coeff(d));
  return s;
}

PowerSeries operator-(const PowerSeries &a, const PowerSeries &b) {
  return a + (-b);
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries s(cap());
  for (int d = 0; d <= cap(); ++d)
    s.coeffs_[static_cast<std::size_t>(d)] =
        checked_mul(-1, coeffs_[static_cast<std::size_t>(d)]);
  return s;
}

PowerSeries operator*(const PowerSeries &a, const PowerSeries &b) {
  PowerSeries s(std::min(a.cap(), b.cap()));
  for (int i = 0; i <= s.cap(); ++i) {
    if (a.coeff(i) == 0)
      continue;
    for (int j = 0; i + j <= s.cap(); ++j) {
      if (b.coeff(j) == 0)
        continue;
      std::size_t k = static_cast<std::size_t>(i + j);
      s.coeffs_[k] =
          checked_add(s.coeffs_[k], checked_mul(a.coeff(i), b.coeff(j)));
    }
  }
  return s;
}

PowerSeries PowerSeries::recip() const {
  std::int64_t c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1)
    throw NonUnitConstantTerm("recip requires constant term +1 or -1");
  PowerSeries b(cap());
  b.coeffs_[0] = c0; // 1/1 = 1, 1/(-1) = -1
  for (int n = 1; n <= cap(); ++n) {
    std::int64_t acc = 0;
    for (int k = 1; k <= n; ++k)
      acc = checked_add(acc, checked_mul(coeff(k), b.coeff(n - k)));
    b.coeffs_[static_cast<std::size_t>(n)] = checked_mul(-c0, acc);
  }
  return b;
}

PowerSeries PowerSeries::pow(std::int64_t e) const {
  if (e < 0)
    throw InvalidParameters("series exponent must be >= 0");
  PowerSeries result = one(cap());
  PowerSeries base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

int first_difference(const PowerSeries &a, const PowerSeries &b) {
  int m = std::min(a.cap(), b.cap());
  for (int d = 0; d <= m; ++d)
    if (a.coeff(d) != b.coeff(d))
      return d;
  return -1;
}

bool PowerSeries::operator==(const PowerSeries &other) const {
  return first_difference(*this, other) == -1;
}

std::vector<std::pair<int, std::int64_t>> PowerSeries::terms() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (int d = 0; d <= cap(); ++d)
    if (coeffs_[static_cast<std::size_t>(d)] != 0)
      out.emplace_back(d, coeffs_[static_cast<std::size_t>(d)]);
  return out;
}

} // namespace f2lie
