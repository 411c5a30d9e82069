#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "f2lie/errors.hpp"
#include "f2lie/fplin.hpp"

namespace f2lie {

/// Multiset of sphere-type and Moore-type summands. Key is (q, is_moore);
/// Moore(q) stands for the mod-p Moore space P^q(p): classes in degrees
/// q-1 and q joined by beta.
struct WedgeSummary {
  std::map<std::pair<int, bool>, int> counts; // (q, is_moore) -> multiplicity

  void add_sphere(int q) { counts[{q, false}]++; }
  void add_moore(int q) { counts[{q, true}]++; }
  int total_classes() const;
  bool all_moore() const;
  bool operator==(const WedgeSummary &other) const = default;
  std::string to_string() const;
};

/// Finite graded F_p vector space with a degree -1 differential beta,
/// beta^2 = 0.
class DgModule {
public:
  explicit DgModule(std::uint32_t p);

  static DgModule sphere(std::uint32_t p, int q);
  static DgModule moore(std::uint32_t p, int q);
  /// Reduced homology of the three-cell complex L: classes x(2n-1),
  /// u(2np-2), v(2np-1) with beta(v) = u.
  static DgModule paper_L(int n, std::uint32_t p);
  /// The two-cell skeleton K: classes x(2n-1), u(2np-2), beta = 0.
  static DgModule paper_K(int n, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::size_t size() const { return classes_.size(); }
  int degree(std::size_t i) const { return classes_[i].second; }
  const std::string &name(std::size_t i) const { return classes_[i].first; }

  std::size_t add_class(std::string name, int degree);
  /// beta(class from) += coeff * (class to); degree(to) must be degree(from)-1.
  void add_beta(std::size_t from, std::size_t to, std::int64_t coeff);
  const std::vector<std::pair<std::size_t, Residue>> &
  beta_of(std::size_t i) const {
    return beta_[i];
  }

  DgModule suspend(int s) const;
  DgModule with_zero_beta() const;

  /// Throws InvalidDifferential unless beta drops degree by 1 and
  /// beta^2 = 0.
  void validate() const;

  WedgeSummary decompose() const;

  friend DgModule tensor(const DgModule &a, const DgModule &b);
  friend DgModule wedge(const DgModule &a, const DgModule &b);

private:
  std::uint32_t p_;
  std::vector<std::pair<std::string, int>> classes_;
  std::vector<std::vector<std::pair<std::size_t, Residue>>> beta_;
};

} // namespace f2lie
