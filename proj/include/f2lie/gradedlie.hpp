#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "f2lie/errors.hpp"
#include "f2lie/fplin.hpp"
#include "f2lie/report.hpp"
#include "f2lie/series.hpp"

namespace f2lie {

/// Named graded generators over F_p, p >= 5. The instantiation coming
/// from the three-cell complex L has generators x, u, v in degrees
/// 2n-1, 2np-2, 2np-1.
struct GeneratorSet {
  std::uint32_t p;
  std::vector<std::pair<std::string, int>> generators; // (name, degree)

  GeneratorSet(std::uint32_t p,
               std::vector<std::pair<std::string, int>> generators);

  static GeneratorSet paper(int n, std::uint32_t p);

  std::size_t size() const { return generators.size(); }
  std::size_t index_of(const std::string &name) const;
  const std::string &name(std::size_t i) const { return generators[i].first; }
  int degree(std::size_t i) const { return generators[i].second; }
};

/// Iterated bracket expression: a generator leaf or [left, right].
class BracketTree {
public:
  static BracketTree leaf(std::string name);
  static BracketTree bracket(BracketTree left, BracketTree right);

  bool is_leaf() const { return left_ == nullptr; }
  const std::string &leaf_name() const { return name_; }
  const BracketTree &left() const { return *left_; }
  const BracketTree &right() const { return *right_; }

  int degree(const GeneratorSet &gens) const;

private:
  BracketTree() = default;
  std::string name_;
  std::shared_ptr<const BracketTree> left_, right_;
};

/// Left-nested [a,[a,...[a,t]...]] with k occurrences of a; k = 0 gives t.
BracketTree ad_power(const std::string &a, int k, BracketTree t);

using Word = std::vector<std::uint32_t>; // generator indices

/// Homogeneous F_p-linear combination of words in the tensor algebra T(V).
class TensorElement {
public:
  TensorElement(std::uint32_t p, int degree);

  static TensorElement single(std::uint32_t p, int degree, Word w);

  std::uint32_t modulus() const { return p_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Residue> &terms() const { return terms_; }

  void add_term(const Word &w, std::int64_t coeff);
  TensorElement scaled(std::int64_t c) const;

  friend TensorElement operator+(const TensorElement &a,
                                 const TensorElement &b);
  friend TensorElement operator-(const TensorElement &a,
                                 const TensorElement &b);
  /// concatenation product in T(V)
  friend TensorElement concat(const TensorElement &a, const TensorElement &b);
  /// [a,b] = ab - (-1)^{|a||b|} ba
  friend TensorElement graded_bracket(const TensorElement &a,
                                      const TensorElement &b);

  bool operator==(const TensorElement &other) const;

private:
  std::uint32_t p_;
  int degree_;
  std::map<Word, Residue> terms_; // coefficients nonzero, reduced mod p
};

TensorElement expand_bracket(const BracketTree &t, const GeneratorSet &gens);

/// Degree -1 differential on generators: beta[i] = index of beta(gen i),
/// or nullopt when beta vanishes on it.
using GeneratorBeta = std::vector<std::optional<std::size_t>>;

/// beta(v) = u, zero on x and u.
GeneratorBeta paper_beta(const GeneratorSet &gens);

/// Extends a generator-level beta to T(V) as a Koszul-signed derivation.
TensorElement tensor_bockstein(const TensorElement &e,
                               const GeneratorSet &gens,
                               const GeneratorBeta &beta);

/// Jacobi identity [u,[x,v]] = [[u,x],v] + [x,[u,v]] for the paper
/// generators, plus nonvanishing of [[u,x],v].
VerificationReport jacobi_check(const GeneratorSet &gens);

struct LieDimsReport {
  std::map<int, std::int64_t> dims; // degree -> dimension
  std::int64_t at(int d) const;
};

PowerSeries chi_generators(const GeneratorSet &gens, int cap);
PowerSeries chi_tensor(const GeneratorSet &gens, int cap);
PowerSeries chi_symmetric(const GeneratorSet &gens, int cap);
/// 1 - chi_symmetric * (1 - chi_generators): generator series of [L,L].
PowerSeries chi_W(const GeneratorSet &gens, int cap);

/// Graded PBW product: exterior factor per odd-degree generator,
/// polynomial factor per even-degree generator.
PowerSeries pbw_series(const LieDimsReport &dims, int cap);

/// Degree-by-degree inverse of pbw_series.
LieDimsReport peel_generators(const PowerSeries &chi_ul, int cap);

inline constexpr std::int64_t kDefaultWordGuard = 200000;

/// Number of words of total degree d over the generator degrees,
/// clamped at guard+1.
std::int64_t word_count(const GeneratorSet &gens, int d, std::int64_t guard);
std::vector<Word> words_of_degree(const GeneratorSet &gens, int d);

/// Brute-force dimensions of the bracket-closed span of the generators
/// inside T(V), degree by degree.
LieDimsReport free_lie_dims_oracle(const GeneratorSet &gens, int cap,
                                   std::int64_t guard = kDefaultWordGuard);

/// Dimensions of the span of brackets of length >= 2 only.
LieDimsReport commutator_dims_oracle(const GeneratorSet &gens, int cap,
                                     std::int64_t guard = kDefaultWordGuard);

} // namespace f2lie
