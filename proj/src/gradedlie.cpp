#include "f2lie/gradedlie.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace f2lie {

GeneratorSet::GeneratorSet(std::uint32_t p_,
                           std::vector<std::pair<std::string, int>> gens)
    : p(p_), generators(std::move(gens)) {
  if (!is_prime(p) || p < 5)
    throw InvalidParameters(
        "p must be a prime >= 5 (the graded Lie structure needs p >= 5)");
  std::set<std::string> names;
  for (const auto &[name, deg] : generators) {
    if (deg < 1)
      throw InvalidParameters("generator degrees must be >= 1");
    if (!names.insert(name).second)
      throw InvalidParameters("generator names must be unique: " + name);
  }
}

GeneratorSet GeneratorSet::paper(int n, std::uint32_t p) {
  if (n < 1)
    throw InvalidParameters("n must be >= 1");
  int np = n * static_cast<int>(p);
  return GeneratorSet(
      p, {{"x", 2 * n - 1}, {"u", 2 * np - 2}, {"v", 2 * np - 1}});
}

std::size_t GeneratorSet::index_of(const std::string &name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].first == name)
      return i;
  throw UnknownGenerator("unknown generator: " + name);
}

BracketTree BracketTree::leaf(std::string name) {
  BracketTree t;
  t.name_ = std::move(name);
  return t;
}

BracketTree BracketTree::bracket(BracketTree left, BracketTree right) {
  BracketTree t;
  t.left_ = std::make_shared<const BracketTree>(std::move(left));
  t.right_ = std::make_shared<const BracketTree>(std::move(right));
  return t;
}

int BracketTree::degree(const GeneratorSet &gens) const {
  if (is_leaf())
    return gens.degree(gens.index_of(name_));
  return left_->degree(gens) + right_->degree(gens);
}

BracketTree ad_power(const std::string &a, int k, BracketTree t) {
  if (k < 0)
    throw InvalidParameters("ad power must be >= 0");
  for (int i = 0; i < k; ++i)
    t = BracketTree::bracket(BracketTree::leaf(a), std::move(t));
  return t;
}

TensorElement::TensorElement(std::uint32_t p, int degree)
    : p_(p), degree_(degree) {}

TensorElement TensorElement::single(std::uint32_t p, int degree, Word w) {
  TensorElement e(p, degree);
  e.add_term(w, 1);
  return e;
}

void TensorElement::add_term(const Word &w, std::int64_t coeff) {
  std::int64_t m = coeff % static_cast<std::int64_t>(p_);
  if (m < 0)
    m += p_;
  if (m == 0)
    return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, static_cast<Residue>(m));
    return;
  }
  Residue sum = static_cast<Residue>((it->second + m) % p_);
  if (sum == 0)
    terms_.erase(it);
  else
    it->second = sum;
}

TensorElement TensorElement::scaled(std::int64_t c) const {
  TensorElement r(p_, degree_);
  for (const auto &[w, coeff] : terms_)
    r.add_term(w, c * coeff);
  return r;
}

TensorElement operator+(const TensorElement &a, const TensorElement &b) {
  if (a.p_ != b.p_)
    throw ModulusMismatch("tensor elements over different primes");
  if (a.degree_ != b.degree_ && !a.is_zero() && !b.is_zero())
    throw InvalidParameters("adding tensor elements of different degrees");
  TensorElement r(a.p_, a.is_zero() ? b.degree_ : a.degree_);
  for (const auto &[w, c] : a.terms_)
    r.add_term(w, c);
  for (const auto &[w, c] : b.terms_)
    r.add_term(w, c);
  return r;
}

TensorElement operator-(const TensorElement &a, const TensorElement &b) {
  return a + b.scaled(-1);
}

TensorElement concat(const TensorElement &a, const TensorElement &b) {
  if (a.p_ != b.p_)
    throw ModulusMismatch("tensor elements over different primes");
  TensorElement r(a.p_, a.degree_ + b.degree_);
  for (const auto &[wa, ca] : a.terms_)
    for (const auto &[wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, static_cast<std::int64_t>(ca) * cb);
    }
  return r;
}

TensorElement graded_bracket(const TensorElement &a, const TensorElement &b) {
  int sign = (a.degree() % 2 != 0 && b.degree() % 2 != 0) ? -1 : 1;
  // ab - (-1)^{|a||b|} ba
  return concat(a, b) - concat(b, a).scaled(sign);
}

bool TensorElement::operator==(const TensorElement &other) const {
  return p_ == other.p_ && terms_ == other.terms_;
}

TensorElement expand_bracket(const BracketTree &t, const GeneratorSet &gens) {
  if (t.is_leaf()) {
    std::size_t i = gens.index_of(t.leaf_name());
    return TensorElement::single(gens.p, gens.degree(i),
                                 {static_cast<std::uint32_t>(i)});
  }
  return graded_bracket(expand_bracket(t.left(), gens),
                        expand_bracket(t.right(), gens));
}

GeneratorBeta paper_beta(const GeneratorSet &gens) {
  GeneratorBeta beta(gens.size());
  beta[gens.index_of("v")] = gens.index_of("u");
  return beta;
}

TensorElement tensor_bockstein(const TensorElement &e,
                               const GeneratorSet &gens,
                               const GeneratorBeta &beta) {
  if (beta.size() != gens.size())
    throw InvalidParameters("beta map size does not match generator count");
  TensorElement r(e.modulus(), e.degree() - 1);
  for (const auto &[w, c] : e.terms()) {
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (beta[w[i]].has_value()) {
        Word img = w;
        img[i] = static_cast<std::uint32_t>(*beta[w[i]]);
        r.add_term(img, static_cast<std::int64_t>(sign) * c);
      }
      if (gens.degree(w[i]) % 2 != 0)
        sign = -sign;
    }
  }
  return r;
}

VerificationReport jacobi_check(const GeneratorSet &gens) {
  VerificationReport rep;
  rep.check = "jacobi";
  rep.params = {{"p", gens.p}};
  auto x = BracketTree::leaf("x");
  auto u = BracketTree::leaf("u");
  auto v = BracketTree::leaf("v");
  auto lhs = expand_bracket(
      BracketTree::bracket(u, BracketTree::bracket(x, v)), gens);
  auto t1 = expand_bracket(
      BracketTree::bracket(BracketTree::bracket(u, x), v), gens);
  auto t2 = expand_bracket(
      BracketTree::bracket(x, BracketTree::bracket(u, v)), gens);
  TensorElement diff = lhs - t1 - t2;
  rep.pass = diff.is_zero() && !t1.is_zero();
  if (!rep.pass) {
    rep.first_discrepancy = lhs.degree();
    rep.lhs_value = diff.is_zero() ? "0" : "nonzero residual";
    rep.rhs_value = t1.is_zero() ? "[[u,x],v] = 0" : "0";
  } else {
    std::ostringstream os;
    os << "degree " << lhs.degree() << ", [[u,x],v] has "
       << t1.terms().size() << " words";
    rep.note = os.str();
  }
  return rep;
}

std::int64_t LieDimsReport::at(int d) const {
  auto it = dims.find(d);
  return it == dims.end() ? 0 : it->second;
}

PowerSeries chi_generators(const GeneratorSet &gens, int cap) {
  PowerSeries s(cap);
  for (const auto &[name, deg] : gens.generators)
    if (deg <= cap)
      s.set_coeff(deg, checked_add(s.coeff(deg), 1));
  return s;
}

PowerSeries chi_tensor(const GeneratorSet &gens, int cap) {
  return (PowerSeries::one(cap) - chi_generators(gens, cap)).recip();
}

PowerSeries chi_symmetric(const GeneratorSet &gens, int cap) {
  PowerSeries s = PowerSeries::one(cap);
  for (const auto &[name, deg] : gens.generators)
    s = s * PowerSeries::binom_factor(deg, 1, deg % 2 != 0, cap);
  return s;
}

PowerSeries chi_W(const GeneratorSet &gens, int cap) {
  return PowerSeries::one(cap) -
         chi_symmetric(gens, cap) *
             (PowerSeries::one(cap) - chi_generators(gens, cap));
}

PowerSeries pbw_series(const LieDimsReport &dims, int cap) {
  PowerSeries s = PowerSeries::one(cap);
  for (const auto &[deg, m] : dims.dims) {
    if (deg > cap || m == 0)
      continue;
    if (m < 0)
      throw NegativeDimension("dimension report has a negative entry");
    s = s * PowerSeries::binom_factor(deg, m, deg % 2 != 0, cap);
  }
  return s;
}

LieDimsReport peel_generators(const PowerSeries &chi_ul, int cap) {
  PowerSeries running = chi_ul.truncated(cap);
  if (running.coeff(0) != 1)
    throw InvalidParameters("peeling requires constant term 1");
  LieDimsReport rep;
  for (int d = 1; d <= cap; ++d) {
    std::int64_t m = running.coeff(d);
    if (m < 0) {
      std::ostringstream os;
      os << "negative dimension " << m << " at degree " << d;
      throw NegativeDimension(os.str());
    }
    rep.dims[d] = m;
    if (m == 0)
      continue;
    if (d % 2 != 0) {
      // divide by (1+t^d)^m
      running = running * PowerSeries::binom_factor(d, m, true, cap).recip();
    } else {
      // divide by 1/(1-t^d)^m
      running = running *
                (PowerSeries::one(cap) - PowerSeries::monomial(d, 1, cap))
                    .pow(m);
    }
  }
  return rep;
}

std::int64_t word_count(const GeneratorSet &gens, int d, std::int64_t guard) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(d) + 1, 0);
  counts[0] = 1;
  for (int k = 1; k <= d; ++k) {
    std::int64_t c = 0;
    for (const auto &[name, deg] : gens.generators)
      if (deg <= k)
        c += counts[static_cast<std::size_t>(k - deg)];
    counts[static_cast<std::size_t>(k)] = std::min(c, guard + 1);
  }
  return counts[static_cast<std::size_t>(d)];
}

namespace {

void emit_words(const GeneratorSet &gens, int remaining, Word &prefix,
                std::vector<Word> &out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int deg = gens.degree(i);
    if (deg > remaining)
      continue;
    prefix.push_back(static_cast<std::uint32_t>(i));
    emit_words(gens, remaining - deg, prefix, out);
    prefix.pop_back();
  }
}

FpVector vectorize(const TensorElement &e,
                   const std::map<Word, std::size_t> &index,
                   std::size_t ambient) {
  FpVector v(ambient, 0);
  for (const auto &[w, c] : e.terms())
    v[index.at(w)] = c;
  return v;
}

// Basis elements of L_d inside T(V), degree by degree: generators plus
// accepted brackets of lower-degree basis elements.
std::vector<std::vector<TensorElement>>
oracle_bases(const GeneratorSet &gens, int cap, std::int64_t guard) {
  // guard every degree up front so an oversized cap fails fast
  for (int d = 1; d <= cap; ++d)
    if (word_count(gens, d, guard) > guard) {
      std::ostringstream os;
      os << "word count at degree " << d << " exceeds guard " << guard;
      throw CapTooLarge(os.str());
    }
  std::vector<std::vector<TensorElement>> basis(
      static_cast<std::size_t>(cap) + 1);
  for (int d = 1; d <= cap; ++d) {
    if (word_count(gens, d, guard) == 0)
      continue;
    std::vector<Word> words = words_of_degree(gens, d);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i)
      index.emplace(words[i], i);
    SpanState span(gens.p, words.size());
    auto &layer = basis[static_cast<std::size_t>(d)];

    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens.degree(i) == d) {
        TensorElement e = TensorElement::single(
            gens.p, d, {static_cast<std::uint32_t>(i)});
        if (span.insert(vectorize(e, index, words.size())))
          layer.push_back(e);
      }

    for (int a = 1; 2 * a <= d; ++a) {
      const auto &lo = basis[static_cast<std::size_t>(a)];
      const auto &hi = basis[static_cast<std::size_t>(d - a)];
      for (std::size_t i = 0; i < lo.size(); ++i) {
        std::size_t jstart = (2 * a == d) ? i : 0;
        for (std::size_t j = jstart; j < hi.size(); ++j) {
          TensorElement e = graded_bracket(lo[i], hi[j]);
          if (e.is_zero())
            continue;
          if (span.insert(vectorize(e, index, words.size())))
            layer.push_back(e);
        }
      }
    }
  }
  return basis;
}

} // namespace

std::vector<Word> words_of_degree(const GeneratorSet &gens, int d) {
  std::vector<Word> out;
  Word prefix;
  emit_words(gens, d, prefix, out);
  return out;
}

LieDimsReport free_lie_dims_oracle(const GeneratorSet &gens, int cap,
                                   std::int64_t guard) {
  auto basis = oracle_bases(gens, cap, guard);
  LieDimsReport rep;
  for (int d = 1; d <= cap; ++d)
    rep.dims[d] =
        static_cast<std::int64_t>(basis[static_cast<std::size_t>(d)].size());
  return rep;
}

LieDimsReport commutator_dims_oracle(const GeneratorSet &gens, int cap,
                                     std::int64_t guard) {
  auto basis = oracle_bases(gens, cap, guard);
  LieDimsReport rep;
  for (int d = 1; d <= cap; ++d) {
    std::vector<Word> words = words_of_degree(gens, d);
    if (words.empty()) {
      rep.dims[d] = 0;
      continue;
    }
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i)
      index.emplace(words[i], i);
    SpanState span(gens.p, words.size());
    for (int a = 1; 2 * a <= d; ++a) {
      const auto &lo = basis[static_cast<std::size_t>(a)];
      const auto &hi = basis[static_cast<std::size_t>(d - a)];
      for (std::size_t i = 0; i < lo.size(); ++i) {
        std::size_t jstart = (2 * a == d) ? i : 0;
        for (std::size_t j = jstart; j < hi.size(); ++j) {
          TensorElement e = graded_bracket(lo[i], hi[j]);
          if (!e.is_zero())
            span.insert(vectorize(e, index, words.size()));
        }
      }
    }
    rep.dims[d] = static_cast<std::int64_t>(span.dimension());
  }
  return rep;
}

} // namespace f2lie
