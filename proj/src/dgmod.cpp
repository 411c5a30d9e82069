#include "f2lie/dgmod.hpp"

#include <algorithm>
#include <sstream>

namespace f2lie {

int WedgeSummary::total_classes() const {
  int n = 0;
  for (const auto &[key, mult] : counts)
    n += (key.second ? 2 : 1) * mult;
  return n;
}

bool WedgeSummary::all_moore() const {
  for (const auto &[key, mult] : counts)
    if (!key.second && mult > 0)
      return false;
  return true;
}

std::string WedgeSummary::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto &[key, mult] : counts) {
    for (int i = 0; i < mult; ++i) {
      if (!first)
        os << " v ";
      os << (key.second ? "P" : "S") << key.first;
      first = false;
    }
  }
  if (first)
    os << "(empty)";
  return os.str();
}

DgModule::DgModule(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p < 3)
    throw InvalidParameters("modulus must be an odd prime");
}

DgModule DgModule::sphere(std::uint32_t p, int q) {
  if (q < 1)
    throw DegreeTooSmall("sphere class degree must be >= 1");
  DgModule m(p);
  m.add_class("s" + std::to_string(q), q);
  return m;
}

DgModule DgModule::moore(std::uint32_t p, int q) {
  if (q < 2)
    throw DegreeTooSmall("Moore top degree must be >= 2");
  DgModule m(p);
  std::size_t bottom = m.add_class("m" + std::to_string(q) + "_bot", q - 1);
  std::size_t top = m.add_class("m" + std::to_string(q) + "_top", q);
  m.add_beta(top, bottom, 1);
  return m;
}

DgModule DgModule::paper_L(int n, std::uint32_t p) {
  if (n < 1 || !is_prime(p) || p < 5)
    throw InvalidParameters("need n >= 1 and prime p >= 5");
  int np = n * static_cast<int>(p);
  DgModule m(p);
  m.add_class("x", 2 * n - 1);
  std::size_t u = m.add_class("u", 2 * np - 2);
  std::size_t v = m.add_class("v", 2 * np - 1);
  m.add_beta(v, u, 1);
  return m;
}

DgModule DgModule::paper_K(int n, std::uint32_t p) {
  if (n < 1 || !is_prime(p) || p < 5)
    throw InvalidParameters("need n >= 1 and prime p >= 5");
  int np = n * static_cast<int>(p);
  DgModule m(p);
  m.add_class("x", 2 * n - 1);
  m.add_class("u", 2 * np - 2);
  return m;
}

std::size_t DgModule::add_class(std::string name, int degree) {
  if (degree < 1)
    throw DegreeTooSmall("class degrees must be >= 1");
  classes_.emplace_back(std::move(name), degree);
  beta_.emplace_back();
  return classes_.size() - 1;
}

void DgModule::add_beta(std::size_t from, std::size_t to, std::int64_t coeff) {
  if (degree(to) != degree(from) - 1)
    throw InvalidDifferential("beta must lower degree by exactly 1");
  std::int64_t m = coeff % static_cast<std::int64_t>(p_);
  if (m < 0)
    m += p_;
  if (m == 0)
    return;
  for (auto &[j, c] : beta_[from])
    if (j == to) {
      c = static_cast<Residue>((c + m) % p_);
      return;
    }
  beta_[from].emplace_back(to, static_cast<Residue>(m));
}

DgModule DgModule::suspend(int s) const {
  DgModule m(p_);
  for (const auto &[name, deg] : classes_)
    m.add_class(name, deg + s);
  m.beta_ = beta_;
  return m;
}

DgModule DgModule::with_zero_beta() const {
  DgModule m(p_);
  for (const auto &[name, deg] : classes_)
    m.add_class(name, deg);
  return m;
}

void DgModule::validate() const {
  for (std::size_t i = 0; i < size(); ++i) {
    // beta^2(class i) = 0
    std::map<std::size_t, std::uint64_t> acc;
    for (const auto &[j, c1] : beta_[i]) {
      if (degree(j) != degree(i) - 1)
        throw InvalidDifferential("beta does not lower degree by 1");
      for (const auto &[k, c2] : beta_[j])
        acc[k] = (acc[k] + static_cast<std::uint64_t>(c1) * c2) % p_;
    }
    for (const auto &[k, c] : acc)
      if (c != 0)
        throw InvalidDifferential("beta^2 != 0 on class " + name(i));
  }
}

WedgeSummary DgModule::decompose() const {
  validate();
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < size(); ++i)
    by_degree[degree(i)].push_back(i);

  // rank of beta restricted to each degree
  std::map<int, std::size_t> beta_rank;
  for (const auto &[d, idxs] : by_degree) {
    auto below = by_degree.find(d - 1);
    if (below == by_degree.end())
      continue;
    std::map<std::size_t, std::size_t> col;
    for (std::size_t j = 0; j < below->second.size(); ++j)
      col[below->second[j]] = j;
    FpMatrix mat(p_, idxs.size(), below->second.size());
    for (std::size_t r = 0; r < idxs.size(); ++r)
      for (const auto &[j, c] : beta_[idxs[r]])
        mat.set(r, col.at(j), c);
    std::size_t rk = rank(mat);
    if (rk > 0)
      beta_rank[d] = rk;
  }

  WedgeSummary summary;
  for (const auto &[d, rk] : beta_rank)
    for (std::size_t i = 0; i < rk; ++i)
      summary.add_moore(d);
  for (const auto &[d, idxs] : by_degree) {
    std::size_t rk_here = beta_rank.count(d) ? beta_rank.at(d) : 0;
    std::size_t rk_above =
        beta_rank.count(d + 1) ? beta_rank.at(d + 1) : 0;
    std::size_t spheres = idxs.size() - rk_here - rk_above;
    for (std::size_t i = 0; i < spheres; ++i)
      summary.add_sphere(d);
  }
  return summary;
}

DgModule tensor(const DgModule &a, const DgModule &b) {
  if (a.p_ != b.p_)
    throw ModulusMismatch("tensor of modules over different primes");
  DgModule m(a.p_);
  std::vector<std::vector<std::size_t>> id(a.size(),
                                           std::vector<std::size_t>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      id[i][j] =
          m.add_class(a.name(i) + "*" + b.name(j), a.degree(i) + b.degree(j));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (const auto &[k, c] : a.beta_[i])
        m.add_beta(id[i][j], id[k][j], c);
      // Koszul sign (-1)^{|a_i|}
      std::int64_t sign = (a.degree(i) % 2 != 0) ? -1 : 1;
      for (const auto &[k, c] : b.beta_[j])
        m.add_beta(id[i][j], id[i][k], sign * static_cast<std::int64_t>(c));
    }
  return m;
}

DgModule wedge(const DgModule &a, const DgModule &b) {
  if (a.p_ != b.p_)
    throw ModulusMismatch("wedge of modules over different primes");
  DgModule m(a.p_);
  for (std::size_t i = 0; i < a.size(); ++i)
    m.add_class(a.name(i), a.degree(i));
  std::size_t off = a.size();
  for (std::size_t j = 0; j < b.size(); ++j)
    m.add_class(b.name(j), b.degree(j));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto &[k, c] : a.beta_[i])
      m.add_beta(i, k, c);
  for (std::size_t j = 0; j < b.size(); ++j)
    for (const auto &[k, c] : b.beta_[j])
      m.add_beta(off + j, off + k, c);
  return m;
}

} // namespace f2lie
