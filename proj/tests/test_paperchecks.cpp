#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "f2lie/paperchecks.hpp"

using namespace f2lie;

TEST_CASE("closed form euPO") {
  CHECK(euPO_numerator_degrees(1, 5) ==
        std::vector<int>{2, 9, 10, 11, 17, 18, 18, 19});

  auto s = closed_form_euPO(1, 5, 12);
  CHECK(s.terms() == std::vector<std::pair<int, std::int64_t>>{
                         {2, 1}, {9, 1}, {10, 2}, {11, 1}});

  for (int n : {1, 2, 3}) {
    auto t = closed_form_euPO(n, 5, 60);
    for (int d = 0; d < 4 * n - 2; ++d)
      CHECK(t.coeff(d) == 0);
    CHECK(t.coeff(4 * n - 2) == 1);
  }
}

TEST_CASE("verify_euPO over the grid") {
  for (const auto &g : default_grid()) {
    auto rep = verify_euPO(g.n, g.p, 60);
    INFO(rep.check << " n=" << g.n << " p=" << g.p);
    CHECK(rep.pass);
  }
}

TEST_CASE("euPO negative control") {
  // closed form with the t^{4n-2} term deleted must fail at 4n-2
  auto gens = GeneratorSet::paper(1, 5);
  auto perturbed = closed_form_euPO(1, 5, 60) -
                   PowerSeries::monomial(2, 1, 60);
  auto rep = compare_series("eupo-perturbed", {{"n", 1}, {"p", 5}},
                            chi_W(gens, 60), perturbed);
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_discrepancy == 2);
  CHECK(rep.lhs_value == "1");
  CHECK(rep.rhs_value == "0");
}

TEST_CASE("basis census") {
  for (const auto &g : default_grid()) {
    auto rep = basis_census(g.n, g.p, 60);
    INFO("n=" << g.n << " p=" << g.p);
    CHECK(rep.pass);
  }
}

TEST_CASE("census base degrees equal closed-form numerator exponents") {
  for (const auto &g : default_grid()) {
    auto gens = GeneratorSet::paper(g.n, g.p);
    auto x = BracketTree::leaf("x");
    auto u = BracketTree::leaf("u");
    auto v = BracketTree::leaf("v");
    auto br = [](BracketTree a, BracketTree b) {
      return BracketTree::bracket(std::move(a), std::move(b));
    };
    std::vector<int> base = {
        br(x, x).degree(gens),        br(x, u).degree(gens),
        br(x, v).degree(gens),        br(u, v).degree(gens),
        br(v, v).degree(gens),        br(x, br(u, v)).degree(gens),
        br(x, br(v, v)).degree(gens), br(v, br(x, x)).degree(gens)};
    std::sort(base.begin(), base.end());
    CHECK(base == euPO_numerator_degrees(g.n, g.p));
  }
}

TEST_CASE("homOSL") {
  auto rep = verify_homOSL(1, 5, 60, 12);
  CHECK(rep.pass);
  CHECK(rep.note.find("2:1") != std::string::npos);
  CHECK(rep.note.find("12:2") != std::string::npos);

  // both sides of the oracle identity have coefficient 5 at t^12
  auto gens = GeneratorSet::paper(1, 5);
  auto tw = (PowerSeries::one(12) - chi_W(gens, 12)).recip();
  CHECK(tw.coeff(12) == 5);
  CHECK(pbw_series(commutator_dims_oracle(gens, 12), 12).coeff(12) == 5);

  CHECK(verify_homOSL(2, 5, 60, 12).pass);
  CHECK(verify_homOSL(3, 5, 60, 12).pass);
  CHECK(verify_homOSL(1, 7, 60, 12).pass);
}

TEST_CASE("homOSL guard propagates") {
  CHECK_THROWS_AS(verify_homOSL(1, 5, 60, 40, 50), CapTooLarge);
}

TEST_CASE("hilbert series") {
  auto om = hilbert_omega2(1, 5, 10);
  CHECK(om.terms() == std::vector<std::pair<int, std::int64_t>>{
                          {0, 1}, {1, 1}, {8, 1}, {9, 2}, {10, 1}});
  CHECK(hilbert_omega2(2, 5, 60).coeff(0) == 1);
  CHECK(hilbert_omega2(2, 5, 60).coeff(3) == 1);
  for (int d = 1; d < 3; ++d)
    CHECK(hilbert_omega2(2, 5, 60).coeff(d) == 0);

  // F_{2k} limits
  auto gens = GeneratorSet::paper(1, 5);
  CHECK(hilbert_F2k(1, 5, 1, 60) == chi_symmetric(gens, 60));
  CHECK(hilbert_F2k(1, 5, 0, 60) ==
        PowerSeries::one(60) + PowerSeries::monomial(1, 1, 60));
  CHECK(hilbert_F2k(2, 5, 0, 60) ==
        PowerSeries::one(60) + PowerSeries::monomial(3, 1, 60));

  // F_2 agrees with Omega^2 S^3 through degree 47; 2np^2-2 = 48 differs
  auto f2 = hilbert_F2k(1, 5, 1, 60);
  auto full = hilbert_omega2(1, 5, 60);
  CHECK(first_difference(f2.truncated(47), full.truncated(47)) == -1);
  CHECK(first_difference(f2, full) == 48);

  // Omega J_{p^k-1} interleaves: k=1 is the (2np-2)-truncated polynomial part
  auto oj1 = hilbert_omegaJ(1, 5, 1, 30);
  CHECK(oj1.coeff(0) == 1);
  CHECK(oj1.coeff(1) == 1);
  CHECK(oj1.coeff(8) == 1);
  CHECK(oj1.coeff(9) == 1); // x*y_8, but no x_9 factor yet
}

TEST_CASE("filtration") {
  for (const auto &g : default_grid())
    CHECK(verify_filtration(g.n, g.p, 60).pass);
}

TEST_CASE("filtration negative control") {
  // dropping t^{2np-2} from the F_2 series breaks the sandwich
  auto f2 = hilbert_F2k(1, 5, 1, 60) - PowerSeries::monomial(8, 1, 60);
  auto rep = compare_series("filtration-perturbed", {}, f2,
                            hilbert_omega2(1, 5, 60).truncated(47));
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_discrepancy == 8);
}

TEST_CASE("sll") {
  auto rep = verify_sll(1, 5);
  CHECK(rep.pass);
  CHECK(rep.note == "S3 v P11 v P11 v P18 v P19");

  auto rep2 = verify_sll(2, 5);
  CHECK(rep2.pass);
  CHECK(rep2.note == "S7 v P23 v P23 v P38 v P39");

  CHECK(verify_sll(3, 5).pass);
  CHECK(verify_sll(1, 7).pass);
}

TEST_CASE("smash KL") {
  auto rep = verify_smashKL(1, 5);
  CHECK(rep.pass);
  CHECK(rep.note == "S3 v S10 v P11 v P18");
  for (const auto &g : default_grid())
    CHECK(verify_smashKL(g.n, g.p).pass);

  // multiset summary is invariant under swapping the tensor factors
  auto K = DgModule::paper_K(1, 5);
  auto L = DgModule::paper_L(1, 5);
  CHECK(tensor(K, L).suspend(1).decompose() ==
        tensor(L, K).suspend(1).decompose());
}

TEST_CASE("sigma2L") {
  auto rep = verify_sigma2L(1, 5);
  CHECK(rep.pass);
  CHECK(rep.note == "S3 v P11");
  auto rep3 = verify_sigma2L(3, 5);
  CHECK(rep3.pass);
  CHECK(rep3.note == "S7 v P31");
  for (const auto &g : default_grid())
    CHECK(verify_sigma2L(g.n, g.p).pass);
}

TEST_CASE("summary negative control reports the diff") {
  WedgeSummary got = DgModule::paper_L(1, 5).suspend(2).decompose();
  WedgeSummary wrong;
  wrong.add_sphere(3);
  wrong.add_moore(12);
  auto rep = compare_summary("sigma2l-perturbed", {}, got, wrong);
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_discrepancy == 11);
}

TEST_CASE("sigma F2") {
  for (const auto &g : default_grid()) {
    auto rep = verify_sigmaF2(g.n, g.p, 60);
    INFO("n=" << g.n << " p=" << g.p << " " << rep.note);
    CHECK(rep.pass);
  }

  // negative control: zeroed beta leaves sphere-type classes behind
  auto flat = f2_complement_module(1, 5, 60).with_zero_beta();
  auto got = flat.suspend(1).decompose();
  CHECK_FALSE(got.all_moore());
}

TEST_CASE("f2 module census") {
  // class count per degree matches the symmetric-algebra Hilbert series
  auto m = f2_bockstein_module(1, 5, 30);
  m.validate();
  auto sym = chi_symmetric(GeneratorSet::paper(1, 5), 30);
  std::map<int, std::int64_t> by_degree;
  for (std::size_t i = 0; i < m.size(); ++i)
    by_degree[m.degree(i)]++;
  for (int d = 1; d <= 30; ++d)
    CHECK(by_degree[d] == sym.coeff(d));
}

TEST_CASE("checks are cap-monotone") {
  for (int cap : {10, 20, 40, 60}) {
    CHECK(verify_euPO(1, 5, cap).pass);
    CHECK(basis_census(1, 5, cap).pass);
    CHECK(verify_filtration(1, 5, cap).pass);
    CHECK(verify_sigmaF2(1, 5, cap).pass);
  }
}

TEST_CASE("run_all grid") {
  for (const auto &g : default_grid()) {
    auto reports = run_all(g.n, g.p, 60, 12);
    CHECK(reports.size() == 9);
    for (const auto &r : reports) {
      INFO(r.check << " n=" << g.n << " p=" << g.p);
      CHECK(r.pass);
    }
  }
  CHECK_FALSE(not_verifiable().empty());
}
