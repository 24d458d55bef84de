#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "invol/closed_forms.hpp"
#include "invol/geninv.hpp"

using namespace invol;

TEST_CASE("biword validation") {
  CHECK(is_valid({{1, 2}, {2, 1}, 2}));
  CHECK_FALSE(is_valid({{1, 1}, {1, 2}, 2}));  // tie order violated
  CHECK(is_valid({{}, {}, 0}));
  CHECK(is_valid({{}, {}, 3}));
  CHECK_FALSE(is_valid({{2, 1}, {1, 2}, 2}));     // top not weakly increasing
  CHECK_FALSE(is_valid({{1, 2}, {1, 1}, 2}));     // column multiset not symmetric
  CHECK_FALSE(is_valid({{1}, {3}, 2}));           // letter outside alphabet
  CHECK_FALSE(is_valid({{1, 2}, {1}, 2}));        // ragged rows
  CHECK(is_valid({{1, 1, 2}, {2, 1, 1}, 2}));     // (1,2),(1,1),(2,1)
}

TEST_CASE("matrix encoding round trip") {
  const SymMatrix m2 = to_matrix({{1, 1}, {1, 1}, 1});
  CHECK(m2.dim() == 1);
  CHECK(m2.at(1, 1) == 2);
  CHECK(from_matrix(m2) == GeneralizedInvolution{{1, 1}, {1, 1}, 1});

  const SymMatrix cross = SymMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(from_matrix(cross) == GeneralizedInvolution{{1, 2}, {2, 1}, 2});
  CHECK(to_matrix({{1, 2}, {2, 1}, 2}) == cross);

  const SymMatrix zero3(3);
  CHECK(from_matrix(zero3) == GeneralizedInvolution{{}, {}, 3});

  CHECK_THROWS_AS(to_matrix({{1, 1}, {1, 2}, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix::from_rows({{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix::from_rows({{0, -1}, {-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix::from_rows({{0, 1}}), std::invalid_argument);

  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 6; ++m)
      for_each_generalized_involution(
          n, m, [&](const GeneralizedInvolution& g) { CHECK(from_matrix(to_matrix(g)) == g); });
}

TEST_CASE("gfix and sign") {
  CHECK(gfix(GeneralizedInvolution{{1, 1}, {1, 1}, 1}) == 0);  // multiplicity 2 is even
  CHECK(gfix(GeneralizedInvolution{{1}, {1}, 1}) == 1);
  CHECK(gfix(GeneralizedInvolution{{1, 2}, {2, 1}, 2}) == 0);
  CHECK(sign(GeneralizedInvolution{{1, 1}, {1, 1}, 1}) == -1);
  CHECK(sign(GeneralizedInvolution{{}, {}, 0}) == 1);
  CHECK(sign(GeneralizedInvolution{{1, 2}, {2, 1}, 2}) == -1);
}

TEST_CASE("polarization") {
  CHECK(polarize({{1, 1}, {1, 1}, 1}).word() == std::vector<int>{2, 1});
  CHECK(polarize({{1, 2}, {1, 2}, 2}).word() == std::vector<int>{1, 2});
  CHECK(polarize({{1, 2}, {2, 1}, 2}).word() == std::vector<int>{2, 1});
  CHECK(polarize({{}, {}, 0}).word().empty());
  // Repeated letters in one run: later occurrences rank smaller.
  CHECK(polarize({{1, 1, 1}, {1, 1, 1}, 1}).word() == std::vector<int>{3, 2, 1});
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_generalized_involutions(2, 2).size() == 4);
  CHECK(enumerate_generalized_involutions(1, 1).size() == 1);
  CHECK(enumerate_generalized_involutions(0, 4).size() == 1);
  CHECK(enumerate_generalized_involutions(3, 0).empty());

  // Count equals the closed form, and objects are pairwise distinct.
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= 5; ++m) {
      const auto all = enumerate_generalized_involutions(n, m);
      CHECK(Int(all.size()) == a_total(n, m));
      std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
      for (const auto& g : all) {
        CHECK(is_valid(g));
        CHECK(g.length() == n);
        seen.insert({g.top, g.bottom});
      }
      CHECK(seen.size() == all.size());
    }
}

TEST_CASE("signed enumeration agrees with pinned values") {
  CHECK(a_hat_bruteforce(2, 1) == -1);
  CHECK(a_hat_bruteforce(2, 2) == -2);
  CHECK(a_hat_bruteforce(0, 5) == 1);
}

TEST_CASE("census splits the enumeration by sign") {
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= 5; ++m) {
      Int plus = 0, minus = 0;
      for_each_generalized_involution(n, m, [&](const GeneralizedInvolution& g) {
        (sign(g) > 0 ? plus : minus) += 1;
      });
      const GenInvCensus c = census(n, m);
      CHECK(c.even == plus);
      CHECK(c.total == plus + minus);
      CHECK(c.signed_sum == plus - minus);
      for (int threads : {1, 3}) CHECK(census_parallel(n, m, threads) == c);
    }
}

TEST_CASE("polarization fibers") {
  const auto f22 = fibers(2, 2);
  REQUIRE(f22.size() == 2);
  CHECK(f22.at(Permutation({1, 2})) == 1);
  CHECK(f22.at(Permutation({2, 1})) == 3);

  for (int m = 1; m <= 5; ++m) {
    const auto f1 = fibers(1, m);
    REQUIRE(f1.size() == 1);
    CHECK(f1.at(Permutation({1})) == m);
  }
  const auto f0 = fibers(0, 3);
  REQUIRE(f0.size() == 1);
  CHECK(f0.at(Permutation(std::vector<int>{})) == 1);
}

TEST_CASE("fiber law and sign compatibility") {
  for (int n = 0; n <= 6; ++n)
    for (int m = 1; m <= 5; ++m) {
      const auto fib = fibers(n, m);
      Int covered = 0;
      for (const auto& [sigma, size] : fib) {
        CHECK(is_involution(sigma));
        CHECK(size == binomial(n + m - rises(sigma) - 1LL, n));
        covered += size;
      }
      CHECK(covered == a_total(n, m));
      for_each_generalized_involution(n, m, [&](const GeneralizedInvolution& g) {
        CHECK(sign(g) == sign_involution(polarize(g)));
      });
    }
}

TEST_CASE("permutation biwords polarize to themselves") {
  for (int n = 0; n <= 6; ++n)
    for_each_involution(n, [&](const std::vector<int>& w) {
      GeneralizedInvolution g;
      g.alphabet_size = n;
      for (int i = 1; i <= n; ++i) g.top.push_back(i);
      g.bottom = w;
      REQUIRE(is_valid(g));
      CHECK(polarize(g).word() == w);
      CHECK(gfix(g) == fixed_points(std::span<const int>(w)));
    });
}

TEST_CASE("geninv caps are enforced") {
  CHECK_THROWS_AS(enumerate_generalized_involutions(caps().geninv_length + 1, 2), cap_exceeded);
  CHECK_THROWS_AS(census(2, caps().geninv_alphabet + 1), cap_exceeded);
  CHECK_THROWS_AS(fibers(caps().geninv_length + 1, 1), cap_exceeded);
  CHECK_THROWS_AS(a_hat_bruteforce(caps().geninv_length + 1, 1), cap_exceeded);
  CHECK_THROWS_AS(census(-1, 2), std::invalid_argument);
}
