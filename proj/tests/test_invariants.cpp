#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul.hpp"
#include "rfd/invariants.hpp"
#include "support.hpp"

using namespace rfd;
using namespace rfd::testing;

namespace {

Analyzer monomial_analyzer(const RingPtr& R) {
  auto primes = candidate_primes(R, PrimeMode::monomial);
  auto battery = ideal_battery(R, primes);
  return Analyzer(R, std::move(primes), std::move(battery));
}

const PrimeCandidate& prime(const Analyzer& A, const std::string& name) {
  const PrimeCandidate* p = A.primes().find(name);
  REQUIRE(p != nullptr);
  return *p;
}

const ExtendedInt inf = ExtendedInt::pos_inf();
const ExtendedInt minus_inf = ExtendedInt::neg_inf();

}  // namespace

TEST_CASE("grade") {
  auto R = qring({"x", "y"});
  auto A = monomial_analyzer(R);
  CHECK(A.grade(ideal(R, "x, y"), A.ring_module()) == 2);

  auto C = qring({"x", "y"}, {"x^2", "x*y"});
  auto AC = monomial_analyzer(C);
  CHECK(AC.grade(C->maximal_ideal(), AC.ring_module()) == 0);

  auto L = qring({"x", "y"}, {"x - 1"});
  Analyzer AL(L, candidate_primes(L, PrimeMode::listed), {});
  CHECK(AL.grade(ideal(L, "x"), AL.ring_module()) == inf);
}

TEST_CASE("grade and depth at primes") {
  auto R = qring({"x", "y"});
  auto A = monomial_analyzer(R);
  CHECK(A.grade_at_prime(ideal(R, "x"), A.ring_module(), prime(A, "(y)")) == inf);
  CHECK(A.grade_at_prime(ideal(R, "x, y"), A.ring_module(), prime(A, "m")) == 2);
  CHECK(A.depth_at_prime(A.ring_module(), prime(A, "(x)")) == 1);
  CHECK(A.depth_at_prime(cyclic(R, "x"), prime(A, "(y)")) == inf);

  auto P = qring({"x", "y", "z"}, {"x^2", "x*y", "x*z"});
  auto AP = monomial_analyzer(P);
  const auto& p = prime(AP, "(x, y)");
  CHECK(AP.grade_at_prime(p.ideal, AP.ring_module(), p) == 1);
  CHECK(AP.depth_at_prime(AP.ring_module(), p) == 1);
  CHECK(AP.depth_at_prime(AP.ring_module(), prime(AP, "m")) == 0);

  auto C = qring({"x", "y"}, {"x^2", "x*y"});
  auto AC = monomial_analyzer(C);
  CHECK(AC.depth_at_prime(AC.ring_module(), prime(AC, "m")) == 0);
}

TEST_CASE("dimension and Cohen-Macaulay defect") {
  auto C = qring({"x", "y"}, {"x^2", "x*y"});
  auto AC = monomial_analyzer(C);
  CHECK(AC.dim_at_prime(prime(AC, "m")) == ExtendedInt(1));
  CHECK(AC.cmd_at_prime(prime(AC, "m")) == ExtendedInt(1));

  auto R = qring({"x", "y"});
  auto A = monomial_analyzer(R);
  CHECK(A.cmd_at_prime(prime(A, "m")) == ExtendedInt(0));

  auto P = qring({"x", "y", "z"}, {"x^2", "x*y", "x*z"});
  auto AP = monomial_analyzer(P);
  CHECK(AP.dim_at_prime(prime(AP, "(x, y)")) == ExtendedInt(1));
  CHECK(AP.dim_at_prime(prime(AP, "m")) == ExtendedInt(2));

  // Listed mode: user heights, and dim R_m from the graded ring otherwise.
  auto K = qring({"x", "y", "z"}, {"x*y - z^2"});
  std::vector<PrimeCandidate> extra{listed_prime(K, "ruling", Ps(K, "x, z"), 1)};
  Analyzer AK(K, candidate_primes(K, PrimeMode::listed, extra), {});
  CHECK(AK.dim_at_prime(prime(AK, "ruling")) == ExtendedInt(1));
  CHECK(AK.dim_at_prime(prime(AK, "m")) == ExtendedInt(2));
  CHECK(AK.cmd_at_prime(prime(AK, "m")) == ExtendedInt(0));
}

TEST_CASE("candidate primes, minimal and associated primes") {
  auto C = qring({"x", "y"}, {"x^2", "x*y"});
  auto set = candidate_primes(C, PrimeMode::monomial);
  REQUIRE(set.candidates.size() == 2);
  CHECK(set.candidates[0].name == "(x)");
  CHECK(set.candidates[1].name == "m");
  auto mins = min_primes(set);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].name == "(x)");

  auto R = qring({"x", "y"});
  auto rmins = min_primes(candidate_primes(R, PrimeMode::monomial));
  REQUIRE(rmins.size() == 1);
  CHECK(rmins[0].ideal.is_zero());

  auto AC = monomial_analyzer(C);
  CHECK(AC.is_associated(AC.ring_module(), prime(AC, "m")));
  CHECK(AC.is_associated(AC.ring_module(), prime(AC, "(x)")));

  auto K = qring({"x", "y"}, {"x*y - 1"});
  CHECK_THROWS_AS(candidate_primes(K, PrimeMode::monomial), InputError);
  CHECK_THROWS_AS(min_primes(candidate_primes(K, PrimeMode::listed)), InputError);
}

TEST_CASE("restricted flat dimensions") {
  auto P = qring({"x", "y", "z"}, {"x^2", "x*y", "x*z"});
  auto A = monomial_analyzer(P);
  const auto& R = A.ring_module();
  for (const auto& p : A.primes().candidates) {
    CHECK(A.Rfd_at_prime(R, p) == 0);
    CHECK(A.rfd_at_prime(R, p) == 0);
    CHECK(A.Rfdprime_at_prime(R, p) == A.Rfdprime_at_prime(R, p));
    CHECK(A.xi(R, p) <= 0);
  }
  auto zero = cyclic(P, "1");
  const auto& m = prime(A, "m");
  CHECK(A.Rfd_at_prime(zero, m) == minus_inf);
  CHECK(A.rfd_at_prime(zero, m) == minus_inf);
  CHECK(A.Rfdprime_at_prime(zero, m) == minus_inf);
  CHECK(A.xi(zero, m) == minus_inf);
  CHECK(A.Rfd(zero) == minus_inf);

  auto M = cyclic(P, "x, y");
  CHECK(A.Rfd_at_prime(M, m) == 1);
  CHECK(A.rfd_at_prime(M, m) == 0);
  CHECK(A.Rfd(M) == 1);
  CHECK(A.rfd(M) == 0);
  CHECK(A.rfd_at_prime(M, prime(A, "(x, y)")) >= 1);
  CHECK(A.Rfdprime(R) == 1);
  CHECK(A.Rfd(R) == 0);

  auto T = qring({"x"});
  auto AT = monomial_analyzer(T);
  auto k = cyclic(T, "x");
  const auto& px = prime(AT, "m");
  CHECK(AT.Rfdprime_at_prime(k, px) == 1);
  CHECK(AT.Rfd_at_prime(k, px) == 1);
  CHECK(AT.rfd_at_prime(k, px) == 1);
  CHECK(AT.xi(k, px) == 1);
}

TEST_CASE("condition evaluation") {
  auto T = qring({"x"});
  auto AT = monomial_analyzer(T);
  auto r = AT.evaluate_conditions(cyclic(T, "x"), prime(AT, "m"));
  CHECK_FALSE(r.Lprime);
  CHECK_FALSE(r.L);
  CHECK_FALSE(r.s);
  CHECK_FALSE(r.G);
  CHECK(r.Y == Tribool::no);

  auto ok = AT.evaluate_conditions(AT.ring_module(), prime(AT, "m"));
  CHECK(ok.Lprime);
  CHECK(ok.G);
  CHECK(ok.Y == Tribool::yes);

  auto P = qring({"x", "y", "z"}, {"x^2", "x*y", "x*z"});
  auto A = monomial_analyzer(P);
  for (const char* gens : {"x, y", "y", "x", "y, z"}) {
    auto M = cyclic(P, gens);
    CHECK(A.evaluate_conditions(M, prime(A, "m")).Y == Tribool::yes);
    auto at_p = A.evaluate_conditions(M, prime(A, "(x, y)"));
    CHECK(at_p.Y == Tribool::yes);
  }
  auto w = A.evaluate_conditions(cyclic(P, "x, y"), prime(A, "(x, y)"));
  CHECK_FALSE(w.s);
  CHECK(w.G);
}

TEST_CASE("Ext grade agrees with the Koszul oracle") {
  std::vector<RingPtr> rings{qring({"x", "y"}), qring({"x", "y"}, {"x^2", "x*y"}),
                             qring({"x", "y", "z"}, {"x^2", "x*y", "x*z"}), qring({"x", "y", "z"}, {"x*z", "y*z"}),
                             make_ring(Field::prime(2), {"x", "y", "z"}, {"x^2", "y^2"})};
  for (const auto& R : rings) {
    auto A = monomial_analyzer(R);
    std::vector<ModulePresentation> modules{A.ring_module(), cyclic(R, "x"), cyclic(R, "x, y"), cyclic(R, "y^2")};
    for (const auto& M : modules)
      for (const auto& I : A.battery()) {
        if (I.generators().size() > 5) continue;
        KoszulOracle k(R, I.generators(), M);
        CHECK(A.grade(I, M) == k.grade());
        for (const auto& p : A.primes().candidates)
          if (p.ideal.contains(I)) CHECK(A.grade_at_prime(I, M, p) == k.grade_at(p));
      }
  }
}

TEST_CASE("chain, dual formulas, localization of grade") {
  std::vector<RingPtr> rings{qring({"x", "y"}, {"x^2", "x*y"}), qring({"x", "y", "z"}, {"x^2", "x*y", "x*z"}),
                             qring({"x", "y", "z"}, {"x*y", "x*z", "y*z"})};
  for (const auto& R : rings) {
    auto A = monomial_analyzer(R);
    std::vector<ModulePresentation> modules{A.ring_module(), cyclic(R, "x"), cyclic(R, "y"), cyclic(R, "x, y")};
    for (const auto& M : modules) {
      CHECK(A.rfd(M) == A.rfd_dual(M));
      CHECK(A.Rfdprime(M) >= A.Rfd(M));
      CHECK(A.Rfd(M) >= A.rfd(M));
      for (const auto& p : A.primes().candidates) {
        auto Rp = A.Rfdprime_at_prime(M, p), Rf = A.Rfd_at_prime(M, p), rf = A.rfd_at_prime(M, p), x = A.xi(M, p);
        CHECK(Rp >= Rf);
        CHECK(Rf >= rf);
        CHECK(rf >= x);
        CHECK(x == A.xi_dual(M, p));
        CHECK(A.rfd_at_prime_over_primes(M, p) == A.rfd_at_prime_over_battery(M, p));
      }
    }
  }
}

TEST_CASE("sups never decrease when the candidate set grows") {
  auto R = qring({"x", "y", "z"}, {"x*z", "y*z"});
  auto full = candidate_primes(R, PrimeMode::monomial);
  PrimeSet part;
  part.mode = PrimeMode::listed;
  for (const auto& p : full.candidates)
    if (p.name == "(z)" || p.name == "m") part.candidates.push_back(p);
  part.maximal = 1;
  Analyzer small(R, part, {});
  Analyzer big(R, full, {});
  for (const char* gens : {"x", "z", "x, y", "x + z"}) {
    auto M = cyclic(R, gens);
    CHECK(small.Rfd(M) <= big.Rfd(M));
    CHECK(small.Rfdprime(M) <= big.Rfdprime(M));
    CHECK(small.rfd(M) <= big.rfd(M));
    const auto& m = *full.find("m");
    CHECK(small.xi(M, m) <= big.xi(M, m));
  }
}

TEST_CASE("grade of a direct sum with R") {
  auto R = qring({"x", "y", "z"}, {"x^2", "x*y", "x*z"});
  auto A = monomial_analyzer(R);
  for (const char* gens : {"x", "y", "x, y"}) {
    auto M = cyclic(R, gens);
    auto MR = direct_sum(M, A.ring_module());
    for (const auto& I : A.battery()) CHECK(A.grade(I, MR) == min(A.grade(I, M), A.grade(I, A.ring_module())));
  }
}
