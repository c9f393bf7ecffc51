#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rfd/theorems.hpp"
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

void require_no_fail(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    INFO(r.name << ": " << r.notes);
    CHECK(r.status != CheckStatus::fail);
  }
}

const CheckResult& by_name(const std::vector<CheckResult>& results, const std::string& name) {
  for (const auto& r : results)
    if (r.name == name) return r;
  FAIL("missing check " << name);
  return results.front();
}

}  // namespace

TEST_CASE("rfd through ideals") {
  auto R = qring({"x", "y"});
  auto A = monomial_analyzer(R);
  auto r = check_rfd_via_ideals(A, "R", A.ring_module());
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.witness["battery_max"] == "0");

  auto line = check_rfd_via_ideals(A, "R/(x)", cyclic(R, "x"));
  CHECK(line.status == CheckStatus::pass);
  CHECK(line.witness["rfd_over_primes"] == "1");
  CHECK(line.witness["battery_max"] == "1");

  auto zero = check_rfd_via_ideals(A, "0", cyclic(R, "1"));
  CHECK(zero.status == CheckStatus::pass);
  CHECK(zero.witness["battery_max"] == "-inf");
}

TEST_CASE("syzygies reach R(p)") {
  auto T = qring({"x"});
  auto AT = monomial_analyzer(T);
  auto r = check_syzygy_grade_lift(AT, "k", cyclic(T, "x"));
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.witness["s"] == "1");
  CHECK(check_syzygy_grade_lift(AT, "R", AT.ring_module()).status == CheckStatus::pass);
  CHECK(check_syzygy_grade_lift(AT, "0", cyclic(T, "1")).status == CheckStatus::skipped);

  auto C = qring({"x", "y"}, {"x^2", "x*y"});
  auto AC = monomial_analyzer(C);
  for (const char* gens : {"x", "y", "x, y", "y^2"}) CHECK(check_syzygy_grade_lift(AC, gens, cyclic(C, gens)).status == CheckStatus::pass);
}

TEST_CASE("main theorem on a regular ring") {
  auto R = qring({"x", "y"});
  auto A = monomial_analyzer(R);
  for (const char* gens : {"x", "x, y", "x*y", "x^2, y"})
    for (const auto& p : A.primes().candidates) {
      auto results = check_five_conditions(A, gens, cyclic(R, gens), p);
      require_no_fail(results);
      CHECK(by_name(results, "main.grade_equals_depth_all_agree").status == CheckStatus::pass);
      CHECK(by_name(results, "main.finite_cd_L_iff_s").status == CheckStatus::pass);
    }
}

TEST_CASE("main theorem with cmd 1") {
  auto C = qring({"x", "y"}, {"x^2", "x*y"});
  auto A = monomial_analyzer(C);
  const auto& m = prime(A, "m");
  for (const char* gens : {"0", "x", "y", "x, y"}) {
    auto results = check_five_conditions(A, gens, cyclic(C, gens), m);
    require_no_fail(results);
    const auto& small = by_name(results, "main.small_cmd_equalities");
    CHECK(small.status == CheckStatus::pass);
    CHECK(small.witness.at("cmd") == "1");
    CHECK(by_name(results, "main.maximal_s_iff_G_iff_Y").status == CheckStatus::pass);
    CHECK(by_name(results, "main.associated_prime_gives_s").status == CheckStatus::pass);
  }
}

TEST_CASE("main theorem on the depth-zero family") {
  auto P = qring({"x", "y", "z"}, {"x^2", "x*y", "x*z"});
  auto A = monomial_analyzer(P);
  for (const char* gens : {"x, y", "x", "y", "z", "x, z", "y, z"})
    for (const auto& p : A.primes().candidates) require_no_fail(check_five_conditions(A, gens, cyclic(P, gens), p));

  auto r = A.evaluate_conditions(cyclic(P, "x, y"), prime(A, "(x, y)"));
  CHECK_FALSE(r.s);
  CHECK(r.Y == Tribool::yes);
}

TEST_CASE("main theorem in listed mode") {
  auto K = qring({"x", "y", "z"}, {"x*y - z^2"});
  std::vector<PrimeCandidate> extra{listed_prime(K, "ruling", Ps(K, "x, z"), 1)};
  auto primes = candidate_primes(K, PrimeMode::listed, extra);
  auto battery = ideal_battery(K, primes);
  Analyzer A(K, std::move(primes), std::move(battery));
  for (const char* gens : {"0", "x, z", "x, y, z"})
    for (const auto& p : A.primes().candidates) {
      auto results = check_five_conditions(A, gens, cyclic(K, gens), p);
      require_no_fail(results);
      CHECK(by_name(results, "main.grade_equals_depth_all_agree").status == CheckStatus::skipped);
    }
}

TEST_CASE("dual formulas") {
  for (const auto& R : {qring({"x", "y"}, {"x^2", "x*y"}), qring({"x", "y", "z"}, {"x*y", "x*z", "y*z"})}) {
    auto A = monomial_analyzer(R);
    for (const char* gens : {"0", "x", "y", "x, y"}) CHECK(check_dual_formulas(A, gens, cyclic(R, gens)).status == CheckStatus::pass);
  }
}

TEST_CASE("depth-zero counterexample family") {
  auto P = qring({"x", "y", "z"}, {"x^2", "x*y", "x*z"});
  auto A = monomial_analyzer(P);
  auto r = check_depth_zero_family(A);
  INFO(r.notes);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.witness["prime"] == "(x, y)");
  CHECK(r.witness["depth_R_p"] == "1");
  CHECK(r.witness["Rfd_M"] == "1");
  CHECK(r.witness["rfd_M"] == "0");
  CHECK(r.witness["Rfd_R"] == "0");

  auto C = qring({"x", "y"}, {"x^2", "x*y"});
  auto AC = monomial_analyzer(C);
  CHECK(check_depth_zero_family(AC).status == CheckStatus::skipped);

  auto R = qring({"x", "y"});
  auto AR = monomial_analyzer(R);
  CHECK(check_depth_zero_family(AR).status == CheckStatus::skipped);
}

TEST_CASE("annihilator element and grade bounds") {
  auto R = qring({"x", "y"});
  auto A = monomial_analyzer(R);
  auto r = check_annihilator_bounds(A, "R/(x)", cyclic(R, "x"), prime(A, "(y)"));
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.witness["r"] == "-inf");
  CHECK(r.witness["s"] == "x");

  auto T = qring({"x"});
  auto AT = monomial_analyzer(T);
  auto k = check_annihilator_bounds(AT, "k", cyclic(T, "x"), prime(AT, "m"));
  CHECK(k.status == CheckStatus::pass);
  CHECK(k.witness["r"] == "1");
  CHECK(check_annihilator_bounds(AT, "R", AT.ring_module(), prime(AT, "m")).status == CheckStatus::pass);

  auto P = qring({"x", "y", "z"}, {"x^2", "x*y", "x*z"});
  auto AP = monomial_analyzer(P);
  for (const char* gens : {"x, y", "y", "y, z"})
    for (const auto& p : AP.primes().candidates)
      CHECK(check_annihilator_bounds(AP, gens, cyclic(P, gens), p).status == CheckStatus::pass);
}

TEST_CASE("implication table") {
  auto empty = build_table({});
  for (const auto& row : empty.cells)
    for (const auto& cell : row) CHECK(cell.status == CellStatus::open);
  for (const auto& c : empty.checks) CHECK(c.status == CheckStatus::skipped);

  std::vector<Observation> obs;
  std::vector<RingPtr> rings{qring({"x", "y", "z"}, {"x^2", "x*y", "x*z"}), qring({"x", "y"}),
                             qring({"x", "y"}, {"x^2", "x*y"})};
  std::vector<std::unique_ptr<Analyzer>> analyzers;
  for (std::size_t k = 0; k < rings.size(); ++k) {
    analyzers.push_back(std::make_unique<Analyzer>(monomial_analyzer(rings[k])));
    auto& A = *analyzers.back();
    for (const char* gens : {"0", "x, y", "x", "y"})
      for (const auto& p : A.primes().candidates)
        obs.push_back({std::to_string(k), gens, p.name, A.evaluate_conditions(cyclic(rings[k], gens), p)});
  }
  auto t = build_table(obs);
  for (const auto& c : t.checks) {
    INFO(c.name << ": " << c.notes);
    CHECK(c.status != CheckStatus::fail);
  }
  const auto& known = known_implications();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      if (known[i][j] == CellClaim::fails) CHECK(t.cells[i][j].status == CellStatus::refuted);
      if (known[i][j] == CellClaim::holds) CHECK(t.cells[i][j].status == CellStatus::always);
      if (t.cells[i][j].status != CellStatus::refuted) continue;
      // Witnesses re-verify from scratch.
      const auto& w = t.cells[i][j].witness;
      const auto& R = rings[std::stoul(w.at("instance"))];
      auto fresh = monomial_analyzer(R);
      CHECK(verify_witness(fresh, cyclic(R, w.at("module")), prime(fresh, w.at("prime")), i, j));
    }
  CHECK(t.cells[2][4].status == CellStatus::open);

  // Deterministic fold: the same observations give the same witnesses.
  auto again = build_table(obs);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(again.cells[i][j].witness == t.cells[i][j].witness);
}
