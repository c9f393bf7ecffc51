#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "rfd/errors.hpp"
#include "rfd/report.hpp"

using namespace rfd;

namespace {

const std::filesystem::path corpus_dir = RFD_CORPUS_DIR;

std::string input_error(std::string_view text) {
  try {
    parse_instance(text, "t");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

int exit_code(const std::string& args) {
  const std::string cmd = std::string(RFDCHECK_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("rfdcheck_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("instance parsing") {
  auto spec = load_instance(corpus_dir / "cmd1.ring");
  CHECK(spec.name == "cmd1");
  CHECK(spec.primes.mode == PrimeMode::monomial);
  CHECK(spec.module("R") != nullptr);
  CHECK(spec.module("k") != nullptr);
  CHECK(spec.primes.find("m") != nullptr);
  CHECK(spec.warnings.empty());

  auto pair = load_instance(corpus_dir / "f2_pair.ring");
  CHECK(pair.ring->ambient()->field() == Field::prime(2));
  REQUIRE(pair.module("N") != nullptr);
  CHECK(pair.module("N")->module.rank() == 2);
  CHECK(pair.module("N")->module.relations().size() == 2);
  CHECK(pair.options.max_homological_degree == std::size_t{4});

  auto cone = load_instance(corpus_dir / "cone.ring");
  CHECK(cone.primes.mode == PrimeMode::listed);
  REQUIRE(cone.primes.find("ruling") != nullptr);
  CHECK(cone.primes.find("ruling")->height == 1L);
  CHECK(cone.primes.find("m") != nullptr);

  auto node = load_instance(corpus_dir / "node.ring");
  REQUIRE(node.ideals.size() == 1);
  CHECK(node.ideals[0].name == "fat_point");
}

TEST_CASE("instance errors carry line numbers") {
  CHECK(input_error("[ring]\nvars = x y\nrelations = x^2, 1\n").find("line 3: ") == 0);
  CHECK(input_error("[ring]\nvars = x y\nrelations = x^2, 1\n").find("zero ring") != std::string::npos);
  CHECK(input_error("[ring]\nvars = x y\n[prime p]\ngens = x*y\n").find("line 4: ") == 0);
  CHECK(input_error("[ring]\nvars = x y\n[module M]\npresentation = cyclic: x*(y\n").find("line 4: ") == 0);
  CHECK(input_error("[ring]\nvars = x\n[module M]\npresentation = cokernel: rank=2; rows = [x]\n").find("line 4: ") == 0);
  CHECK(input_error("[ring]\nvars = x\n[module R]\npresentation = cyclic: x\n").find("duplicate module") != std::string::npos);
  CHECK(input_error("[ring]\nvars = x\n[widgets]\n").find("line 3: unknown section") == 0);
  CHECK(input_error("vars = x\n").find("line 1: ") == 0);
  CHECK(input_error("[ring]\nfield = F 4\nvars = x\n").find("line 2: ") == 0);
  CHECK(input_error("[ring]\nvars = x y\nrelations = x*y - 1\n[options]\nprime_mode = monomial\n").find("line 5: ") == 0);
  CHECK(input_error("[ring]\nvars = x y\nrelations = x^2\n[prime p]\ngens = y\n").find("line 4: ") == 0);
  CHECK(input_error("[ring]\nvars = x\n[options]\nbudget_reductions = lots\n").find("line 4: ") == 0);
  CHECK_FALSE(input_error("").empty());

  auto listed = parse_instance("[ring]\nvars = x y\nrelations = x*y - 1\n[prime p]\ngens = x - 1, y - 1\n", "t");
  CHECK(listed.primes.mode == PrimeMode::listed);
  CHECK_FALSE(listed.warnings.empty());
}

TEST_CASE("compute on the embedded-point ring") {
  auto spec = load_instance(corpus_dir / "cmd1.ring");
  auto r = run_compute(spec, RunOptions{"R", "m", std::nullopt});
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].depth == 0);
  CHECK(r.rows[0].dim == ExtendedInt(1));
  CHECK(r.rows[0].cmd == ExtendedInt(1));
  const auto j = to_json(r);
  CHECK(j["invariants"]["R"]["m"]["cmd"] == 1);
  CHECK(j["conditions"]["R"]["m"]["Y"] == "yes");
  CHECK_THROWS_AS(run_compute(spec, RunOptions{"nope", std::nullopt, std::nullopt}), InputError);
  CHECK_THROWS_AS(run_check(spec, "nope", {}), InputError);
}

TEST_CASE("check suites") {
  auto spec = load_instance(corpus_dir / "plane_with_point.ring");
  auto r = run_check(spec, "counterexample", {});
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].status == CheckStatus::pass);
  CHECK(r.checks[0].witness.at("instance") == "plane_with_point");
}

TEST_CASE("budget overruns") {
  auto spec = load_instance(corpus_dir / "plane_with_point.ring");
  spec.options.budget_reductions = 1;
  // The invariant pass is budgeted too, so a starved run aborts.
  CHECK_THROWS_AS(run_check(spec, "lemma", {}), BudgetExceeded);

  // Enough for the invariants of k at m, too little for some checkers: those
  // are SKIPPED with the reason, never FAIL.
  spec.options.budget_reductions = 1200;
  auto r = run_check(spec, "all", RunOptions{"k", "m", std::nullopt});
  std::size_t starved = 0;
  for (const auto& c : r.checks) {
    CHECK(c.status != CheckStatus::fail);
    if (c.status == CheckStatus::skipped && c.notes.rfind("budget exceeded", 0) == 0) ++starved;
  }
  CHECK(starved > 0);
}

TEST_CASE("table and determinism") {
  std::vector<InstanceSpec> specs;
  for (const auto& f : corpus_files(corpus_dir)) specs.push_back(load_instance(f));
  REQUIRE(specs.size() >= 8);
  auto reports = run_parallel(specs, "none", {}, 3);
  auto t = run_table(specs, reports);
  for (const auto& c : t.table.checks) CHECK(c.status == CheckStatus::pass);

  auto serial = run_parallel(specs, "none", {}, 1);
  CHECK(dump(to_json(run_table(specs, serial))) == dump(to_json(t)));
  for (std::size_t k = 0; k < specs.size(); ++k) CHECK(dump(to_json(serial[k])) == dump(to_json(reports[k])));

  auto empty = run_table({}, {});
  for (const auto& c : empty.table.checks) CHECK(c.status == CheckStatus::skipped);
}

TEST_CASE("exit codes") {
  const std::string corpus = corpus_dir.string();
  CHECK(exit_code("compute " + corpus + "/cmd1.ring --module R --prime m") == 0);
  CHECK(exit_code("check " + corpus + "/plane_with_point.ring --suite counterexample") == 0);
  CHECK(exit_code("check " + corpus + "/plane_with_point.ring --suite bogus") == 2);
  CHECK(exit_code("compute " + corpus + "/cmd1.ring --prime nope") == 2);
  CHECK(exit_code("compute /nonexistent.ring") == 2);
  CHECK(exit_code("frobnicate") == 2);
  const auto bad = temp_file("zero.ring", "[ring]\nvars = x\nrelations = 1\n");
  CHECK(exit_code("compute " + bad.string()) == 2);
  std::filesystem::remove(bad);
  CHECK(exit_code("table " + corpus) == 0);
}
