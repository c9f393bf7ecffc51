#pragma once

// Running computations and checks over parsed instances, and rendering the
// results as JSON or text. JSON objects have sorted keys and all lists are
// in a fixed order, so identical inputs give byte-identical output.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rfd/instance.hpp"
#include "rfd/theorems.hpp"

namespace rfd {

struct InvariantRow {
  std::string module;
  std::string prime;
  ExtendedInt depth, depth_R, grade, Rfdprime, Rfd, rfd, xi;
  std::optional<ExtendedInt> dim, cmd;
  ConditionReport conditions;
};

struct ModuleSummary {
  std::string module;
  std::string presentation;
  ExtendedInt Rfdprime, Rfd, rfd;
};

struct InstanceReport {
  std::string instance;
  std::string ring;
  std::string prime_mode;
  bool graded_local = false;
  std::vector<std::string> primes;
  std::vector<std::string> warnings;
  std::vector<ModuleSummary> modules;
  std::vector<InvariantRow> rows;
  std::vector<CheckResult> checks;
};

struct RunOptions {
  std::optional<std::string> module;
  std::optional<std::string> prime;
  std::optional<std::size_t> max_ext;
};

/// Suite ids accepted by run_checks.
const std::vector<std::string>& check_suites();

/// Invariants and conditions for the selected modules and primes (all when
/// unset). InputError for unknown names.
InstanceReport run_compute(const InstanceSpec& spec, const RunOptions& opts);
/// run_compute plus the checkers of `suite` ("all" for every suite, "none"
/// for no checks).
InstanceReport run_check(const InstanceSpec& spec, const std::string& suite, const RunOptions& opts);

bool any_failed(const std::vector<CheckResult>& checks);

struct CorpusTable {
  std::vector<std::string> instances;
  TableReport table;
};

/// Every *.ring file of `dir`, sorted by file name.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

/// Folds the condition rows of `reports` (one per spec, same order), then
/// re-verifies each witness on a fresh analyzer.
CorpusTable run_table(const std::vector<InstanceSpec>& specs, const std::vector<InstanceReport>& reports,
                      std::optional<std::size_t> max_ext = std::nullopt);

/// run_check over each spec on up to `threads` workers (0: hardware
/// concurrency); results keep spec order.
std::vector<InstanceReport> run_parallel(const std::vector<InstanceSpec>& specs, const std::string& suite,
                                         const RunOptions& opts, unsigned threads = 0);

nlohmann::json to_json(const ExtendedInt& v);
nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const InstanceReport& r);
nlohmann::json to_json(const CorpusTable& t);

std::string to_text(const InstanceReport& r);
std::string to_text(const CorpusTable& t);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const nlohmann::json& j);

/// Writes through a temporary file and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace rfd
