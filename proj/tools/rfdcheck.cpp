// rfdcheck: invariants, theorem checks and the implication table for
// instance files.
//
//   rfdcheck compute cmd1.ring --module R --prime m
//   rfdcheck check plane_with_point.ring --suite counterexample --json
//   rfdcheck table corpus/
//   rfdcheck corpus corpus/ --out reports/
//
// Exit status: 0 when nothing FAILs, 1 on any FAIL, 2 on input errors.

#include <CLI11.hpp>

#include <iostream>

#include "rfd/errors.hpp"
#include "rfd/report.hpp"

namespace {

using namespace rfd;

struct Common {
  std::string target;
  std::optional<std::string> module;
  std::optional<std::string> prime;
  std::optional<std::size_t> max_ext;
  std::string suite = "all";
  std::string out;
  bool json = false;
  unsigned threads = 0;
};

RunOptions run_options(const Common& c) { return RunOptions{c.module, c.prime, c.max_ext}; }

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) std::cout << text;
  else write_file_atomic(c.out, text);
}

std::vector<InstanceSpec> load_corpus(const std::string& dir) {
  std::vector<InstanceSpec> specs;
  for (const auto& f : corpus_files(dir)) {
    try {
      specs.push_back(load_instance(f));
    } catch (const InputError& e) {
      throw InputError(f.filename().string() + ": " + e.what());
    }
  }
  if (specs.empty()) std::cerr << "warning: no .ring files in " << dir << "\n";
  return specs;
}

void warn(const InstanceSpec& spec) {
  for (const auto& w : spec.warnings) std::cerr << spec.name << ": warning: " << w << "\n";
}

int run_single(const Common& c, bool checks) {
  InstanceSpec spec = load_instance(c.target);
  warn(spec);
  InstanceReport r = checks ? run_check(spec, c.suite, run_options(c)) : run_compute(spec, run_options(c));
  emit(c, c.json ? dump(to_json(r)) : to_text(r));
  return any_failed(r.checks) ? 1 : 0;
}

int run_table_verb(const Common& c) {
  auto specs = load_corpus(c.target);
  for (const auto& s : specs) warn(s);
  auto reports = run_parallel(specs, "none", RunOptions{std::nullopt, std::nullopt, c.max_ext}, c.threads);
  CorpusTable t = run_table(specs, reports, c.max_ext);
  emit(c, c.json ? dump(to_json(t)) : to_text(t));
  return any_failed(t.table.checks) ? 1 : 0;
}

int run_corpus_verb(const Common& c) {
  auto specs = load_corpus(c.target);
  for (const auto& s : specs) warn(s);
  auto reports = run_parallel(specs, c.suite, RunOptions{std::nullopt, std::nullopt, c.max_ext}, c.threads);
  CorpusTable t = run_table(specs, reports, c.max_ext);

  bool failed = any_failed(t.table.checks);
  nlohmann::json summary;
  summary["table"] = to_json(t);
  summary["instances"] = nlohmann::json::object();
  for (const auto& r : reports) {
    std::map<std::string, std::size_t> counts{{"PASS", 0}, {"FAIL", 0}, {"SKIPPED", 0}};
    for (const auto& ch : r.checks) ++counts[to_string(ch.status)];
    summary["instances"][r.instance] = counts;
    failed = failed || any_failed(r.checks);
    if (!c.out.empty()) write_file_atomic(std::filesystem::path(c.out) / (r.instance + ".json"), dump(to_json(r)));
    if (!c.json)
      std::cout << (any_failed(r.checks) ? "FAIL " : "ok   ") << r.instance << "  pass " << counts["PASS"] << "  fail "
                << counts["FAIL"] << "  skipped " << counts["SKIPPED"] << "\n";
  }
  if (!c.out.empty()) {
    write_file_atomic(std::filesystem::path(c.out) / "table.json", dump(to_json(t)));
    write_file_atomic(std::filesystem::path(c.out) / "summary.json", dump(summary));
  }
  if (c.json) std::cout << dump(summary);
  else std::cout << "\n" << to_text(t);
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted flat dimensions and the conditions (L)', (L), (s), (G), (Y) on instance files"};
  app.require_subcommand(1);
  Common c;

  auto add_output = [&](CLI::App* sub) {
    sub->add_flag("--json", c.json, "Emit JSON instead of text");
    sub->add_option("--max-ext", c.max_ext, "Largest Ext degree scanned (default: file option, else n + 2)");
  };
  auto* compute = app.add_subcommand("compute", "Invariants and conditions of one instance");
  compute->add_option("instance", c.target, "Instance file")->required()->check(CLI::ExistingFile);
  compute->add_option("--module", c.module, "Restrict to one module");
  compute->add_option("--prime", c.prime, "Restrict to one prime");
  compute->add_option("--out", c.out, "Write the report here");
  add_output(compute);

  auto* check = app.add_subcommand("check", "Run theorem checkers on one instance");
  check->add_option("instance", c.target, "Instance file")->required()->check(CLI::ExistingFile);
  std::vector<std::string> suites{"all", "none"};
  for (const auto& s : check_suites()) suites.push_back(s);
  check->add_option("--suite", c.suite, "Checker suite")->check(CLI::IsMember(suites));
  check->add_option("--module", c.module, "Restrict to one module");
  check->add_option("--prime", c.prime, "Restrict to one prime");
  check->add_option("--out", c.out, "Write the report here");
  add_output(check);

  auto* table = app.add_subcommand("table", "Implication table over a directory of instances");
  table->add_option("dir", c.target, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  table->add_option("--out", c.out, "Write the table here");
  table->add_option("--threads", c.threads, "Worker threads (0: all cores)");
  add_output(table);

  auto* corpus = app.add_subcommand("corpus", "All checkers on every instance, plus the table");
  corpus->add_option("dir", c.target, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  corpus->add_option("--suite", c.suite, "Checker suite")->check(CLI::IsMember(suites));
  corpus->add_option("--out", c.out, "Directory for per-instance reports, table.json and summary.json");
  corpus->add_option("--threads", c.threads, "Worker threads (0: all cores)");
  add_output(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) return run_single(c, false);
    if (*check) return run_single(c, true);
    if (*table) return run_table_verb(c);
    return run_corpus_verb(c);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
