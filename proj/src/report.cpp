#include "rfd/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "rfd/errors.hpp"

namespace rfd {

namespace {

using nlohmann::json;

const std::vector<std::string> kSuites{"lemma", "syzygy", "main", "dual", "counterexample", "annihilator"};

std::vector<const NamedModule*> selected_modules(const InstanceSpec& spec, const RunOptions& opts) {
  std::vector<const NamedModule*> out;
  if (opts.module) {
    const NamedModule* m = spec.module(*opts.module);
    if (!m) throw InputError("unknown module '" + *opts.module + "' in " + spec.name);
    out.push_back(m);
  } else {
    for (const auto& m : spec.modules) out.push_back(&m);
  }
  return out;
}

std::vector<const PrimeCandidate*> selected_primes(const InstanceSpec& spec, const RunOptions& opts) {
  std::vector<const PrimeCandidate*> out;
  if (opts.prime) {
    const PrimeCandidate* p = spec.primes.find(*opts.prime);
    if (!p) throw InputError("unknown prime '" + *opts.prime + "' in " + spec.name);
    out.push_back(p);
  } else {
    for (const auto& p : spec.primes.candidates) out.push_back(&p);
  }
  return out;
}

InstanceReport compute(const InstanceSpec& spec, Analyzer& A, const RunOptions& opts) {
  InstanceReport r;
  r.instance = spec.name;
  r.ring = spec.ring->to_string();
  r.prime_mode = to_string(spec.primes.mode);
  r.graded_local = A.graded_local();
  for (const auto& p : spec.primes.candidates) r.primes.push_back(p.name);
  r.warnings = spec.warnings;

  const auto modules = selected_modules(spec, opts);
  const auto primes = selected_primes(spec, opts);
  Budget budget = spec.budget(spec.name + " invariants");
  BudgetScope scope(budget);
  const auto& R = A.ring_module();
  for (const auto* m : modules) {
    r.modules.push_back({m->name, m->source, A.Rfdprime(m->module), A.Rfd(m->module), A.rfd(m->module)});
    for (const auto* p : primes) {
      InvariantRow row;
      row.module = m->name;
      row.prime = p->name;
      row.depth = A.depth_at_prime(m->module, *p);
      row.depth_R = A.depth_at_prime(R, *p);
      row.grade = A.grade(p->ideal, m->module);
      row.dim = A.dim_at_prime(*p);
      row.cmd = A.cmd_at_prime(*p);
      row.conditions = A.evaluate_conditions(m->module, *p);
      row.Rfdprime = row.conditions.Rfdprime;
      row.Rfd = row.conditions.Rfd;
      row.rfd = row.conditions.rfd;
      row.xi = row.conditions.xi;
      r.rows.push_back(std::move(row));
    }
  }
  return r;
}

// One checker call under its own budget. Budget overruns become SKIPPED,
// kernel inconsistencies FAIL.
template <class F>
void guarded(const InstanceSpec& spec, std::vector<CheckResult>& out, const std::string& name,
             std::map<std::string, std::string> context, F&& f) {
  Budget budget = spec.budget(spec.name + " " + name);
  BudgetScope scope(budget);
  const std::size_t first = out.size();
  try {
    f(out);
  } catch (const BudgetExceeded& e) {
    out.resize(first);
    CheckResult c{name, CheckStatus::skipped, context, std::string("budget exceeded: ") + e.what()};
    out.push_back(std::move(c));
  } catch (const InternalInconsistency& e) {
    out.resize(first);
    CheckResult c{name, CheckStatus::fail, context, std::string("kernel inconsistency: ") + e.what()};
    out.push_back(std::move(c));
  }
  for (std::size_t k = first; k < out.size(); ++k) out[k].witness["instance"] = spec.name;
}

void add_checks(const InstanceSpec& spec, Analyzer& A, const std::string& suite, const RunOptions& opts,
                std::vector<CheckResult>& out) {
  const auto modules = selected_modules(spec, opts);
  const auto primes = selected_primes(spec, opts);
  auto wants = [&](const char* id) { return suite == "all" || suite == id; };

  for (const auto* m : modules) {
    const std::map<std::string, std::string> ctx{{"module", m->name}};
    if (wants("lemma"))
      guarded(spec, out, "lemma.rfd_via_ideals", ctx,
              [&](auto& v) { v.push_back(check_rfd_via_ideals(A, m->name, m->module)); });
    if (wants("syzygy"))
      guarded(spec, out, "syzygy.grade_lift", ctx, [&](auto& v) { v.push_back(check_syzygy_grade_lift(A, m->name, m->module)); });
    if (wants("dual"))
      guarded(spec, out, "dual.grade_minus_depth", ctx,
              [&](auto& v) { v.push_back(check_dual_formulas(A, m->name, m->module)); });
    for (const auto* p : primes) {
      const std::map<std::string, std::string> pctx{{"module", m->name}, {"prime", p->name}};
      if (wants("main"))
        guarded(spec, out, "main", pctx, [&](auto& v) {
          for (auto& c : check_five_conditions(A, m->name, m->module, *p)) v.push_back(std::move(c));
        });
      if (wants("annihilator"))
        guarded(spec, out, "annihilator.uniform_element", pctx,
                [&](auto& v) { v.push_back(check_annihilator_bounds(A, m->name, m->module, *p)); });
    }
  }
  if (wants("counterexample"))
    guarded(spec, out, "counterexample.depth_zero_family", {}, [&](auto& v) { v.push_back(check_depth_zero_family(A)); });
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json optional_json(const std::optional<ExtendedInt>& v) { return v ? to_json(*v) : json(nullptr); }

std::string optional_text(const std::optional<ExtendedInt>& v) { return v ? v->to_string() : "?"; }

const char* cell_symbol(CellStatus s) {
  switch (s) {
    case CellStatus::always: return "ALWAYS";
    case CellStatus::refuted: return "REFUTED";
    default: return "OPEN";
  }
}

}  // namespace

const std::vector<std::string>& check_suites() { return kSuites; }

InstanceReport run_compute(const InstanceSpec& spec, const RunOptions& opts) {
  Analyzer A = spec.analyzer(opts.max_ext);
  return compute(spec, A, opts);
}

InstanceReport run_check(const InstanceSpec& spec, const std::string& suite, const RunOptions& opts) {
  if (suite != "all" && suite != "none" && std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw InputError("unknown suite '" + suite + "'");
  Analyzer A = spec.analyzer(opts.max_ext);
  InstanceReport r = compute(spec, A, opts);
  if (suite != "none") add_checks(spec, A, suite, opts, r.checks);
  return r;
}

bool any_failed(const std::vector<CheckResult>& checks) {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InputError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".ring") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

CorpusTable run_table(const std::vector<InstanceSpec>& specs, const std::vector<InstanceReport>& reports,
                      std::optional<std::size_t> max_ext) {
  CorpusTable out;
  std::vector<Observation> obs;
  for (const auto& r : reports) {
    out.instances.push_back(r.instance);
    for (const auto& row : r.rows) obs.push_back({r.instance, row.module, row.prime, row.conditions});
  }
  out.table = build_table(obs);

  CheckResult reverify{"table.witnesses_reverify", CheckStatus::pass, {}, {}};
  std::size_t verified = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const auto& cell = out.table.cells[i][j];
      if (cell.status != CellStatus::refuted) continue;
      const auto& w = cell.witness;
      auto it = std::find_if(specs.begin(), specs.end(), [&](const InstanceSpec& s) { return s.name == w.at("instance"); });
      bool ok = false;
      if (it != specs.end()) {
        Analyzer fresh = it->analyzer(max_ext);
        const NamedModule* m = it->module(w.at("module"));
        const PrimeCandidate* p = it->primes.find(w.at("prime"));
        ok = m && p && verify_witness(fresh, m->module, *p, i, j);
      }
      if (ok) {
        ++verified;
      } else {
        reverify.status = CheckStatus::fail;
        reverify.witness = w;
        reverify.notes = "witness does not re-verify";
      }
    }
  if (obs.empty()) {
    reverify.status = CheckStatus::skipped;
    reverify.notes = "empty corpus";
  } else if (reverify.status == CheckStatus::pass) {
    reverify.notes = std::to_string(verified) + " witnesses re-verified";
  }
  out.table.checks.push_back(std::move(reverify));
  return out;
}

std::vector<InstanceReport> run_parallel(const std::vector<InstanceSpec>& specs, const std::string& suite,
                                         const RunOptions& opts, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, specs.size())));
  std::vector<InstanceReport> out(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < specs.size();) {
      try {
        out[k] = run_check(specs[k], suite, opts);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// ---------------------------------------------------------------------------
// JSON

json to_json(const ExtendedInt& v) {
  if (v.is_pos_inf()) return "inf";
  if (v.is_neg_inf()) return "-inf";
  return v.value();
}

json to_json(const CheckResult& c) {
  return json{{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}, {"notes", c.notes}};
}

json to_json(const InstanceReport& r) {
  json j;
  j["instance"] = r.instance;
  j["ring"] = json{{"presentation", r.ring}, {"prime_mode", r.prime_mode}, {"graded_local", r.graded_local},
                   {"primes", r.primes}};
  j["warnings"] = r.warnings;
  j["modules"] = json::object();
  for (const auto& m : r.modules)
    j["modules"][m.module] = json{{"presentation", m.presentation},
                                  {"Rfdprime", to_json(m.Rfdprime)},
                                  {"Rfd", to_json(m.Rfd)},
                                  {"rfd", to_json(m.rfd)}};
  j["invariants"] = json::object();
  j["conditions"] = json::object();
  for (const auto& row : r.rows) {
    j["invariants"][row.module][row.prime] = json{{"depth", to_json(row.depth)},
                                                  {"depth_R", to_json(row.depth_R)},
                                                  {"dim", optional_json(row.dim)},
                                                  {"cmd", optional_json(row.cmd)},
                                                  {"grade", to_json(row.grade)},
                                                  {"Rfdprime", to_json(row.Rfdprime)},
                                                  {"Rfd", to_json(row.Rfd)},
                                                  {"rfd", to_json(row.rfd)},
                                                  {"xi", to_json(row.xi)}};
    const auto& c = row.conditions;
    j["conditions"][row.module][row.prime] = json{{"Lprime", c.Lprime}, {"L", c.L},   {"s", c.s},
                                                  {"G", c.G},           {"Y", to_string(c.Y)},
                                                  {"justification", c.justification}};
  }
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  return j;
}

json to_json(const CorpusTable& t) {
  json j;
  j["instances"] = t.instances;
  j["observations"] = t.table.observations;
  j["conditions"] = json::array();
  for (const char* c : kConditions) j["conditions"].push_back(c);
  j["cells"] = json::array();
  for (const auto& row : t.table.cells) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(json{{"status", to_string(cell.status)}, {"witness", cell.witness}});
    j["cells"].push_back(std::move(r));
  }
  j["checks"] = json::array();
  for (const auto& c : t.table.checks) j["checks"].push_back(to_json(c));
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Text

std::string to_text(const InstanceReport& r) {
  std::ostringstream o;
  o << "instance " << r.instance << "\n";
  o << "ring     " << r.ring << "\n";
  o << "primes   " << r.prime_mode << " mode" << (r.graded_local ? ", graded-local" : "") << ":";
  for (const auto& p : r.primes) o << " " << p;
  o << "\n";
  for (const auto& w : r.warnings) o << "warning  " << w << "\n";
  for (const auto& m : r.modules) {
    o << "\nmodule " << m.module << " (" << m.presentation << ")  Rfd' " << m.Rfdprime.to_string() << "  Rfd "
      << m.Rfd.to_string() << "  rfd " << m.rfd.to_string() << "\n";
    for (const auto& row : r.rows) {
      if (row.module != m.module) continue;
      o << "  at " << std::left << std::setw(10) << row.prime << " depth " << row.depth.to_string() << "  depth_R "
        << row.depth_R.to_string() << "  dim " << optional_text(row.dim) << "  cmd " << optional_text(row.cmd)
        << "  grade " << row.grade.to_string() << "  Rfd' " << row.Rfdprime.to_string() << "  Rfd "
        << row.Rfd.to_string() << "  rfd " << row.rfd.to_string() << "  xi " << row.xi.to_string() << "\n";
      const auto& c = row.conditions;
      o << "     " << std::setw(10) << "" << " L' " << yes_no(c.Lprime) << "  L " << yes_no(c.L) << "  s "
        << yes_no(c.s) << "  G " << yes_no(c.G) << "  Y " << to_string(c.Y) << "  (" << c.justification << ")\n";
    }
  }
  if (!r.checks.empty()) {
    o << "\nchecks\n";
    for (const auto& c : r.checks) {
      o << "  " << std::left << std::setw(8) << to_string(c.status) << c.name;
      for (const char* key : {"module", "prime"})
        if (auto it = c.witness.find(key); it != c.witness.end()) o << "  " << key << "=" << it->second;
      if (!c.notes.empty()) o << "  -- " << c.notes;
      o << "\n";
      if (c.status == CheckStatus::fail)
        for (const auto& [k, v] : c.witness) o << "            " << k << " = " << v << "\n";
    }
  }
  return o.str();
}

std::string to_text(const CorpusTable& t) {
  std::ostringstream o;
  o << "instances " << t.instances.size() << ", observations " << t.table.observations << "\n\n";
  o << std::left << std::setw(10) << "=>";
  for (const char* c : kConditions) o << std::setw(10) << c;
  o << "\n";
  for (std::size_t i = 0; i < 5; ++i) {
    o << std::setw(10) << kConditions[i];
    for (std::size_t j = 0; j < 5; ++j) o << std::setw(10) << cell_symbol(t.table.cells[i][j].status);
    o << "\n";
  }
  o << "\nwitnesses\n";
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const auto& cell = t.table.cells[i][j];
      if (cell.status != CellStatus::refuted) continue;
      o << "  " << kConditions[i] << " =/=> " << kConditions[j] << ": " << cell.witness.at("instance") << " module "
        << cell.witness.at("module") << " at " << cell.witness.at("prime") << "\n";
    }
  o << "\nchecks\n";
  for (const auto& c : t.table.checks) {
    o << "  " << std::setw(8) << to_string(c.status) << c.name;
    if (!c.notes.empty()) o << "  -- " << c.notes;
    o << "\n";
  }
  return o.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw InputError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace rfd
